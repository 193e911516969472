mod common;

use grouplat::poset::{breaking_points, hasse_edges, interval, two_interval_cover, PosetKind};
use grouplat::{Analysis, Limits};

fn analysis(spec: &str) -> Analysis {
    Analysis::parse(spec, &Limits::default()).unwrap()
}

#[test]
fn q8_hasse_diagram_has_seven_edges() {
    let a = analysis("Q8");
    let l = a.poset(PosetKind::L);
    let edges = hasse_edges(l);
    assert_eq!(edges.len(), 7);
    assert_eq!(edges, common::covering_pairs(l.size(), |x, y| l.leq(x, y)));
}

#[test]
fn interval_in_cyclic_twelve() {
    let a = analysis("C12");
    let l = a.poset(PosetKind::L);
    let g = &a.group;
    let four = grouplat::closure(g, &[4]);
    let x = a.lattice.find(&four).unwrap();
    assert_eq!(four.order(), 3);
    let top = l.top_idx().unwrap();
    let iv = interval(l, x, top).unwrap();
    let orders: Vec<usize> = iv.iter().map(|&i| l.subgroup_order(i)).collect();
    assert_eq!(orders, vec![3, 6, 12]);
    assert!(interval(l, top, x).is_err());
}

#[test]
fn q8_lbar_shape() {
    let a = analysis("Q8");
    let p = a.lbar();
    assert_eq!(p.size(), 6);
    let order2: Vec<usize> = (0..6).filter(|&x| p.subgroup_order(x) == 2).collect();
    assert_eq!(order2.len(), 1);
    for x in (0..6).filter(|&x| p.subgroup_order(x) == 4) {
        assert!(p.leq(order2[0], x));
    }
    assert_eq!(breaking_points(p), order2);
}

#[test]
fn s3_cbar_has_no_top() {
    let a = analysis("S3");
    let p = a.poset(PosetKind::Cbar);
    assert_eq!(p.size(), 3);
    assert_eq!(p.top_idx(), None);
    assert!(breaking_points(p).is_empty());
    assert!(breaking_points(a.lbar()).is_empty());
}

#[test]
fn cyclic_nine_breaking_point() {
    let a = analysis("C9");
    let p = a.lbar();
    let bps = breaking_points(p);
    assert_eq!(bps.len(), 1);
    assert_eq!(p.subgroup_order(bps[0]), 3);
}

#[test]
fn d16_not_covered() {
    assert!(two_interval_cover(analysis("D16").lbar(), true).is_none());
}

#[test]
fn prime_order_groups_not_covered() {
    for p in [2, 3, 5, 7, 11, 13] {
        let a = analysis(&format!("C{p}"));
        assert!(!a.in_class_c(), "C{p}");
        assert!(breaking_points(a.lbar()).is_empty());
    }
}

#[test]
fn s3_named_witness_is_among_all_pairs() {
    let a = analysis("S3");
    let g = &a.group;
    let m = grouplat::closure(g, &[g.find_label("(1,2)").unwrap()]);
    let n = grouplat::closure(g, &[g.find_label("(1,2,3)").unwrap()]);
    assert!(a.is_class_cover(&m, &n));
    let pairs = a.class_c_witness(true).unwrap().all_pairs.unwrap();
    let (mi, ni) = (a.class_position(&m).unwrap(), a.class_position(&n).unwrap());
    assert!(pairs.contains(&(mi, ni)));
    assert_eq!(pairs.len(), 2);
}
