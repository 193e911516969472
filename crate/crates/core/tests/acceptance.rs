//! Exit-gate checks, one line per criterion. Runs without the libtest
//! harness so the summary is always printed.

mod common;

use common::{build, covering_pairs, subgroups_by_exhaustion};
use grouplat::poset::{breaking_points, hasse_edges, two_interval_cover, PosetKind};
use grouplat::structure::{
    derived_subgroup, frattini, omega1, order_p_subgroups_conjugate, p_complement,
};
use grouplat::subgroup::{conjugate_subgroup, normalizer};
use grouplat::verify::{self, revalidate_cover, Suite, CATALOG};
use grouplat::{closure, validate_group, Analysis, Limits};
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn analysis(spec: &str) -> Analysis {
    Analysis::parse(spec, &Limits::default()).unwrap()
}

fn suite_passes(s: Suite) -> Check {
    let r = s.run(&Limits::default()).map_err(|e| e.to_string())?;
    let failed: Vec<String> = r
        .cases
        .iter()
        .filter(|c| !c.pass)
        .map(|c| {
            format!(
                "{} / {}: {} != {}",
                c.group, c.claim, c.computed, c.expected
            )
        })
        .collect();
    ensure(r.pass, || failed.join("; "))
}

fn criterion_1() -> Check {
    suite_passes(Suite::Theorem1)?;
    let positive = ["C4", "C8", "C9", "C25", "C27", "Q8", "Q16", "Q32"];
    let negative = [
        "C6",
        "C2xC2",
        "D8",
        "D16",
        "S3",
        "S4",
        "A4",
        "A5",
        "M2^4",
        "M3^3",
        "ZM(7,3,2)",
        "C2xC2xM3^3",
    ];
    let with_bp: BTreeSet<&str> = positive
        .iter()
        .chain(&negative)
        .copied()
        .filter(|s| !breaking_points(analysis(s).lbar()).is_empty())
        .collect();
    ensure(with_bp == positive.into_iter().collect(), || {
        format!("groups with breaking points: {with_bp:?}")
    })
}

fn criterion_2() -> Check {
    suite_passes(Suite::Corollary3)?;
    for spec in CATALOG {
        let a = analysis(spec);
        let flags: BTreeSet<bool> = PosetKind::ALL
            .iter()
            .map(|&k| !breaking_points(a.poset(k)).is_empty())
            .collect();
        ensure(flags.len() == 1, || format!("{spec}: posets disagree"))?;
    }
    Ok(())
}

fn criterion_3() -> Check {
    suite_passes(Suite::Prop4And5)?;
    for (spec, p, n) in [
        ("M2^4", 2usize, 4u32),
        ("M2^5", 2, 5),
        ("M3^3", 3, 3),
        ("M3^4", 3, 4),
    ] {
        let a = analysis(spec);
        let g = &a.group;
        let x = p;
        let m = closure(g, &[g.pow(x, p), 1]);
        let nn = closure(g, &[g.pow(x, p.pow(n - 2))]);
        ensure(a.is_class_cover(&m, &nn) && a.in_class_c(), || {
            format!("{spec}: modular witnesses fail")
        })?;
    }
    for spec in ["D8", "D16", "D32"] {
        ensure(!analysis(spec).in_class_c(), || {
            format!("{spec} is in the class")
        })?;
    }
    let a = analysis("M3^3");
    let g = &a.group;
    let minimal = a
        .lattice
        .subgroups()
        .iter()
        .filter(|h| h.order() == 3)
        .count();
    let derived = derived_subgroup(g).order();
    let om = omega1(g, 3).unwrap().order();
    let phi = frattini(g, &a.lattice);
    ensure(
        minimal == 4 && derived == 3 && om == 9 && phi == closure(g, &[g.pow(3, 3)]),
        || {
            format!(
                "M3^3: minimal={minimal} derived={derived} omega1={om} phi={:?}",
                phi.elems()
            )
        },
    )
}

fn criterion_4() -> Check {
    suite_passes(Suite::Theorem6)?;
    for (spec, p) in [("S3", 3usize), ("D10", 5), ("ZM(7,3,2)", 7)] {
        let a = analysis(spec);
        let n_idx = (0..a.lattice.len())
            .find(|&i| a.lattice.get(i).order() == p)
            .unwrap();
        let m_idx = p_complement(&a.group, &a.lattice, p).unwrap().unwrap();
        ensure(
            a.is_class_cover(a.lattice.get(m_idx), a.lattice.get(n_idx)),
            || format!("{spec}: p-complement witness fails"),
        )?;
    }
    let a5 = analysis("A5");
    let conj = |p| order_p_subgroups_conjugate(&a5.group, &a5.lattice, &a5.classes, p).unwrap();
    ensure(conj(3) && conj(5) && !a5.in_class_c(), || "A5".into())?;
    let big = analysis("C2xC2xM3^3");
    let conj = |p| order_p_subgroups_conjugate(&big.group, &big.lattice, &big.classes, p).unwrap();
    ensure(!conj(2) && !conj(3) && big.in_class_c(), || {
        "C2xC2xM3^3".into()
    })?;
    for order in [6, 10, 12, 20, 24] {
        ensure(analysis(&format!("D{order}")).in_class_c(), || {
            format!("D{order} not in class")
        })?;
    }
    for order in [8, 16, 32] {
        ensure(!analysis(&format!("D{order}")).in_class_c(), || {
            format!("D{order} in class")
        })?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    suite_passes(Suite::Theorem9)?;
    let limits = Limits::default();
    for (s1, s2) in [("M3^3", "C2xC2"), ("Q8", "C3"), ("C9", "C4")] {
        let a1 = analysis(s1);
        let g2 = build(s2);
        let prod = Analysis::new(
            grouplat::direct_product(&a1.group, &g2, &limits).unwrap(),
            &limits,
        )
        .unwrap();
        let w = a1
            .class_c_witness(false)
            .ok_or(format!("{s1} not in class"))?;
        let k = g2.order();
        let m: Vec<usize> = a1
            .class_rep(w.m_idx)
            .elems()
            .iter()
            .flat_map(|&x| (0..k).map(move |y| x * k + y))
            .collect();
        let n: Vec<usize> = a1
            .class_rep(w.n_idx)
            .elems()
            .iter()
            .map(|&x| x * k)
            .collect();
        let (m, n) = (closure(&prod.group, &m), closure(&prod.group, &n));
        ensure(prod.is_class_cover(&m, &n), || {
            format!("{s1} x {s2}: lift fails")
        })?;
    }
    ensure(
        analysis("C6").in_class_c() && !analysis("C2").in_class_c() && !analysis("C3").in_class_c(),
        || "C6 / C2 / C3 membership".into(),
    )
}

fn criterion_6() -> Check {
    let mut checked = 0;
    for spec in CATALOG {
        let a = analysis(spec);
        if a.group.order() > 24 {
            continue;
        }
        let ours: BTreeSet<Vec<usize>> = a
            .lattice
            .subgroups()
            .iter()
            .map(|h| h.elems().to_vec())
            .collect();
        ensure(ours.len() == a.lattice.len(), || {
            format!("{spec}: duplicate subgroups")
        })?;
        ensure(ours == subgroups_by_exhaustion(&a.group), || {
            format!("{spec}: enumeration differs from the exhaustive oracle")
        })?;
        checked += 1;
    }
    ensure(checked >= 30, || format!("only {checked} groups checked"))
}

fn criterion_7() -> Check {
    for spec in CATALOG {
        let a = analysis(spec);
        let g = &a.group;
        let n = g.order();
        ensure(validate_group(g).is_valid(), || {
            format!("{spec}: table axioms")
        })?;
        ensure((0..n).all(|x| n.is_multiple_of(g.element_order(x))), || {
            format!("{spec}: element Lagrange")
        })?;
        for h in a.lattice.subgroups() {
            ensure(n.is_multiple_of(h.order()) && h.contains(0), || {
                format!("{spec}: subgroup Lagrange")
            })?;
            let class = a
                .classes
                .members(a.classes.class_of(a.lattice.find(h).unwrap()));
            ensure(class.len() * normalizer(g, h).order() == n, || {
                format!("{spec}: orbit-stabilizer at {:?}", h.elems())
            })?;
            ensure(
                (0..n).all(|x| a.lattice.find(&conjugate_subgroup(g, h, x)).is_some()),
                || format!("{spec}: lattice not closed under conjugation"),
            )?;
        }
        for kind in PosetKind::ALL {
            let p = a.poset(kind);
            ensure(p.is_valid(), || {
                format!("{spec}/{kind}: not a bounded partial order")
            })?;
            let bps = breaking_points(p);
            for x in (0..p.size()).filter(|&x| p.is_proper(x)) {
                ensure(bps.contains(&x) == p.is_cover(x, x), || {
                    format!("{spec}/{kind}: breaking point vs (x,x) cover at {x}")
                })?;
            }
            if !bps.is_empty() {
                ensure(two_interval_cover(p, false).is_some(), || {
                    format!("{spec}/{kind}: breaking point without cover")
                })?;
            }
            let edges = hasse_edges(p);
            let mut m = grouplat::bitset::BitMatrix::new(p.size());
            for &(x, y) in &edges {
                m.set(x, y);
            }
            ensure(&m.reflexive_transitive_closure() == p.leq_matrix(), || {
                format!("{spec}/{kind}: Hasse closure differs")
            })?;
            if p.size() <= 60 {
                ensure(
                    edges == covering_pairs(p.size(), |x, y| p.leq(x, y)),
                    || format!("{spec}/{kind}: Hasse edges differ from brute force"),
                )?;
            }
        }
        let lbar = a.lbar();
        if let Some(all) = a.class_c_witness(true).and_then(|w| w.all_pairs) {
            for (m, n) in all {
                ensure(revalidate_cover(lbar, m, n), || {
                    format!("{spec}: witness ({m},{n}) fails re-validation")
                })?;
            }
        }
        if g.is_abelian() {
            ensure(
                a.classes.len() == a.lattice.len()
                    && a.classes.leq_matrix() == a.lattice.subset_matrix(),
                || format!("{spec}: abelian L and Lbar differ"),
            )?;
            ensure(
                two_interval_cover(a.poset(PosetKind::L), false).is_some() == a.in_class_c(),
                || format!("{spec}: abelian cover differs between L and Lbar"),
            )?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for i in 0..2 {
        let path = dir.path().join(format!("verify{i}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_grouplat"))
            .args(["verify", "all", "--json"])
            .arg(&path)
            .output()
            .map_err(|e| e.to_string())?;
        ensure(status.status.code() == Some(0), || {
            format!("exit code {:?}", status.status.code())
        })?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(!outputs[0].is_empty() && outputs[0] == outputs[1], || {
        "verify outputs differ between runs".into()
    })?;
    let again = verify::run_suites(&Suite::ALL, &Limits::default()).map_err(|e| e.to_string())?;
    let again = grouplat::report::VerifyReport::new(again).to_json() + "\n";
    ensure(again.as_bytes() == outputs[0], || {
        "library and CLI JSON differ".into()
    })
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "breaking points of Lbar exactly on cyclic p-groups >= p^2 and Q_2^n",
            criterion_1,
        ),
        (
            "breaking-point existence agrees across L, Lbar, C, Cbar",
            criterion_2,
        ),
        (
            "modular groups in the class with named witnesses; D8, D16, D32 not",
            criterion_3,
        ),
        (
            "complement witnesses, A5, C2^2 x M(27), dihedral classification",
            criterion_4,
        ),
        (
            "coprime direct products lift witnesses; C6 in, C2 and C3 out",
            criterion_5,
        ),
        (
            "subgroup enumeration equals exhaustive oracle up to order 24",
            criterion_6,
        ),
        ("property suites over the whole catalog", criterion_7),
        (
            "verify all --json is byte-identical across runs, exit 0",
            criterion_8,
        ),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".to_string()));
        match outcome {
            Ok(()) => println!("[PASS] criterion {}: {name}", i + 1),
            Err(why) => {
                failures += 1;
                println!("[FAIL] criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
