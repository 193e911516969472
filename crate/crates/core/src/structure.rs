//! Structural recognizers and characteristic subgroups.

use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::numtheory::{is_power_of, prime_divisors, valuation};
use crate::subgroup::{closure, ConjClassPoset, Subgroup, SubgroupLattice};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureProfile {
    pub primes: Vec<usize>,
    pub is_abelian: bool,
    pub is_cyclic: bool,
    pub is_p_group: bool,
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    pub is_generalized_quaternion: bool,
    /// Number of subgroups of order `p`, per prime `p`.
    pub order_p_subgroups: BTreeMap<usize, usize>,
}

pub fn structure_profile(g: &GroupTable, lat: &SubgroupLattice) -> StructureProfile {
    let primes = primes_of(g);
    let order_p_subgroups = primes
        .iter()
        .map(|&p| (p, count_of_order(lat, p)))
        .collect();
    StructureProfile {
        is_abelian: g.is_abelian(),
        is_cyclic: is_cyclic(g),
        is_p_group: primes.len() == 1,
        is_nilpotent: is_nilpotent(g, lat),
        is_solvable: is_solvable(g),
        is_generalized_quaternion: is_generalized_quaternion(g, lat),
        primes,
        order_p_subgroups,
    }
}

/// Distinct primes dividing `|G|`.
pub fn primes_of(g: &GroupTable) -> Vec<usize> {
    prime_divisors(g.order())
}

fn check_prime(g: &GroupTable, p: usize) -> Result<()> {
    if primes_of(g).contains(&p) {
        Ok(())
    } else {
        Err(Error::PrimeNotInOrder {
            p,
            order: g.order(),
        })
    }
}

fn count_of_order(lat: &SubgroupLattice, order: usize) -> usize {
    lat.subgroups()
        .iter()
        .filter(|h| h.order() == order)
        .count()
}

pub fn is_cyclic(g: &GroupTable) -> bool {
    (0..g.order()).any(|a| g.element_order(a) == g.order())
}

/// Subgroup generated by the commutators of elements of `h`.
pub fn derived_of(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let mut comms: Vec<usize> = Vec::new();
    let mut seen = vec![false; g.order()];
    for &a in h.elems() {
        for &b in h.elems() {
            let c = g.commutator(a, b);
            if !std::mem::replace(&mut seen[c], true) {
                comms.push(c);
            }
        }
    }
    closure(g, &comms)
}

pub fn derived_subgroup(g: &GroupTable) -> Subgroup {
    derived_of(g, &whole(g))
}

fn whole(g: &GroupTable) -> Subgroup {
    closure(g, &(0..g.order()).collect::<Vec<_>>())
}

/// True iff the derived series reaches the trivial subgroup.
pub fn is_solvable(g: &GroupTable) -> bool {
    let mut h = whole(g);
    loop {
        if h.order() == 1 {
            return true;
        }
        let d = derived_of(g, &h);
        if d.order() == h.order() {
            return false;
        }
        h = d;
    }
}

/// Subgroups of order `p^{v_p(|G|)}`.
pub fn sylow_subgroups(g: &GroupTable, lat: &SubgroupLattice, p: usize) -> Result<Vec<usize>> {
    check_prime(g, p)?;
    let order = p.pow(valuation(g.order(), p));
    Ok((0..lat.len())
        .filter(|&i| lat.get(i).order() == order)
        .collect())
}

/// Nilpotent iff every Sylow subgroup is normal, i.e. unique for its prime.
pub fn is_nilpotent(g: &GroupTable, lat: &SubgroupLattice) -> bool {
    primes_of(g).into_iter().all(|p| {
        sylow_subgroups(g, lat, p)
            .map(|s| s.len() == 1)
            .unwrap_or(false)
    })
}

/// Subgroup generated by the elements of order `p`.
pub fn omega1(g: &GroupTable, p: usize) -> Result<Subgroup> {
    check_prime(g, p)?;
    let gens: Vec<usize> = (0..g.order())
        .filter(|&a| g.element_order(a) == p)
        .collect();
    Ok(closure(g, &gens))
}

/// Intersection of the maximal subgroups; trivial for the trivial group.
pub fn frattini(g: &GroupTable, lat: &SubgroupLattice) -> Subgroup {
    lat.maximal()
        .into_iter()
        .map(|i| lat.get(i).clone())
        .reduce(|a, b| a.intersection(&b))
        .unwrap_or_else(|| closure(g, &[]))
}

/// `|G| = 2ⁿ` with `n ≥ 3`, noncyclic, with a single subgroup of order 2.
pub fn is_generalized_quaternion(g: &GroupTable, lat: &SubgroupLattice) -> bool {
    matches!(is_power_of(g.order(), 2), Some(n) if n >= 3)
        && !is_cyclic(g)
        && count_of_order(lat, 2) == 1
}

/// `|G| = pᵏ` with `k ≥ 2` and an element of order `|G|`.
pub fn is_cyclic_pgroup_order_ge_p2(g: &GroupTable) -> bool {
    match prime_divisors(g.order())[..] {
        [p] => valuation(g.order(), p) >= 2 && is_cyclic(g),
        _ => false,
    }
}

/// True iff all subgroups of order `p` form a single conjugacy class.
pub fn order_p_subgroups_conjugate(
    g: &GroupTable,
    lat: &SubgroupLattice,
    ccp: &ConjClassPoset,
    p: usize,
) -> Result<bool> {
    check_prime(g, p)?;
    let mut classes = (0..lat.len())
        .filter(|&i| lat.get(i).order() == p)
        .map(|i| ccp.class_of(i));
    let first = classes.next();
    Ok(classes.all(|c| Some(c) == first))
}

/// First subgroup (in lattice order) of order `|G| / p^{v_p(|G|)}`.
pub fn p_complement(g: &GroupTable, lat: &SubgroupLattice, p: usize) -> Result<Option<usize>> {
    check_prime(g, p)?;
    let order = g.order() / p.pow(valuation(g.order(), p));
    Ok((0..lat.len()).find(|&i| lat.get(i).order() == order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Limits;
    use crate::group::build_group;
    use crate::subgroup::{conjugacy_classes, enumerate_subgroups};

    fn setup(s: &str) -> (GroupTable, SubgroupLattice) {
        let g = build_group(&s.parse().unwrap(), &Limits::default()).unwrap();
        let lat = enumerate_subgroups(&g, &Limits::default()).unwrap();
        (g, lat)
    }

    #[test]
    fn primes() {
        assert_eq!(primes_of(&setup("C6").0), vec![2, 3]);
        assert_eq!(primes_of(&setup("Q16").0), vec![2]);
        assert_eq!(primes_of(&setup("A5").0), vec![2, 3, 5]);
    }

    #[test]
    fn derived_subgroups() {
        assert_eq!(derived_subgroup(&setup("C2xC4").0).order(), 1);
        let (s3, _) = setup("S3");
        let expect = closure(&s3, &[s3.find_label("(1,2,3)").unwrap()]);
        assert_eq!(derived_subgroup(&s3), expect);
        let (m, _) = setup("M3^3");
        // ⟨x³⟩ with x at index 3.
        assert_eq!(derived_subgroup(&m), closure(&m, &[m.pow(3, 3)]));
    }

    #[test]
    fn solvability() {
        assert!(is_solvable(&setup("S4").0));
        assert!(!is_solvable(&setup("A5").0));
        assert!(is_solvable(&setup("M3^3").0));
        assert!(is_solvable(&setup("C1").0));
    }

    #[test]
    fn sylow_and_nilpotency() {
        let (s3, lat) = setup("S3");
        assert_eq!(sylow_subgroups(&s3, &lat, 3).unwrap().len(), 1);
        assert_eq!(sylow_subgroups(&s3, &lat, 2).unwrap().len(), 3);
        assert_eq!(
            sylow_subgroups(&s3, &lat, 5),
            Err(Error::PrimeNotInOrder { p: 5, order: 6 })
        );
        assert!(!is_nilpotent(&s3, &lat));
        let (g, lat) = setup("C2xC9");
        assert!(is_nilpotent(&g, &lat));
    }

    #[test]
    fn omega_and_frattini() {
        let (m, lat) = setup("M3^3");
        assert_eq!(omega1(&m, 3).unwrap(), closure(&m, &[m.pow(3, 3), 1]));
        assert_eq!(frattini(&m, &lat), closure(&m, &[m.pow(3, 3)]));
        let (d, _) = setup("D16");
        assert_eq!(omega1(&d, 2).unwrap().order(), 16);
        let (c9, _) = setup("C9");
        assert_eq!(omega1(&c9, 3).unwrap().order(), 3);
        assert!(omega1(&c9, 2).is_err());
        let (k, lat) = setup("C2xC2");
        assert_eq!(frattini(&k, &lat).order(), 1);
        let (c8, lat) = setup("C8");
        assert_eq!(frattini(&c8, &lat).order(), 4);
        let (c1, lat) = setup("C1");
        assert_eq!(frattini(&c1, &lat).order(), 1);
    }

    #[test]
    fn recognizers() {
        for s in ["Q8", "Q16", "Q32"] {
            let (g, lat) = setup(s);
            assert!(is_generalized_quaternion(&g, &lat), "{s}");
        }
        let (c8, lat) = setup("C8");
        assert!(!is_generalized_quaternion(&c8, &lat));
        let (d16, lat) = setup("D16");
        assert_eq!(count_of_order(&lat, 2), 9);
        assert!(!is_generalized_quaternion(&d16, &lat));
        assert!(is_cyclic_pgroup_order_ge_p2(&setup("C9").0));
        assert!(!is_cyclic_pgroup_order_ge_p2(&setup("C6").0));
        assert!(!is_cyclic_pgroup_order_ge_p2(&setup("C7").0));
    }

    #[test]
    fn order_p_conjugacy() {
        let (a5, lat) = setup("A5");
        let ccp = conjugacy_classes(&a5, &lat);
        assert!(order_p_subgroups_conjugate(&a5, &lat, &ccp, 3).unwrap());
        assert!(order_p_subgroups_conjugate(&a5, &lat, &ccp, 5).unwrap());
        let (g, lat) = setup("C2xC2xM3^3");
        let ccp = conjugacy_classes(&g, &lat);
        assert!(!order_p_subgroups_conjugate(&g, &lat, &ccp, 2).unwrap());
        assert!(!order_p_subgroups_conjugate(&g, &lat, &ccp, 3).unwrap());
        let (c9, lat) = setup("C9");
        let ccp = conjugacy_classes(&c9, &lat);
        assert!(order_p_subgroups_conjugate(&c9, &lat, &ccp, 3).unwrap());
    }

    #[test]
    fn complements() {
        let (s3, lat) = setup("S3");
        let c = p_complement(&s3, &lat, 2).unwrap().unwrap();
        assert_eq!(
            *lat.get(c),
            closure(&s3, &[s3.find_label("(1,2,3)").unwrap()])
        );
        let (z, lat) = setup("ZM(7,3,2)");
        assert_eq!(
            lat.get(p_complement(&z, &lat, 7).unwrap().unwrap()).order(),
            3
        );
        let (a5, lat) = setup("A5");
        assert_eq!(
            lat.get(p_complement(&a5, &lat, 5).unwrap().unwrap())
                .order(),
            12
        );
        // A5 has no subgroup of order 15.
        assert_eq!(p_complement(&a5, &lat, 2).unwrap(), None);
    }
}
