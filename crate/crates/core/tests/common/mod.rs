#![allow(dead_code)]

use grouplat::{GroupTable, Limits};
use std::collections::BTreeSet;

pub fn build(spec: &str) -> GroupTable {
    grouplat::build_group(&spec.parse().unwrap(), &Limits::default()).unwrap()
}

/// Every subset containing the identity that is closed under the group
/// product, found by brute force over bit masks. Subsets whose size does
/// not divide the order are skipped before the closure test.
pub fn subgroups_by_exhaustion(g: &GroupTable) -> BTreeSet<Vec<usize>> {
    let n = g.order();
    assert!(n <= 32, "exhaustive oracle only for tiny groups");
    let mut out = BTreeSet::new();
    let rest = n - 1;
    for bits in 0u64..(1u64 << rest) {
        let size = bits.count_ones() as usize + 1;
        if !n.is_multiple_of(size) {
            continue;
        }
        let mask = (bits << 1) | 1;
        let elems: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        let closed = elems
            .iter()
            .all(|&a| elems.iter().all(|&b| mask >> g.mul(a, b) & 1 == 1));
        if closed {
            out.insert(elems);
        }
    }
    out
}

/// Transitive reduction by the definition: `x < y` with no `z` strictly
/// between, using only the `leq` relation.
pub fn covering_pairs(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x != y && leq(x, y) && !(0..n).any(|z| z != x && z != y && leq(x, z) && leq(z, y)) {
                out.push((x, y));
            }
        }
    }
    out
}
