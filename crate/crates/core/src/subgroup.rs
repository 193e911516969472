//! Subgroup enumeration, conjugation and the conjugacy-class poset.

use crate::bitset::{BitMatrix, BitSet};
use crate::error::{Error, Limits, Result};
use crate::group::GroupTable;
use std::collections::{HashMap, VecDeque};

/// A subgroup as a sorted list of element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    elems: Vec<usize>,
    set: BitSet,
}

impl Subgroup {
    fn from_set(set: BitSet) -> Self {
        Subgroup {
            elems: set.to_vec(),
            set,
        }
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn set(&self) -> &BitSet {
        &self.set
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        other.order().is_multiple_of(self.order()) && self.set.is_subset(&other.set)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut s = self.set.clone();
        s.intersect_with(&other.set);
        Subgroup::from_set(s)
    }
}

impl std::fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subgroup{:?}", self.elems)
    }
}

/// Saturates `start` (which must contain the identity) under right
/// multiplication by `gens`. In a finite group this is the generated subgroup.
fn saturate(g: &GroupTable, mut set: BitSet, gens: &[usize]) -> BitSet {
    let mut queue: VecDeque<usize> = set.iter().collect();
    while let Some(u) = queue.pop_front() {
        for &s in gens {
            let v = g.mul(u, s);
            if set.insert(v) {
                queue.push_back(v);
            }
        }
    }
    set
}

/// The least subgroup containing `seed`.
pub fn closure(g: &GroupTable, seed: &[usize]) -> Subgroup {
    let start = BitSet::from_indices(g.order(), [0]);
    Subgroup::from_set(saturate(g, start, seed))
}

/// All subgroups of a group with inclusion as a bit matrix.
#[derive(Clone)]
pub struct SubgroupLattice {
    subs: Vec<Subgroup>,
    subset: BitMatrix,
    index: HashMap<BitSet, usize>,
}

impl SubgroupLattice {
    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subs
    }

    pub fn len(&self) -> usize {
        self.subs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subs.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subs[i]
    }

    /// `subs[i] ⊆ subs[j]`.
    pub fn is_subset(&self, i: usize, j: usize) -> bool {
        self.subset.get(i, j)
    }

    pub fn subset_matrix(&self) -> &BitMatrix {
        &self.subset
    }

    pub fn trivial_idx(&self) -> usize {
        0
    }

    pub fn full_idx(&self) -> usize {
        self.subs.len() - 1
    }

    pub fn find_set(&self, set: &BitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    pub fn find(&self, h: &Subgroup) -> Option<usize> {
        self.find_set(&h.set)
    }

    /// Index of the subgroup with exactly these elements.
    pub fn find_elems(&self, n: usize, elems: &[usize]) -> Option<usize> {
        self.find_set(&BitSet::from_indices(n, elems.iter().copied()))
    }

    /// Maximal proper subgroups (coatoms of inclusion).
    pub fn maximal(&self) -> Vec<usize> {
        let top = self.full_idx();
        (0..self.len())
            .filter(|&i| i != top)
            .filter(|&i| (0..self.len()).all(|j| j == i || j == top || !self.is_subset(i, j)))
            .collect()
    }
}

/// Enumerates every subgroup by adjoining one cyclic subgroup at a time to
/// known subgroups, starting from the trivial group, until nothing new
/// appears. Subgroups are sorted by order, then lexicographically by
/// elements.
pub fn enumerate_subgroups(g: &GroupTable, limits: &Limits) -> Result<SubgroupLattice> {
    let n = g.order();
    // One generator per distinct cyclic subgroup: ⟨H, a⟩ depends only on ⟨a⟩.
    let mut cyclic_reps = Vec::new();
    let mut seen_cyclic: HashMap<BitSet, ()> = HashMap::new();
    for a in 1..n {
        let c = closure(g, &[a]).set;
        if seen_cyclic.insert(c, ()).is_none() {
            cyclic_reps.push(a);
        }
    }

    let trivial = BitSet::from_indices(n, [0]);
    let mut found: HashMap<BitSet, Vec<usize>> = HashMap::new();
    found.insert(trivial.clone(), Vec::new());
    let mut queue = VecDeque::from([trivial]);
    while let Some(h) = queue.pop_front() {
        let gens = found[&h].clone();
        for &a in &cyclic_reps {
            if h.contains(a) {
                continue;
            }
            let mut next_gens = gens.clone();
            next_gens.push(a);
            let k = saturate(g, h.clone(), &next_gens);
            if !found.contains_key(&k) {
                if found.len() >= limits.max_subgroups {
                    return Err(Error::SubgroupCapExceeded {
                        cap: limits.max_subgroups,
                    });
                }
                found.insert(k.clone(), next_gens);
                queue.push_back(k);
            }
        }
    }

    let mut subs: Vec<Subgroup> = found.into_keys().map(Subgroup::from_set).collect();
    subs.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elems.cmp(&b.elems))
    });
    let index = subs
        .iter()
        .enumerate()
        .map(|(i, s)| (s.set.clone(), i))
        .collect();
    let k = subs.len();
    let mut subset = BitMatrix::new(k);
    for i in 0..k {
        for j in i..k {
            if subs[i].is_subset(&subs[j]) {
                subset.set(i, j);
            }
        }
    }
    Ok(SubgroupLattice {
        subs,
        subset,
        index,
    })
}

/// `Hˣ = {x⁻¹ h x : h ∈ H}`.
pub fn conjugate_subgroup(g: &GroupTable, h: &Subgroup, x: usize) -> Subgroup {
    let set = BitSet::from_indices(g.order(), h.elems.iter().map(|&a| g.conjugate(a, x)));
    Subgroup::from_set(set)
}

pub fn normalizer(g: &GroupTable, h: &Subgroup) -> Subgroup {
    let set = BitSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| h.elems.iter().all(|&a| h.contains(g.conjugate(a, x)))),
    );
    Subgroup::from_set(set)
}

pub fn is_normal(g: &GroupTable, h: &Subgroup) -> bool {
    (0..g.order()).all(|x| h.elems.iter().all(|&a| h.contains(g.conjugate(a, x))))
}

/// A small generating set, chosen greedily in index order.
pub fn generators(g: &GroupTable) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = BitSet::from_indices(g.order(), [0]);
    for a in 1..g.order() {
        if !span.contains(a) {
            gens.push(a);
            span = saturate(g, span, &gens);
        }
    }
    gens
}

/// The poset of conjugacy classes of subgroups, `[H₁] ≤ [H₂]` iff
/// `H₁ ⊆ H₂ˣ` for some `x`.
#[derive(Clone, Debug)]
pub struct ConjClassPoset {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    leq: BitMatrix,
}

impl ConjClassPoset {
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn members(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Representative: the member with the lexicographically least elements.
    pub fn rep(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn class_of(&self, sub: usize) -> usize {
        self.class_of[sub]
    }

    pub fn leq(&self, c1: usize, c2: usize) -> bool {
        self.leq.get(c1, c2)
    }

    pub fn leq_matrix(&self) -> &BitMatrix {
        &self.leq
    }

    pub fn bottom_idx(&self) -> usize {
        0
    }

    pub fn top_idx(&self) -> usize {
        self.classes.len() - 1
    }
}

pub fn conjugacy_classes(g: &GroupTable, lat: &SubgroupLattice) -> ConjClassPoset {
    let gens = generators(g);
    let k = lat.len();
    let mut class_of = vec![usize::MAX; k];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..k {
        if class_of[start] != usize::MAX {
            continue;
        }
        let c = classes.len();
        class_of[start] = c;
        let mut members = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            for &x in &gens {
                let conj = conjugate_subgroup(g, lat.get(i), x);
                let j = lat
                    .find(&conj)
                    .expect("subgroup lattice is closed under conjugation");
                if class_of[j] == usize::MAX {
                    class_of[j] = c;
                    members.push(j);
                    queue.push_back(j);
                }
            }
        }
        members.sort_unstable();
        classes.push(members);
    }

    let nc = classes.len();
    let mut leq = BitMatrix::new(nc);
    for c1 in 0..nc {
        let r = classes[c1][0];
        let o1 = lat.get(r).order();
        for (c2, members) in classes.iter().enumerate() {
            if !lat.get(members[0]).order().is_multiple_of(o1) {
                continue;
            }
            if members.iter().any(|&j| lat.is_subset(r, j)) {
                leq.set(c1, c2);
            }
        }
    }
    ConjClassPoset {
        classes,
        class_of,
        leq,
    }
}
