//! One-stop bundle of everything computed for a single group.

use crate::error::{Limits, Result};
use crate::group::{build_group, GroupSpec, GroupTable};
use crate::poset::{build_poset, two_interval_cover, IntervalCoverWitness, PosetKind, PosetView};
use crate::structure::{structure_profile, StructureProfile};
use crate::subgroup::{
    conjugacy_classes, enumerate_subgroups, ConjClassPoset, Subgroup, SubgroupLattice,
};

pub struct Analysis {
    pub group: GroupTable,
    pub lattice: SubgroupLattice,
    pub classes: ConjClassPoset,
    pub profile: StructureProfile,
    posets: [PosetView; 4],
}

impl Analysis {
    pub fn new(group: GroupTable, limits: &Limits) -> Result<Self> {
        let lattice = enumerate_subgroups(&group, limits)?;
        let classes = conjugacy_classes(&group, &lattice);
        let profile = structure_profile(&group, &lattice);
        let posets = PosetKind::ALL.map(|k| build_poset(&group, &lattice, &classes, k));
        Ok(Analysis {
            group,
            lattice,
            classes,
            profile,
            posets,
        })
    }

    pub fn from_spec(spec: &GroupSpec, limits: &Limits) -> Result<Self> {
        Self::new(build_group(spec, limits)?, limits)
    }

    pub fn parse(spec: &str, limits: &Limits) -> Result<Self> {
        Self::from_spec(&spec.parse()?, limits)
    }

    pub fn poset(&self, kind: PosetKind) -> &PosetView {
        let i = PosetKind::ALL.iter().position(|&k| k == kind).unwrap();
        &self.posets[i]
    }

    pub fn lbar(&self) -> &PosetView {
        self.poset(PosetKind::Lbar)
    }

    /// First (or every) two-interval cover of the conjugacy-class poset.
    pub fn class_c_witness(&self, find_all: bool) -> Option<IntervalCoverWitness> {
        two_interval_cover(self.lbar(), find_all)
    }

    pub fn in_class_c(&self) -> bool {
        self.class_c_witness(false).is_some()
    }

    /// Position in the class poset of the class containing `h`.
    pub fn class_position(&self, h: &Subgroup) -> Option<usize> {
        let sub = self.lattice.find(h)?;
        self.lbar().position_of_payload(self.classes.class_of(sub))
    }

    /// Whether `([1],[m]) ∪ ([n],[G])` covers the class poset, with `m`, `n`
    /// proper nontrivial subgroups.
    pub fn is_class_cover(&self, m: &Subgroup, n: &Subgroup) -> bool {
        let p = self.lbar();
        match (self.class_position(m), self.class_position(n)) {
            (Some(mi), Some(ni)) => p.is_proper(mi) && p.is_proper(ni) && p.is_cover(mi, ni),
            _ => false,
        }
    }

    /// Representative subgroup behind a class-poset element.
    pub fn class_rep(&self, x: usize) -> &Subgroup {
        self.lattice.get(self.classes.rep(self.lbar().payload(x)))
    }

    /// `{a, b, ...}` rendered with element labels.
    pub fn describe(&self, h: &Subgroup) -> String {
        let labels: Vec<&str> = h.elems().iter().map(|&a| self.group.label(a)).collect();
        format!("{{{}}}", labels.join(", "))
    }
}
