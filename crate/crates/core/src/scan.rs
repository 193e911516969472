//! Family sweeps for class membership.

use crate::analysis::Analysis;
use crate::error::Limits;
use crate::group::GroupSpec;
use crate::numtheory::{gcd, is_prime, pow_mod};
use crate::poset::{breaking_points, two_interval_cover, PosetKind};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Cyclic,
    Abelian,
    Dihedral,
    Dicyclic,
    Modular,
    Semidihedral,
    Symmetric,
    Alternating,
    Zm,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Cyclic,
        Family::Abelian,
        Family::Dihedral,
        Family::Dicyclic,
        Family::Modular,
        Family::Semidihedral,
        Family::Symmetric,
        Family::Alternating,
        Family::Zm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Abelian => "abelian",
            Family::Dihedral => "dihedral",
            Family::Dicyclic => "dicyclic",
            Family::Modular => "modular",
            Family::Semidihedral => "semidihedral",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::Zm => "zm",
        }
    }

    /// Members of the family with order at most `max_order`.
    pub fn members(self, max_order: usize) -> Vec<GroupSpec> {
        let mut out = Vec::new();
        match self {
            Family::Cyclic => out.extend((2..=max_order).map(GroupSpec::Cyclic)),
            Family::Abelian => {
                let mut stack = Vec::new();
                invariant_factors(2, max_order, &mut stack, &mut out);
            }
            Family::Dihedral => out.extend((6..=max_order).step_by(2).map(GroupSpec::Dihedral)),
            Family::Dicyclic => out.extend((2..=max_order / 4).map(GroupSpec::Dicyclic)),
            Family::Modular => {
                for p in (2..=max_order).filter(|&p| is_prime(p)) {
                    let mut n = if p == 2 { 4 } else { 3 };
                    while p.checked_pow(n).is_some_and(|o| o <= max_order) {
                        out.push(GroupSpec::ModularMaxCyclic { p, n });
                        n += 1;
                    }
                }
            }
            Family::Semidihedral => {
                let mut o = 16;
                while o <= max_order {
                    out.push(GroupSpec::Semidihedral(o));
                    o *= 2;
                }
            }
            Family::Symmetric | Family::Alternating => {
                let sym = self == Family::Symmetric;
                for n in if sym { 3.. } else { 4.. } {
                    let spec = if sym {
                        GroupSpec::Symmetric(n)
                    } else {
                        GroupSpec::Alternating(n)
                    };
                    if spec.order().is_none_or(|o| o > max_order) {
                        break;
                    }
                    out.push(spec);
                }
            }
            Family::Zm => {
                for m in 3..=max_order / 2 {
                    for n in 2..=max_order / m {
                        for r in 2..m {
                            if zm_params_ok(m, n, r) && is_least_generator(m, r) {
                                out.push(GroupSpec::Zm { m, n, r });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

fn zm_params_ok(m: usize, n: usize, r: usize) -> bool {
    gcd(m, n * (r - 1)) == 1 && pow_mod(r, n as u64, m) == 1
}

/// `r` is the least element of the cyclic subgroup it generates in the
/// units mod `m`, which skips relabelings of the same group.
fn is_least_generator(m: usize, r: usize) -> bool {
    let mut powers = Vec::new();
    let mut x = r;
    while x != 1 {
        powers.push(x);
        x = x * r % m;
    }
    let k = powers.len() + 1;
    powers
        .iter()
        .enumerate()
        .filter(|&(i, _)| gcd(i + 1, k) == 1)
        .all(|(_, &y)| y >= r)
}

/// Noncyclic abelian groups `C_{d1} x ... x C_{dk}` with `d1 | d2 | ...`.
fn invariant_factors(min: usize, budget: usize, stack: &mut Vec<usize>, out: &mut Vec<GroupSpec>) {
    if stack.len() >= 2 {
        out.push(GroupSpec::DirectProduct(
            stack.iter().map(|&d| GroupSpec::Cyclic(d)).collect(),
        ));
    }
    let mut d = min;
    while d <= budget {
        if stack.last().is_none_or(|&last| d.is_multiple_of(last)) {
            stack.push(d);
            invariant_factors(d, budget / d, stack, out);
            stack.pop();
        }
        d += 1;
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

/// One scanned group. Everything but the identity columns is `None` when
/// a resource cap stopped the analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub spec: String,
    pub family: String,
    pub order: usize,
    pub n_subgroups: Option<usize>,
    pub n_classes: Option<usize>,
    pub bp_l: Option<bool>,
    pub bp_lbar: Option<bool>,
    pub bp_c: Option<bool>,
    pub bp_cbar: Option<bool>,
    pub in_c: Option<bool>,
    pub witnesses: Option<usize>,
    pub abelian: Option<bool>,
    pub nilpotent: Option<bool>,
    pub solvable: Option<bool>,
    pub skipped: Option<String>,
}

/// Sweeps the families up to `max_order`; rows are ordered by group order,
/// then family, then construction order.
pub fn scan_class_c(max_order: usize, families: &[Family], limits: &Limits) -> Vec<ScanRow> {
    let max_order = max_order.min(limits.max_order);
    let mut jobs: Vec<(Family, GroupSpec)> = Vec::new();
    for &f in families {
        jobs.extend(f.members(max_order).into_iter().map(|s| (f, s)));
    }
    jobs.sort_by_key(|(f, s)| (s.order().unwrap_or(usize::MAX), *f));
    jobs.par_iter()
        .map(|(f, s)| scan_one(*f, s, limits))
        .collect()
}

fn scan_one(family: Family, spec: &GroupSpec, limits: &Limits) -> ScanRow {
    let mut row = ScanRow {
        spec: spec.to_string(),
        family: family.name().to_string(),
        order: spec.order().unwrap_or(0),
        n_subgroups: None,
        n_classes: None,
        bp_l: None,
        bp_lbar: None,
        bp_c: None,
        bp_cbar: None,
        in_c: None,
        witnesses: None,
        abelian: None,
        nilpotent: None,
        solvable: None,
        skipped: None,
    };
    let a = match Analysis::from_spec(spec, limits) {
        Ok(a) => a,
        Err(e) => {
            row.skipped = Some(e.to_string());
            return row;
        }
    };
    let bp = |k| Some(!breaking_points(a.poset(k)).is_empty());
    let count = two_interval_cover(a.lbar(), true)
        .and_then(|w| w.all_pairs)
        .map_or(0, |p| p.len());
    ScanRow {
        n_subgroups: Some(a.lattice.len()),
        n_classes: Some(a.classes.len()),
        bp_l: bp(PosetKind::L),
        bp_lbar: bp(PosetKind::Lbar),
        bp_c: bp(PosetKind::C),
        bp_cbar: bp(PosetKind::Cbar),
        in_c: Some(count > 0),
        witnesses: Some(count),
        abelian: Some(a.profile.is_abelian),
        nilpotent: Some(a.profile.is_nilpotent),
        solvable: Some(a.profile.is_solvable),
        ..row
    }
}
