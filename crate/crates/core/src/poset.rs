//! Finite posets built from subgroup data: breaking points, intervals,
//! two-interval covers and Hasse diagrams.
//!
//! The four views are `L` (subgroups under inclusion), `Lbar` (conjugacy
//! classes of subgroups), `C` (cyclic subgroups) and `Cbar` (conjugacy
//! classes of cyclic subgroups). A noncyclic group is not an element of its
//! own `C`/`Cbar` view, so those posets have no top; there an element only
//! counts as proper when it is neither the bottom nor maximal.

use crate::bitset::{BitMatrix, BitSet};
use crate::error::{Error, Result};
use crate::group::GroupTable;
use crate::subgroup::{ConjClassPoset, SubgroupLattice};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PosetKind {
    L,
    Lbar,
    C,
    Cbar,
}

impl PosetKind {
    pub const ALL: [PosetKind; 4] = [PosetKind::L, PosetKind::Lbar, PosetKind::C, PosetKind::Cbar];

    pub fn is_class_poset(self) -> bool {
        matches!(self, PosetKind::Lbar | PosetKind::Cbar)
    }

    pub fn is_cyclic_only(self) -> bool {
        matches!(self, PosetKind::C | PosetKind::Cbar)
    }
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PosetKind::L => "L",
            PosetKind::Lbar => "Lbar",
            PosetKind::C => "C",
            PosetKind::Cbar => "Cbar",
        })
    }
}

impl FromStr for PosetKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "L" => Ok(PosetKind::L),
            "Lbar" => Ok(PosetKind::Lbar),
            "C" => Ok(PosetKind::C),
            "Cbar" => Ok(PosetKind::Cbar),
            _ => Err(format!("unknown poset `{s}` (expected L, Lbar, C or Cbar)")),
        }
    }
}

/// A finite poset with a bottom element and, possibly, a top.
#[derive(Clone, Debug)]
pub struct PosetView {
    kind: PosetKind,
    leq: BitMatrix,
    geq: BitMatrix,
    bottom: usize,
    top: Option<usize>,
    labels: Vec<String>,
    payload: Vec<usize>,
    orders: Vec<usize>,
    class_sizes: Vec<usize>,
    maximal: BitSet,
}

/// `(M, N)` with every element below `M` or above `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalCoverWitness {
    pub m_idx: usize,
    pub n_idx: usize,
    pub all_pairs: Option<Vec<(usize, usize)>>,
}

impl PosetView {
    /// Builds a poset from a relation matrix (reflexive, antisymmetric and
    /// transitive). Element `0` must be the bottom.
    pub fn from_parts(
        kind: PosetKind,
        leq: BitMatrix,
        payload: Vec<usize>,
        orders: Vec<usize>,
        class_sizes: Vec<usize>,
    ) -> Self {
        let n = leq.size();
        debug_assert!(
            n > 0 && leq.row(0).count() == n,
            "element 0 must be the bottom"
        );
        let geq = leq.transpose();
        let top = (0..n).find(|&x| geq.row(x).count() == n);
        let maximal = BitSet::from_indices(n, (0..n).filter(|&x| leq.row(x).count() == 1));
        let labels = (0..n)
            .map(|x| {
                if kind.is_class_poset() {
                    format!("o{}×{}", orders[x], class_sizes[x])
                } else {
                    format!("o{}", orders[x])
                }
            })
            .collect();
        PosetView {
            kind,
            leq,
            geq,
            bottom: 0,
            top,
            labels,
            payload,
            orders,
            class_sizes,
            maximal,
        }
    }

    pub fn kind(&self) -> PosetKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.leq.size()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq.get(x, y)
    }

    pub fn leq_matrix(&self) -> &BitMatrix {
        &self.leq
    }

    /// `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &BitSet {
        self.geq.row(x)
    }

    /// `{y : x ≤ y}`.
    pub fn up_set(&self, x: usize) -> &BitSet {
        self.leq.row(x)
    }

    pub fn bottom_idx(&self) -> usize {
        self.bottom
    }

    pub fn top_idx(&self) -> Option<usize> {
        self.top
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    /// Subgroup index (`L`, `C`) or class index (`Lbar`, `Cbar`).
    pub fn payload(&self, x: usize) -> usize {
        self.payload[x]
    }

    pub fn position_of_payload(&self, payload: usize) -> Option<usize> {
        self.payload.binary_search(&payload).ok()
    }

    /// Order of the subgroup (or class representative) behind `x`.
    pub fn subgroup_order(&self, x: usize) -> usize {
        self.orders[x]
    }

    pub fn class_size(&self, x: usize) -> usize {
        self.class_sizes[x]
    }

    pub fn is_maximal(&self, x: usize) -> bool {
        self.maximal.contains(x)
    }

    /// Not the bottom, not the top, and not maximal when there is no top.
    pub fn is_proper(&self, x: usize) -> bool {
        x != self.bottom && Some(x) != self.top && (self.top.is_some() || !self.is_maximal(x))
    }

    pub fn is_comparable_to_all(&self, x: usize) -> bool {
        self.up_set(x).covers_with(self.down_set(x))
    }

    /// Every element lies below `m` or above `n`.
    pub fn is_cover(&self, m: usize, n: usize) -> bool {
        self.down_set(m).covers_with(self.up_set(n))
    }

    pub fn is_valid(&self) -> bool {
        let n = self.size();
        self.leq.is_partial_order()
            && (0..n).all(|x| self.leq(self.bottom, x))
            && self.top.is_none_or(|t| (0..n).all(|x| self.leq(x, t)))
    }
}

/// Builds one of the four subgroup posets of `g`.
type LeqFn<'a> = Box<dyn Fn(usize, usize) -> bool + 'a>;

pub fn build_poset(
    g: &GroupTable,
    lat: &SubgroupLattice,
    ccp: &ConjClassPoset,
    kind: PosetKind,
) -> PosetView {
    let orders_of_elements: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    let is_cyclic = |sub: usize| {
        let h = lat.get(sub);
        h.elems()
            .iter()
            .any(|&a| orders_of_elements[a] == h.order())
    };
    let (payload, leq_of): (Vec<usize>, LeqFn) = match kind {
        PosetKind::L => (
            (0..lat.len()).collect(),
            Box::new(|a, b| lat.is_subset(a, b)),
        ),
        PosetKind::C => (
            (0..lat.len()).filter(|&i| is_cyclic(i)).collect(),
            Box::new(|a, b| lat.is_subset(a, b)),
        ),
        PosetKind::Lbar => ((0..ccp.len()).collect(), Box::new(|a, b| ccp.leq(a, b))),
        PosetKind::Cbar => (
            (0..ccp.len()).filter(|&c| is_cyclic(ccp.rep(c))).collect(),
            Box::new(|a, b| ccp.leq(a, b)),
        ),
    };
    let n = payload.len();
    let mut leq = BitMatrix::new(n);
    for x in 0..n {
        for y in 0..n {
            if leq_of(payload[x], payload[y]) {
                leq.set(x, y);
            }
        }
    }
    let (orders, class_sizes) = if kind.is_class_poset() {
        payload
            .iter()
            .map(|&c| (lat.get(ccp.rep(c)).order(), ccp.members(c).len()))
            .unzip()
    } else {
        payload.iter().map(|&s| (lat.get(s).order(), 1)).unzip()
    };
    PosetView::from_parts(kind, leq, payload, orders, class_sizes)
}

/// Proper elements comparable to every element of the poset.
pub fn breaking_points(p: &PosetView) -> Vec<usize> {
    (0..p.size())
        .filter(|&x| p.is_proper(x) && p.is_comparable_to_all(x))
        .collect()
}

fn ordered_candidates(p: &PosetView, descending: bool) -> Vec<usize> {
    let mut c: Vec<usize> = (0..p.size()).filter(|&x| p.is_proper(x)).collect();
    c.sort_by(|&a, &b| {
        let by_order = p.orders[a].cmp(&p.orders[b]);
        let by_order = if descending {
            by_order.reverse()
        } else {
            by_order
        };
        by_order
            .then_with(|| p.labels[a].cmp(&p.labels[b]))
            .then(a.cmp(&b))
    });
    c
}

/// Searches for proper `M`, `N` with every element `≤ M` or `≥ N`.
///
/// `M` candidates are tried by descending subgroup order, `N` by ascending
/// order, with labels then indices breaking ties; the first hit in that
/// order is returned. `M = N` is allowed. With `find_all`, every pair is
/// collected in the same order.
pub fn two_interval_cover(p: &PosetView, find_all: bool) -> Option<IntervalCoverWitness> {
    let n_order = ordered_candidates(p, false);
    let mut pairs = Vec::new();
    for m in ordered_candidates(p, true) {
        // N must lie below everything that is not below M.
        let mut allowed = BitSet::full(p.size());
        let below_m = p.down_set(m);
        for x in (0..p.size()).filter(|&x| !below_m.contains(x)) {
            allowed.intersect_with(p.down_set(x));
        }
        for &n in n_order.iter().filter(|&&n| allowed.contains(n)) {
            if !find_all {
                return Some(IntervalCoverWitness {
                    m_idx: m,
                    n_idx: n,
                    all_pairs: None,
                });
            }
            pairs.push((m, n));
        }
    }
    let &(m_idx, n_idx) = pairs.first()?;
    Some(IntervalCoverWitness {
        m_idx,
        n_idx,
        all_pairs: Some(pairs),
    })
}

/// `{x : a ≤ x ≤ b}`.
pub fn interval(p: &PosetView, a: usize, b: usize) -> Result<Vec<usize>> {
    if !p.leq(a, b) {
        return Err(Error::NotComparable { a, b });
    }
    let mut s = p.up_set(a).clone();
    s.intersect_with(p.down_set(b));
    Ok(s.to_vec())
}

/// Covering pairs `(x, y)`: `x < y` with nothing strictly between.
pub fn hasse_edges(p: &PosetView) -> Vec<(usize, usize)> {
    let n = p.size();
    let mut edges = Vec::new();
    for x in 0..n {
        let mut above = p.up_set(x).clone();
        above.remove(x);
        for y in above.iter() {
            let mut between = above.clone();
            between.intersect_with(p.down_set(y));
            between.remove(y);
            if between.is_empty() {
                edges.push((x, y));
            }
        }
    }
    edges
}
