//! Finite groups as validated Cayley tables.

mod build;
pub mod perm;
mod spec;

pub use build::build_group;
pub use spec::GroupSpec;

use crate::error::{Error, Limits, Result};
use serde::Serialize;
use std::fmt;

/// A finite group given by its full multiplication table.
///
/// Element `0` is always the identity. Tables are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    labels: Vec<String>,
    spec: String,
}

/// First violated group axiom found by [`validate_group`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    Empty,
    EntryOutOfRange { row: usize, col: usize },
    LatinRow { row: usize },
    LatinColumn { col: usize },
    Identity { element: usize },
    Inverse { element: usize },
    Associativity { a: usize, b: usize, c: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "table is empty"),
            Violation::EntryOutOfRange { row, col } => {
                write!(f, "entry at ({row}, {col}) is not an element index")
            }
            Violation::LatinRow { row } => write!(f, "row {row} is not a permutation"),
            Violation::LatinColumn { col } => write!(f, "column {col} is not a permutation"),
            Violation::Identity { element } => {
                write!(f, "element 0 does not act as identity on {element}")
            }
            Violation::Inverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
            Violation::Associativity { a, b, c } => {
                write!(f, "({a}*{b})*{c} != {a}*({b}*{c})")
            }
        }
    }
}

impl GroupTable {
    /// Wraps a raw table without checking the axioms; run
    /// [`validate_group`] before trusting the result.
    pub fn from_rows_unchecked(rows: &[Vec<usize>], labels: Vec<String>, spec: String) -> Self {
        let order = rows.len();
        let mut mul = Vec::with_capacity(order * order);
        for row in rows {
            mul.extend(row.iter().map(|&x| x as u32));
        }
        let inv = (0..order)
            .map(|i| {
                (0..order)
                    .find(|&j| rows[i].get(j) == Some(&0))
                    .unwrap_or(0) as u32
            })
            .collect();
        GroupTable {
            order,
            mul,
            inv,
            labels,
            spec,
        }
    }

    /// Builds a table and checks every axiom.
    pub fn from_rows(rows: &[Vec<usize>], labels: Vec<String>, spec: String) -> Result<Self> {
        let g = Self::from_rows_unchecked(rows, labels, spec);
        match validate_group(&g) {
            Validation::Valid => Ok(g),
            Validation::Invalid(v) => Err(Error::SpecInvalid(format!("{}: {v}", g.spec))),
        }
    }

    pub(crate) fn from_flat(
        order: usize,
        mul: Vec<u32>,
        labels: Vec<String>,
        spec: String,
    ) -> Self {
        debug_assert_eq!(mul.len(), order * order);
        let mut inv = vec![0u32; order];
        for (i, slot) in inv.iter_mut().enumerate() {
            if let Some(j) = (0..order).find(|&j| mul[i * order + j] == 0) {
                *slot = j as u32;
            }
        }
        GroupTable {
            order,
            mul,
            inv,
            labels,
            spec,
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub const fn identity(&self) -> usize {
        0
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Index of the element with the given display label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.mul[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conjugate(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, a: usize) -> usize {
        element_order(self, a)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).collect()).collect()
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupTable")
            .field("spec", &self.spec)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Validation {
    Valid,
    Invalid(Violation),
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validation::Valid)
    }
}

/// Checks the Latin-square, identity, inverse and associativity axioms,
/// reporting the first one that fails. Associativity is swept over all
/// `n³` triples.
pub fn validate_group(g: &GroupTable) -> Validation {
    let n = g.order;
    if n == 0 {
        return Validation::Invalid(Violation::Empty);
    }
    for r in 0..n {
        for c in 0..n {
            if g.mul(r, c) >= n {
                return Validation::Invalid(Violation::EntryOutOfRange { row: r, col: c });
            }
        }
    }
    let mut seen = vec![false; n];
    for r in 0..n {
        seen.fill(false);
        for c in 0..n {
            let x = g.mul(r, c);
            if std::mem::replace(&mut seen[x], true) {
                return Validation::Invalid(Violation::LatinRow { row: r });
            }
        }
    }
    for c in 0..n {
        seen.fill(false);
        for r in 0..n {
            let x = g.mul(r, c);
            if std::mem::replace(&mut seen[x], true) {
                return Validation::Invalid(Violation::LatinColumn { col: c });
            }
        }
    }
    for i in 0..n {
        if g.mul(0, i) != i || g.mul(i, 0) != i {
            return Validation::Invalid(Violation::Identity { element: i });
        }
    }
    for i in 0..n {
        let j = g.inv(i);
        if g.mul(i, j) != 0 || g.mul(j, i) != 0 {
            return Validation::Invalid(Violation::Inverse { element: i });
        }
    }
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for c in 0..n {
                if g.mul(ab, c) != g.mul(a, g.mul(b, c)) {
                    return Validation::Invalid(Violation::Associativity { a, b, c });
                }
            }
        }
    }
    Validation::Valid
}

/// Least `k ≥ 1` with `aᵏ = e`.
pub fn element_order(g: &GroupTable, a: usize) -> usize {
    let mut k = 1;
    let mut x = a;
    while x != 0 {
        x = g.mul(x, a);
        k += 1;
        debug_assert!(k <= g.order, "element {a} has no finite order");
    }
    k
}

/// Componentwise product on pair-encoded indices `(a, b) ↦ a·|g2| + b`.
pub fn direct_product(g1: &GroupTable, g2: &GroupTable, limits: &Limits) -> Result<GroupTable> {
    let (n1, n2) = (g1.order, g2.order);
    let n = n1
        .checked_mul(n2)
        .filter(|&n| n <= limits.max_order)
        .ok_or(Error::OrderCapExceeded {
            order: n1.saturating_mul(n2),
            cap: limits.max_order,
        })?;
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (a1, b1) = (x / n2, x % n2);
        for y in 0..n {
            let (a2, b2) = (y / n2, y % n2);
            mul.push((g1.mul(a1, a2) * n2 + g2.mul(b1, b2)) as u32);
        }
    }
    let labels = (0..n)
        .map(|x| format!("({},{})", g1.label(x / n2), g2.label(x % n2)))
        .collect();
    let spec = format!("{}x{}", g1.spec, g2.spec);
    Ok(GroupTable::from_flat(n, mul, labels, spec))
}

pub(crate) fn relabel(mut g: GroupTable, labels: Vec<String>, spec: String) -> GroupTable {
    debug_assert_eq!(labels.len(), g.order);
    g.labels = labels;
    g.spec = spec;
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> GroupTable {
        build_group(&GroupSpec::Cyclic(n), &Limits::default()).unwrap()
    }

    #[test]
    fn cyclic_four_arithmetic() {
        let g = cyclic(4);
        assert_eq!(g.mul(1, 3), 0);
        assert_eq!(g.inv(1), 3);
        assert!(validate_group(&g).is_valid());
    }

    #[test]
    fn cyclic_six_is_valid() {
        assert_eq!(validate_group(&cyclic(6)), Validation::Valid);
    }

    #[test]
    fn non_latin_row_is_reported() {
        let mut rows = cyclic(3).rows();
        rows[1][1] = 1;
        let g = GroupTable::from_rows_unchecked(&rows, vec!["".into(); 3], "bad".into());
        assert_eq!(
            validate_group(&g),
            Validation::Invalid(Violation::LatinRow { row: 1 })
        );
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // A Latin square with identity 0 and two-sided inverses that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let g = GroupTable::from_rows_unchecked(&rows, vec!["".into(); 5], "loop".into());
        assert!(matches!(
            validate_group(&g),
            Validation::Invalid(Violation::Associativity { .. })
        ));
        assert!(GroupTable::from_rows(&rows, vec!["".into(); 5], "loop".into()).is_err());
    }

    #[test]
    fn element_orders_in_cyclic_six() {
        let g = cyclic(6);
        assert_eq!(element_order(&g, 1), 6);
        assert_eq!(element_order(&g, 0), 1);
        assert_eq!(element_order(&g, 2), 3);
    }

    #[test]
    fn coprime_cyclic_product_is_cyclic() {
        let g = direct_product(&cyclic(2), &cyclic(3), &Limits::default()).unwrap();
        assert!(validate_group(&g).is_valid());
        assert_eq!(g.order(), 6);
        assert!((0..6).any(|a| element_order(&g, a) == 6));
    }

    #[test]
    fn product_with_trivial_keeps_table() {
        let g = build_group(&"S3".parse().unwrap(), &Limits::default()).unwrap();
        let p = direct_product(&g, &cyclic(1), &Limits::default()).unwrap();
        assert_eq!(p.rows(), g.rows());
    }

    #[test]
    fn product_respects_cap() {
        let limits = Limits {
            max_order: 10,
            ..Limits::default()
        };
        assert_eq!(
            direct_product(&cyclic(4), &cyclic(3), &limits),
            Err(Error::OrderCapExceeded { order: 12, cap: 10 })
        );
    }
}
