//! Word-packed bit sets and square bit matrices.
//!
//! Element sets of subgroups and the order relations of posets are both
//! stored this way, so subset tests and the two-interval cover check reduce
//! to a handful of word operations per row.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::new(len);
        for w in s.words.iter_mut() {
            *w = !0;
        }
        s.trim();
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::new(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    /// Returns true if the bit was newly set.
    #[inline]
    pub fn insert(&mut self, i: usize) -> bool {
        debug_assert!(i < self.len);
        let w = &mut self.words[i / WORD];
        let mask = 1u64 << (i % WORD);
        let fresh = *w & mask == 0;
        *w |= mask;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / WORD] &= !(1u64 << (i % WORD));
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn union_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// True when `self ∪ other` is the whole universe.
    pub fn covers_with(&self, other: &BitSet) -> bool {
        let mut all = Self::full(self.len);
        for (i, w) in all.words.iter_mut().enumerate() {
            *w &= !(self.words[i] | other.words[i]);
        }
        all.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Square relation matrix; `get(i, j)` reads row `i`, column `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: Vec<BitSet>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        BitMatrix {
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.rows[i].insert(j);
    }

    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn transpose(&self) -> BitMatrix {
        let n = self.size();
        let mut t = BitMatrix::new(n);
        for i in 0..n {
            for j in self.rows[i].iter() {
                t.set(j, i);
            }
        }
        t
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size()).all(|i| self.get(i, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| self.rows[i].iter().all(|j| i == j || !self.get(j, i)))
    }

    /// `i ≤ j` and `j ≤ k` imply `i ≤ k`, checked row-wise.
    pub fn is_transitive(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| {
            self.rows[i]
                .iter()
                .all(|j| self.rows[j].is_subset(&self.rows[i]))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    /// Reflexive-transitive closure (Warshall over rows).
    pub fn reflexive_transitive_closure(&self) -> BitMatrix {
        let n = self.size();
        let mut c = self.clone();
        for i in 0..n {
            c.set(i, i);
        }
        for k in 0..n {
            let rk = c.rows[k].clone();
            for i in 0..n {
                if c.get(i, k) {
                    c.rows[i].union_with(&rk);
                }
            }
        }
        c
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_set_is_trimmed() {
        let s = BitSet::full(70);
        assert_eq!(s.count(), 70);
        assert_eq!(s.to_vec().last(), Some(&69));
    }

    #[test]
    fn cover_check() {
        let a = BitSet::from_indices(5, [0, 1, 2]);
        let b = BitSet::from_indices(5, [3, 4]);
        assert!(a.covers_with(&b));
        let c = BitSet::from_indices(5, [4]);
        assert!(!a.covers_with(&c));
    }

    #[test]
    fn closure_of_chain() {
        let mut m = BitMatrix::new(3);
        m.set(0, 1);
        m.set(1, 2);
        let c = m.reflexive_transitive_closure();
        assert!(c.get(0, 2));
        assert!(c.is_partial_order());
        assert!(!c.get(2, 0));
    }

    proptest! {
        #[test]
        fn iter_roundtrips(idx in proptest::collection::btree_set(0usize..200, 0..50)) {
            let s = BitSet::from_indices(200, idx.iter().copied());
            prop_assert_eq!(s.to_vec(), idx.into_iter().collect::<Vec<_>>());
        }
    }
}
