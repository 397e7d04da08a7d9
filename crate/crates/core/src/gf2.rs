//! Bit-packed linear algebra over GF(2).

use std::collections::HashMap;

/// A growable GF(2) vector packed into 64-bit words. Trailing zero words are
/// trimmed, so equality is equality of vectors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
}

impl BitVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_ones(ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::new();
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn get(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    pub fn flip(&mut self, i: usize) {
        let w = i / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << (i % 64);
        self.trim();
    }

    pub fn set(&mut self, i: usize, value: bool) {
        if self.get(i) != value {
            self.flip(i);
        }
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn lowest(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// `'0'`/`'1'` string of the first `len` entries.
    pub fn to_bitstring(&self, len: usize) -> String {
        (0..len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut v = Self::new();
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.flip(i),
                _ => return None,
            }
        }
        Some(v)
    }
}

/// An echelon basis of a growing subspace. Each stored vector remembers which
/// inserted vectors it is a sum of, so membership queries also return a
/// combination.
#[derive(Debug, Clone, Default)]
pub struct XorBasis {
    rows: Vec<(BitVec, BitVec)>,
    pivot: HashMap<usize, usize>,
}

impl XorBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v`; returns the residual and the combination of inserted
    /// tags that was subtracted. A zero residual means `v` is in the span.
    pub fn reduce(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut combo = BitVec::new();
        // distinct lowest bits: any nonzero element of the span has a pivot
        // as its lowest bit
        while let Some(b) = v.lowest() {
            let Some(&r) = self.pivot.get(&b) else { break };
            v.xor_assign(&self.rows[r].0);
            combo.xor_assign(&self.rows[r].1);
        }
        (v, combo)
    }

    /// Adds `v`, labelled by `tag` (an index of the caller's choosing).
    /// Returns false when `v` was already in the span.
    pub fn insert(&mut self, v: &BitVec, tag: usize) -> bool {
        let (res, mut combo) = self.reduce(v);
        let Some(b) = res.lowest() else { return false };
        combo.flip(tag);
        self.pivot.insert(b, self.rows.len());
        self.rows.push((res, combo));
        true
    }

    /// A set of tags whose vectors sum to `v`, if any.
    pub fn solve(&self, v: &BitVec) -> Option<BitVec> {
        let (res, combo) = self.reduce(v);
        res.is_zero().then_some(combo)
    }
}

pub fn rank(rows: &[BitVec]) -> usize {
    let mut basis = XorBasis::new();
    for (i, r) in rows.iter().enumerate() {
        basis.insert(r, i);
    }
    basis.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_operations() {
        let mut v = BitVec::from_ones([0, 3, 70]);
        assert!(v.get(70) && !v.get(69));
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 3, 70]);
        v.flip(70);
        assert_eq!(v, BitVec::from_ones([3, 0]));
        assert_eq!(v.to_bitstring(5), "10010");
        assert_eq!(BitVec::from_bitstring("10010"), Some(v.clone()));
        assert_eq!(v.lowest(), Some(0));
        v.xor_assign(&BitVec::from_ones([0, 3]));
        assert!(v.is_zero());
    }

    #[test]
    fn basis_solves() {
        let mut b = XorBasis::new();
        assert!(b.insert(&BitVec::from_ones([0, 1]), 0));
        assert!(b.insert(&BitVec::from_ones([1, 2]), 1));
        assert!(!b.insert(&BitVec::from_ones([0, 2]), 2));
        assert_eq!(b.rank(), 2);
        assert_eq!(
            b.solve(&BitVec::from_ones([0, 2])),
            Some(BitVec::from_ones([0, 1]))
        );
        assert_eq!(b.solve(&BitVec::from_ones([0])), None);
        assert_eq!(
            rank(&[
                BitVec::from_ones([5]),
                BitVec::from_ones([5]),
                BitVec::new()
            ]),
            1
        );
    }
}
