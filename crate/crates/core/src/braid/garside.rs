//! Left-greedy Garside normal form, which solves the word problem.
//!
//! Simple braids are positive braids in which each pair of strands crosses at
//! most once; they correspond to permutations. A simple factor is stored as
//! `s` with `s[j]` = the bottom position of the strand that ends at top
//! position `j`, so the product `A·B` has `s_AB[j] = s_A[s_B[j]]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BraidError, BraidWord};

type Simple = Vec<u8>;

fn identity(n: usize) -> Simple {
    (0..n as u8).collect()
}

fn delta(n: usize) -> Simple {
    (0..n as u8).rev().collect()
}

fn generator(n: usize, i: usize) -> Simple {
    let mut s = identity(n);
    s.swap(i, i + 1);
    s
}

fn inverse(s: &Simple) -> Simple {
    let mut inv = vec![0; s.len()];
    for (j, &v) in s.iter().enumerate() {
        inv[v as usize] = j as u8;
    }
    inv
}

/// `Δ A Δ^-1`
fn flip(s: &Simple) -> Simple {
    let n = s.len();
    (0..n).map(|j| (n - 1) as u8 - s[n - 1 - j]).collect()
}

/// Right complement `A^-1 Δ`.
fn complement(s: &Simple) -> Simple {
    let n = s.len();
    let pos = inverse(s);
    (0..n).map(|j| pos[n - 1 - j]).collect()
}

/// `i` is in the finishing set of `A` when `A = A' σ_i` with `A'` simple.
fn finishes_with(s: &Simple, i: usize) -> bool {
    s[i] > s[i + 1]
}

/// `i` is in the starting set of `B` when `B = σ_i B'` with `B'` simple.
#[cfg(test)]
fn starts_with(s: &Simple, i: usize) -> bool {
    let pos = inverse(s);
    pos[i] > pos[i + 1]
}

/// Rewrites the pair so that the starting set of `b` lies in the finishing
/// set of `a`. Returns true when anything moved.
fn make_left_weighted(a: &mut Simple, b: &mut Simple) -> bool {
    let n = a.len();
    let mut changed = false;
    loop {
        let pos_b = inverse(b);
        let Some(i) = (0..n - 1).find(|&i| pos_b[i] > pos_b[i + 1] && !finishes_with(a, i)) else {
            return changed;
        };
        // a <- a σ_i
        a.swap(i, i + 1);
        // b <- σ_i^-1 b: relabel bottom positions i and i+1
        for v in b.iter_mut() {
            if *v as usize == i {
                *v = (i + 1) as u8;
            } else if *v as usize == i + 1 {
                *v = i as u8;
            }
        }
        changed = true;
    }
}

/// `Δ^inf · A_1 ⋯ A_k` with every `A_j` a proper simple braid and each
/// adjacent pair left-weighted. Two words are equal in the braid group
/// exactly when their normal forms agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GarsideNormalForm {
    pub strands: usize,
    pub inf: i64,
    /// Each factor as a permutation: entry `j` is the (zero-based) bottom
    /// position of the strand ending at top position `j`.
    pub factors: Vec<Vec<u8>>,
}

impl GarsideNormalForm {
    /// Canonical length of the braid (number of simple factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }
}

impl fmt::Display for GarsideNormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for fac in &self.factors {
            let v: Vec<String> = fac.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, " [{}]", v.join(","))?;
        }
        Ok(())
    }
}

impl BraidWord {
    pub fn normal_form(&self) -> GarsideNormalForm {
        let n = self.strands();
        assert!(
            n <= u8::MAX as usize,
            "too many strands for the normal form"
        );
        if n == 1 {
            return GarsideNormalForm {
                strands: 1,
                inf: 0,
                factors: Vec::new(),
            };
        }
        let mut inf: i64 = 0;
        let mut factors: Vec<Simple> = Vec::new();
        for &l in self.letters() {
            let i = l.unsigned_abs() as usize - 1;
            if l > 0 {
                factors.push(generator(n, i));
            } else {
                // σ_i^-1 = ∂(σ_i) Δ^-1; push Δ^-1 to the front past every factor
                factors.push(complement(&generator(n, i)));
                for f in factors.iter_mut() {
                    *f = flip(f);
                }
                inf -= 1;
            }
        }

        let delta = delta(n);
        let id = identity(n);
        loop {
            let mut changed = false;
            for j in (0..factors.len().saturating_sub(1)).rev() {
                let (left, right) = factors.split_at_mut(j + 1);
                changed |= make_left_weighted(&mut left[j], &mut right[0]);
            }
            if !changed {
                break;
            }
        }
        // Δ factors collect at the front, trivial ones at the back
        let lead = factors.iter().take_while(|f| **f == delta).count();
        inf += lead as i64;
        factors.drain(..lead);
        while factors.last() == Some(&id) {
            factors.pop();
        }
        debug_assert!(factors.iter().all(|f| *f != id && *f != delta));
        GarsideNormalForm {
            strands: n,
            inf,
            factors,
        }
    }

    /// Equality in the braid group.
    pub fn braid_equal(&self, other: &BraidWord) -> Result<bool, BraidError> {
        if self.strands() != other.strands() {
            return Err(BraidError::StrandMismatch(self.strands(), other.strands()));
        }
        Ok(self.normal_form() == other.normal_form())
    }

    /// Word for a normal form, useful as a canonical representative.
    pub fn from_normal_form(nf: &GarsideNormalForm) -> BraidWord {
        let n = nf.strands;
        let mut letters = Vec::new();
        let delta_word = simple_word(&delta(n));
        let power: Vec<i32> = if nf.inf >= 0 {
            delta_word.clone()
        } else {
            delta_word.iter().rev().map(|&l| -l).collect()
        };
        for _ in 0..nf.inf.unsigned_abs() {
            letters.extend_from_slice(&power);
        }
        for f in &nf.factors {
            letters.extend(simple_word(f));
        }
        BraidWord::new(n, letters).expect("letters in range")
    }
}

/// Positive word for a simple braid (bubble sort of the permutation).
fn simple_word(s: &Simple) -> Vec<i32> {
    let mut cur = s.clone();
    let mut rev = Vec::new();
    // peel generators off the right end: s = s' σ_i when s[i] > s[i+1]
    while let Some(i) = (0..cur.len() - 1).find(|&i| finishes_with(&cur, i)) {
        cur.swap(i, i + 1);
        rev.push(i as i32 + 1);
    }
    rev.reverse();
    rev
}
