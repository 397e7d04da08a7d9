//! Braid words, their closures, and the transverse moves on them.
//!
//! A letter `j > 0` is the positive crossing `σ_j` of strands `j` and `j+1`
//! (strands numbered left to right, read bottom to top); `j < 0` is its
//! inverse. The closure of a braid is a transverse link whose self-linking
//! number is `writhe - strands`.

mod convert;
mod garside;
mod moves;

pub use garside::GarsideNormalForm;
pub use moves::{ExchangeKind, ExchangeSite};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{Passage, PlanarDiagram};
use crate::grid::FrontData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("letter {letter} is out of range for {strands} strands")]
    OutOfRange { letter: i64, strands: usize },
    #[error("braids have different strand counts ({0} and {1})")]
    StrandMismatch(usize, usize),
    #[error("letters at the exchange site do not match the pattern")]
    PatternMismatch,
    #[error("letter at position {0} lies outside the subgroup allowed by the exchange move")]
    ForbiddenSubgroupLetter(usize),
    #[error("braid cannot be Markov-destabilized")]
    NotDestabilizable,
    #[error("operation needs a knot, but the closure has {0} components")]
    MultiComponent(usize),
    #[error("malformed braid: {0}")]
    Parse(String),
}

/// A word in the standard generators of the braid group on `strands` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::Parse(
                "a braid needs at least one strand".into(),
            ));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::OutOfRange {
                    letter: l as i64,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    /// The trivial braid on `strands` strands.
    pub fn identity(strands: usize) -> Self {
        Self::new(strands, Vec::new()).expect("at least one strand")
    }

    /// Builds a word from `(generator, exponent)` blocks, e.g.
    /// `[(3, 1), (2, -2)]` for `σ3 σ2^-2`.
    pub fn from_powers(strands: usize, blocks: &[(i32, i32)]) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        for &(g, e) in blocks {
            let l = if e < 0 { -g } else { g };
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Self-linking number of the transverse closure: writhe minus strands.
    pub fn sl(&self) -> i64 {
        self.writhe() - self.strands as i64
    }

    pub fn negative_letters(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Positions after the braid: `perm[p]` is the top position of the strand
    /// that starts at bottom position `p` (zero-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &s) in at.iter().enumerate() {
            perm[s] = pos;
        }
        perm
    }

    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut k = 0;
        for s in 0..self.strands {
            if !seen[s] {
                k += 1;
                let mut t = s;
                while !seen[t] {
                    seen[t] = true;
                    t = perm[t];
                }
            }
        }
        k
    }

    /// Oriented diagram of the braid closure, strands running upward.
    pub fn closure_diagram(&self) -> PlanarDiagram {
        let n = self.strands;
        let mut visited = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if visited[start] {
                continue;
            }
            let mut seq = Vec::new();
            let mut pos = start;
            loop {
                visited[pos] = true;
                for (t, &l) in self.letters.iter().enumerate() {
                    let i = l.unsigned_abs() as usize - 1;
                    if pos == i || pos == i + 1 {
                        let from_left = pos == i;
                        // σ_i: left strand crosses over; σ_i^-1: right strand over
                        let over = from_left == (l > 0);
                        seq.push(Passage { crossing: t, over });
                        pos = if from_left { i + 1 } else { i };
                    }
                }
                if pos == start {
                    break;
                }
            }
            comps.push(seq);
        }
        let signs: Vec<bool> = self.letters.iter().map(|&l| l > 0).collect();
        PlanarDiagram::from_passages(&comps, &signs)
    }

    /// Front data of the Legendrian knot `L(B)`: each strand's closing arc has
    /// one left and one right cusp, and every negative letter adds a zigzag.
    pub fn front_data(&self) -> Result<FrontData, BraidError> {
        match self.closure_components() {
            1 => {}
            k => return Err(BraidError::MultiComponent(k)),
        }
        let n = self.strands as i64;
        let neg = self.negative_letters() as i64;
        Ok(FrontData {
            writhe: self.writhe(),
            cusps_up: n + 2 * neg,
            cusps_down: n,
        })
    }

    /// Human-readable form with exponents, e.g. `σ3 σ2^-2 σ3^2`.
    pub fn to_sigma_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let e = (j - i) as i64 * l.signum() as i64;
            let g = l.unsigned_abs();
            parts.push(if e == 1 {
                format!("σ{g}")
            } else {
                format!("σ{g}^{e}")
            });
            i = j;
        }
        parts.join(" ")
    }
}

/// Canonical text form: `"<strands> | <letters>"`.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Parses `"4 | 3 -2 -2 3"` or the shorthand `"4 | s3 s2^-2 s3^2"`.
/// Without a `|`, the strand count defaults to one more than the largest
/// generator.
impl FromStr for BraidWord {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (strands, body) = match s.split_once('|') {
            Some((head, body)) => {
                let n = head.trim().parse::<usize>().map_err(|_| {
                    BraidError::Parse(format!("bad strand count {:?}", head.trim()))
                })?;
                (Some(n), body)
            }
            None => (None, s),
        };
        let mut letters = Vec::new();
        for tok in body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let bad = || BraidError::Parse(format!("bad letter {tok:?}"));
            let t = tok.trim_start_matches(['s', 'σ']);
            if t.len() != tok.len() {
                let (g, e) = match t.split_once('^') {
                    Some((g, e)) => (g, e.parse::<i32>().map_err(|_| bad())?),
                    None => (t, 1),
                };
                let g = g.parse::<i32>().map_err(|_| bad())?;
                if g <= 0 {
                    return Err(bad());
                }
                let l = if e < 0 { -g } else { g };
                letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
            } else {
                letters.push(tok.parse::<i32>().map_err(|_| bad())?);
            }
        }
        let strands = strands.unwrap_or_else(|| {
            letters
                .iter()
                .map(|l| l.unsigned_abs() as usize + 1)
                .max()
                .unwrap_or(1)
        });
        BraidWord::new(strands, letters)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let b: BraidWord = "4 | 3 -2 -2 3 3 2 -3 -1 2 1 1".parse().unwrap();
        assert_eq!(b.len(), 11);
        assert_eq!(b.to_string(), "4 | 3 -2 -2 3 3 2 -3 -1 2 1 1");
        let c: BraidWord = "4 | s3 s2^-2 s3^2 s2 s3^-1 s1^-1 s2 s1^2".parse().unwrap();
        assert_eq!(b, c);
        assert_eq!(c.to_sigma_string(), "σ3 σ2^-2 σ3^2 σ2 σ3^-1 σ1^-1 σ2 σ1^2");
        assert_eq!(b.to_string().parse::<BraidWord>().unwrap(), b);
        assert_eq!("1 |".parse::<BraidWord>().unwrap(), BraidWord::identity(1));
    }

    #[test]
    fn parse_errors() {
        assert!("3 | 3".parse::<BraidWord>().is_err());
        assert!("3 | 0".parse::<BraidWord>().is_err());
        assert!("x | 1".parse::<BraidWord>().is_err());
        assert!("3 | s1^q".parse::<BraidWord>().is_err());
    }

    #[test]
    fn self_linking() {
        let b: BraidWord = "4 | 3 -2 -2 3 3 2 -3 -1 2 1 1".parse().unwrap();
        assert_eq!(b.writhe(), 3);
        assert_eq!(b.sl(), -1);
        assert_eq!(BraidWord::identity(5).sl(), -5);
    }

    #[test]
    fn closures() {
        let trefoil: BraidWord = "2 | 1 1 1".parse().unwrap();
        assert_eq!(trefoil.closure_components(), 1);
        let d = trefoil.closure_diagram();
        assert!(d.is_well_formed());
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        let hopf: BraidWord = "2 | 1 1".parse().unwrap();
        assert_eq!(hopf.closure_components(), 2);
        assert_eq!(hopf.closure_diagram().component_count(), 2);
        let unlink = BraidWord::identity(3);
        assert_eq!(unlink.closure_diagram().free_loops, 3);
    }

    #[test]
    fn braid_front_self_linking() {
        for s in ["4 | 3 -2 -2 3 3 2 -3 -1 2 1 1", "2 | 1 1 1", "2 | 1"] {
            let b: BraidWord = s.parse().unwrap();
            let f = b.front_data().unwrap();
            assert_eq!(f.self_linking(), b.sl(), "{s}");
        }
        let unknot: BraidWord = "2 | 1".parse().unwrap();
        assert_eq!(unknot.front_data().unwrap().self_linking(), -1);
        assert!("2 | 1 1"
            .parse::<BraidWord>()
            .unwrap()
            .front_data()
            .is_err());
    }
}
