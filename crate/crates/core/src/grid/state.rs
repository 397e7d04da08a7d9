use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{GridDiagram, GridError};

/// A generator of the grid chain complex: one lattice point on each vertical
/// and each horizontal grid line of the torus.
///
/// Point `i` sits on vertical line `i` (the left edge of column `i`) at
/// height `pi(i)` (the bottom edge of row `pi(i)`). Stored zero-based;
/// displayed and serialized one-based, e.g. `(1,5,4,3,2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridState {
    pi: Vec<u8>,
}

impl GridState {
    /// From a one-based permutation.
    pub fn new(pi: &[usize]) -> Result<Self, GridError> {
        let n = pi.len();
        if n > u8::MAX as usize {
            return Err(GridError::OutOfRange(n));
        }
        let mut seen = vec![false; n];
        for &v in pi {
            if v == 0 || v > n || seen[v - 1] {
                return Err(GridError::NotPermutation("state"));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            pi: pi.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub(crate) fn from_zero_based(pi: Vec<u8>) -> Self {
        Self { pi }
    }

    pub fn size(&self) -> usize {
        self.pi.len()
    }

    /// One-based permutation.
    pub fn pi(&self) -> Vec<usize> {
        self.pi.iter().map(|&v| v as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.pi
    }

    /// Number of leading entries needed before the rest is the identity;
    /// used to print long states compactly.
    pub fn moved_prefix(&self) -> usize {
        (0..self.pi.len())
            .rev()
            .find(|&i| self.pi[i] as usize != i)
            .map_or(0, |i| i + 1)
    }

    /// `(1,5,4,3,2,…)` with the identity tail elided.
    pub fn abbreviated(&self) -> String {
        let k = self.moved_prefix();
        if k + 1 >= self.pi.len() {
            return self.to_string();
        }
        let head: Vec<String> = self.pi[..k].iter().map(|v| (v + 1).to_string()).collect();
        format!("({},…)", head.join(","))
    }
}

impl fmt::Display for GridState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.pi.iter().map(|v| (v + 1).to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

impl FromStr for GridState {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let body = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        let pi = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| GridError::Parse(format!("bad state entry {t:?}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        GridState::new(&pi)
    }
}

impl Serialize for GridState {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.pi().serialize(s)
    }
}

impl<'de> Deserialize<'de> for GridState {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        GridState::new(&v).map_err(serde::de::Error::custom)
    }
}

impl GridDiagram {
    /// The state at the upper-right corners of the X's.
    pub fn x_plus(&self) -> GridState {
        let n = self.size();
        let mut pi = vec![0u8; n];
        for c in 0..n {
            pi[(c + 1) % n] = ((self.x_row(c) + 1) % n) as u8;
        }
        GridState::from_zero_based(pi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_plus_examples() {
        let g = GridDiagram::new(vec![1, 2], vec![2, 1]).unwrap();
        assert_eq!(g.x_plus().pi(), vec![1, 2]);
        let g2 = GridDiagram::new(
            vec![4, 3, 2, 1, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
            vec![13, 9, 4, 8, 14, 3, 5, 6, 2, 1, 7, 10, 11, 12],
        )
        .unwrap();
        assert_eq!(
            g2.x_plus().pi(),
            vec![1, 5, 4, 3, 2, 6, 7, 8, 9, 10, 11, 12, 13, 14]
        );
        assert_eq!(g2.x_plus().abbreviated(), "(1,5,4,3,2,…)");
        let g1 = GridDiagram::new(
            vec![5, 4, 6, 7, 8, 2, 1, 3, 9, 10, 11, 12, 13],
            vec![1, 12, 3, 5, 6, 7, 4, 13, 2, 8, 9, 10, 11],
        )
        .unwrap();
        assert_eq!(
            g1.x_plus().pi(),
            vec![1, 6, 5, 7, 8, 9, 3, 2, 4, 10, 11, 12, 13]
        );
    }

    #[test]
    fn parse_and_serialize() {
        let s: GridState = "(1,5,4,3,2)".parse().unwrap();
        assert_eq!(s.to_string(), "(1,5,4,3,2)");
        assert_eq!(serde_json::to_string(&s).unwrap(), "[1,5,4,3,2]");
        let back: GridState = serde_json::from_str("[1,5,4,3,2]").unwrap();
        assert_eq!(back, s);
        assert!("(1,1,2)".parse::<GridState>().is_err());
        assert!(serde_json::from_str::<GridState>("[0,1]").is_err());
    }
}
