use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{BraidError, BraidWord};

/// Which generator an exchange move flips on a 4-braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ExchangeKind {
    /// `b1 σ1 b2 σ1^-1 b3 <-> b1 σ1^-1 b2 σ1 b3` with `b_i ∈ <σ2, σ3>`.
    Sigma1,
    /// `b1 σ3 b2 σ3^-1 b3 <-> b1 σ3^-1 b2 σ3 b3` with `b_i ∈ <σ1, σ2>`.
    Sigma3,
}

impl ExchangeKind {
    pub fn generator(self) -> i32 {
        match self {
            ExchangeKind::Sigma1 => 1,
            ExchangeKind::Sigma3 => 3,
        }
    }
}

impl fmt::Display for ExchangeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.generator())
    }
}

impl FromStr for ExchangeKind {
    type Err = BraidError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim_start_matches(['s', 'σ']) {
            "1" => Ok(ExchangeKind::Sigma1),
            "3" => Ok(ExchangeKind::Sigma3),
            _ => Err(BraidError::Parse(format!("unknown exchange kind {s:?}"))),
        }
    }
}

/// Zero-based indices of the two letters whose signs an exchange flips.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExchangeSite {
    pub first: usize,
    pub second: usize,
}

impl BraidWord {
    /// `σ_k B σ_k^-1`; a negative `k` conjugates by the inverse generator.
    pub fn conjugate(&self, k: i32) -> Result<BraidWord, BraidError> {
        let g = BraidWord::new(self.strands(), vec![k])?;
        g.concat(self)?.concat(&g.inverse())
    }

    /// Flips the signs of the letters at `site`, after checking that the word
    /// factors as `b1 σ^±1 b2 σ^∓1 b3` with every `b_i` avoiding the
    /// exchanged generator.
    pub fn exchange_move(
        &self,
        site: ExchangeSite,
        kind: ExchangeKind,
    ) -> Result<BraidWord, BraidError> {
        if self.strands() != 4 {
            return Err(BraidError::StrandMismatch(self.strands(), 4));
        }
        let letters = self.letters();
        let k = kind.generator();
        let ExchangeSite { first, second } = site;
        if first >= second || second >= letters.len() {
            return Err(BraidError::PatternMismatch);
        }
        let (p, q) = (letters[first], letters[second]);
        if p.abs() != k || q != -p {
            return Err(BraidError::PatternMismatch);
        }
        if let Some(bad) =
            (0..letters.len()).find(|&t| t != first && t != second && letters[t].abs() == k)
        {
            return Err(BraidError::ForbiddenSubgroupLetter(bad));
        }
        let mut out = letters.to_vec();
        out[first] = -p;
        out[second] = -q;
        BraidWord::new(4, out)
    }

    /// Every site where `exchange_move` of this kind applies.
    pub fn exchange_sites(&self, kind: ExchangeKind) -> Vec<ExchangeSite> {
        if self.strands() != 4 {
            return Vec::new();
        }
        let k = kind.generator();
        let hits: Vec<usize> = (0..self.len())
            .filter(|&t| self.letters()[t].abs() == k)
            .collect();
        match hits[..] {
            [a, b] if self.letters()[a] == -self.letters()[b] => vec![ExchangeSite {
                first: a,
                second: b,
            }],
            _ => Vec::new(),
        }
    }

    /// Positive Markov stabilization `B σ_n` in `B_{n+1}`.
    pub fn markov_stabilize(&self) -> BraidWord {
        let n = self.strands();
        let mut letters = self.letters().to_vec();
        letters.push(n as i32);
        BraidWord::new(n + 1, letters).expect("new generator is in range")
    }

    /// Inverse of [`markov_stabilize`](Self::markov_stabilize), allowing a
    /// cyclic rotation first (the earliest rotation that works is used).
    pub fn markov_destabilize(&self) -> Result<BraidWord, BraidError> {
        let n = self.strands();
        if n < 2 {
            return Err(BraidError::NotDestabilizable);
        }
        let top = (n - 1) as i32;
        let hits: Vec<usize> = (0..self.len())
            .filter(|&t| self.letters()[t].abs() == top)
            .collect();
        let [t] = hits[..] else {
            return Err(BraidError::NotDestabilizable);
        };
        if self.letters()[t] != top {
            return Err(BraidError::NotDestabilizable);
        }
        let len = self.len();
        let rotated: Vec<i32> = (1..len).map(|d| self.letters()[(t + d) % len]).collect();
        BraidWord::new(n - 1, rotated)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn conjugation() {
        let b = w("4 | 3 -2 -2 3 3 2 -3 -1 2 1 1");
        let c = b.conjugate(2).unwrap().conjugate(-2).unwrap();
        assert!(c.braid_equal(&b).unwrap());
        assert_eq!(b.conjugate(1).unwrap().sl(), b.sl());
        assert!(b.conjugate(4).is_err());
    }

    #[test]
    fn exchange_is_an_involution() {
        let b = w("4 | -2 -3 2 2 2 1 -2 3 2 -1 2 2 2 1 -2");
        let sites = b.exchange_sites(ExchangeKind::Sigma3);
        assert_eq!(
            sites,
            vec![ExchangeSite {
                first: 1,
                second: 7
            }]
        );
        let once = b.exchange_move(sites[0], ExchangeKind::Sigma3).unwrap();
        assert_eq!(once.letters()[1], 3);
        assert_eq!(once.sl(), b.sl());
        assert_eq!(
            once.exchange_move(sites[0], ExchangeKind::Sigma3).unwrap(),
            b
        );
    }

    #[test]
    fn exchange_errors() {
        let b = w("4 | 1 2 1 -1");
        let site = ExchangeSite {
            first: 0,
            second: 2,
        };
        assert_eq!(
            b.exchange_move(site, ExchangeKind::Sigma1),
            Err(BraidError::PatternMismatch)
        );
        let b = w("4 | 1 2 1 3 -1");
        let site = ExchangeSite {
            first: 0,
            second: 4,
        };
        assert_eq!(
            b.exchange_move(site, ExchangeKind::Sigma1),
            Err(BraidError::ForbiddenSubgroupLetter(2))
        );
        assert!(b.exchange_sites(ExchangeKind::Sigma1).is_empty());
    }

    #[test]
    fn markov() {
        let u = BraidWord::identity(1);
        let s = u.markov_stabilize();
        assert_eq!(s, w("2 | 1"));
        assert_eq!(s.sl(), u.sl());
        assert_eq!(s.markov_destabilize().unwrap(), u);
        let t = w("3 | 2 1 1 1");
        assert_eq!(t.markov_destabilize().unwrap(), w("2 | 1 1 1"));
        assert_eq!(
            w("3 | -2 1").markov_destabilize(),
            Err(BraidError::NotDestabilizable)
        );
        assert_eq!(
            w("3 | 2 1 2").markov_destabilize(),
            Err(BraidError::NotDestabilizable)
        );
    }
}
