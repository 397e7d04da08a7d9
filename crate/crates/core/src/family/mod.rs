//! The two-parameter family of 4-braids `B1(a,b)`, `B2(a,b)` and the grid
//! diagrams `G1(a,b)`, `G2(a,b)` used to tell their transverse closures
//! apart.

mod chain;
mod primality;
mod reproduce;

pub use chain::{chain_words, verify_chain, ChainReport, ChainStep, StepKind};
pub use primality::{primality_check, PrimalityCertificate};
pub use reproduce::{
    b2_prime_rewritten, identification, reproduce, verify_g2, G2Report, HomflyCheck,
    ReproduceReport, SelfLinking, ThetaOutcome, CERTIFIED,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::braid::BraidWord;
use crate::grid::{GridDiagram, GridState};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("family parameters must be nonnegative (got {0})")]
    NegativeParam(i64),
    #[error("θ̃ state budget exceeded; partial report attached")]
    BudgetExceeded(Box<ReproduceReport>),
}

/// Family parameters `a, b ≥ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub a: usize,
    pub b: usize,
}

impl FamilyParams {
    pub fn new(a: i64, b: i64) -> Result<Self, FamilyError> {
        Ok(Self {
            a: nonneg(a)?,
            b: nonneg(b)?,
        })
    }

    /// `e = 2b + 7`
    pub fn e(&self) -> usize {
        2 * self.b + 7
    }

    /// `f = 2a + 2b + 9`, the size of `G1`.
    pub fn f(&self) -> usize {
        2 * self.a + 2 * self.b + 9
    }
}

fn nonneg(v: i64) -> Result<usize, FamilyError> {
    usize::try_from(v).map_err(|_| FamilyError::NegativeParam(v))
}

fn word(blocks: &[(i32, i64)]) -> BraidWord {
    let blocks: Vec<(i32, i32)> = blocks.iter().map(|&(g, e)| (g, e as i32)).collect();
    BraidWord::from_powers(4, &blocks).expect("generators below 4")
}

/// `σ3 σ2^-2 σ3^{2a+2} σ2 σ3^-1 σ1^-1 σ2 σ1^{2b+2}`
pub fn b1_word(p: FamilyParams) -> BraidWord {
    let (a, b) = (p.a as i64, p.b as i64);
    word(&[
        (3, 1),
        (2, -2),
        (3, 2 * a + 2),
        (2, 1),
        (3, -1),
        (1, -1),
        (2, 1),
        (1, 2 * b + 2),
    ])
}

/// `σ3 σ2^-2 σ3^{2a+2} σ2 σ3^-1 σ1^{2b+2} σ2 σ1^-1`
pub fn b2_word(p: FamilyParams) -> BraidWord {
    let (a, b) = (p.a as i64, p.b as i64);
    word(&[
        (3, 1),
        (2, -2),
        (3, 2 * a + 2),
        (2, 1),
        (3, -1),
        (1, 2 * b + 2),
        (2, 1),
        (1, -1),
    ])
}

/// `σ3 σ2^{-2c-2} σ3^{2a+2} σ2 σ3^{-2d-1} σ1^-1 σ2 σ1^{2b+2}`; `(c,d) = (0,0)`
/// gives `B1(a,b)`.
pub fn conjectured_word(a: i64, b: i64, c: i64, d: i64) -> Result<BraidWord, FamilyError> {
    let (a, b, c, d) = (
        nonneg(a)? as i64,
        nonneg(b)? as i64,
        nonneg(c)? as i64,
        nonneg(d)? as i64,
    );
    Ok(word(&[
        (3, 1),
        (2, -2 * c - 2),
        (3, 2 * a + 2),
        (2, 1),
        (3, -2 * d - 1),
        (1, -1),
        (2, 1),
        (1, 2 * b + 2),
    ]))
}

/// The braid read off the mirrored `G1(a,b)`:
/// `σ3^{2a+3} σ2 σ3^-1 σ1^-2 σ2^{2b+1} σ1 σ2^-1 σ1`.
pub fn b1_prime_word(p: FamilyParams) -> BraidWord {
    let (a, b) = (p.a as i64, p.b as i64);
    word(&[
        (3, 2 * a + 3),
        (2, 1),
        (3, -1),
        (1, -2),
        (2, 2 * b + 1),
        (1, 1),
        (2, -1),
        (1, 1),
    ])
}

/// The braid read off the mirrored `G2(a,b)`:
/// `σ3^{2a+2} σ2 σ1 σ3 σ2 σ1 σ3 σ2 σ3^{2b+1} σ1^-1 σ2^-1 σ1^-2 σ2^-1 σ1^-1 σ2^-1`.
pub fn b2_prime_word(p: FamilyParams) -> BraidWord {
    let (a, b) = (p.a as i64, p.b as i64);
    word(&[
        (3, 2 * a + 2),
        (2, 1),
        (1, 1),
        (3, 1),
        (2, 1),
        (1, 1),
        (3, 1),
        (2, 1),
        (3, 2 * b + 1),
        (1, -1),
        (2, -1),
        (1, -2),
        (2, -1),
        (1, -1),
        (2, -1),
    ])
}

/// `G1(a,b)`, of size `2a + 2b + 9`.
///
/// Two diagonal runs carry the parameters: one of width `s = 2b + 2` in
/// columns `3..s+2` and one of width `t = 2a + 3` in the last `t` columns.
pub fn g1(p: FamilyParams) -> GridDiagram {
    let s = 2 * p.b + 2;
    let t = 2 * p.a + 3;
    let n = s + t + 4;
    let mut x = vec![5, 4];
    let mut o = vec![1, n - 1];
    for k in 1..=s {
        x.push(if k < s { 5 + k } else { 2 });
        o.push(if k == 1 { 3 } else { 3 + k });
    }
    x.extend([1, 3]);
    o.extend([4, n]);
    for k in 1..=t {
        x.push(s + 4 + k);
        o.push(match k {
            1 => 2,
            2 => s + 4,
            _ => s + 2 + k,
        });
    }
    GridDiagram::new(x, o).expect("G1 is a valid grid")
}

/// `G2(a,b)`, of size `2a + 2b + 10`, with the same two runs as `G1`.
pub fn g2(p: FamilyParams) -> GridDiagram {
    let s = 2 * p.b + 2;
    let t = 2 * p.a + 3;
    let n = s + t + 5;
    let x: Vec<usize> = [4, 3, 2, 1].into_iter().chain(5..=n).collect();
    let mut o = vec![n - 1, s + 5, 4, s + 4];
    for k in 1..=s {
        o.push(match k {
            1 => n,
            2 => 3,
            _ => 2 + k,
        });
    }
    o.push(2);
    for k in 1..=t {
        o.push(match k {
            1 => 1,
            2 => s + 3,
            _ => s + 3 + k,
        });
    }
    GridDiagram::new(x, o).expect("G2 is a valid grid")
}

/// The blocks `1,6,5, 7..e-1, [four entries], e+1..f` shared by `x⁺(G1)`
/// and the states of its null chain.
fn g1_state(p: FamilyParams, block: [usize; 4], head: [usize; 3]) -> GridState {
    let (e, f) = (p.e(), p.f());
    let pi: Vec<usize> = head
        .into_iter()
        .chain(7..e)
        .chain(block)
        .chain(e + 1..=f)
        .collect();
    GridState::new(&pi).expect("permutation")
}

/// `x⁺(G1(a,b)) = (1,6,5, 7..e-1, e,3,2,4, e+1..f)`.
pub fn g1_x_plus_formula(p: FamilyParams) -> GridState {
    g1_state(p, [p.e(), 3, 2, 4], [1, 6, 5])
}

/// Three states `y1, y2, y3` of `G1(a,b)` with `∂(y1 + y2 + y3) = x⁺`:
/// `(1,6,5,…,e,2,3,4,…)`, `(1,5,6,…,2,e,3,4,…)`, `(1,4,6,…,2,5,3,e,…)`.
pub fn g1_null_chain(p: FamilyParams) -> [GridState; 3] {
    let e = p.e();
    [
        g1_state(p, [e, 2, 3, 4], [1, 6, 5]),
        g1_state(p, [2, e, 3, 4], [1, 5, 6]),
        g1_state(p, [2, 5, 3, e], [1, 4, 6]),
    ]
}

/// The 7_2 braids related by a flype: `σ3^2 σ2^2 σ3^-1 σ1^2 σ2 σ1^-1` and
/// `σ3^2 σ2^2 σ3^-1 σ1^-1 σ2 σ1^2`.
pub fn footnote_flype_pair() -> (BraidWord, BraidWord) {
    (
        word(&[(3, 2), (2, 2), (3, -1), (1, 2), (2, 1), (1, -1)]),
        word(&[(3, 2), (2, 2), (3, -1), (1, -1), (2, 1), (1, 2)]),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: usize, b: usize) -> FamilyParams {
        FamilyParams { a, b }
    }

    #[test]
    fn base_words() {
        assert_eq!(
            b1_word(p(0, 0)).letters(),
            &[3, -2, -2, 3, 3, 2, -3, -1, 2, 1, 1]
        );
        assert_eq!(
            b2_word(p(0, 0)).letters(),
            &[3, -2, -2, 3, 3, 2, -3, 1, 1, 2, -1]
        );
        assert_eq!(conjectured_word(0, 0, 0, 0).unwrap(), b1_word(p(0, 0)));
        assert_eq!(conjectured_word(2, 1, 0, 0).unwrap(), b1_word(p(2, 1)));
        assert_eq!(
            conjectured_word(1, 2, 3, 4).unwrap().len(),
            2 + 4 + 6 + 8 + 11
        );
        assert_eq!(
            conjectured_word(-1, 0, 0, 0),
            Err(FamilyError::NegativeParam(-1))
        );
        assert_eq!(
            FamilyParams::new(0, -3),
            Err(FamilyError::NegativeParam(-3))
        );
    }

    #[test]
    fn figure_grids() {
        let g = g1(p(1, 1));
        assert_eq!(g.x(), vec![5, 4, 6, 7, 8, 2, 1, 3, 9, 10, 11, 12, 13]);
        assert_eq!(g.o(), vec![1, 12, 3, 5, 6, 7, 4, 13, 2, 8, 9, 10, 11]);
        let g = g2(p(1, 1));
        assert_eq!(g.x(), vec![4, 3, 2, 1, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14]);
        assert_eq!(g.o(), vec![13, 9, 4, 8, 14, 3, 5, 6, 2, 1, 7, 10, 11, 12]);
    }

    #[test]
    fn displayed_null_chain() {
        use crate::floer::{differential_of_chain, Chain};
        for a in 0..3 {
            for b in 0..3 {
                let q = p(a, b);
                let g = g1(q);
                assert_eq!(g.x_plus(), g1_x_plus_formula(q));
                let c: Chain = g1_null_chain(q).into_iter().collect();
                let d = differential_of_chain(&g, &c).unwrap();
                assert_eq!(d, std::iter::once(g.x_plus()).collect(), "({a},{b})");
            }
        }
        assert_eq!(
            g1_x_plus_formula(p(0, 2)).to_string(),
            "(1,6,5,7,8,9,10,11,3,2,4,12,13)"
        );
    }

    #[test]
    fn sizes_and_knots() {
        for a in 0..4 {
            for b in 0..4 {
                let q = p(a, b);
                assert_eq!(g1(q).size(), q.f());
                assert_eq!(g2(q).size(), q.f() + 1);
                assert!(g1(q).is_knot() && g2(q).is_knot());
                assert_eq!(b1_word(q).closure_components(), 1);
                assert_eq!(b2_word(q).closure_components(), 1);
            }
        }
    }

    #[test]
    fn prime_braids_match_displayed_words() {
        for a in 0..3 {
            for b in 0..3 {
                let q = p(a, b);
                let b1p = g1(q).to_braid_prime();
                let b2p = g2(q).to_braid_prime();
                assert_eq!(b1p, b1_prime_word(q), "G1({a},{b})");
                assert_eq!(b2p, b2_prime_word(q), "G2({a},{b})");
            }
        }
    }

    #[test]
    fn flype_pair() {
        let (l, r) = footnote_flype_pair();
        assert_eq!(l.sl(), r.sl());
        assert_eq!(l.sl(), 1);
    }
}
