//! HOMFLY-PT polynomial by skein recursion, normalized by
//! `x P(L+) - x^-1 P(L-) = z P(L0)` and `P(unknot) = 1`, plus the closed
//! forms of its specializations at `z = 0` and `z = 2i` for the knot family
//! and the `(2, 2p+1)` torus knots.

mod poly;
mod skein;

pub use poly::{GaussLaurentPoly, LaurentPoly1, LaurentPoly2};
pub use skein::HomflyEngine;

use thiserror::Error;

use crate::braid::BraidWord;
use crate::diagram::PlanarDiagram;
use crate::grid::GridDiagram;

pub const DEFAULT_CROSSING_CAP: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomflyError {
    #[error("diagram has {crossings} crossings after reduction, above the cap of {cap}")]
    DiagramTooLarge { crossings: usize, cap: usize },
    #[error("negative power z^{0} has no value at this point")]
    NegativeZPower(i32),
    #[error("diagram is not a valid PD code")]
    Malformed,
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// HOMFLY-PT polynomial of a diagram with a fresh engine.
pub fn homfly(d: &PlanarDiagram, cap: usize) -> Result<LaurentPoly2, HomflyError> {
    HomflyEngine::new(cap).homfly(d)
}

impl BraidWord {
    /// HOMFLY-PT polynomial of the closure.
    pub fn homfly(&self, cap: usize) -> Result<LaurentPoly2, HomflyError> {
        homfly(&self.closure_diagram(), cap)
    }
}

impl GridDiagram {
    /// HOMFLY-PT polynomial of the grid's planar diagram.
    pub fn homfly(&self, cap: usize) -> Result<LaurentPoly2, HomflyError> {
        homfly(&self.to_planar(), cap)
    }
}

/// `x^shift · (c0 + c2 x^2 + c4 x^4)`
fn quadratic_in_x2(shift: i64, c: [i64; 3]) -> Vec<(i32, i64)> {
    (0..3)
        .map(|k| ((shift + 2 * k as i64) as i32, c[k]))
        .collect()
}

/// `-(-x^2)^-m · (c0 + c2 x^2 + c4 x^4)`, as real terms.
fn signed_quadratic(m: i64, c: [i64; 3]) -> GaussLaurentPoly {
    let sign = if m % 2 == 0 { -1 } else { 1 };
    let terms: Vec<(i32, i64)> = quadratic_in_x2(-2 * m, c)
        .into_iter()
        .map(|(e, v)| (e, sign * v))
        .collect();
    GaussLaurentPoly::from_real_terms(&terms)
}

/// `P(K(a,b))(x, 0) = x^(-2a-2b-6) (-2a-2 + (3a+3-b) x^2 + (b-a) x^4)`
pub fn family_formula_z0(a: i64, b: i64) -> LaurentPoly1 {
    LaurentPoly1::from_terms(&quadratic_in_x2(
        -2 * a - 2 * b - 6,
        [-2 * a - 2, 3 * a + 3 - b, b - a],
    ))
}

/// `P(K(a,b))(x, 2i) = -(-x^2)^(-a-b-3) (2(1+a)(1+2b) + (3+3a+7b+8ab) x^2 + (a+3b+4ab) x^4)`
pub fn family_formula_z2i(a: i64, b: i64) -> GaussLaurentPoly {
    signed_quadratic(
        a + b + 3,
        [
            2 * (1 + a) * (1 + 2 * b),
            3 + 3 * a + 7 * b + 8 * a * b,
            a + 3 * b + 4 * a * b,
        ],
    )
}

/// `P(T(2,2p+1))(x, 0) = x^(-2p-2) (-p + (p+1) x^2)`
pub fn torus_formula_z0(p: i64) -> LaurentPoly1 {
    LaurentPoly1::from_terms(&quadratic_in_x2(-2 * p - 2, [-p, p + 1, 0]))
}

/// `P(T(2,2p+1))(x, 2i) = -(-x^2)^(-p-1) (p + (p+1) x^2)`
pub fn torus_formula_z2i(p: i64) -> GaussLaurentPoly {
    signed_quadratic(p + 1, [p, p + 1, 0])
}

/// `σ1^(2p+1)` on two strands, whose closure is `T(2, 2p+1)`.
pub fn torus_braid(p: i64) -> BraidWord {
    let k = 2 * p + 1;
    let letter = if k >= 0 { 1 } else { -1 };
    BraidWord::new(2, vec![letter; k.unsigned_abs() as usize]).expect("two-strand word")
}
