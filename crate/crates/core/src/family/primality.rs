//! The integer arithmetic behind primality of `K(a,b)`.
//!
//! A 4-braid closure that is composite splits off a `(2, 2p+1)` torus knot
//! with `p ∉ {0, -1}`. Divisibility of the HOMFLY polynomials at `z = 0`
//! forces `p² = 2a + 2 + (a+b+1)p`, and at `z = 2i` forces
//! `p² = 2a + 2 + 4b + 4ab + (a+b+1)p`. Both are checked two ways: by a
//! direct search over `p`, and by solving the quadratics exactly.

use serde::{Deserialize, Serialize};

use super::FamilyParams;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimalityCertificate {
    pub a: usize,
    pub b: usize,
    /// Search range `|p| <= bound`.
    pub bound: i64,
    /// Admissible `p` satisfying the `z = 0` identity.
    pub z0_solutions: Vec<i64>,
    /// Admissible `p` satisfying the `z = 2i` identity.
    pub z2i_solutions: Vec<i64>,
    /// Admissible `p` satisfying both.
    pub common: Vec<i64>,
    /// Difference of the two right-hand sides, `4b(1+a)`; a common solution
    /// needs it to vanish.
    pub difference: i64,
    /// Common solutions found by solving `p² - (a+b+1)p - (2a+2) = 0`.
    pub algebraic_common: Vec<i64>,
    /// True when the search and the algebra agree.
    pub routes_agree: bool,
    /// No admissible torus summand, or the single case `(0,0)` with `p = 2`,
    /// settled separately because `K(0,0)` is a known prime knot.
    pub prime: bool,
}

fn admissible(p: i64) -> bool {
    p != 0 && p != -1
}

fn isqrt(v: i64) -> Option<i64> {
    if v < 0 {
        return None;
    }
    let r = (v as f64).sqrt() as i64;
    (r.saturating_sub(2)..=r + 2).find(|&s| s >= 0 && s * s == v)
}

/// Integer roots of `p² - s p - c = 0`.
fn integer_roots(s: i64, c: i64) -> Vec<i64> {
    let disc = s * s + 4 * c;
    let Some(r) = isqrt(disc) else { return vec![] };
    let mut out: Vec<i64> = [s - r, s + r]
        .into_iter()
        .filter(|v| v % 2 == 0)
        .map(|v| v / 2)
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

pub fn primality_check(p: FamilyParams) -> PrimalityCertificate {
    let (a, b) = (p.a as i64, p.b as i64);
    let s = a + b + 1;
    let c0 = 2 * a + 2;
    let c2 = 2 * a + 2 + 4 * b + 4 * a * b;
    let bound = 2 * a + 2 * b + 10;
    let range = || (-bound..=bound).filter(|&q| admissible(q));
    let z0_solutions: Vec<i64> = range().filter(|&q| q * q == c0 + s * q).collect();
    let z2i_solutions: Vec<i64> = range().filter(|&q| q * q == c2 + s * q).collect();
    let common: Vec<i64> = z0_solutions
        .iter()
        .copied()
        .filter(|q| z2i_solutions.contains(q))
        .collect();

    let difference = c2 - c0;
    let algebraic_common: Vec<i64> = if difference == 0 {
        integer_roots(s, c0)
            .into_iter()
            .filter(|&q| admissible(q))
            .collect()
    } else {
        vec![]
    };
    let routes_agree = common == algebraic_common;
    let prime = routes_agree && (common.is_empty() || (a == 0 && b == 0 && common == [2]));
    PrimalityCertificate {
        a: p.a,
        b: p.b,
        bound,
        z0_solutions,
        z2i_solutions,
        common,
        difference,
        algebraic_common,
        routes_agree,
        prime,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: usize, b: usize) -> PrimalityCertificate {
        primality_check(FamilyParams { a, b })
    }

    #[test]
    fn base_case_has_only_p_two() {
        let c = check(0, 0);
        assert_eq!(c.common, vec![2]);
        assert_eq!(c.algebraic_common, vec![2]);
        assert!(c.prime);
    }

    #[test]
    fn other_cases_have_no_summand() {
        let c = check(1, 0);
        assert!(c.common.is_empty() && c.z0_solutions.is_empty());
        assert!(check(0, 3).common.is_empty());
        for a in 0..12 {
            for b in 0..12 {
                let c = check(a, b);
                assert!(c.routes_agree && c.prime, "({a},{b})");
                assert_eq!(c.difference, 4 * b as i64 * (1 + a as i64));
                if (a, b) != (0, 0) {
                    assert!(c.common.is_empty());
                }
            }
        }
    }

    #[test]
    fn roots() {
        assert_eq!(integer_roots(1, 2), vec![-1, 2]);
        assert!(integer_roots(2, 4).is_empty());
    }
}
