//! The tilde grid chain complex over GF(2) and the transverse class of `x⁺`.
//!
//! Generators are grid states. The differential of a state counts empty
//! rectangles: a rectangle on the torus whose lower-left and upper-right
//! corners are points of the state, whose interior contains no X, no O, and
//! no other point of the state. It contributes the state with those two
//! points moved to the other two corners.

mod oracle;
mod theta;

pub use oracle::{brute_force_theta, ORACLE_MAX_SIZE};
pub use theta::{saturate, theta_vanishes, verify_certificate, Saturation, ThetaCertificate};

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::grid::{GridDiagram, GridState};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FloerError {
    #[error("state has {state} points but the grid has size {grid}")]
    SizeMismatch { grid: usize, state: usize },
    #[error("x⁺ is defined for knots, but the grid has {0} components")]
    MultiComponent(usize),
    #[error("saturation exceeded the state budget of {0}")]
    BudgetExceeded(usize),
    #[error("brute-force oracle supports grids up to size {max}, got {n}")]
    TooLarge { n: usize, max: usize },
}

/// A formal GF(2) sum of grid states.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Chain {
    support: BTreeSet<GridState>,
}

impl Chain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self, s: GridState) {
        if !self.support.remove(&s) {
            self.support.insert(s);
        }
    }

    pub fn add(&mut self, other: &Chain) {
        for s in &other.support {
            self.add_state(s.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn contains(&self, s: &GridState) -> bool {
        self.support.contains(s)
    }

    /// States in lexicographic order.
    pub fn states(&self) -> impl Iterator<Item = &GridState> {
        self.support.iter()
    }
}

impl FromIterator<GridState> for Chain {
    fn from_iter<I: IntoIterator<Item = GridState>>(iter: I) -> Self {
        let mut c = Chain::new();
        for s in iter {
            c.add_state(s);
        }
        c
    }
}

/// Cell occupancy of the markings, indexed `[col][row]`.
struct Marks {
    n: usize,
    x: Vec<usize>,
    o: Vec<usize>,
}

impl Marks {
    fn new(g: &GridDiagram) -> Self {
        let n = g.size();
        Self {
            n,
            x: (0..n).map(|c| g.x_row(c)).collect(),
            o: (0..n).map(|c| g.o_row(c)).collect(),
        }
    }

    /// The rectangle with lower-left lattice point `(c0, r0)`, `w` columns
    /// wide and `h` rows high, has no marking and no point of `pi` inside.
    fn empty(&self, pi: &[u8], c0: usize, r0: usize, w: usize, h: usize) -> bool {
        let n = self.n;
        for k in 0..w {
            let c = (c0 + k) % n;
            if (self.x[c] + n - r0) % n < h || (self.o[c] + n - r0) % n < h {
                return false;
            }
            if k > 0 {
                let rel = (pi[c] as usize + n - r0) % n;
                if rel > 0 && rel < h {
                    return false;
                }
            }
        }
        true
    }
}

fn check_size(g: &GridDiagram, y: &GridState) -> Result<(), FloerError> {
    if g.size() != y.size() {
        return Err(FloerError::SizeMismatch {
            grid: g.size(),
            state: y.size(),
        });
    }
    Ok(())
}

fn swapped(pi: &[u8], i: usize, j: usize) -> GridState {
    let mut v = pi.to_vec();
    v.swap(i, j);
    GridState::from_zero_based(v)
}

/// `∂y`: one term per empty rectangle from `y`, mod 2.
pub fn differential(g: &GridDiagram, y: &GridState) -> Result<Chain, FloerError> {
    check_size(g, y)?;
    Ok(differential_unchecked(&Marks::new(g), y))
}

fn differential_unchecked(m: &Marks, y: &GridState) -> Chain {
    let n = m.n;
    let pi = y.raw();
    let mut out = Chain::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let w = (j + n - i) % n;
            let h = (pi[j] as usize + n - pi[i] as usize) % n;
            if m.empty(pi, i, pi[i] as usize, w, h) {
                out.add_state(swapped(pi, i, j));
            }
        }
    }
    out
}

/// All states `y` (with multiplicity mod 2) such that `x` appears in `∂y`.
pub fn codifferential(g: &GridDiagram, x: &GridState) -> Result<Chain, FloerError> {
    check_size(g, x)?;
    Ok(codifferential_unchecked(&Marks::new(g), x))
}

fn codifferential_unchecked(m: &Marks, x: &GridState) -> Chain {
    let n = m.n;
    let pi = x.raw();
    let mut out = Chain::new();
    // x holds the upper-left corner (column i) and lower-right corner (column j)
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let w = (j + n - i) % n;
            let h = (pi[i] as usize + n - pi[j] as usize) % n;
            if m.empty(pi, i, pi[j] as usize, w, h) {
                out.add_state(swapped(pi, i, j));
            }
        }
    }
    out
}

/// `∂` extended linearly to chains.
pub fn differential_of_chain(g: &GridDiagram, c: &Chain) -> Result<Chain, FloerError> {
    let m = Marks::new(g);
    let mut out = Chain::new();
    for y in c.states() {
        check_size(g, y)?;
        out.add(&differential_unchecked(&m, y));
    }
    Ok(out)
}

/// `∂∂y`, which is zero for every state.
pub fn d_squared(g: &GridDiagram, y: &GridState) -> Result<Chain, FloerError> {
    let d = differential(g, y)?;
    differential_of_chain(g, &d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid(x: &[usize], o: &[usize]) -> GridDiagram {
        GridDiagram::new(x.to_vec(), o.to_vec()).unwrap()
    }

    fn state(s: &str) -> GridState {
        s.parse().unwrap()
    }

    fn all_states(n: usize) -> Vec<GridState> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (1..=n).collect();
        permute(&mut v, 0, &mut out);
        out
    }

    fn permute(v: &mut Vec<usize>, k: usize, out: &mut Vec<GridState>) {
        if k == v.len() {
            out.push(GridState::new(v).unwrap());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permute(v, k + 1, out);
            v.swap(k, i);
        }
    }

    #[test]
    fn unknot_differential_vanishes() {
        let g = grid(&[1, 2], &[2, 1]);
        for s in all_states(2) {
            assert!(differential(&g, &s).unwrap().is_zero());
        }
    }

    #[test]
    fn trefoil_d_squared() {
        let g = grid(&[1, 2, 3, 4, 5], &[4, 5, 1, 2, 3]);
        let states = all_states(5);
        assert_eq!(states.len(), 120);
        let mut nonzero = 0;
        for s in &states {
            assert!(d_squared(&g, s).unwrap().is_zero(), "{s}");
            nonzero += usize::from(!differential(&g, s).unwrap().is_zero());
        }
        assert!(nonzero > 0);
    }

    #[test]
    fn codifferential_is_adjoint() {
        let g = grid(&[1, 2, 3, 4, 5], &[4, 5, 1, 2, 3]);
        let states = all_states(5);
        for y in &states {
            for x in differential(&g, y).unwrap().states() {
                assert!(codifferential(&g, x).unwrap().contains(y));
            }
            for x in codifferential(&g, y).unwrap().states() {
                assert!(differential(&g, x).unwrap().contains(y));
            }
        }
    }

    #[test]
    fn g2_first_step() {
        let g = grid(
            &[4, 3, 2, 1, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14],
            &[13, 9, 4, 8, 14, 3, 5, 6, 2, 1, 7, 10, 11, 12],
        );
        let y1 = state("(1,4,5,3,2,6,7,8,9,10,11,12,13,14)");
        assert!(differential(&g, &y1).unwrap().contains(&g.x_plus()));
        assert!(d_squared(&g, &y1).unwrap().is_zero());
        assert!(d_squared(&g, &g.x_plus()).unwrap().is_zero());
    }

    #[test]
    fn size_mismatch() {
        let g = grid(&[1, 2], &[2, 1]);
        assert_eq!(
            differential(&g, &state("(1,2,3)")),
            Err(FloerError::SizeMismatch { grid: 2, state: 3 })
        );
    }
}
