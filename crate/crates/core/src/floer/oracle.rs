//! Exhaustive check of `θ̃` over all `n!` generators, independent of the
//! saturation search.

use std::collections::HashMap;

use super::{differential_unchecked, FloerError, Marks};
use crate::gf2::{BitVec, XorBasis};
use crate::grid::{GridDiagram, GridState};

pub const ORACLE_MAX_SIZE: usize = 7;

fn all_states(n: usize) -> Vec<GridState> {
    let mut out = Vec::new();
    let mut v: Vec<u8> = (0..n as u8).collect();
    // lexicographic successor
    loop {
        out.push(GridState::from_zero_based(v.clone()));
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
            return out;
        };
        let j = (i + 1..n)
            .rev()
            .find(|&j| v[j] > v[i])
            .expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
    }
}

/// True when `x⁺` is a boundary, found by row-reducing the image of `∂` on
/// every state of the grid.
pub fn brute_force_theta(g: &GridDiagram) -> Result<bool, FloerError> {
    let n = g.size();
    if n > ORACLE_MAX_SIZE {
        return Err(FloerError::TooLarge {
            n,
            max: ORACLE_MAX_SIZE,
        });
    }
    let k = g.component_count();
    if k != 1 {
        return Err(FloerError::MultiComponent(k));
    }
    let states = all_states(n);
    let index: HashMap<&GridState, usize> =
        states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let marks = Marks::new(g);
    let mut image = XorBasis::new();
    for (i, y) in states.iter().enumerate() {
        let d = differential_unchecked(&marks, y);
        image.insert(&BitVec::from_ones(d.states().map(|x| index[x])), i);
    }
    let before = image.rank();
    let xp = g.x_plus();
    // x⁺ is in the image iff adding it does not raise the rank
    let raised = image.insert(&BitVec::from_ones([index[&xp]]), states.len());
    debug_assert_eq!(image.rank(), before + usize::from(raised));
    Ok(!raised)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerates_every_permutation_once() {
        let s = all_states(5);
        assert_eq!(s.len(), 120);
        assert!(s.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_states(1).len(), 1);
    }

    #[test]
    fn small_cases() {
        let unknot = GridDiagram::new(vec![1, 2], vec![2, 1]).unwrap();
        assert!(!brute_force_theta(&unknot).unwrap());
        let big = GridDiagram::new((1..=8).collect(), (2..=8).chain([1]).collect()).unwrap();
        assert!(matches!(
            brute_force_theta(&big),
            Err(FloerError::TooLarge { .. })
        ));
    }
}
