//! The chain of conjugations and exchange moves taking `B'(G1(a,b))` to
//! `B1(a,b)`, each step checked mechanically.

use serde::{Deserialize, Serialize};

use super::{b1_word, FamilyParams};
use crate::braid::{BraidWord, ExchangeKind};
use crate::grid::GridDiagram;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepKind {
    /// `B -> σ_k B σ_k^-1`, compared in the braid group.
    Conjugate(i32),
    /// An exchange move, compared letter for letter.
    Exchange(ExchangeKind),
    /// Rewriting by braid relations only.
    Equal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainStep {
    pub kind: StepKind,
    pub from: String,
    pub to: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub params: FamilyParams,
    pub steps: Vec<ChainStep>,
    /// The starting word is the braid actually read off `G1(a,b)`.
    pub start_matches_grid: bool,
}

impl ChainReport {
    pub fn ok(&self) -> bool {
        self.start_matches_grid && self.steps.iter().all(|s| s.ok)
    }
}

fn w(p: FamilyParams, blocks: &[(i32, i32)]) -> BraidWord {
    let (a, b) = (p.a as i32, p.b as i32);
    let blocks: Vec<(i32, i32)> = blocks
        .iter()
        .map(|&(g, e)| match e {
            // exponent placeholders
            100 => (g, 2 * a + 3),
            101 => (g, 2 * b + 1),
            _ => (g, e),
        })
        .collect();
    BraidWord::from_powers(4, &blocks).expect("4-braid")
}

/// The intermediate words of the chain, starting from `B'(G1(a,b))`.
pub fn chain_words(p: FamilyParams) -> Vec<(StepKind, BraidWord)> {
    const A: i32 = 100;
    const B: i32 = 101;
    vec![
        (
            StepKind::Conjugate(1),
            w(
                p,
                &[
                    (2, -1),
                    (3, -1),
                    (2, A),
                    (1, 1),
                    (2, -1),
                    (3, 1),
                    (2, 1),
                    (1, -1),
                    (2, B),
                    (1, 1),
                    (2, -1),
                ],
            ),
        ),
        (
            StepKind::Exchange(ExchangeKind::Sigma3),
            w(
                p,
                &[
                    (2, -1),
                    (3, 1),
                    (2, A),
                    (1, 1),
                    (2, -1),
                    (3, -1),
                    (2, 1),
                    (1, -1),
                    (2, B),
                    (1, 1),
                    (2, -1),
                ],
            ),
        ),
        (
            StepKind::Equal,
            w(
                p,
                &[
                    (2, -1),
                    (3, 1),
                    (2, A),
                    (3, 1),
                    (2, -1),
                    (1, -1),
                    (2, 1),
                    (3, -1),
                    (2, B),
                    (1, 1),
                    (2, -1),
                ],
            ),
        ),
        (
            StepKind::Exchange(ExchangeKind::Sigma1),
            w(
                p,
                &[
                    (2, -1),
                    (3, 1),
                    (2, A),
                    (3, 1),
                    (2, -1),
                    (1, 1),
                    (2, 1),
                    (3, -1),
                    (2, B),
                    (1, -1),
                    (2, -1),
                ],
            ),
        ),
        (StepKind::Conjugate(3), b1_word(p)),
    ]
}

fn check(kind: StepKind, from: &BraidWord, to: &BraidWord) -> bool {
    match kind {
        StepKind::Conjugate(k) => from
            .conjugate(k)
            .and_then(|c| c.braid_equal(to))
            .unwrap_or(false),
        StepKind::Exchange(e) => from
            .exchange_sites(e)
            .into_iter()
            .any(|site| from.exchange_move(site, e).as_ref() == Ok(to)),
        StepKind::Equal => from.braid_equal(to).unwrap_or(false),
    }
}

/// Runs the chain from the braid `B'` of the supplied `G1(a,b)` grid.
pub fn verify_chain(p: FamilyParams, g1: &GridDiagram) -> ChainReport {
    let start = super::b1_prime_word(p);
    let start_matches_grid = g1.to_braid_prime().braid_equal(&start).unwrap_or(false);
    let mut steps = Vec::new();
    let mut cur = start;
    for (kind, next) in chain_words(p) {
        let ok = check(kind, &cur, &next);
        steps.push(ChainStep {
            kind,
            from: cur.to_sigma_string(),
            to: next.to_sigma_string(),
            ok,
        });
        cur = next;
    }
    ChainReport {
        params: p,
        steps,
        start_matches_grid,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::g1;

    #[test]
    fn chain_holds_on_small_parameters() {
        for a in 0..3 {
            for b in 0..3 {
                let p = FamilyParams { a, b };
                let r = verify_chain(p, &g1(p));
                assert!(r.ok(), "{a},{b}: {:#?}", r.steps);
            }
        }
    }

    #[test]
    fn wrong_step_is_caught() {
        let p = FamilyParams { a: 0, b: 0 };
        let words = chain_words(p);
        assert!(!check(
            StepKind::Conjugate(2),
            &super::super::b1_prime_word(p),
            &words[0].1
        ));
        assert!(!check(
            StepKind::Exchange(ExchangeKind::Sigma1),
            &words[0].1,
            &words[1].1
        ));
    }
}
