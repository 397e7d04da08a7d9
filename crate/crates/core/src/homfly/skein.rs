//! Skein evaluation on descending diagrams.
//!
//! Pick an order of the components and a base point on each. Walking the
//! diagram in that order, a crossing is good when it is first met on the
//! over strand; if every crossing is good the diagram is a stacked unlink.
//! Each bad crossing is switched, paying for the switch with the smoothed
//! diagram, which has one crossing fewer. Meeting every crossing first on the
//! under strand works just as well, so both directions are tried and the one
//! with fewer bad crossings is used.
//!
//! Before each step the diagram is reduced by Reidemeister I and II moves and
//! split into connected pieces, and every piece is memoized on a canonical
//! signed Gauss code.

use std::collections::HashMap;

use super::{HomflyError, LaurentPoly2};
use crate::diagram::{Crossing, PlanarDiagram};

type Code = Vec<u32>;

/// Skein evaluator with a memo table that persists across calls.
#[derive(Debug, Clone)]
pub struct HomflyEngine {
    cap: usize,
    memo: HashMap<Code, LaurentPoly2>,
    delta_pows: Vec<LaurentPoly2>,
}

impl HomflyEngine {
    pub fn new(cap: usize) -> Self {
        Self {
            cap,
            memo: HashMap::new(),
            delta_pows: vec![LaurentPoly2::one()],
        }
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Number of memoized connected diagrams.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// The HOMFLY-PT polynomial of `d`. The crossing cap applies after the
    /// initial Reidemeister reductions.
    pub fn homfly(&mut self, d: &PlanarDiagram) -> Result<LaurentPoly2, HomflyError> {
        if !d.is_well_formed() {
            return Err(HomflyError::Malformed);
        }
        let (cr, loops) = simplify(relabel(&d.crossings));
        if cr.len() > self.cap {
            return Err(HomflyError::DiagramTooLarge {
                crossings: cr.len(),
                cap: self.cap,
            });
        }
        Ok(self.eval_simplified(cr, loops + d.free_loops))
    }

    fn delta_pow(&mut self, k: usize) -> LaurentPoly2 {
        while self.delta_pows.len() <= k {
            let delta: LaurentPoly2 = "-1*x^-1*z^-1 + 1*x^1*z^-1".parse().expect("valid literal");
            let next = self.delta_pows.last().expect("nonempty") * &delta;
            self.delta_pows.push(next);
        }
        self.delta_pows[k].clone()
    }

    fn eval(&mut self, cr: Vec<Crossing>, loops: usize) -> LaurentPoly2 {
        let (cr, more) = simplify(cr);
        self.eval_simplified(cr, loops + more)
    }

    fn eval_simplified(&mut self, cr: Vec<Crossing>, loops: usize) -> LaurentPoly2 {
        let parts = pieces(&cr);
        let split = parts.len() + loops;
        if split == 0 {
            return LaurentPoly2::one();
        }
        let mut out = self.delta_pow(split - 1);
        for p in parts {
            let v = self.eval_piece(p);
            out = &out * &v;
        }
        out
    }

    fn eval_piece(&mut self, cr: Vec<Crossing>) -> LaurentPoly2 {
        let cr = relabel(&cr);
        let code = canonical_code(&cr);
        if let Some(v) = self.memo.get(&code) {
            return v.clone();
        }
        let v = self.expand(cr);
        self.memo.insert(code, v.clone());
        v
    }

    /// Switch-and-smooth along a traversal until the diagram is stacked.
    fn expand(&mut self, mut cr: Vec<Crossing>) -> LaurentPoly2 {
        let t = Traversal::new(&cr);
        let bad = t.bad_crossings(&cr);
        let mut out = LaurentPoly2::zero();
        // coefficient in front of the current, partly switched diagram
        let mut coef = LaurentPoly2::one();
        for b in bad {
            let c = cr[b];
            let smoothed = rebuild(
                &cr,
                &[b],
                &[(c.in_under(), c.out_over()), (c.in_over(), c.out_under())],
            );
            let ps = self.eval(smoothed.0, smoothed.1);
            // P(L+) = x^-2 P(L-) + x^-1 z P(L0); P(L-) = x^2 P(L+) - x z P(L0)
            let (sw, sm) = if c.positive {
                (
                    LaurentPoly2::monomial(1, -2, 0),
                    LaurentPoly2::monomial(1, -1, 1),
                )
            } else {
                (
                    LaurentPoly2::monomial(1, 2, 0),
                    LaurentPoly2::monomial(-1, 1, 1),
                )
            };
            out = &out + &(&(&coef * &sm) * &ps);
            coef = &coef * &sw;
            cr[b] = c.switched();
        }
        let stacked = self.delta_pow(t.components.len() - 1);
        &out + &(&coef * &stacked)
    }
}

/// Renumbers edges to `0..2c` in order of first appearance.
fn relabel(cr: &[Crossing]) -> Vec<Crossing> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    cr.iter()
        .map(|c| {
            let mut slots = c.slots;
            for s in &mut slots {
                let next = map.len();
                *s = *map.entry(*s).or_insert(next);
            }
            Crossing {
                slots,
                positive: c.positive,
            }
        })
        .collect()
}

fn find(parent: &mut HashMap<usize, usize>, e: usize) -> usize {
    let p = *parent.get(&e).unwrap_or(&e);
    if p == e {
        return e;
    }
    let r = find(parent, p);
    parent.insert(e, r);
    r
}

/// Deletes the crossings in `removed`, gluing edge ends as listed in `joins`.
/// Returns the remaining crossings (relabelled) and the number of closed
/// loops left with no crossing.
fn rebuild(cr: &[Crossing], removed: &[usize], joins: &[(usize, usize)]) -> (Vec<Crossing>, usize) {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    for &(a, b) in joins {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent.insert(ra, rb);
        }
    }
    let kept: Vec<Crossing> = cr
        .iter()
        .enumerate()
        .filter(|(i, _)| !removed.contains(i))
        .map(|(_, c)| {
            let mut slots = c.slots;
            for s in &mut slots {
                *s = find(&mut parent, *s);
            }
            Crossing {
                slots,
                positive: c.positive,
            }
        })
        .collect();
    let mut touched: Vec<usize> = joins
        .iter()
        .flat_map(|&(a, b)| [a, b])
        .map(|e| find(&mut parent, e))
        .collect();
    touched.sort_unstable();
    touched.dedup();
    let loops = touched
        .iter()
        .filter(|&&r| !kept.iter().any(|c| c.slots.contains(&r)))
        .count();
    (relabel(&kept), loops)
}

/// Removing a crossing while keeping both strands intact.
fn strand_joins(c: &Crossing) -> [(usize, usize); 2] {
    [(c.in_under(), c.out_under()), (c.in_over(), c.out_over())]
}

fn find_r1(cr: &[Crossing]) -> Option<usize> {
    cr.iter()
        .position(|c| c.in_under() == c.out_over() || c.in_over() == c.out_under())
}

/// Two crossings where one strand passes over the other twice in a row.
fn find_r2(cr: &[Crossing]) -> Option<(usize, usize)> {
    for (i, a) in cr.iter().enumerate() {
        for (j, b) in cr.iter().enumerate() {
            if i == j || a.positive == b.positive || a.out_over() != b.in_over() {
                continue;
            }
            if a.out_under() == b.in_under() || b.out_under() == a.in_under() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Applies Reidemeister I and II reductions until none remain.
fn simplify(mut cr: Vec<Crossing>) -> (Vec<Crossing>, usize) {
    let mut loops = 0;
    loop {
        let (removed, joins) = if let Some(i) = find_r1(&cr) {
            (vec![i], strand_joins(&cr[i]).to_vec())
        } else if let Some((i, j)) = find_r2(&cr) {
            let mut joins = strand_joins(&cr[i]).to_vec();
            joins.extend(strand_joins(&cr[j]));
            (vec![i, j], joins)
        } else {
            return (cr, loops);
        };
        let (next, l) = rebuild(&cr, &removed, &joins);
        cr = next;
        loops += l;
    }
}

/// Connected pieces, where crossings sharing an edge are connected.
fn pieces(cr: &[Crossing]) -> Vec<Vec<Crossing>> {
    let mut owner: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, c) in cr.iter().enumerate() {
        for &e in &c.slots {
            owner.entry(e).or_default().push(i);
        }
    }
    let mut seen = vec![false; cr.len()];
    let mut out = Vec::new();
    for start in 0..cr.len() {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut stack = vec![start];
        let mut piece = Vec::new();
        while let Some(i) = stack.pop() {
            piece.push(cr[i]);
            for e in &cr[i].slots {
                for &j in &owner[e] {
                    if !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
        out.push(piece);
    }
    out
}

/// For compact edge labels: the crossing an edge enters and whether it
/// arrives on the over strand.
fn heads(cr: &[Crossing]) -> Vec<(usize, bool)> {
    let mut h = vec![(usize::MAX, false); 2 * cr.len()];
    for (i, c) in cr.iter().enumerate() {
        h[c.in_under()] = (i, false);
        h[c.in_over()] = (i, true);
    }
    h
}

fn out_edge(c: &Crossing, over: bool) -> usize {
    if over {
        c.out_over()
    } else {
        c.out_under()
    }
}

fn in_edge(c: &Crossing, over: bool) -> usize {
    if over {
        c.in_over()
    } else {
        c.in_under()
    }
}

/// Lexicographically least signed Gauss code over all starting edges. From
/// a start edge, crossings are labelled in order of first visit; when a
/// component closes, the walk resumes at the unvisited strand of the
/// lowest-labelled crossing. The piece must be connected.
fn canonical_code(cr: &[Crossing]) -> Code {
    let h = heads(cr);
    let mut best: Option<Code> = None;
    for start in 0..2 * cr.len() {
        let code = code_from(cr, &h, start);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

fn code_from(cr: &[Crossing], h: &[(usize, bool)], start: usize) -> Code {
    let mut label = vec![u32::MAX; cr.len()];
    let mut order: Vec<usize> = Vec::new();
    let mut visited = vec![false; h.len()];
    let mut code = Vec::with_capacity(2 * cr.len() + 4);
    let mut next_start = Some(start);
    while let Some(s) = next_start {
        let mut e = s;
        loop {
            visited[e] = true;
            let (c, over) = h[e];
            if label[c] == u32::MAX {
                label[c] = order.len() as u32;
                order.push(c);
            }
            code.push(label[c] * 4 + 2 * u32::from(over) + u32::from(cr[c].positive));
            e = out_edge(&cr[c], over);
            if e == s {
                break;
            }
        }
        code.push(u32::MAX);
        next_start = order.iter().find_map(|&c| {
            [false, true]
                .into_iter()
                .map(|o| in_edge(&cr[c], o))
                .find(|&e| !visited[e])
        });
    }
    code
}

/// Components of a diagram as cyclic lists of `(crossing, over)` passages.
struct Traversal {
    components: Vec<Vec<(usize, bool)>>,
}

impl Traversal {
    fn new(cr: &[Crossing]) -> Self {
        let h = heads(cr);
        let mut visited = vec![false; h.len()];
        let mut components = Vec::new();
        for s in 0..h.len() {
            if visited[s] {
                continue;
            }
            let mut comp = Vec::new();
            let mut e = s;
            while !visited[e] {
                visited[e] = true;
                let (c, over) = h[e];
                comp.push((c, over));
                e = out_edge(&cr[c], over);
            }
            components.push(comp);
        }
        Self { components }
    }

    /// Bad crossings in the order they are met, for the best choice of
    /// direction, component order and base points.
    fn bad_crossings(&self, cr: &[Crossing]) -> Vec<usize> {
        let k = self.components.len();
        let mut comp_of = vec![[usize::MAX; 2]; cr.len()];
        for (ci, comp) in self.components.iter().enumerate() {
            for &(c, over) in comp {
                comp_of[c][usize::from(over)] = ci;
            }
        }
        let mut best: Option<(usize, Vec<usize>)> = None;
        for want_over in [true, false] {
            // under[i][j]: crossings where i passes on the wrong strand of j
            let mut wrong = vec![vec![0usize; k]; k];
            for ends in &comp_of {
                let (u, o) = (ends[0], ends[1]);
                if u != o {
                    if want_over {
                        wrong[u][o] += 1;
                    } else {
                        wrong[o][u] += 1;
                    }
                }
            }
            let order = best_order(&wrong);
            let mut total: usize = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .map(|(a, b)| wrong[order[a]][order[b]])
                .sum();
            let starts: Vec<usize> = self
                .components
                .iter()
                .map(|comp| {
                    let (s, bad) = best_start(comp, want_over);
                    total += bad;
                    s
                })
                .collect();
            if best.as_ref().is_some_and(|(t, _)| *t <= total) {
                continue;
            }
            let mut seen = vec![false; cr.len()];
            let mut bad = Vec::new();
            for &ci in &order {
                let comp = &self.components[ci];
                for i in 0..comp.len() {
                    let (c, over) = comp[(starts[ci] + i) % comp.len()];
                    if !seen[c] {
                        seen[c] = true;
                        if over != want_over {
                            bad.push(c);
                        }
                    }
                }
            }
            debug_assert_eq!(bad.len(), total);
            best = Some((total, bad));
        }
        best.map(|(_, b)| b).unwrap_or_default()
    }
}

/// Base point on one component minimizing self-crossings first met on the
/// wrong strand.
fn best_start(comp: &[(usize, bool)], want_over: bool) -> (usize, usize) {
    let len = comp.len();
    let mut best = (0, usize::MAX);
    for s in 0..len {
        let mut first: HashMap<usize, bool> = HashMap::new();
        let mut self_cross = HashMap::new();
        for i in 0..len {
            let (c, over) = comp[(s + i) % len];
            *self_cross.entry(c).or_insert(0) += 1;
            first.entry(c).or_insert(over);
        }
        let bad = first
            .iter()
            .filter(|(c, &over)| self_cross[*c] == 2 && over != want_over)
            .count();
        if bad < best.1 {
            best = (s, bad);
        }
    }
    best
}

/// Component order minimizing `sum wrong[a][b]` over `a` before `b`, by
/// dynamic programming over subsets for small counts.
fn best_order(wrong: &[Vec<usize>]) -> Vec<usize> {
    let k = wrong.len();
    if k > 12 {
        return (0..k).collect();
    }
    let full = (1usize << k) - 1;
    let mut cost = vec![usize::MAX; full + 1];
    let mut choice = vec![usize::MAX; full + 1];
    cost[0] = 0;
    for set in 0..full {
        if cost[set] == usize::MAX {
            continue;
        }
        for j in (0..k).filter(|j| set & (1 << j) == 0) {
            let add: usize = (0..k)
                .filter(|i| set & (1 << i) != 0)
                .map(|i| wrong[i][j])
                .sum();
            let next = set | (1 << j);
            if cost[set] + add < cost[next] {
                cost[next] = cost[set] + add;
                choice[next] = j;
            }
        }
    }
    let mut order = Vec::with_capacity(k);
    let mut set = full;
    while set != 0 {
        let j = choice[set];
        order.push(j);
        set &= !(1 << j);
    }
    order.reverse();
    order
}
