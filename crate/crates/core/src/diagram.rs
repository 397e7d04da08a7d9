//! Oriented planar link diagrams in PD form.
//!
//! Each crossing lists its four incident edges counterclockwise, starting
//! with the incoming under-edge: `[in_under, a, out_under, b]`. For a
//! positive crossing the over strand runs `b -> a`, for a negative one
//! `a -> b`. Every edge id occurs exactly twice across all crossings, once
//! as an incoming end and once as an outgoing end. Components without any
//! crossing are kept as a bare count.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Crossing {
    pub slots: [usize; 4],
    pub positive: bool,
}

impl Crossing {
    pub fn in_under(&self) -> usize {
        self.slots[0]
    }

    pub fn out_under(&self) -> usize {
        self.slots[2]
    }

    pub fn in_over(&self) -> usize {
        if self.positive {
            self.slots[3]
        } else {
            self.slots[1]
        }
    }

    pub fn out_over(&self) -> usize {
        if self.positive {
            self.slots[1]
        } else {
            self.slots[3]
        }
    }

    pub fn sign(&self) -> i64 {
        if self.positive {
            1
        } else {
            -1
        }
    }

    /// Builds the slot order from the four strand ends.
    pub fn from_ends(
        in_under: usize,
        out_under: usize,
        in_over: usize,
        out_over: usize,
        positive: bool,
    ) -> Self {
        let slots = if positive {
            [in_under, out_over, out_under, in_over]
        } else {
            [in_under, in_over, out_under, out_over]
        };
        Crossing { slots, positive }
    }

    /// Same crossing with the over and under strands exchanged.
    pub fn switched(&self) -> Self {
        Crossing::from_ends(
            self.in_over(),
            self.out_over(),
            self.in_under(),
            self.out_under(),
            !self.positive,
        )
    }
}

/// A passage of a component through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Passage {
    pub crossing: usize,
    pub over: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PlanarDiagram {
    pub crossings: Vec<Crossing>,
    /// Unknotted components that meet no crossing.
    pub free_loops: usize,
}

impl PlanarDiagram {
    /// Builds a diagram from the passage sequence of each component and the
    /// sign of each crossing. Every crossing must be visited exactly twice,
    /// once over and once under.
    pub fn from_passages(components: &[Vec<Passage>], signs: &[bool]) -> Self {
        #[derive(Default, Clone, Copy)]
        struct Ends {
            in_u: Option<usize>,
            out_u: Option<usize>,
            in_o: Option<usize>,
            out_o: Option<usize>,
        }
        let mut ends = vec![Ends::default(); signs.len()];
        let mut next_edge = 0;
        let mut free_loops = 0;
        for comp in components {
            if comp.is_empty() {
                free_loops += 1;
                continue;
            }
            let k = comp.len();
            let base = next_edge;
            next_edge += k;
            for (j, p) in comp.iter().enumerate() {
                let incoming = base + (j + k - 1) % k;
                let outgoing = base + j;
                let e = &mut ends[p.crossing];
                if p.over {
                    e.in_o = Some(incoming);
                    e.out_o = Some(outgoing);
                } else {
                    e.in_u = Some(incoming);
                    e.out_u = Some(outgoing);
                }
            }
        }
        let crossings = ends
            .iter()
            .zip(signs)
            .map(|(e, &pos)| {
                Crossing::from_ends(
                    e.in_u.expect("crossing missing under passage"),
                    e.out_u.expect("crossing missing under passage"),
                    e.in_o.expect("crossing missing over passage"),
                    e.out_o.expect("crossing missing over passage"),
                    pos,
                )
            })
            .collect();
        PlanarDiagram {
            crossings,
            free_loops,
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(Crossing::sign).sum()
    }

    /// For each edge id: the crossing it leaves and the crossing it enters,
    /// with the strand role at each end.
    pub(crate) fn edge_ends(&self) -> BTreeMap<usize, EdgeEnds> {
        let mut map: BTreeMap<usize, EdgeEnds> = BTreeMap::new();
        for (ci, c) in self.crossings.iter().enumerate() {
            map.entry(c.out_under()).or_default().tail = Some((ci, false));
            map.entry(c.out_over()).or_default().tail = Some((ci, true));
            map.entry(c.in_under()).or_default().head = Some((ci, false));
            map.entry(c.in_over()).or_default().head = Some((ci, true));
        }
        map
    }

    /// Passage sequences of all components that meet a crossing, plus the
    /// outgoing edge id that starts each sequence. Components are ordered by
    /// their lowest edge id and each starts at that edge.
    pub fn traversals(&self) -> Vec<(usize, Vec<Passage>)> {
        let ends = self.edge_ends();
        let mut visited: BTreeMap<usize, bool> = ends.keys().map(|&e| (e, false)).collect();
        let mut out = Vec::new();
        for &start in ends.keys() {
            if visited[&start] {
                continue;
            }
            out.push((start, self.walk_from(start, &ends, &mut visited)));
        }
        out
    }

    pub(crate) fn walk_from(
        &self,
        start: usize,
        ends: &BTreeMap<usize, EdgeEnds>,
        visited: &mut BTreeMap<usize, bool>,
    ) -> Vec<Passage> {
        let mut seq = Vec::new();
        let mut e = start;
        loop {
            visited.insert(e, true);
            let (ci, over) = ends[&e].head.expect("dangling edge");
            seq.push(Passage { crossing: ci, over });
            let c = &self.crossings[ci];
            e = if over { c.out_over() } else { c.out_under() };
            if e == start {
                break;
            }
        }
        seq
    }

    /// Number of link components, counting free loops.
    pub fn component_count(&self) -> usize {
        self.traversals().len() + self.free_loops
    }

    /// Checks that every edge has exactly one head and one tail.
    pub fn is_well_formed(&self) -> bool {
        let mut heads: BTreeMap<usize, usize> = BTreeMap::new();
        let mut tails: BTreeMap<usize, usize> = BTreeMap::new();
        for c in &self.crossings {
            *heads.entry(c.in_under()).or_default() += 1;
            *heads.entry(c.in_over()).or_default() += 1;
            *tails.entry(c.out_under()).or_default() += 1;
            *tails.entry(c.out_over()).or_default() += 1;
        }
        heads.len() == tails.len()
            && heads.values().all(|&v| v == 1)
            && tails.values().all(|&v| v == 1)
            && heads.keys().eq(tails.keys())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct EdgeEnds {
    /// crossing the edge leaves, and whether it leaves as the over strand
    pub tail: Option<(usize, bool)>,
    /// crossing the edge enters, and whether it enters as the over strand
    pub head: Option<(usize, bool)>,
}
