use std::collections::HashMap;

use super::GridDiagram;
use crate::diagram::{Passage, PlanarDiagram};

impl GridDiagram {
    /// True when the horizontal segment of `row` passes over the vertical
    /// segment of `col` (zero-based).
    fn crosses(&self, xcol: &[usize], ocol: &[usize], row: usize, col: usize) -> bool {
        let (h0, h1) = minmax(ocol[row], xcol[row]);
        let (v0, v1) = minmax(self.x_row(col), self.o_row(col));
        h0 < col && col < h1 && v0 < row && row < v1
    }

    /// Writhe of the planar diagram (horizontal strands over vertical ones).
    pub fn writhe(&self) -> i64 {
        let n = self.size();
        let xcol = self.x_col_of_row();
        let ocol = self.o_col_of_row();
        let mut w = 0;
        for row in 0..n {
            for col in 0..n {
                if self.crosses(&xcol, &ocol, row, col) {
                    w += crossing_sign(xcol[row], ocol[row], self.x_row(col), self.o_row(col));
                }
            }
        }
        w
    }

    /// The oriented link diagram: O to X along rows, X to O along columns,
    /// horizontal strands on top at every crossing.
    pub fn to_planar(&self) -> PlanarDiagram {
        let xcol = self.x_col_of_row();
        let ocol = self.o_col_of_row();
        let mut ids: HashMap<(usize, usize), usize> = HashMap::new();
        let mut signs = Vec::new();
        let mut id_of = |row: usize, col: usize, signs: &mut Vec<bool>| -> usize {
            *ids.entry((row, col)).or_insert_with(|| {
                signs.push(
                    crossing_sign(xcol[row], ocol[row], self.x_row(col), self.o_row(col)) > 0,
                );
                signs.len() - 1
            })
        };
        let mut comps = Vec::new();
        for cycle in self.component_columns() {
            let mut seq = Vec::new();
            for &col in &cycle {
                // vertical: X -> O in `col`
                let (from, to) = (self.x_row(col), self.o_row(col));
                for row in between(from, to) {
                    if self.crosses(&xcol, &ocol, row, col) {
                        let id = id_of(row, col, &mut signs);
                        seq.push(Passage {
                            crossing: id,
                            over: false,
                        });
                    }
                }
                // horizontal: O -> X along row `to`
                let row = to;
                for c in between(ocol[row], xcol[row]) {
                    if self.crosses(&xcol, &ocol, row, c) {
                        let id = id_of(row, c, &mut signs);
                        seq.push(Passage {
                            crossing: id,
                            over: true,
                        });
                    }
                }
            }
            comps.push(seq);
        }
        PlanarDiagram::from_passages(&comps, &signs)
    }
}

fn minmax(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Indices strictly between `from` and `to`, in the direction of travel.
fn between(from: usize, to: usize) -> Box<dyn Iterator<Item = usize>> {
    if from < to {
        Box::new(from + 1..to)
    } else {
        Box::new((to + 1..from).rev())
    }
}

/// Sign of a horizontal-over-vertical crossing from the two directions.
fn crossing_sign(x_col: usize, o_col: usize, x_row: usize, o_row: usize) -> i64 {
    let h = if x_col > o_col { 1 } else { -1 };
    let v = if o_row > x_row { 1 } else { -1 };
    h * v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_has_no_crossings() {
        let g = GridDiagram::new(vec![1, 2], vec![2, 1]).unwrap();
        let d = g.to_planar();
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.free_loops, 1);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn trefoil_grid_diagram() {
        // 5x5 grid of a trefoil
        let g = GridDiagram::new(vec![1, 2, 3, 4, 5], vec![4, 5, 1, 2, 3]).unwrap();
        let d = g.to_planar();
        assert!(d.is_well_formed());
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe().abs(), 3);
        assert_eq!(d.writhe(), g.writhe());
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn translation_keeps_tb_but_not_writhe() {
        let g = GridDiagram::new(
            vec![5, 4, 6, 7, 8, 2, 1, 3, 9, 10, 11, 12, 13],
            vec![1, 12, 3, 5, 6, 7, 4, 13, 2, 8, 9, 10, 11],
        )
        .unwrap();
        let tb = g.tb().unwrap();
        let mut writhes = std::collections::BTreeSet::new();
        for dx in 0..13 {
            for dy in [0, 3, 7] {
                let h = g.translate(dx, dy);
                assert_eq!(h.to_planar().writhe(), h.writhe());
                assert_eq!(h.tb().unwrap(), tb);
                writhes.insert(h.writhe());
            }
        }
        assert!(writhes.len() > 1);
    }
}
