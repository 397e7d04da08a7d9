//! Translation between grid diagrams and braids.
//!
//! Every column whose X lies above its O is redrawn as two upward segments
//! running through the top and bottom edges of the grid. Then all vertical
//! segments point up, each row's horizontal segment carries one strand from
//! its O over to its X, and the strands crossing the top edge are the braid
//! strands.

use super::BraidWord;
use crate::grid::GridDiagram;

impl GridDiagram {
    /// The braid `B(G)`, read bottom to top. Within one row the generators are
    /// emitted in the order the moving strand meets the verticals.
    pub fn to_braid(&self) -> BraidWord {
        let n = self.size();
        let xcol = self.x_col_of_row();
        let ocol = self.o_col_of_row();
        let strands = (0..n).filter(|&c| self.x_row(c) > self.o_row(c)).count();
        let present = |c: usize, r: usize| {
            let (x, o) = (self.x_row(c), self.o_row(c));
            if x < o {
                x < r && r < o
            } else {
                r > x || r < o
            }
        };
        let mut letters = Vec::new();
        for r in 0..n {
            let (from, to) = (ocol[r], xcol[r]);
            let p = (0..from).filter(|&c| present(c, r)).count() as i32;
            if from < to {
                let k = (from + 1..to).filter(|&c| present(c, r)).count() as i32;
                letters.extend((1..=k).map(|d| p + d));
            } else {
                let k = (to + 1..from).filter(|&c| present(c, r)).count() as i32;
                letters.extend((0..k).map(|d| -(p - d)));
            }
        }
        BraidWord::new(strands.max(1), letters).expect("positions are bounded by the strand count")
    }

    /// `B'(G)`: every horizontal segment is forced to point left and the
    /// braid is read from right to left, strands numbered from the bottom.
    /// The vertical segments now do the moving and pass under.
    ///
    /// This is `B` of the diagonal mirror up to renumbering strands
    /// `i -> m - i`, i.e. up to conjugation by the half twist.
    pub fn to_braid_prime(&self) -> BraidWord {
        let n = self.size();
        let xcol = self.x_col_of_row();
        let ocol = self.o_col_of_row();
        let strands = (0..n).filter(|&r| xcol[r] > ocol[r]).count();
        let present = |r: usize, c: usize| {
            let (x, o) = (xcol[r], ocol[r]);
            if x < o {
                x < c && c < o
            } else {
                c < o || c > x
            }
        };
        let mut letters = Vec::new();
        for c in (0..n).rev() {
            let (from, to) = (self.x_row(c), self.o_row(c));
            let p = (0..from).filter(|&r| present(r, c)).count() as i32;
            if from < to {
                let k = (from + 1..to).filter(|&r| present(r, c)).count() as i32;
                letters.extend((1..=k).map(|d| -(p + d)));
            } else {
                let k = (to + 1..from).filter(|&r| present(r, c)).count() as i32;
                letters.extend((0..k).map(|d| p - d));
            }
        }
        BraidWord::new(strands.max(1), letters).expect("positions are bounded by the strand count")
    }
}

impl BraidWord {
    /// A grid diagram whose braid is exactly this word.
    ///
    /// Columns are kept in an ordered list. Strand `p` starts in a wrap column
    /// `W_p` and always sits between `W_p` and `W_{p+1}`; a letter spends one
    /// row on the crossing itself and one row shifting the other strand back
    /// into its slot, which crosses nothing.
    pub fn to_grid(&self) -> GridDiagram {
        let n = self.strands();
        // per column id: (x row, o row)
        let mut marks: Vec<(usize, usize)> = Vec::new();
        let mut order: Vec<usize> = Vec::new();
        let mut row = 0;
        let new_col = |marks: &mut Vec<(usize, usize)>| {
            marks.push((usize::MAX, usize::MAX));
            marks.len() - 1
        };
        let insert_after = |order: &mut Vec<usize>, anchor: usize, id: usize| {
            let i = order
                .iter()
                .position(|&c| c == anchor)
                .expect("anchor column");
            order.insert(i + 1, id);
        };
        let insert_before = |order: &mut Vec<usize>, anchor: usize, id: usize| {
            let i = order
                .iter()
                .position(|&c| c == anchor)
                .expect("anchor column");
            order.insert(i, id);
        };

        let wrap: Vec<usize> = (0..n).map(|_| new_col(&mut marks)).collect();
        order.extend(&wrap);
        let mut cur = Vec::with_capacity(n);
        for &w in &wrap {
            let c = new_col(&mut marks);
            insert_after(&mut order, w, c);
            marks[w].1 = row;
            marks[c].0 = row;
            row += 1;
            cur.push(c);
        }
        // horizontal move in the current row: O ends column `from`, X starts `to`
        let mut step = |marks: &mut Vec<(usize, usize)>, from: usize, to: usize| {
            marks[from].1 = row;
            marks[to].0 = row;
            row += 1;
        };
        for &l in self.letters() {
            let a = l.unsigned_abs() as usize - 1;
            let (left, right) = (cur[a], cur[a + 1]);
            if l > 0 {
                let moved = new_col(&mut marks);
                insert_after(&mut order, right, moved);
                step(&mut marks, left, moved);
                let fix = new_col(&mut marks);
                insert_before(&mut order, wrap[a + 1], fix);
                step(&mut marks, right, fix);
                cur[a] = fix;
                cur[a + 1] = moved;
            } else {
                let moved = new_col(&mut marks);
                insert_before(&mut order, left, moved);
                step(&mut marks, right, moved);
                let fix = new_col(&mut marks);
                insert_after(&mut order, wrap[a + 1], fix);
                step(&mut marks, left, fix);
                cur[a] = moved;
                cur[a + 1] = fix;
            }
        }
        for p in 0..n {
            step(&mut marks, cur[p], wrap[p]);
        }
        let x = order.iter().map(|&c| marks[c].0).collect();
        let o = order.iter().map(|&c| marks[c].1).collect();
        GridDiagram::from_zero_based(x, o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_unknot() {
        let g = GridDiagram::new(vec![1, 2], vec![2, 1]).unwrap();
        assert_eq!(g.to_braid(), BraidWord::identity(1));
        let back = BraidWord::identity(1).to_grid();
        assert_eq!(back.size(), 2);
        assert_eq!(back.to_braid(), BraidWord::identity(1));
    }

    #[test]
    fn prime_reading_is_mirror_reading_renumbered() {
        let g = GridDiagram::new(
            vec![5, 4, 6, 7, 8, 2, 1, 3, 9, 10, 11, 12, 13],
            vec![1, 12, 3, 5, 6, 7, 4, 13, 2, 8, 9, 10, 11],
        )
        .unwrap();
        let direct = g.to_braid_prime();
        let mirrored = g.diagonal_mirror().to_braid();
        let m = mirrored.strands() as i32;
        let renumbered: Vec<i32> = mirrored
            .letters()
            .iter()
            .map(|&l| l.signum() * (m - l.abs()))
            .collect();
        assert_eq!(direct.letters(), &renumbered[..]);
    }

    #[test]
    fn roundtrip_is_word_exact() {
        for s in [
            "2 | 1 1 1",
            "4 | 3 -2 -2 3 3 2 -3 -1 2 1 1",
            "3 | -1 -2 2 1 -2",
            "3 |",
        ] {
            let b: BraidWord = s.parse().unwrap();
            let g = b.to_grid();
            assert_eq!(g.to_braid(), b, "{s}");
            assert_eq!(g.component_count(), b.closure_components(), "{s}");
        }
    }

    #[test]
    fn braid_sl_matches_grid_front() {
        for s in [
            "2 | 1 1 1",
            "4 | 3 -2 -2 3 3 2 -3 -1 2 1 1",
            "3 | -1 2 -1 2",
        ] {
            let b: BraidWord = s.parse().unwrap();
            let f = b.to_grid().front_data().unwrap();
            assert_eq!(f.self_linking(), b.sl(), "{s}");
        }
    }
}
