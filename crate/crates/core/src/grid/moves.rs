//! Cromwell moves and their effect on the Legendrian knot of a grid.
//!
//! Stabilizations are X-type and are named by the corner of the new `2 × 2`
//! block that carries no marking (`X:NW`, `X:NE`, `X:SW`, `X:SE`). Translation,
//! commutation and `X:NW`/`X:SE` stabilization keep the Legendrian type;
//! `X:NE` is a positive and `X:SW` a negative Legendrian stabilization.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GridDiagram, GridError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StabilizationCorner {
    NW,
    NE,
    SW,
    SE,
}

impl StabilizationCorner {
    pub const ALL: [StabilizationCorner; 4] = [Self::NW, Self::NE, Self::SW, Self::SE];

    /// (east, north) offsets of the corner inside the block.
    fn offsets(self) -> (usize, usize) {
        match self {
            Self::NW => (0, 1),
            Self::NE => (1, 1),
            Self::SW => (0, 0),
            Self::SE => (1, 0),
        }
    }

    fn from_offsets(east: usize, north: usize) -> Self {
        match (east, north) {
            (0, 1) => Self::NW,
            (1, 1) => Self::NE,
            (0, 0) => Self::SW,
            _ => Self::SE,
        }
    }

    fn effect(self) -> LegendrianEffect {
        match self {
            Self::NW | Self::SE => LegendrianEffect::Isotopy,
            Self::NE => LegendrianEffect::PositiveStab,
            Self::SW => LegendrianEffect::NegativeStab,
        }
    }
}

impl fmt::Display for StabilizationCorner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::NW => "NW",
            Self::NE => "NE",
            Self::SW => "SW",
            Self::SE => "SE",
        };
        f.write_str(s)
    }
}

impl FromStr for StabilizationCorner {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().trim_start_matches("X:") {
            "NW" => Ok(Self::NW),
            "NE" => Ok(Self::NE),
            "SW" => Ok(Self::SW),
            "SE" => Ok(Self::SE),
            _ => Err(GridError::Parse(format!(
                "unknown stabilization corner {s:?}"
            ))),
        }
    }
}

/// What a Cromwell move does to the Legendrian knot `L(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LegendrianEffect {
    Isotopy,
    PositiveStab,
    NegativeStab,
    PositiveDestab,
    NegativeDestab,
}

impl LegendrianEffect {
    fn inverse(self) -> Self {
        match self {
            Self::Isotopy => Self::Isotopy,
            Self::PositiveStab => Self::PositiveDestab,
            Self::NegativeStab => Self::NegativeDestab,
            Self::PositiveDestab => Self::PositiveStab,
            Self::NegativeDestab => Self::NegativeStab,
        }
    }
}

/// A single Cromwell move. Columns and rows are one-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CromwellMove {
    Translate {
        dx: i64,
        dy: i64,
    },
    /// Swap column `col` with the next one (cyclically).
    CommuteColumns {
        col: usize,
    },
    /// Swap row `row` with the next one (cyclically).
    CommuteRows {
        row: usize,
    },
    /// X-type stabilization at the X of column `col`.
    Stabilize {
        col: usize,
        corner: StabilizationCorner,
    },
    /// Remove the `2 × 2` block whose lower-left cell is (`col`, `row`).
    Destabilize {
        col: usize,
        row: usize,
    },
}

fn interleaved(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    let inside = |v: usize| a0 < v && v < a1;
    inside(b0) != inside(b1)
}

impl GridDiagram {
    pub fn apply_move(
        &self,
        mv: CromwellMove,
    ) -> Result<(GridDiagram, LegendrianEffect), GridError> {
        let n = self.size();
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(GridError::OutOfRange(i))
            } else {
                Ok(i - 1)
            }
        };
        match mv {
            CromwellMove::Translate { dx, dy } => {
                Ok((self.translate(dx, dy), LegendrianEffect::Isotopy))
            }
            CromwellMove::CommuteColumns { col } => {
                let c = check(col)?;
                Ok((self.commute_columns(c)?, LegendrianEffect::Isotopy))
            }
            CromwellMove::CommuteRows { row } => {
                let r = check(row)?;
                Ok((self.commute_rows(r)?, LegendrianEffect::Isotopy))
            }
            CromwellMove::Stabilize { col, corner } => {
                let c = check(col)?;
                Ok((self.stabilize(c, corner), corner.effect()))
            }
            CromwellMove::Destabilize { col, row } => {
                let (c, r) = (check(col)?, check(row)?);
                let (g, corner) = self.destabilize(c, r)?;
                Ok((g, corner.effect().inverse()))
            }
        }
    }

    fn commute_columns(&self, c: usize) -> Result<GridDiagram, GridError> {
        let n = self.size();
        let d = (c + 1) % n;
        if interleaved((self.x[c], self.o[c]), (self.x[d], self.o[d])) {
            return Err(GridError::IllegalCommutation(c + 1, d + 1));
        }
        let mut g = self.clone();
        g.x.swap(c, d);
        g.o.swap(c, d);
        Ok(g)
    }

    fn commute_rows(&self, r: usize) -> Result<GridDiagram, GridError> {
        let n = self.size();
        let s = (r + 1) % n;
        let xcol = self.x_col_of_row();
        let ocol = self.o_col_of_row();
        if interleaved((xcol[r], ocol[r]), (xcol[s], ocol[s])) {
            return Err(GridError::IllegalCommutation(r + 1, s + 1));
        }
        let swap = |v: usize| {
            if v == r {
                s
            } else if v == s {
                r
            } else {
                v
            }
        };
        Ok(GridDiagram {
            x: self.x.iter().map(|&v| swap(v)).collect(),
            o: self.o.iter().map(|&v| swap(v)).collect(),
        })
    }

    /// X-type stabilization at the X in (zero-based) column `c`.
    fn stabilize(&self, c: usize, corner: StabilizationCorner) -> GridDiagram {
        let n = self.size();
        let r = self.x[c];
        let ocol = self.o_col_of_row();
        let shift_c = |k: usize| if k > c { k + 1 } else { k };
        let shift_r = |j: usize| if j > r { j + 1 } else { j };

        let (ee, en) = corner.offsets();
        // O opposite the empty corner, X's on the other diagonal
        let (oe, on) = (1 - ee, 1 - en);
        let x_cells = [(0usize, 0usize), (1, 1), (0, 1), (1, 0)]
            .into_iter()
            .filter(|&cell| cell != (ee, en) && cell != (oe, on))
            .collect::<Vec<_>>();

        let mut x = vec![usize::MAX; n + 1];
        let mut o = vec![usize::MAX; n + 1];
        for k in 0..n {
            if k == c {
                continue;
            }
            x[shift_c(k)] = shift_r(self.x[k]);
            o[shift_c(k)] = shift_r(self.o[k]);
        }
        for &(e, nn) in &x_cells {
            x[c + e] = r + nn;
        }
        o[c + oe] = r + on;
        // column without the block O takes the old column's O
        o[c + 1 - oe] = shift_r(self.o[c]);
        // row without the block O takes the old row's O
        o[shift_c(ocol[r])] = r + 1 - on;
        GridDiagram::from_zero_based(x, o)
    }

    /// Inverse of [`stabilize`](Self::stabilize) for the block with lower-left
    /// cell (`c`, `r`). Returns the new grid and the stabilization type undone.
    fn destabilize(
        &self,
        c: usize,
        r: usize,
    ) -> Result<(GridDiagram, StabilizationCorner), GridError> {
        let n = self.size();
        let err = GridError::NoSuchStabilization {
            col: c + 1,
            row: r + 1,
        };
        if n <= 2 || c + 1 >= n || r + 1 >= n {
            return Err(err);
        }
        let mut xs = Vec::new();
        let mut os = Vec::new();
        let mut empty = Vec::new();
        for e in 0..2 {
            for nn in 0..2 {
                let (col, row) = (c + e, r + nn);
                if self.x[col] == row {
                    xs.push((e, nn));
                } else if self.o[col] == row {
                    os.push((e, nn));
                } else {
                    empty.push((e, nn));
                }
            }
        }
        if xs.len() != 2 || os.len() != 1 || xs[0].0 == xs[1].0 || xs[0].1 == xs[1].1 {
            return Err(err);
        }
        let (ee, en) = empty[0];
        let (oe, on) = os[0];
        let drop_c = c + oe;
        let drop_r = r + on;
        let keep_c = c + 1 - oe;
        let keep_r = r + 1 - on;
        let squeeze_c = |k: usize| if k > drop_c { k - 1 } else { k };
        let squeeze_r = |j: usize| if j > drop_r { j - 1 } else { j };
        let mut x = vec![0; n - 1];
        let mut o = vec![0; n - 1];
        for k in 0..n {
            if k == drop_c {
                continue;
            }
            let kk = squeeze_c(k);
            x[kk] = squeeze_r(self.x[k]);
            o[kk] = squeeze_r(self.o[k]);
        }
        x[squeeze_c(keep_c)] = squeeze_r(keep_r);
        Ok((
            GridDiagram::from_zero_based(x, o),
            StabilizationCorner::from_offsets(ee, en),
        ))
    }
}
