//! Toroidal grid diagrams.
//!
//! Columns and rows are numbered `1..=n`, rows bottom to top. A diagram is
//! stored as two column-to-row maps: `X[i]` is the row of the X in column `i`
//! and `O[i]` the row of the O. Internally everything is zero-based; the
//! public constructors and serializers use the one-based convention.
//!
//! The link is drawn by joining O to X along rows and X to O along columns,
//! with horizontal segments passing *over* vertical ones. This is the reverse
//! of the convention used by most grid software, so diagrams imported from
//! elsewhere must be mirrored first.

mod front;
mod moves;
mod planar;
mod state;

pub use front::FrontData;
pub use moves::{CromwellMove, LegendrianEffect, StabilizationCorner};
pub use state::GridState;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("grid size must be at least 2, got {0}")]
    TooSmall(usize),
    #[error("{which} markings: expected {expected} entries, got {got}")]
    SizeMismatch {
        which: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{0} markings are not a permutation of 1..=n")]
    NotPermutation(&'static str),
    #[error("column {0} holds both an X and an O")]
    SharedSquare(usize),
    #[error("operation needs a knot, but the grid has {0} components")]
    MultiComponent(usize),
    #[error("columns/rows {0} and {1} are interleaved and cannot be commuted")]
    IllegalCommutation(usize, usize),
    #[error("no destabilization pattern at column {col}, row {row}")]
    NoSuchStabilization { col: usize, row: usize },
    #[error("index {0} is outside the grid")]
    OutOfRange(usize),
    #[error("malformed grid: {0}")]
    Parse(String),
}

/// An `n × n` grid diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridDiagram {
    x: Vec<usize>,
    o: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GridJson {
    n: usize,
    #[serde(rename = "X")]
    x: Vec<usize>,
    #[serde(rename = "O")]
    o: Vec<usize>,
}

fn check_perm(v: &[usize], which: &'static str) -> Result<(), GridError> {
    let n = v.len();
    let mut seen = vec![false; n];
    for &r in v {
        if r == 0 || r > n || seen[r - 1] {
            return Err(GridError::NotPermutation(which));
        }
        seen[r - 1] = true;
    }
    Ok(())
}

impl GridDiagram {
    /// Builds a diagram from one-based `X` and `O` rows, validating it.
    pub fn new(x: Vec<usize>, o: Vec<usize>) -> Result<Self, GridError> {
        let n = x.len();
        if o.len() != n {
            return Err(GridError::SizeMismatch {
                which: "O",
                expected: n,
                got: o.len(),
            });
        }
        Self::validate_parts(&x, &o)?;
        Ok(Self {
            x: x.into_iter().map(|r| r - 1).collect(),
            o: o.into_iter().map(|r| r - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(x: Vec<usize>, o: Vec<usize>) -> Self {
        debug_assert!(Self::validate_parts(
            &x.iter().map(|r| r + 1).collect::<Vec<_>>(),
            &o.iter().map(|r| r + 1).collect::<Vec<_>>()
        )
        .is_ok());
        Self { x, o }
    }

    /// Checks the two grid invariants on raw one-based data.
    pub fn validate_parts(x: &[usize], o: &[usize]) -> Result<(), GridError> {
        let n = x.len();
        if n < 2 {
            return Err(GridError::TooSmall(n));
        }
        if o.len() != n {
            return Err(GridError::SizeMismatch {
                which: "O",
                expected: n,
                got: o.len(),
            });
        }
        check_perm(x, "X")?;
        check_perm(o, "O")?;
        if let Some(i) = (0..n).find(|&i| x[i] == o[i]) {
            return Err(GridError::SharedSquare(i + 1));
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), GridError> {
        Self::validate_parts(&self.x(), &self.o())
    }

    pub fn size(&self) -> usize {
        self.x.len()
    }

    /// One-based X rows, indexed by column.
    pub fn x(&self) -> Vec<usize> {
        self.x.iter().map(|r| r + 1).collect()
    }

    /// One-based O rows, indexed by column.
    pub fn o(&self) -> Vec<usize> {
        self.o.iter().map(|r| r + 1).collect()
    }

    // zero-based accessors

    pub(crate) fn x_row(&self, col: usize) -> usize {
        self.x[col]
    }

    pub(crate) fn o_row(&self, col: usize) -> usize {
        self.o[col]
    }

    pub(crate) fn x_col_of_row(&self) -> Vec<usize> {
        invert(&self.x)
    }

    pub(crate) fn o_col_of_row(&self) -> Vec<usize> {
        invert(&self.o)
    }

    /// Zero-based columns of each link component, in traversal order
    /// starting from the lowest column of the component.
    pub(crate) fn component_columns(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let xcol = self.x_col_of_row();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                cyc.push(c);
                c = xcol[self.o[c]];
            }
            comps.push(cyc);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.component_columns().len()
    }

    pub fn is_knot(&self) -> bool {
        self.component_count() == 1
    }

    pub fn require_knot(&self) -> Result<(), GridError> {
        match self.component_count() {
            1 => Ok(()),
            k => Err(GridError::MultiComponent(k)),
        }
    }

    /// Reflection in the upper-left to lower-right diagonal, exchanging X and O.
    ///
    /// The cell in column `c`, row `r` goes to column `n+1-r`, row `n+1-c`.
    /// Applying it twice gives back the original diagram.
    pub fn diagonal_mirror(&self) -> GridDiagram {
        let n = self.size();
        let mut x = vec![0; n];
        let mut o = vec![0; n];
        for c in 0..n {
            // zero-based: (c, r) -> (n-1-r, n-1-c)
            x[n - 1 - self.o[c]] = n - 1 - c;
            o[n - 1 - self.x[c]] = n - 1 - c;
        }
        GridDiagram { x, o }
    }

    /// Cyclic translation on the torus: column `i` moves to `i + dx`, row `r`
    /// to `r + dy` (both taken mod `n`).
    pub fn translate(&self, dx: i64, dy: i64) -> GridDiagram {
        let n = self.size();
        let sx = dx.rem_euclid(n as i64) as usize;
        let sy = dy.rem_euclid(n as i64) as usize;
        let mut x = vec![0; n];
        let mut o = vec![0; n];
        for c in 0..n {
            x[(c + sx) % n] = (self.x[c] + sy) % n;
            o[(c + sx) % n] = (self.o[c] + sy) % n;
        }
        GridDiagram { x, o }
    }

    /// Serializes as `{"n": .., "X": [..], "O": [..]}`.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GridJson {
            n: self.size(),
            x: self.x(),
            o: self.o(),
        })
        .expect("grid json")
    }

    pub fn from_json(s: &str) -> Result<Self, GridError> {
        let g: GridJson = serde_json::from_str(s).map_err(|e| GridError::Parse(e.to_string()))?;
        if g.x.len() != g.n {
            return Err(GridError::SizeMismatch {
                which: "X",
                expected: g.n,
                got: g.x.len(),
            });
        }
        if g.o.len() != g.n {
            return Err(GridError::SizeMismatch {
                which: "O",
                expected: g.n,
                got: g.o.len(),
            });
        }
        GridDiagram::new(g.x, g.o)
    }

    /// `n` lines, top row first, one character per cell.
    pub fn to_ascii(&self) -> String {
        let n = self.size();
        let mut out = String::with_capacity(n * (n + 1));
        for row in (0..n).rev() {
            for col in 0..n {
                out.push(if self.x[col] == row {
                    'X'
                } else if self.o[col] == row {
                    'O'
                } else {
                    '.'
                });
            }
            out.push('\n');
        }
        out
    }

    pub fn from_ascii(s: &str) -> Result<Self, GridError> {
        let lines: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
        let n = lines.len();
        let mut x = vec![0; n];
        let mut o = vec![0; n];
        for (k, line) in lines.iter().enumerate() {
            let row = n - k;
            let chars: Vec<char> = line.chars().collect();
            if chars.len() != n {
                return Err(GridError::Parse(format!(
                    "row {row} has {} cells, expected {n}",
                    chars.len()
                )));
            }
            for (col, ch) in chars.into_iter().enumerate() {
                match ch {
                    'X' | 'x' => {
                        if x[col] != 0 {
                            return Err(GridError::NotPermutation("X"));
                        }
                        x[col] = row;
                    }
                    'O' | 'o' => {
                        if o[col] != 0 {
                            return Err(GridError::NotPermutation("O"));
                        }
                        o[col] = row;
                    }
                    '.' => {}
                    other => return Err(GridError::Parse(format!("unexpected cell {other:?}"))),
                }
            }
        }
        if x.contains(&0) {
            return Err(GridError::NotPermutation("X"));
        }
        if o.contains(&0) {
            return Err(GridError::NotPermutation("O"));
        }
        GridDiagram::new(x, o)
    }
}

/// Accepts either grid JSON or the ASCII rendering.
impl FromStr for GridDiagram {
    type Err = GridError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim_start().starts_with('{') {
            GridDiagram::from_json(s)
        } else {
            GridDiagram::from_ascii(s)
        }
    }
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

pub(crate) fn invert(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v] = i;
    }
    inv
}
