use serde::{Deserialize, Serialize};

use super::{GridDiagram, GridError};

/// Crossing and cusp tallies of a Legendrian front.
///
/// `cusps_up` counts cusps traversed upward, `cusps_down` those traversed
/// downward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrontData {
    pub writhe: i64,
    pub cusps_up: i64,
    pub cusps_down: i64,
}

impl FrontData {
    /// Thurston–Bennequin number: writhe minus half the cusps.
    pub fn tb(&self) -> i64 {
        self.writhe - (self.cusps_up + self.cusps_down) / 2
    }

    /// Rotation number: half of (down cusps - up cusps).
    pub fn rotation(&self) -> i64 {
        (self.cusps_down - self.cusps_up) / 2
    }

    /// Self-linking number of the positive transverse pushoff, `tb - r`.
    pub fn self_linking(&self) -> i64 {
        self.tb() - self.rotation()
    }
}

impl GridDiagram {
    /// Front of the Legendrian knot obtained by rotating the grid 45 degrees
    /// clockwise.
    ///
    /// A corner whose arms leave east and north becomes a left cusp; arms
    /// leaving west and south give a right cusp. The other two corner shapes
    /// are smoothed. Cusp direction follows from the orientation: the knot
    /// enters an X horizontally and an O vertically.
    pub fn front_data(&self) -> Result<FrontData, GridError> {
        self.require_knot()?;
        let n = self.size();
        let xcol = self.x_col_of_row();
        let ocol = self.o_col_of_row();
        let (mut up, mut down) = (0, 0);
        for col in 0..n {
            for is_x in [true, false] {
                let (row, other_row) = if is_x {
                    (self.x_row(col), self.o_row(col))
                } else {
                    (self.o_row(col), self.x_row(col))
                };
                let other_col = if is_x { ocol[row] } else { xcol[row] };
                let north = other_row > row;
                let east = other_col > col;
                match (east, north, is_x) {
                    // left cusp
                    (true, true, true) => up += 1,
                    (true, true, false) => down += 1,
                    // right cusp
                    (false, false, true) => down += 1,
                    (false, false, false) => up += 1,
                    _ => {}
                }
            }
        }
        Ok(FrontData {
            writhe: self.writhe(),
            cusps_up: up,
            cusps_down: down,
        })
    }

    pub fn tb(&self) -> Result<i64, GridError> {
        Ok(self.front_data()?.tb())
    }

    pub fn rotation(&self) -> Result<i64, GridError> {
        Ok(self.front_data()?.rotation())
    }
}
