//! Degree thresholds for line bundles on a smooth curve of genus `g`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CurveBounds {
    pub g: i64,
    pub degree: i64,
    pub normally_generated: bool,
    pub normally_presented: bool,
    pub koszul: bool,
    /// Largest `p` with `degree >= 2g + 1 + p`, or `-1` if there is none.
    pub np_level: i64,
}

pub fn curve_bounds(g: i64, degree: i64) -> Result<CurveBounds> {
    if g < 0 {
        return Err(Error::NegativeGenus(g));
    }
    let excess = degree - (2 * g + 1);
    Ok(CurveBounds {
        g,
        degree,
        normally_generated: excess >= 0,
        normally_presented: excess >= 1,
        koszul: excess >= 1,
        np_level: excess.max(-1),
    })
}
