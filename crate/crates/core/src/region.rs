//! Per-class flags over a window of `Num(X)`.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{effectivity_status, EffectivityStatus};
use crate::positivity::{class_all_bpf, is_ample, is_ample_and_all_bpf};
use crate::presentation::{is_koszul, is_normally_presented};
use crate::surface::{NumClass, SurfaceModel};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RegionCell {
    #[serde(flatten)]
    pub cls: NumClass,
    pub effective: EffectivityStatus,
    pub ample: bool,
    pub all_bpf: bool,
    pub ample_bpf: bool,
    pub np: bool,
    pub koszul: bool,
}

pub fn classify_cell(c: NumClass, s: SurfaceModel) -> RegionCell {
    let cell = RegionCell {
        cls: c,
        effective: effectivity_status(c, s),
        ample: is_ample(c, s),
        all_bpf: class_all_bpf(c, s),
        ample_bpf: is_ample_and_all_bpf(c, s),
        np: is_normally_presented(c, s),
        koszul: is_koszul(c, s),
    };
    debug_assert!(cell.np == cell.koszul);
    debug_assert!(!cell.ample_bpf || (cell.ample && cell.all_bpf));
    debug_assert!(!cell.np || cell.ample);
    cell
}

/// Number of lattice points in the window, or `None` on overflow.
pub fn cell_count(a_range: &RangeInclusive<i64>, b_range: &RangeInclusive<i64>) -> Option<u128> {
    let len = |r: &RangeInclusive<i64>| (*r.end() as i128 - *r.start() as i128 + 1).max(0) as u128;
    len(a_range).checked_mul(len(b_range))
}

/// Cells ordered by `a`, then `b`, both ascending.
pub fn scan(
    s: SurfaceModel,
    a_range: RangeInclusive<i64>,
    b_range: RangeInclusive<i64>,
) -> Vec<RegionCell> {
    a_range
        .into_par_iter()
        .flat_map_iter(|a| {
            b_range
                .clone()
                .map(move |b| classify_cell(NumClass::new(a, b), s))
        })
        .collect()
}
