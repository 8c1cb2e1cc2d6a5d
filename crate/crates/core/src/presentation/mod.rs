//! Normal presentation and Koszulness of section rings.
//!
//! Both properties are numerical on an elliptic ruled surface and cut out the
//! same region: for `e = -1` it is `a >= 1, a + b >= 4, a + 2b >= 4`, for
//! `e >= 0` it is `a >= 1, b - ae >= 4`. The submodules construct and search
//! for the two-factor decompositions behind that region and check the
//! product and adjoint consequences.

mod corollaries;
mod curves;
mod decompose;
mod hypotheses;

pub use corollaries::{
    adjoint_np_check, adjoint_threshold, product_np_check, sharpness_class, AdjointVerdict,
    ProductMode, ProductVerdict,
};
pub use curves::{curve_bounds, CurveBounds};
pub use decompose::{
    ample_and_decomposable, brute_force_decompose, constructive_decompose, decompose_np,
    search_bounds, CaseTag, Decomposition,
};
pub use hypotheses::{decomposition_hypotheses, VanishingReport, Verdict};

use crate::surface::{self, NumClass, SurfaceModel};

/// Ground-field hypothesis under which the normal presentation criterion holds.
pub const NP_ASSUMPTION: &str = "char(k) != 2";

/// Ground-field hypothesis for the converse of the Koszul criterion.
pub const KOSZUL_ASSUMPTION: &str = "char(k) != 2 for the 'only if' direction";

pub fn is_normally_presented(c: NumClass, s: SurfaceModel) -> bool {
    if s.is_odd_type() {
        c.a >= 1 && surface::add(c.a, c.b) >= 4 && surface::add(c.a, surface::mul(2, c.b)) >= 4
    } else {
        c.a >= 1 && surface::sub(c.b, surface::mul(c.a, s.e())) >= 4
    }
}

/// Koszulness of the section ring; same region as normal presentation.
pub fn is_koszul(c: NumClass, s: SurfaceModel) -> bool {
    is_normally_presented(c, s)
}
