//! Products of ample classes and adjoint classes `K + A1 + ... + Aq`.

use serde::Serialize;

use super::is_normally_presented;
use crate::error::{Error, Result};
use crate::positivity::{is_ample, is_ample_and_all_bpf};
use crate::surface::{canonical_class, NumClass, SurfaceModel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjointVerdict {
    pub q: usize,
    pub result_class: NumClass,
    pub np: bool,
    pub threshold_met: bool,
}

/// Smallest number of ample factors that makes every adjoint class normally
/// presented.
pub fn adjoint_threshold(s: SurfaceModel) -> usize {
    match s.e() {
        -1 => 5,
        0 => 4,
        _ => 3,
    }
}

/// An adjoint class one factor short of the threshold that is not normally
/// presented: `K + 4C0`, `K + 3C0 + 3f`, `K + 2C0 + 2(e+1)f`.
pub fn sharpness_class(s: SurfaceModel) -> NumClass {
    let e = s.e();
    let twist = match e {
        -1 => NumClass::new(4, 0),
        0 => NumClass::new(3, 3),
        _ => NumClass::new(2, 2 * (e + 1)),
    };
    canonical_class(s) + twist
}

pub fn adjoint_np_check(amples: &[NumClass], s: SurfaceModel) -> Result<AdjointVerdict> {
    if let Some(bad) = amples.iter().find(|a| !is_ample(**a, s)) {
        return Err(Error::NotAmple {
            class: *bad,
            e: s.e(),
        });
    }
    let result_class = canonical_class(s) + NumClass::sum(amples);
    let q = amples.len();
    let verdict = AdjointVerdict {
        q,
        result_class,
        np: is_normally_presented(result_class, s),
        threshold_met: q >= adjoint_threshold(s),
    };
    assert!(
        !verdict.threshold_met || verdict.np,
        "adjoint class {result_class} with q = {q} on {s} is not normally presented"
    );
    Ok(verdict)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductMode {
    /// Every factor ample and entirely base-point-free; two factors suffice.
    AmpleBpf,
    /// Every factor ample; four factors suffice.
    AmpleOnly,
}

impl ProductMode {
    pub fn threshold(self) -> usize {
        match self {
            ProductMode::AmpleBpf => 2,
            ProductMode::AmpleOnly => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProductVerdict {
    pub np: bool,
    pub corollary_applies: bool,
}

pub fn product_np_check(
    factors: &[NumClass],
    s: SurfaceModel,
    mode: ProductMode,
) -> Result<ProductVerdict> {
    if factors.is_empty() {
        return Err(Error::EmptyTuple);
    }
    let (ok, condition): (fn(NumClass, SurfaceModel) -> bool, _) = match mode {
        ProductMode::AmpleBpf => (is_ample_and_all_bpf, "ample and base-point-free"),
        ProductMode::AmpleOnly => (is_ample, "ample"),
    };
    if let Some(bad) = factors.iter().find(|f| !ok(**f, s)) {
        return Err(Error::Precondition {
            class: *bad,
            e: s.e(),
            condition,
        });
    }
    let sum = NumClass::sum(factors);
    let verdict = ProductVerdict {
        np: is_normally_presented(sum, s),
        corollary_applies: factors.len() >= mode.threshold(),
    };
    assert!(
        !verdict.corollary_applies || verdict.np,
        "product {sum} of {} factors on {s} is not normally presented",
        factors.len()
    );
    Ok(verdict)
}
