//! The vanishing hypotheses for a two-factor normal presentation argument.

use serde::{Serialize, Serializer};

use crate::cohomology::{class_profile, DimStatus};
use crate::surface::{NumClass, SurfaceModel};

/// Three-valued outcome of a conjunction of vanishing conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Indeterminate,
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Verdict::Holds => serializer.serialize_bool(true),
            Verdict::Fails => serializer.serialize_bool(false),
            Verdict::Indeterminate => serializer.serialize_str("indeterminate"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    pub h1_b1: DimStatus,
    pub h1_b2: DimStatus,
    pub h2_b2_minus_b1: DimStatus,
    pub h2_b1_minus_b2: DimStatus,
    pub all_satisfied: Verdict,
}

/// Checks `H^1(B1) = H^1(B2) = H^2(B2 - B1) = H^2(B1 - B2) = 0` at the level
/// of numerical classes; the ray ambiguity is left unresolved.
pub fn decomposition_hypotheses(b1: NumClass, b2: NumClass, s: SurfaceModel) -> VanishingReport {
    let status = |c: NumClass| class_profile(c, s).expect("cohomology tables are consistent");
    let h1_b1 = status(b1).h1;
    let h1_b2 = status(b2).h1;
    let h2_b2_minus_b1 = status(b2 - b1).h2;
    let h2_b1_minus_b2 = status(b1 - b2).h2;
    let all = [h1_b1, h1_b2, h2_b2_minus_b1, h2_b1_minus_b2];
    let all_satisfied = if all.iter().all(|d| d.is_zero()) {
        Verdict::Holds
    } else if all.iter().any(|d| d.is_nonzero()) {
        Verdict::Fails
    } else {
        Verdict::Indeterminate
    };
    VanishingReport {
        h1_b1,
        h1_b2,
        h2_b2_minus_b1,
        h2_b1_minus_b2,
        all_satisfied,
    }
}
