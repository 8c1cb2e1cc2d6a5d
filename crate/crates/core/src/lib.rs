//! Exact classification of numerical line-bundle classes on elliptic ruled
//! surfaces.
//!
//! A surface `X = P(E)` over an elliptic curve is identified by its invariant
//! `e >= -1`. Classes live in `Num(X) = Z C0 + Z f` and every predicate in
//! this crate is a closed-form integer test on the coefficients `(a, b)`:
//!
//! * [`surface`]: the intersection form, canonical class and class arithmetic.
//! * [`cohomology`]: Riemann-Roch and the cohomology vanishing tables,
//!   including the torsion-dependent boundary ray for `e = -1`.
//! * [`positivity`]: ampleness and base-point-freeness of whole classes.
//! * [`presentation`]: normal presentation, Koszulness, decomposition
//!   witnesses and the product/adjoint corollaries.
//! * [`region`] and [`verify`]: lattice scans and the invariant suites that
//!   back the `ruled` command-line tool.

pub mod cohomology;
pub mod error;
pub mod positivity;
pub mod presentation;
pub mod region;
pub mod surface;
pub mod verify;

pub use cohomology::{
    chi, class_profile, cohomology_profile, effectivity_status, vanishing_table, CohomologyProfile,
    DimStatus, EffectivityStatus,
};
pub use error::Error;
pub use positivity::{
    class_all_bpf, is_ample, is_ample_and_all_bpf, positivity_report, special_bpf_members,
    PositivityReport, SpecialMember,
};
pub use presentation::{
    adjoint_np_check, ample_and_decomposable, brute_force_decompose, curve_bounds, decompose_np,
    decomposition_hypotheses, is_koszul, is_normally_presented, product_np_check, AdjointVerdict,
    CaseTag, CurveBounds, Decomposition, ProductMode, ProductVerdict, VanishingReport, Verdict,
};
pub use region::{classify_cell, RegionCell};
pub use surface::{
    canonical_class, intersect, serre_dual_class, BoundaryTag, BundleRef, NumClass, SurfaceModel,
};
