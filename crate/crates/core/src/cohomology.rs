//! Riemann-Roch and the cohomology tables of line bundles on `X`.
//!
//! For most numerical classes the vanishing or non-vanishing of each `h^i`
//! is decided by `(a, b)` alone. The undecided cells are reported as
//! [`DimStatus::Indeterminate`], except on the `e = -1` ray `n (2 C0 - f)`,
//! where a [`BoundaryTag`] picks the member and the dimensions are exact.

use std::cmp::Ordering;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::surface::{
    self, canonical_class, intersect, ray_index, BoundaryTag, BundleRef, NumClass, SurfaceModel,
};

/// What is known about one `h^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimStatus {
    Exact(u64),
    Positive,
    Indeterminate,
}

use DimStatus::{Exact, Indeterminate, Positive};

const ZERO: DimStatus = Exact(0);

impl DimStatus {
    pub fn is_zero(self) -> bool {
        self == ZERO
    }

    /// Whether the dimension is known to be nonzero.
    pub fn is_nonzero(self) -> bool {
        matches!(self, Positive | Exact(1..))
    }

    pub fn is_determined(self) -> bool {
        self != Indeterminate
    }

    /// Coarsens `Exact(k > 0)` to `Positive`, the resolution of the tables.
    pub fn vanishing_class(self) -> DimStatus {
        match self {
            Exact(0) => ZERO,
            Exact(_) => Positive,
            other => other,
        }
    }

    /// `true` if `self` is a refinement of the table cell `cell`.
    pub fn refines(self, cell: DimStatus) -> bool {
        match cell {
            Exact(0) => self == ZERO,
            Positive => self.is_nonzero(),
            Exact(k) => self == Exact(k),
            Indeterminate => true,
        }
    }
}

impl Serialize for DimStatus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        match self {
            Exact(n) => {
                map.serialize_entry("kind", "exact")?;
                map.serialize_entry("value", n)?;
            }
            Positive => map.serialize_entry("kind", "positive")?,
            Indeterminate => map.serialize_entry("kind", "indeterminate")?,
        }
        map.end()
    }
}

/// Statuses of `h^0, h^1, h^2` together with the Euler characteristic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyProfile {
    pub h0: DimStatus,
    pub h1: DimStatus,
    pub h2: DimStatus,
    pub chi: i64,
}

impl CohomologyProfile {
    pub fn statuses(&self) -> [DimStatus; 3] {
        [self.h0, self.h1, self.h2]
    }

    pub fn is_fully_determined(&self) -> bool {
        self.statuses().iter().all(|s| s.is_determined())
    }

    /// Fills the one unknown entry when the other two vanish, using
    /// `h^0 - h^1 + h^2 = chi`, and checks the result against the cell.
    pub(crate) fn propagate(mut self, c: NumClass, s: SurfaceModel) -> Result<Self> {
        let bad = || Error::InconsistentTable {
            class: c,
            e: s.e(),
            chi: self.chi,
        };
        let zeros = self.statuses().iter().filter(|st| st.is_zero()).count();
        if zeros == 2 {
            let (slot, value) = if !self.h0.is_zero() {
                (&mut self.h0, self.chi)
            } else if !self.h1.is_zero() {
                (&mut self.h1, -self.chi)
            } else {
                (&mut self.h2, self.chi)
            };
            let value = u64::try_from(value).map_err(|_| bad())?;
            if !Exact(value).refines(*slot) {
                return Err(bad());
            }
            *slot = Exact(value);
        }
        if let [Exact(h0), Exact(h1), Exact(h2)] = self.statuses() {
            if h0 as i128 - h1 as i128 + h2 as i128 != self.chi as i128 {
                return Err(bad());
            }
        }
        Ok(self)
    }
}

/// Which members of a numerical class are effective.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EffectivityStatus {
    AllEffective,
    NoneEffective,
    /// Only the listed members of an `e = -1` ray class are effective.
    FinitelyMany {
        tags: Vec<BoundaryTag>,
    },
    Indeterminate,
}

/// `chi(L) = L.(L - K)/2`, using `chi(O_X) = 0` for a surface ruled over an
/// elliptic curve.
pub fn chi(c: NumClass, s: SurfaceModel) -> i64 {
    let twice = intersect(c, c - canonical_class(s), s);
    assert!(
        twice % 2 == 0,
        "odd L.(L - K) = {twice} at {c} on {s}: intersection form is broken"
    );
    twice / 2
}

fn sign(x: i64) -> Ordering {
    x.cmp(&0)
}

/// The cohomology tables as statuses, with no chi-based upgrades.
pub fn vanishing_table(c: NumClass, s: SurfaceModel) -> CohomologyProfile {
    let chi = chi(c, s);
    let (a, b) = (c.a, c.b);
    let e = s.e();
    let [h0, h1, h2] = if s.is_odd_type() {
        // Compare b with -a/2 via 2b + a.
        let side = sign(surface::add(surface::mul(2, b), a));
        match a {
            0.. => match side {
                Ordering::Greater => [Positive, ZERO, ZERO],
                Ordering::Equal => [Indeterminate, Indeterminate, ZERO],
                Ordering::Less => [ZERO, Positive, ZERO],
            },
            -1 => [ZERO, ZERO, ZERO],
            _ => match side {
                Ordering::Greater => [ZERO, Positive, ZERO],
                Ordering::Equal => [ZERO, Indeterminate, Indeterminate],
                Ordering::Less => [ZERO, ZERO, Positive],
            },
        }
    } else {
        match a {
            0.. => {
                let h0 = match sign(b) {
                    Ordering::Greater => Positive,
                    Ordering::Equal => Indeterminate,
                    Ordering::Less => ZERO,
                };
                let h1 = match b.cmp(&surface::mul(a, e)) {
                    Ordering::Greater => ZERO,
                    Ordering::Equal => Indeterminate,
                    Ordering::Less => Positive,
                };
                [h0, h1, ZERO]
            }
            -1 => [ZERO, ZERO, ZERO],
            _ => {
                let h2 = match b.cmp(&-e) {
                    Ordering::Greater => ZERO,
                    Ordering::Equal => Indeterminate,
                    Ordering::Less => Positive,
                };
                // Dual of the a >= 0 rows under c -> K - c.
                let h1 = match b.cmp(&surface::mul(e, surface::add(a, 1))) {
                    Ordering::Less => ZERO,
                    Ordering::Equal => Indeterminate,
                    Ordering::Greater => Positive,
                };
                [ZERO, h1, h2]
            }
        }
    };
    CohomologyProfile { h0, h1, h2, chi }
}

/// The table upgraded through Riemann-Roch, without choosing a member.
pub fn class_profile(c: NumClass, s: SurfaceModel) -> Result<CohomologyProfile> {
    vanishing_table(c, s).propagate(c, s)
}

/// `h^0` of the members of `n (2 C0 - f)` on an `e = -1` surface.
pub fn ray_h0(n: i64, tag: BoundaryTag) -> u64 {
    assert!(n >= 0, "ray index must be nonnegative, got {n}");
    let half = n / 2;
    let h0 = match tag {
        BoundaryTag::Zero => 3 * half - n + 1,
        BoundaryTag::Eta1 | BoundaryTag::Eta2 | BoundaryTag::Eta3 => n - half,
        BoundaryTag::Generic => 0,
    };
    h0 as u64
}

/// Cohomology of a specific member of a class.
///
/// Off the `e = -1` ray this is [`class_profile`]. On the ray `h^0` comes
/// from the table of effective members, `h^2 = 0`, and `h^1 = h^0` because
/// `chi` vanishes there.
pub fn cohomology_profile(r: BundleRef, s: SurfaceModel) -> Result<CohomologyProfile> {
    r.validate(s)?;
    match ray_index(r.cls, s) {
        Some(n) => {
            let h0 = ray_h0(n, r.tag);
            CohomologyProfile {
                h0: Exact(h0),
                h1: Exact(h0),
                h2: ZERO,
                chi: chi(r.cls, s),
            }
            .propagate(r.cls, s)
        }
        None => class_profile(r.cls, s),
    }
}

pub fn effectivity_status(c: NumClass, s: SurfaceModel) -> EffectivityStatus {
    if let Some(n) = ray_index(c, s) {
        let tags = [BoundaryTag::Zero]
            .into_iter()
            .chain(BoundaryTag::ETAS)
            .filter(|t| ray_h0(n, *t) > 0)
            .collect();
        return EffectivityStatus::FinitelyMany { tags };
    }
    match vanishing_table(c, s).h0 {
        Exact(0) => EffectivityStatus::NoneEffective,
        Indeterminate => EffectivityStatus::Indeterminate,
        _ => EffectivityStatus::AllEffective,
    }
}
