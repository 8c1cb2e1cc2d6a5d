//! The lattice `Num(X)` of an elliptic ruled surface.
//!
//! Classes are written `a C0 + b f` in the basis of the minimal section `C0`
//! and the fiber `f`, with `C0^2 = -e`, `C0.f = 1` and `f^2 = 0`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub(crate) fn mul(x: i64, y: i64) -> i64 {
    x.checked_mul(y)
        .unwrap_or_else(|| panic!("integer overflow in {x} * {y}"))
}

pub(crate) fn add(x: i64, y: i64) -> i64 {
    x.checked_add(y)
        .unwrap_or_else(|| panic!("integer overflow in {x} + {y}"))
}

pub(crate) fn sub(x: i64, y: i64) -> i64 {
    x.checked_sub(y)
        .unwrap_or_else(|| panic!("integer overflow in {x} - {y}"))
}

/// An elliptic ruled surface, known to this crate only through `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SurfaceModel {
    e: i64,
}

impl SurfaceModel {
    pub fn new(e: i64) -> Result<Self> {
        if e < -1 {
            return Err(Error::InvalidInvariant(e));
        }
        Ok(Self { e })
    }

    pub fn e(self) -> i64 {
        self.e
    }

    /// `e = -1`, the indecomposable case where the torsion ray matters.
    pub fn is_odd_type(self) -> bool {
        self.e == -1
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e = {}", self.e)
    }
}

/// A numerical class `a C0 + b f`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct NumClass {
    pub a: i64,
    pub b: i64,
}

impl NumClass {
    pub const ZERO: NumClass = NumClass { a: 0, b: 0 };
    pub const C0: NumClass = NumClass { a: 1, b: 0 };
    pub const FIBER: NumClass = NumClass { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        Some(Self::new(
            self.a.checked_add(other.a)?,
            self.b.checked_add(other.b)?,
        ))
    }

    pub fn checked_scale(self, n: i64) -> Option<Self> {
        Some(Self::new(self.a.checked_mul(n)?, self.b.checked_mul(n)?))
    }

    /// `n * self`; panics on overflow.
    pub fn scale(self, n: i64) -> Self {
        Self::new(mul(n, self.a), mul(n, self.b))
    }

    /// Sum of a slice of classes; panics on overflow.
    pub fn sum<'a>(classes: impl IntoIterator<Item = &'a NumClass>) -> Self {
        classes.into_iter().fold(Self::ZERO, |acc, c| acc + *c)
    }

    pub fn self_intersection(self, s: SurfaceModel) -> i64 {
        intersect(self, self, s)
    }
}

impl Add for NumClass {
    type Output = NumClass;

    fn add(self, rhs: Self) -> Self {
        Self::new(add(self.a, rhs.a), add(self.b, rhs.b))
    }
}

impl Sub for NumClass {
    type Output = NumClass;

    fn sub(self, rhs: Self) -> Self {
        Self::new(sub(self.a, rhs.a), sub(self.b, rhs.b))
    }
}

impl Neg for NumClass {
    type Output = NumClass;

    fn neg(self) -> Self {
        Self::ZERO - self
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub fn class_add(c1: NumClass, c2: NumClass) -> NumClass {
    c1 + c2
}

pub fn class_scale(n: i64, c: NumClass) -> NumClass {
    c.scale(n)
}

/// `(a1 C0 + b1 f).(a2 C0 + b2 f) = -e a1 a2 + a1 b2 + a2 b1`.
pub fn intersect(c1: NumClass, c2: NumClass, s: SurfaceModel) -> i64 {
    let c0c0 = mul(mul(-s.e, c1.a), c2.a);
    add(add(c0c0, mul(c1.a, c2.b)), mul(c2.a, c1.b))
}

/// `K_X = -2 C0 - e f` numerically.
pub fn canonical_class(s: SurfaceModel) -> NumClass {
    NumClass::new(-2, -s.e)
}

/// `K - c`, the class whose cohomology is dual to that of `c`.
pub fn serre_dual_class(c: NumClass, s: SurfaceModel) -> NumClass {
    canonical_class(s) - c
}

/// Position `n` of `c` on the ray `n (2 C0 - f)` of an `e = -1` surface.
pub fn ray_index(c: NumClass, s: SurfaceModel) -> Option<i64> {
    if s.is_odd_type() && c.a >= 0 && c.a % 2 == 0 && c.b == -(c.a / 2) {
        Some(c.a / 2)
    } else {
        None
    }
}

/// Which member of a numerical class on the `e = -1` ray is meant.
///
/// On `n (2 C0 - f)` the class alone does not fix the cohomology: `Zero` is
/// `O(2n C0 - n 𝔢 f)`, the `Eta*` tags twist that by one of the three nonzero
/// 2-torsion points of `Pic^0(C)`, and `Generic` is any other member.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundaryTag {
    Zero,
    Eta1,
    Eta2,
    Eta3,
    #[default]
    Generic,
}

impl BoundaryTag {
    pub const ETAS: [BoundaryTag; 3] = [BoundaryTag::Eta1, BoundaryTag::Eta2, BoundaryTag::Eta3];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundaryTag::Zero => "zero",
            BoundaryTag::Eta1 => "eta1",
            BoundaryTag::Eta2 => "eta2",
            BoundaryTag::Eta3 => "eta3",
            BoundaryTag::Generic => "generic",
        }
    }

    pub fn is_eta(self) -> bool {
        matches!(
            self,
            BoundaryTag::Eta1 | BoundaryTag::Eta2 | BoundaryTag::Eta3
        )
    }
}

impl fmt::Display for BoundaryTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundaryTag {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "zero" => Ok(BoundaryTag::Zero),
            "eta1" => Ok(BoundaryTag::Eta1),
            "eta2" => Ok(BoundaryTag::Eta2),
            "eta3" => Ok(BoundaryTag::Eta3),
            "generic" => Ok(BoundaryTag::Generic),
            other => Err(format!(
                "unknown tag '{other}' (expected zero, eta1, eta2, eta3 or generic)"
            )),
        }
    }
}

/// A numerical class together with the member it refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BundleRef {
    pub cls: NumClass,
    pub tag: BoundaryTag,
}

impl BundleRef {
    /// A validated reference; non-`Generic` tags must sit on the `e = -1` ray.
    pub fn new(cls: NumClass, tag: BoundaryTag, s: SurfaceModel) -> Result<Self> {
        let r = Self { cls, tag };
        r.validate(s)?;
        Ok(r)
    }

    pub fn generic(cls: NumClass) -> Self {
        Self {
            cls,
            tag: BoundaryTag::Generic,
        }
    }

    pub fn validate(&self, s: SurfaceModel) -> Result<()> {
        if self.tag != BoundaryTag::Generic && ray_index(self.cls, s).is_none() {
            return Err(Error::InvalidTag {
                tag: self.tag.as_str(),
                class: self.cls,
                e: s.e(),
            });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn surf(e: i64) -> SurfaceModel {
        SurfaceModel::new(e).unwrap()
    }

    // Bilinear expansion written out term by term, independent of `intersect`.
    fn expand(c1: NumClass, c2: NumClass, e: i64) -> i64 {
        let (c0c0, c0f, ff) = (-e, 1, 0);
        c1.a * c2.a * c0c0 + (c1.a * c2.b + c1.b * c2.a) * c0f + c1.b * c2.b * ff
    }

    #[test]
    fn rejects_small_invariant() {
        assert_eq!(SurfaceModel::new(-2), Err(Error::InvalidInvariant(-2)));
        assert!(SurfaceModel::new(-1).is_ok());
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(intersect(NumClass::C0, NumClass::C0, surf(-1)), 1);
        assert_eq!(expand(NumClass::C0, NumClass::C0, -1), 1);
        for e in -1..5 {
            assert_eq!(intersect(NumClass::FIBER, NumClass::FIBER, surf(e)), 0);
        }
        let (x, y) = (NumClass::new(2, 0), NumClass::new(0, 1));
        assert_eq!(intersect(x, y, surf(0)), 2);
        assert_eq!(expand(x, y, 0), 2);
    }

    #[test]
    fn canonical_and_dual_examples() {
        assert_eq!(canonical_class(surf(-1)), NumClass::new(-2, 1));
        assert_eq!(canonical_class(surf(0)), NumClass::new(-2, 0));
        assert_eq!(canonical_class(surf(2)), NumClass::new(-2, -2));

        assert_eq!(
            serre_dual_class(NumClass::ZERO, surf(-1)),
            NumClass::new(-2, 1)
        );
        assert_eq!(
            serre_dual_class(NumClass::new(2, -1), surf(-1)),
            NumClass::new(-4, 2)
        );
        assert_eq!(
            serre_dual_class(NumClass::new(1, 3), surf(0)),
            NumClass::new(-3, -3)
        );
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(
            class_add(NumClass::new(1, 0), NumClass::new(0, 1)),
            NumClass::new(1, 1)
        );
        assert_eq!(class_scale(2, NumClass::new(2, -1)), NumClass::new(4, -2));
        assert_eq!(
            class_add(NumClass::new(-2, 1), NumClass::new(4, 0)),
            NumClass::new(2, 1)
        );
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn overflow_is_loud() {
        let _ = NumClass::new(i64::MAX, 0) + NumClass::new(1, 0);
    }

    #[test]
    fn checked_ops_report_overflow() {
        assert_eq!(NumClass::new(i64::MAX, 0).checked_add(NumClass::C0), None);
        assert_eq!(NumClass::new(i64::MIN, 0).checked_scale(-1), None);
    }

    #[test]
    fn tag_validation() {
        let odd = surf(-1);
        assert!(BundleRef::new(NumClass::new(4, -2), BoundaryTag::Zero, odd).is_ok());
        assert!(BundleRef::new(NumClass::new(0, 0), BoundaryTag::Eta2, odd).is_ok());
        assert!(BundleRef::new(NumClass::new(4, -1), BoundaryTag::Zero, odd).is_err());
        assert!(BundleRef::new(NumClass::new(3, -2), BoundaryTag::Eta1, odd).is_err());
        assert!(BundleRef::new(NumClass::new(-2, 1), BoundaryTag::Eta1, odd).is_err());
        assert!(BundleRef::new(NumClass::new(4, -2), BoundaryTag::Zero, surf(0)).is_err());
        assert!(BundleRef::new(NumClass::new(4, -1), BoundaryTag::Generic, surf(0)).is_ok());
    }

    #[test]
    fn tag_parsing() {
        assert_eq!("Zero".parse::<BoundaryTag>(), Ok(BoundaryTag::Zero));
        assert_eq!("eta3".parse::<BoundaryTag>(), Ok(BoundaryTag::Eta3));
        assert!("eta4".parse::<BoundaryTag>().is_err());
    }

    proptest! {
        #[test]
        fn intersect_symmetric_bilinear(
            a1 in -1_000_000i64..=1_000_000, b1 in -1_000_000i64..=1_000_000,
            a2 in -1_000_000i64..=1_000_000, b2 in -1_000_000i64..=1_000_000,
            a3 in -1_000_000i64..=1_000_000, b3 in -1_000_000i64..=1_000_000,
            n in -1000i64..=1000, e in -1i64..=5,
        ) {
            let s = surf(e);
            let (x, y, z) = (NumClass::new(a1, b1), NumClass::new(a2, b2), NumClass::new(a3, b3));
            prop_assert_eq!(intersect(x, y, s), intersect(y, x, s));
            prop_assert_eq!(intersect(x, y, s), expand(x, y, e));
            prop_assert_eq!(
                intersect(x + z, y, s) as i128,
                intersect(x, y, s) as i128 + intersect(z, y, s) as i128
            );
            prop_assert_eq!(intersect(x, y.scale(n), s) as i128, n as i128 * intersect(x, y, s) as i128);
        }

        #[test]
        fn dual_is_involution(a in -1_000_000i64..=1_000_000, b in -1_000_000i64..=1_000_000, e in -1i64..=5) {
            let s = surf(e);
            let c = NumClass::new(a, b);
            prop_assert_eq!(serre_dual_class(serre_dual_class(c, s), s), c);
        }
    }

    #[test]
    fn canonical_degree_on_fiber() {
        for e in -1..=20 {
            assert_eq!(
                intersect(canonical_class(surf(e)), NumClass::FIBER, surf(e)),
                -2
            );
        }
    }
}
