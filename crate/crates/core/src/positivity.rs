//! Ampleness and base-point-freeness of numerical classes.
//!
//! All tests are integer inequalities. For `e = -1` they measure the degree
//! on `C0` (`a + b`) and on the elliptic curve `E ~ 2 C0 - f` (`a + 2b`); for
//! `e >= 0` the degree on `C0` is `b - a e`.

use serde::Serialize;

use crate::surface::{self, ray_index, NumClass, SurfaceModel};

fn degree_on_c0(c: NumClass, s: SurfaceModel) -> i64 {
    if s.is_odd_type() {
        surface::add(c.a, c.b)
    } else {
        surface::sub(c.b, surface::mul(c.a, s.e()))
    }
}

fn degree_on_bisection(c: NumClass) -> i64 {
    surface::add(c.a, surface::mul(2, c.b))
}

/// Strict positivity on the generating curves, normalized to `>= 1`.
pub fn is_ample(c: NumClass, s: SurfaceModel) -> bool {
    if s.is_odd_type() {
        c.a >= 1 && degree_on_bisection(c) >= 1
    } else {
        c.a >= 1 && degree_on_c0(c, s) >= 1
    }
}

/// Every line bundle in the class is base-point-free.
pub fn class_all_bpf(c: NumClass, s: SurfaceModel) -> bool {
    if s.is_odd_type() {
        c.a >= 0 && degree_on_c0(c, s) >= 2 && degree_on_bisection(c) >= 2
    } else {
        c.a >= 0 && degree_on_c0(c, s) >= 2
    }
}

pub fn is_ample_and_all_bpf(c: NumClass, s: SurfaceModel) -> bool {
    if s.is_odd_type() {
        c.a >= 1 && degree_on_c0(c, s) >= 2 && degree_on_bisection(c) >= 2
    } else {
        c.a >= 1 && degree_on_c0(c, s) >= 2
    }
}

/// A known base-point-free member of a class that is not entirely
/// base-point-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SpecialMember {
    pub class: NumClass,
    pub n: i64,
    pub member: String,
    /// Extra hypothesis on the surface, if any.
    pub requires: Option<&'static str>,
}

/// Curated base-point-free members with `L.C0 = 0` (or `L.E = 0`).
///
/// The list is not exhaustive: membership of a single line bundle in the
/// base-point-free locus is not a numerical property.
pub fn special_bpf_members(c: NumClass, s: SurfaceModel) -> Vec<SpecialMember> {
    if class_all_bpf(c, s) {
        return Vec::new();
    }
    let e = s.e();
    let mut out = Vec::new();
    match e {
        -1 => {
            if let Some(n) = ray_index(c, s).filter(|n| *n > 0 && n % 2 == 0) {
                out.push(SpecialMember {
                    class: c,
                    n,
                    member: format!("{n}(2C0 + 𝔢f) member: O({}C0 - {n}𝔢f)", 2 * n),
                    requires: None,
                });
            }
        }
        0 => {
            if c.a >= 1 && c.b == 0 {
                out.push(SpecialMember {
                    class: c,
                    n: c.a,
                    member: format!("{}C0", c.a),
                    requires: Some("X = C x P^1"),
                });
            }
        }
        _ => {
            if c.a >= 1 && c.b == surface::mul(c.a, e) {
                out.push(SpecialMember {
                    class: c,
                    n: c.a,
                    member: format!("{}(C0 - 𝔢f)", c.a),
                    requires: None,
                });
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub ample: bool,
    pub all_members_bpf: bool,
    pub ample_and_all_bpf: bool,
    pub special_bpf_members: Vec<SpecialMember>,
}

pub fn positivity_report(c: NumClass, s: SurfaceModel) -> PositivityReport {
    let ample = is_ample(c, s);
    let all_members_bpf = class_all_bpf(c, s);
    let ample_and_all_bpf = is_ample_and_all_bpf(c, s);
    assert_eq!(
        ample_and_all_bpf,
        ample && all_members_bpf,
        "ample+bpf region disagrees with the conjunction at {c} on {s}"
    );
    PositivityReport {
        ample,
        all_members_bpf,
        ample_and_all_bpf,
        special_bpf_members: special_bpf_members(c, s),
    }
}
