//! Writing a class as `B1 + B2` with both summands entirely base-point-free.

use serde::Serialize;

use super::is_normally_presented;
use crate::positivity::{class_all_bpf, is_ample};
use crate::surface::{self, NumClass, SurfaceModel};

/// Which construction produced a [`Decomposition`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// `e = -1`, `1 <= a <= 2`: `B1 = C0 + nf`, `B2 = 2f` or `C0 + f`.
    C421,
    /// `e = -1`, `3 <= a <= 4`: `B1 = 2C0`, `B2 = 2C0 + lf` or `C0 + nf`.
    C422,
    /// `e = -1`, `a >= 5`, `a + 2b > 4`: `B1 = 2C0 + m(2C0 - f)`.
    C423,
    /// `e = -1`, `a >= 5`, `a + 2b = 4`: `B1 = 2C0 + m(2C0 - f)`, `B2 = 2C0`.
    C424,
    /// `e >= 0`, `a` even: halve `a`, floor/ceil `b`.
    EvenSplit,
    /// `e >= 0`, `a` odd: floor/ceil of `a/2`, `(b - e)/2`, `(b + e)/2`.
    OddSplit,
    /// Found by exhaustive search.
    BruteForce,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Decomposition {
    pub b1: NumClass,
    pub b2: NumClass,
    pub case_tag: CaseTag,
}

impl Decomposition {
    pub fn total(&self) -> NumClass {
        self.b1 + self.b2
    }

    pub fn is_valid_for(&self, c: NumClass, s: SurfaceModel) -> bool {
        self.total() == c && class_all_bpf(self.b1, s) && class_all_bpf(self.b2, s)
    }
}

fn floor_div2(x: i64) -> i64 {
    x.div_euclid(2)
}

fn ceil_div2(x: i64) -> i64 {
    -(-x).div_euclid(2)
}

/// The case-by-case witness for a normally presented class.
///
/// Returns `None` when `c` is outside the normally presented region or when a
/// solved parameter falls outside its allowed range.
pub fn constructive_decompose(c: NumClass, s: SurfaceModel) -> Option<Decomposition> {
    if !is_normally_presented(c, s) {
        return None;
    }
    let (a, b) = (c.a, c.b);
    let pair = |b1: NumClass, b2: NumClass, case_tag| Some(Decomposition { b1, b2, case_tag });
    let nc = NumClass::new;

    if !s.is_odd_type() {
        let e = s.e();
        return if a % 2 == 0 {
            pair(
                nc(a / 2, floor_div2(b)),
                nc(a / 2, ceil_div2(b)),
                CaseTag::EvenSplit,
            )
        } else {
            pair(
                nc(a / 2, floor_div2(surface::sub(b, e))),
                nc(a / 2 + 1, ceil_div2(surface::add(b, e))),
                CaseTag::OddSplit,
            )
        };
    }

    let bisection_degree = surface::add(a, surface::mul(2, b));
    match a {
        1 => {
            let n = b - 2;
            (n >= 1).then_some(())?;
            pair(nc(1, n), nc(0, 2), CaseTag::C421)
        }
        2 => {
            let n = b - 1;
            (n >= 1).then_some(())?;
            pair(nc(1, n), nc(1, 1), CaseTag::C421)
        }
        3 => {
            let n = b;
            (n >= 1).then_some(())?;
            pair(nc(2, 0), nc(1, n), CaseTag::C422)
        }
        4 => {
            let l = b;
            (l >= 0).then_some(())?;
            pair(nc(2, 0), nc(2, l), CaseTag::C422)
        }
        _ if bisection_degree > 4 => {
            // B1 = (2 + 2m, -m); B2 = (2, l) when a is even, (1, n) when odd.
            let (m, b2_a) = if a % 2 == 0 {
                ((a - 4) / 2, 2)
            } else {
                ((a - 3) / 2, 1)
            };
            let free = surface::add(b, m);
            (m >= 1 && free >= 1).then_some(())?;
            pair(nc(2 + 2 * m, -m), nc(b2_a, free), CaseTag::C423)
        }
        _ => {
            let m = (a - 4) / 2;
            (a % 2 == 0 && m >= 1 && b == -m).then_some(())?;
            pair(nc(2 + 2 * m, -m), nc(2, 0), CaseTag::C424)
        }
    }
}

/// A witness pair for a normally presented class, `None` otherwise.
///
/// Prefers the constructive cases and falls back to the exhaustive search if
/// a constructed pair is ever rejected.
pub fn decompose_np(c: NumClass, s: SurfaceModel) -> Option<Decomposition> {
    if !is_normally_presented(c, s) {
        return None;
    }
    let d = constructive_decompose(c, s)
        .filter(|d| d.is_valid_for(c, s))
        .or_else(|| brute_force_decompose(c, s))?;
    assert!(d.is_valid_for(c, s), "invalid witness {d:?} for {c} on {s}");
    Some(d)
}

/// Closed range of `b1` to search for a given `a1`, or `None` if empty.
///
/// Every entirely base-point-free class has degree `>= 2` on the curve `E`
/// (`e = -1`, degree `a + 2b`) and on `C0` (`e >= 0`, degree `b - ae`). Both
/// halves must satisfy it, which bounds `b1` from both sides; the full
/// predicate is still checked on each candidate.
pub fn search_bounds(c: NumClass, s: SurfaceModel, a1: i64) -> Option<(i64, i64)> {
    let a2 = surface::sub(c.a, a1);
    let (lo, hi) = if s.is_odd_type() {
        (
            ceil_div2(2 - a1),
            floor_div2(surface::add(a2, surface::mul(2, c.b)) - 2),
        )
    } else {
        let e = s.e();
        (
            surface::add(2, surface::mul(a1, e)),
            surface::sub(surface::sub(c.b, 2), surface::mul(a2, e)),
        )
    };
    (lo <= hi).then_some((lo, hi))
}

/// Exhaustive search for `c = B1 + B2` with both classes entirely
/// base-point-free. `a1` ranges over `[0, a]` since both halves need `a_i >= 0`.
pub fn brute_force_decompose(c: NumClass, s: SurfaceModel) -> Option<Decomposition> {
    (0..=c.a).find_map(|a1| {
        let (lo, hi) = search_bounds(c, s, a1)?;
        (lo..=hi).find_map(|b1| {
            let b1 = NumClass::new(a1, b1);
            let b2 = c - b1;
            (class_all_bpf(b1, s) && class_all_bpf(b2, s)).then_some(Decomposition {
                b1,
                b2,
                case_tag: CaseTag::BruteForce,
            })
        })
    })
}

/// Ample and a sum of two entirely base-point-free classes.
pub fn ample_and_decomposable(c: NumClass, s: SurfaceModel) -> bool {
    is_ample(c, s) && brute_force_decompose(c, s).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surf(e: i64) -> SurfaceModel {
        SurfaceModel::new(e).unwrap()
    }

    fn c(a: i64, b: i64) -> NumClass {
        NumClass::new(a, b)
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_np(c(5, 0), surf(-1)).unwrap();
        assert_eq!((d.b1, d.b2, d.case_tag), (c(4, -1), c(1, 1), CaseTag::C423));
        let d = decompose_np(c(2, 5), surf(0)).unwrap();
        assert_eq!(
            (d.b1, d.b2, d.case_tag),
            (c(1, 2), c(1, 3), CaseTag::EvenSplit)
        );
        assert_eq!(decompose_np(c(2, 1), surf(-1)), None);
    }

    #[test]
    fn case_boundaries() {
        let odd = surf(-1);
        let tag = |a, b| decompose_np(c(a, b), odd).unwrap().case_tag;
        assert_eq!(tag(1, 3), CaseTag::C421);
        assert_eq!(tag(2, 2), CaseTag::C421);
        assert_eq!(tag(3, 1), CaseTag::C422);
        assert_eq!(tag(4, 0), CaseTag::C422);
        assert_eq!(tag(5, 0), CaseTag::C423);
        assert_eq!(tag(6, -1), CaseTag::C424);
        assert_eq!(tag(6, 0), CaseTag::C423);
        assert_eq!(tag(10, -3), CaseTag::C424);
        let d = decompose_np(c(6, -1), odd).unwrap();
        assert_eq!((d.b1, d.b2), (c(4, -1), c(2, 0)));
        let d = decompose_np(c(3, 10), surf(2)).unwrap();
        assert_eq!(
            (d.b1, d.b2, d.case_tag),
            (c(1, 4), c(2, 6), CaseTag::OddSplit)
        );
        assert_eq!(decompose_np(c(3, 9), surf(2)), None);
    }

    #[test]
    fn brute_force_examples() {
        let d = brute_force_decompose(c(4, 0), surf(-1)).unwrap();
        assert_eq!((d.b1, d.b2), (c(2, 0), c(2, 0)));
        assert_eq!(brute_force_decompose(c(1, 2), surf(-1)), None);
        let d = brute_force_decompose(c(0, 4), surf(-1)).unwrap();
        assert_eq!((d.b1, d.b2), (c(0, 2), c(0, 2)));
    }

    #[test]
    fn ample_and_decomposable_examples() {
        assert!(ample_and_decomposable(c(5, 0), surf(-1)));
        assert!(!ample_and_decomposable(c(0, 4), surf(-1)));
        assert!(!ample_and_decomposable(c(2, 1), surf(-1)));
    }

    // Searches a padded box with no pruning; any witness found there must also
    // lie inside the derived bounds.
    #[test]
    fn search_bounds_are_sound() {
        for e in -1..=2 {
            let s = surf(e);
            for a in -3..=14 {
                for b in (-20..=20).step_by(3) {
                    let x = c(a, b);
                    for a1 in -4..=a + 4 {
                        for b1 in -80..=80 {
                            let (p, q) = (c(a1, b1), x - c(a1, b1));
                            if class_all_bpf(p, s) && class_all_bpf(q, s) {
                                assert!((0..=a).contains(&a1), "{x} on {s}: a1 = {a1}");
                                let (lo, hi) =
                                    search_bounds(x, s, a1).expect("empty range with witness");
                                assert!(
                                    (lo..=hi).contains(&b1),
                                    "{x} on {s}: b1 = {b1} outside [{lo}, {hi}]"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_valid_on_window() {
        for e in -1..=2 {
            let s = surf(e);
            for a in -40..=40 {
                for b in -40..=40 {
                    let x = c(a, b);
                    let Some(d) = decompose_np(x, s) else {
                        assert!(!is_normally_presented(x, s));
                        continue;
                    };
                    assert!(d.is_valid_for(x, s));
                    assert_eq!(
                        d,
                        constructive_decompose(x, s).unwrap(),
                        "fallback used at {x} on {s}"
                    );
                    let in_range = match d.case_tag {
                        CaseTag::C421 => (1..=2).contains(&a),
                        CaseTag::C422 => (3..=4).contains(&a),
                        CaseTag::C423 => a >= 5 && a + 2 * b > 4,
                        CaseTag::C424 => a >= 5 && a + 2 * b == 4,
                        CaseTag::EvenSplit => e >= 0 && a % 2 == 0,
                        CaseTag::OddSplit => e >= 0 && a % 2 != 0,
                        CaseTag::BruteForce => false,
                    };
                    assert!(in_range, "{x} on {s} tagged {:?}", d.case_tag);
                }
            }
        }
    }
}
