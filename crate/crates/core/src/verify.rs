//! Self-verification suites over a lattice window.
//!
//! Each suite re-derives a property of the classification from an
//! independent route and collects every class where the routes disagree.
//! The predicates under test are passed in as a [`Predicates`] table so a
//! deliberately broken table can exercise the failure path.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::cohomology::{self, CohomologyProfile, DimStatus};
use crate::positivity;
use crate::presentation::{self, adjoint_threshold, sharpness_class, Decomposition};
use crate::surface::{canonical_class, serre_dual_class, BoundaryTag, NumClass, SurfaceModel};

pub type ClassPredicate = fn(NumClass, SurfaceModel) -> bool;

/// The functions a verification run checks.
#[derive(Clone, Copy)]
pub struct Predicates {
    pub vanishing_table: fn(NumClass, SurfaceModel) -> CohomologyProfile,
    pub ray_h0: fn(i64, BoundaryTag) -> u64,
    pub is_ample: ClassPredicate,
    pub class_all_bpf: ClassPredicate,
    pub is_ample_and_all_bpf: ClassPredicate,
    pub is_normally_presented: ClassPredicate,
    pub is_koszul: ClassPredicate,
    pub brute_force_decompose: fn(NumClass, SurfaceModel) -> Option<Decomposition>,
}

impl Default for Predicates {
    fn default() -> Self {
        Self {
            vanishing_table: cohomology::vanishing_table,
            ray_h0: cohomology::ray_h0,
            is_ample: positivity::is_ample,
            class_all_bpf: positivity::class_all_bpf,
            is_ample_and_all_bpf: positivity::is_ample_and_all_bpf,
            is_normally_presented: presentation::is_normally_presented,
            is_koszul: presentation::is_koszul,
            brute_force_decompose: presentation::brute_force_decompose,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub e_values: Vec<i64>,
    /// Half-width: classes with `|a|, |b| <= window` are checked.
    pub window: i64,
    pub seed: u64,
    /// Random tuples drawn per corollary and per `e`.
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            e_values: vec![-1, 0, 1, 2],
            window: 40,
            seed: 0,
            samples: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub counterexamples: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub window: i64,
    pub e_values: Vec<i64>,
    pub seed: u64,
    pub results: Vec<SuiteResult>,
    pub wall_time_ms: u128,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, name: &str) -> Option<&SuiteResult> {
        self.results.iter().find(|r| r.name == name)
    }
}

pub const SUITES: [&str; 8] = [
    "duality_symmetry",
    "rr_consistency",
    "ray_table",
    "main_theorem_equivalence",
    "convexity",
    "koszul_agreement",
    "corollary_soundness",
    "sharpness",
];

/// Collects counterexamples of a per-class check across the window.
struct Tally {
    checked: u64,
    bad: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Self {
            checked: 0,
            bad: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.bad.push(describe());
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.bad.extend(other.bad);
        self
    }

    fn finish(self, name: &'static str) -> SuiteResult {
        SuiteResult {
            name,
            passed: self.bad.is_empty(),
            checked: self.checked,
            counterexamples: self.bad,
        }
    }
}

fn surfaces(cfg: &VerifyConfig) -> Vec<SurfaceModel> {
    cfg.e_values
        .iter()
        .map(|e| SurfaceModel::new(*e).expect("verify called with e < -1"))
        .collect()
}

/// Runs `f` over every `(class, surface)` in the window, in parallel over `a`.
fn over_window<F>(cfg: &VerifyConfig, f: F) -> Tally
where
    F: Fn(NumClass, SurfaceModel, &mut Tally) + Sync,
{
    let w = cfg.window;
    surfaces(cfg)
        .into_iter()
        .flat_map(|s| (-w..=w).map(move |a| (s, a)))
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(s, a)| {
            let mut t = Tally::new();
            for b in -w..=w {
                f(NumClass::new(a, b), s, &mut t);
            }
            t
        })
        .reduce(Tally::new, Tally::merge)
}

fn profile(p: &Predicates, c: NumClass, s: SurfaceModel) -> Option<CohomologyProfile> {
    (p.vanishing_table)(c, s).propagate(c, s).ok()
}

pub fn duality_symmetry(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    over_window(cfg, |c, s, t| {
        let dual = serre_dual_class(c, s);
        let (Some(x), Some(y)) = (profile(p, c, s), profile(p, dual, s)) else {
            t.check(false, || format!("{c} on {s}: inconsistent table"));
            return;
        };
        if x.is_fully_determined() && y.is_fully_determined() {
            t.check([x.h0, x.h1, x.h2] == [y.h2, y.h1, y.h0], || {
                format!(
                    "{c} on {s}: {:?} vs dual {dual} {:?}",
                    x.statuses(),
                    y.statuses()
                )
            });
        }
    })
    .finish("duality_symmetry")
}

pub fn rr_consistency(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    use DimStatus::{Exact, Positive};
    let mut tally = over_window(cfg, |c, s, t| {
        let table = (p.vanishing_table)(c, s);
        let chi = table.chi;
        let ok = match table.statuses() {
            [Positive, Exact(0), Exact(0)] | [Exact(0), Exact(0), Positive] => chi > 0,
            [Exact(0), Positive, Exact(0)] => chi < 0,
            [Exact(0), Exact(0), Exact(0)] => chi == 0,
            _ => true,
        };
        t.check(ok, || {
            format!("{c} on {s}: {:?} with chi = {chi}", table.statuses())
        });
    });
    if cfg.e_values.contains(&-1) {
        let s = SurfaceModel::new(-1).unwrap();
        for n in 0..=10_000 {
            let c = NumClass::new(2 * n, -n);
            let chi = (p.vanishing_table)(c, s).chi;
            tally.check(chi == 0, || format!("{c} on {s}: ray chi = {chi}"));
        }
    }
    tally.finish("rr_consistency")
}

pub fn ray_table(p: &Predicates) -> SuiteResult {
    let mut t = Tally::new();
    let rows = [
        (BoundaryTag::Zero, [1, 0, 2, 1]),
        (BoundaryTag::Eta1, [0, 1, 1, 2]),
    ];
    for (tag, expected) in rows {
        for (n, want) in expected.into_iter().enumerate() {
            let got = (p.ray_h0)(n as i64, tag);
            t.check(got == want, || {
                format!("n = {n}, {tag}: h0 = {got}, expected {want}")
            });
        }
    }
    for n in 0..=1000i64 {
        let half = n / 2;
        let zero = (p.ray_h0)(n, BoundaryTag::Zero);
        let eta: Vec<u64> = BoundaryTag::ETAS
            .iter()
            .map(|t| (p.ray_h0)(n, *t))
            .collect();
        t.check(zero as i64 == 3 * half - n + 1, || {
            format!("n = {n}: zero h0 = {zero}")
        });
        t.check(eta.iter().all(|h| *h as i64 == n - half), || {
            format!("n = {n}: eta h0 = {eta:?}")
        });
        let m = n / 2;
        let length = if n % 2 == 0 { 4 * m + 1 } else { 4 * m + 3 };
        let total = zero + eta.iter().sum::<u64>();
        t.check(total as i64 == length, || {
            format!("n = {n}: total {total}, length {length}")
        });
    }
    t.finish("ray_table")
}

pub fn main_theorem_equivalence(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    over_window(cfg, |c, s, t| {
        let np = (p.is_normally_presented)(c, s);
        let witness = (p.brute_force_decompose)(c, s);
        let witness_ok = witness.is_none_or(|d| {
            d.total() == c && (p.class_all_bpf)(d.b1, s) && (p.class_all_bpf)(d.b2, s)
        });
        let decomposable = (p.is_ample)(c, s) && witness.is_some();
        t.check(np == decomposable && witness_ok, || {
            format!(
                "{c} on {s}: numerical = {np}, ample + decomposable = {decomposable}, witness {witness:?}"
            )
        });
    })
    .finish("main_theorem_equivalence")
}

/// Half-planes `alpha a + beta b >= gamma` cutting out the normally presented
/// region, written down separately from the predicate.
fn np_half_planes(s: SurfaceModel) -> Vec<(i64, i64, i64)> {
    if s.e() == -1 {
        vec![(1, 0, 1), (1, 1, 4), (1, 2, 4)]
    } else {
        vec![(1, 0, 1), (-s.e(), 1, 4)]
    }
}

fn in_half_planes(c: NumClass, planes: &[(i64, i64, i64)]) -> bool {
    planes.iter().all(|(x, y, g)| x * c.a + y * c.b >= *g)
}

pub fn convexity(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    let mut tally = over_window(cfg, |c, s, t| {
        let planes = np_half_planes(s);
        let np = (p.is_normally_presented)(c, s);
        t.check(np == in_half_planes(c, &planes), || {
            format!("{c} on {s}: predicate {np}, half-planes {}", !np)
        });
        // The recession cone of the half-planes: (alpha, beta) . d >= 0.
        if np {
            for d in [
                NumClass::new(1, 0),
                NumClass::new(0, 1),
                NumClass::new(2, -1),
                NumClass::new(1, s.e().max(0)),
            ] {
                if in_half_planes(
                    d,
                    &planes
                        .iter()
                        .map(|(x, y, _)| (*x, *y, 0))
                        .collect::<Vec<_>>(),
                ) {
                    let moved = c + d;
                    t.check((p.is_normally_presented)(moved, s), || {
                        format!("{c} + {d} = {moved} on {s} left the region")
                    });
                }
            }
        }
    });
    let w = cfg.window;
    for s in surfaces(cfg) {
        let points: Vec<NumClass> = (-w..=w)
            .flat_map(|a| (-w..=w).map(move |b| NumClass::new(a, b)))
            .filter(|c| (p.is_normally_presented)(*c, s))
            .collect();
        let mid = points
            .par_iter()
            .map(|x| {
                let mut t = Tally::new();
                for y in &points {
                    let sum = *x + *y;
                    if sum.a % 2 == 0 && sum.b % 2 == 0 {
                        let m = NumClass::new(sum.a / 2, sum.b / 2);
                        t.check((p.is_normally_presented)(m, s), || {
                            format!("midpoint {m} of {x} and {y} on {s} is not normally presented")
                        });
                    }
                }
                t
            })
            .reduce(Tally::new, Tally::merge);
        tally = tally.merge(mid);
    }
    tally.finish("convexity")
}

pub fn koszul_agreement(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    over_window(cfg, |c, s, t| {
        let (np, k) = ((p.is_normally_presented)(c, s), (p.is_koszul)(c, s));
        t.check(np == k, || format!("{c} on {s}: np = {np}, koszul = {k}"))
    })
    .finish("koszul_agreement")
}

fn random_factor(rng: &mut ChaCha8Rng, s: SurfaceModel, keep: ClassPredicate) -> NumClass {
    loop {
        let c = NumClass::new(rng.gen_range(1..=10), rng.gen_range(-10..=10));
        if keep(c, s) {
            return c;
        }
    }
}

/// Random tuples at or above each product/adjoint threshold, seeded.
pub fn corollary_soundness(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for s in surfaces(cfg) {
        let k = canonical_class(s);
        let plans: [(&str, ClassPredicate, usize, bool); 3] = [
            ("ample+bpf product", p.is_ample_and_all_bpf, 2, false),
            ("ample product", p.is_ample, 4, false),
            ("adjoint", p.is_ample, adjoint_threshold(s), true),
        ];
        for (label, keep, q_min, adjoint) in plans {
            for _ in 0..cfg.samples {
                let q = rng.gen_range(q_min..=q_min + 2);
                let factors: Vec<NumClass> =
                    (0..q).map(|_| random_factor(&mut rng, s, keep)).collect();
                let mut total = NumClass::sum(&factors);
                if adjoint {
                    total = total + k;
                }
                t.check((p.is_normally_presented)(total, s), || {
                    format!("{label} on {s}: {factors:?} gives {total}, not normally presented")
                });
            }
        }
    }
    t.finish("corollary_soundness")
}

/// Tuples one step below each threshold that fail normal presentation.
pub fn sharpness_examples(s: SurfaceModel) -> Vec<(&'static str, NumClass)> {
    let e = s.e();
    let ample_bpf_single = if e == -1 {
        NumClass::new(1, 1)
    } else {
        NumClass::new(1, e + 2)
    };
    let ample_single = if e == -1 {
        NumClass::new(1, 0)
    } else {
        NumClass::new(1, e + 1)
    };
    vec![
        ("adjoint one short of threshold", sharpness_class(s)),
        ("single ample+bpf factor", ample_bpf_single),
        ("three ample factors", ample_single.scale(3)),
    ]
}

pub fn sharpness(p: &Predicates, cfg: &VerifyConfig) -> SuiteResult {
    let mut t = Tally::new();
    let mut surfs = surfaces(cfg);
    for e in 1..=3 {
        let s = SurfaceModel::new(e).unwrap();
        if !surfs.contains(&s) {
            surfs.push(s);
        }
    }
    for s in surfs {
        let single = sharpness_examples(s)[1].1;
        t.check((p.is_ample_and_all_bpf)(single, s), || {
            format!("{single} on {s} is not ample+bpf")
        });
        for (label, c) in sharpness_examples(s) {
            t.check(!(p.is_normally_presented)(c, s), || {
                format!("{label}: {c} on {s} is normally presented")
            });
        }
    }
    t.finish("sharpness")
}

pub fn run(p: &Predicates, cfg: &VerifyConfig) -> VerifyReport {
    let start = Instant::now();
    let results = vec![
        duality_symmetry(p, cfg),
        rr_consistency(p, cfg),
        ray_table(p),
        main_theorem_equivalence(p, cfg),
        convexity(p, cfg),
        koszul_agreement(p, cfg),
        corollary_soundness(p, cfg),
        sharpness(p, cfg),
    ];
    VerifyReport {
        suite: "ruled-verify",
        window: cfg.window,
        e_values: cfg.e_values.clone(),
        seed: cfg.seed,
        results,
        wall_time_ms: start.elapsed().as_millis(),
    }
}
