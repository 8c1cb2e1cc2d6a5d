//! JSON documents emitted by `classify` and `decompose`.
//!
//! Field order is fixed by the struct definitions, so the same input always
//! produces byte-identical output.

use std::io::{self, Write};

use ruled_core::presentation::{search_bounds, KOSZUL_ASSUMPTION, NP_ASSUMPTION};
use ruled_core::{
    brute_force_decompose, classify_cell, cohomology_profile, decompose_np, special_bpf_members,
    BoundaryTag, BundleRef, CohomologyProfile, Decomposition, NumClass, RegionCell, SpecialMember,
    SurfaceModel,
};
use serde::Serialize;

use crate::Mode;

#[derive(Debug, Serialize)]
pub struct Assumptions {
    pub normal_presentation: &'static str,
    pub koszul: &'static str,
}

const ASSUMPTIONS: Assumptions = Assumptions {
    normal_presentation: NP_ASSUMPTION,
    koszul: KOSZUL_ASSUMPTION,
};

#[derive(Debug, Serialize)]
pub struct ClassifyDoc {
    pub e: i64,
    pub tag: BoundaryTag,
    pub cell: RegionCell,
    pub cohomology: CohomologyProfile,
    pub special_bpf_members: Vec<SpecialMember>,
    pub decomposition: Option<Decomposition>,
    pub assumptions: Assumptions,
}

pub fn classify(
    c: NumClass,
    tag: BoundaryTag,
    s: SurfaceModel,
) -> ruled_core::error::Result<ClassifyDoc> {
    let r = BundleRef::new(c, tag, s)?;
    Ok(ClassifyDoc {
        e: s.e(),
        tag,
        cell: classify_cell(c, s),
        cohomology: cohomology_profile(r, s)?,
        special_bpf_members: special_bpf_members(c, s),
        decomposition: decompose_np(c, s),
        assumptions: ASSUMPTIONS,
    })
}

#[derive(Debug, Serialize)]
pub struct SearchRow {
    pub a1: i64,
    pub b1_min: i64,
    pub b1_max: i64,
}

#[derive(Debug, Serialize)]
pub struct SearchSpace {
    pub a1_min: i64,
    pub a1_max: i64,
    /// Nonempty `b1` ranges only.
    pub rows: Vec<SearchRow>,
}

#[derive(Debug, Serialize)]
pub struct DecomposeDoc {
    pub e: i64,
    #[serde(flatten)]
    pub class: NumClass,
    pub mode: &'static str,
    pub normally_presented: bool,
    pub decomposition: Option<Decomposition>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub search: Option<SearchSpace>,
}

pub fn decompose(c: NumClass, s: SurfaceModel, mode: Mode) -> DecomposeDoc {
    let (mode_name, decomposition, search) = match mode {
        Mode::Constructive => ("constructive", decompose_np(c, s), None),
        Mode::Brute => {
            let rows = (0..=c.a)
                .filter_map(|a1| {
                    search_bounds(c, s, a1).map(|(lo, hi)| SearchRow {
                        a1,
                        b1_min: lo,
                        b1_max: hi,
                    })
                })
                .collect();
            let space = SearchSpace {
                a1_min: 0,
                a1_max: c.a,
                rows,
            };
            ("brute", brute_force_decompose(c, s), Some(space))
        }
    };
    DecomposeDoc {
        e: s.e(),
        class: c,
        mode: mode_name,
        normally_presented: ruled_core::is_normally_presented(c, s),
        decomposition,
        search,
    }
}

pub fn write_pretty<T: Serialize>(w: &mut dyn Write, doc: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *w, doc)?;
    writeln!(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_doc_fields() {
        let s = SurfaceModel::new(-1).unwrap();
        let doc = classify(NumClass::new(5, 0), BoundaryTag::Generic, s).unwrap();
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["cell"]["np"], true);
        assert_eq!(v["decomposition"]["b1"]["a"], 4);
        assert_eq!(v["decomposition"]["b1"]["b"], -1);
        assert_eq!(v["decomposition"]["case_tag"], "c423");
    }

    #[test]
    fn tag_off_ray_is_rejected() {
        let s = SurfaceModel::new(-1).unwrap();
        assert!(classify(NumClass::new(3, 0), BoundaryTag::Zero, s).is_err());
    }

    #[test]
    fn brute_search_rows() {
        let s = SurfaceModel::new(-1).unwrap();
        let doc = decompose(NumClass::new(4, 0), s, Mode::Brute);
        let space = doc.search.unwrap();
        assert_eq!((space.a1_min, space.a1_max), (0, 4));
        assert!(space.rows.iter().all(|r| r.b1_min <= r.b1_max));
        assert!(doc.decomposition.is_some());
    }
}
