use rayon::prelude::*;
use serde::Serialize;

use super::slices::disc_slices;
use super::spheres::sphere_slices;
use super::{enumerate_midsections, EnumerateError, DEFAULT_SLICE_BUDGET};
use crate::causal3d::{code3, isomorphic3, validate_slice, Complex3, SliceKind};
use crate::conditions::MidsectionKind;
use crate::midsection::midsection;
use crate::reconstruct::{reconstruct, reconstruct_by_gluing};
use crate::surface::SurfaceComplex;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripFailure {
    /// Hex canonical code of the midsection or slice.
    pub code: String,
    pub kind: MidsectionKind,
    pub detail: String,
}

/// Both directions of the correspondence over a census.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub max_cells: usize,
    pub max_tetrahedra: usize,
    /// Midsections reconstructed and mapped back.
    pub midsections_checked: usize,
    /// Slices mapped to their midsection and reconstructed.
    pub slices_checked: usize,
    pub failures: Vec<RoundtripFailure>,
}

impl RoundtripReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reconstructs `s`, checks the result is a slice, and maps it back.
pub(crate) fn midsection_roundtrip(s: &SurfaceComplex, kind: MidsectionKind) -> Result<(), String> {
    let k = reconstruct(s, kind).map_err(|e| e.to_string())?;
    let report = validate_slice(&k, kind.into(), false);
    if let Some(check) = report.first_failure() {
        return Err(format!("reconstruction fails {}: {}", check.name, check.detail));
    }
    let glued = reconstruct_by_gluing(s).map_err(|e| e.to_string())?;
    if !isomorphic3(&k, &glued) {
        return Err("gluing and identification disagree".into());
    }
    let (back, _) = midsection(&k).map_err(|e| e.to_string())?;
    if back.canonical_code() != s.canonical_code() {
        return Err("midsection of the reconstruction differs".into());
    }
    Ok(())
}

pub(crate) fn slice_roundtrip(k: &Complex3, kind: SliceKind) -> Result<(), String> {
    let (s, _) = midsection(k).map_err(|e| e.to_string())?;
    let back = reconstruct(&s, kind.into()).map_err(|e| e.to_string())?;
    if isomorphic3(&back, k) {
        Ok(())
    } else {
        Err("reconstruction of the midsection is not isomorphic".into())
    }
}

/// Runs both directions over the census of `kind` up to `max_cells`:
/// members with at most `max_cells` cells, and slices with at most as many
/// tetrahedra. Disc-slices come from the brute-force search, capped at its
/// budget; sphere-slices come from the sphere-pair generator.
pub fn roundtrip_report(kind: MidsectionKind, max_cells: usize) -> Result<RoundtripReport, EnumerateError> {
    let records = enumerate_midsections(kind, max_cells)?;
    let (max_tetrahedra, slices) = match kind {
        MidsectionKind::Disc => {
            let cap = max_cells.min(DEFAULT_SLICE_BUDGET);
            (cap, disc_slices(cap))
        }
        MidsectionKind::Sphere => (max_cells, sphere_slices(max_cells)),
    };
    let mut failures = Vec::new();
    let mut midsections_checked = 0;
    for record in &records {
        midsections_checked += record.count;
        let complexes = record.complexes();
        failures.extend(
            complexes
                .par_iter()
                .zip(&record.entries)
                .filter_map(|(s, e)| {
                    midsection_roundtrip(s, kind).err().map(|detail| RoundtripFailure {
                        code: e.code.clone(),
                        kind,
                        detail,
                    })
                })
                .collect::<Vec<_>>(),
        );
    }
    let slices: Vec<Complex3> = slices.into_iter().flatten().collect();
    failures.extend(
        slices
            .par_iter()
            .filter_map(|k| {
                slice_roundtrip(k, kind.into()).err().map(|detail| RoundtripFailure {
                    code: hex::encode(code3(k)),
                    kind,
                    detail,
                })
            })
            .collect::<Vec<_>>(),
    );
    Ok(RoundtripReport {
        max_cells,
        max_tetrahedra,
        midsections_checked,
        slices_checked: slices.len(),
        failures,
    })
}
