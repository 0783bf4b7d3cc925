//! Isomorph-free census of midsections and of slices.
//!
//! Disc midsections grow level by level with local-construction moves:
//! each level glues a cell onto every boundary edge of the previous level
//! and then closes under identifying adjacent boundary edges. Canonical
//! codes remove isomorphic copies. The member census prunes with
//! conditions that survive undoing moves, so every member is still reached.
//!
//! Sphere midsections come from sphere-slices generated directly over pairs
//! of small triangulated spheres. Disc-slices are also generated directly,
//! tetrahedron by tetrahedron, for the independent side of the count
//! comparison.

mod discs;
mod output;
mod roundtrip;
mod sides;
mod slices;
mod spheres;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conditions::{fast_conditions, MidsectionKind};
use crate::surface::{build_complex, decode_code, SurfaceComplex};

pub use discs::{all_discs, all_spheres, disc_levels, Shard};
pub use output::{merge_census_dirs, read_census_dir, write_census_dir, CountsRow};
pub use roundtrip::{roundtrip_report, RoundtripFailure, RoundtripReport};
pub use sides::{side_census, SideCensus};
pub use slices::{enumerate_slices_bruteforce, enumerate_slices_sharded};
pub use spheres::{small_sphere_triangulations, sphere_slices};

pub const DEFAULT_DISC_BUDGET: usize = 9;
pub const DEFAULT_SPHERE_BUDGET: usize = 13;
pub const DEFAULT_SLICE_BUDGET: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("size {requested} exceeds the budget of {budget}")]
    BudgetExceeded { requested: usize, budget: usize },
}

/// What a census record counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CensusKind {
    MidsectionDisc,
    MidsectionSphere,
    SliceDisc,
    SliceSphere,
}

impl CensusKind {
    pub fn name(self) -> &'static str {
        match self {
            CensusKind::MidsectionDisc => "midsection-disc",
            CensusKind::MidsectionSphere => "midsection-sphere",
            CensusKind::SliceDisc => "slice-disc",
            CensusKind::SliceSphere => "slice-sphere",
        }
    }

    pub fn from_name(name: &str) -> Option<CensusKind> {
        [
            CensusKind::MidsectionDisc,
            CensusKind::MidsectionSphere,
            CensusKind::SliceDisc,
            CensusKind::SliceSphere,
        ]
        .into_iter()
        .find(|k| k.name() == name)
    }

    pub fn midsection(kind: MidsectionKind) -> CensusKind {
        match kind {
            MidsectionKind::Disc => CensusKind::MidsectionDisc,
            MidsectionKind::Sphere => CensusKind::MidsectionSphere,
        }
    }
}

/// One census entry: a canonical code with condition verdicts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CensusEntry {
    pub code: String,
    /// Verdicts of the individual conditions, in checking order; empty for
    /// slices.
    pub conditions: Vec<(String, bool)>,
}

/// All instances of one kind and size, sorted by code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub kind: CensusKind,
    /// Cells for midsections, tetrahedra for slices.
    pub size: usize,
    pub count: usize,
    pub entries: Vec<CensusEntry>,
}

impl CensusRecord {
    pub fn new(kind: CensusKind, size: usize, mut entries: Vec<CensusEntry>) -> CensusRecord {
        entries.sort();
        entries.dedup_by(|a, b| a.code == b.code);
        CensusRecord {
            kind,
            size,
            count: entries.len(),
            entries,
        }
    }

    pub fn codes(&self) -> impl Iterator<Item = Vec<u8>> + '_ {
        self.entries.iter().map(|e| hex::decode(&e.code).expect("census codes are hex"))
    }

    /// Rebuilds the midsections of a midsection record.
    pub fn complexes(&self) -> Vec<SurfaceComplex> {
        self.codes().map(|c| complex_from_code(&c)).collect()
    }
}

pub(crate) fn complex_from_code(code: &[u8]) -> SurfaceComplex {
    build_complex(decode_code(code).expect("valid code")).expect("codes decode to valid complexes")
}

pub(crate) fn summary(s: &SurfaceComplex) -> Vec<(String, bool)> {
    fast_conditions(s)
        .into_iter()
        .map(|r| match r {
            Ok(r) => (r.condition.name().to_string(), r.verdict),
            Err(e) => (format!("{e}"), false),
        })
        .collect()
}

fn check_budget(requested: usize, budget: usize) -> Result<(), EnumerateError> {
    if requested > budget {
        Err(EnumerateError::BudgetExceeded { requested, budget })
    } else {
        Ok(())
    }
}

/// Members of the disc or sphere class with at most `max_cells` cells, one
/// record per size from 1 to `max_cells`.
pub fn enumerate_midsections(kind: MidsectionKind, max_cells: usize) -> Result<Vec<CensusRecord>, EnumerateError> {
    enumerate_midsections_sharded(kind, max_cells, Shard::whole())
}

/// As [`enumerate_midsections`], restricted to one shard. Merging the
/// records of all shards gives the full census. For discs only the last
/// level is split, by source index, and shard 0 also produces the smaller
/// sizes; for spheres the red apex assignments are split.
pub fn enumerate_midsections_sharded(kind: MidsectionKind, max_cells: usize, shard: Shard) -> Result<Vec<CensusRecord>, EnumerateError> {
    match kind {
        MidsectionKind::Disc => {
            check_budget(max_cells, DEFAULT_DISC_BUDGET)?;
            Ok(discs::disc_members(max_cells, shard))
        }
        MidsectionKind::Sphere => {
            check_budget(max_cells, DEFAULT_SPHERE_BUDGET)?;
            Ok(spheres::sphere_members(max_cells, shard))
        }
    }
}
