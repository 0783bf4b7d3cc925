//! The `slice/1` JSON format.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{build_complex3, CVertex, Complex3, Complex3Error};
use crate::surface::Vertex;

pub const SLICE_FORMAT: &str = "slice/1";

#[derive(Debug, Error)]
pub enum SliceFormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format tag {found:?}, expected {expected:?}")]
    Format { found: String, expected: &'static str },
    #[error(transparent)]
    Build(#[from] Complex3Error),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SliceFile {
    format: String,
    vertices: Vec<CVertex>,
    tetrahedra: Vec<[Vertex; 4]>,
}

/// Parses a slice file without validating the complex.
pub fn parse_slice_parts(text: &str) -> Result<(Vec<CVertex>, Vec<[Vertex; 4]>), SliceFormatError> {
    let file: SliceFile = serde_json::from_str(text)?;
    if file.format != SLICE_FORMAT {
        return Err(SliceFormatError::Format {
            found: file.format,
            expected: SLICE_FORMAT,
        });
    }
    Ok((file.vertices, file.tetrahedra))
}

pub fn parse_slice(text: &str) -> Result<Complex3, SliceFormatError> {
    let (vertices, tets) = parse_slice_parts(text)?;
    Ok(build_complex3(vertices, tets)?)
}

/// Pretty JSON with vertices sorted by id and tetrahedra in stored order.
pub fn slice_to_json(m: &Complex3) -> String {
    let file = SliceFile {
        format: SLICE_FORMAT.into(),
        vertices: m.vertices().to_vec(),
        tetrahedra: m.tetrahedra().to_vec(),
    };
    serde_json::to_string_pretty(&file).expect("slice serialises")
}
