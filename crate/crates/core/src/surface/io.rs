//! The `midsection/1` and `triangulation/1` JSON formats.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::{build_complex, BuildError, Cell, CellKind, SurfaceComplex, Vertex};

pub const MIDSECTION_FORMAT: &str = "midsection/1";
pub const TRIANGULATION_FORMAT: &str = "triangulation/1";

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported format tag {found:?}, expected {expected:?}")]
    Format { found: String, expected: &'static str },
    #[error(transparent)]
    Build(#[from] BuildError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum KindTag {
    Red,
    Blue,
    Quad,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CellRecord {
    kind: KindTag,
    vertices: Vec<Vertex>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MidsectionFile {
    format: String,
    cells: Vec<CellRecord>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangulationFile {
    format: String,
    triangles: Vec<[Vertex; 3]>,
}

fn check_format(found: String, expected: &'static str) -> Result<(), FormatError> {
    if found == expected {
        Ok(())
    } else {
        Err(FormatError::Format { found, expected })
    }
}

/// Parses a midsection file into its cell list without validating it.
pub fn parse_midsection_cells(text: &str) -> Result<Vec<Cell>, FormatError> {
    let file: MidsectionFile = serde_json::from_str(text)?;
    check_format(file.format, MIDSECTION_FORMAT)?;
    Ok(file
        .cells
        .into_iter()
        .map(|c| {
            let kind = match c.kind {
                KindTag::Red => CellKind::RedTriangle,
                KindTag::Blue => CellKind::BlueTriangle,
                KindTag::Quad => CellKind::Quadrangle,
            };
            Cell::new(kind, c.vertices)
        })
        .collect())
}

pub fn parse_midsection(text: &str) -> Result<SurfaceComplex, FormatError> {
    Ok(build_complex(parse_midsection_cells(text)?)?)
}

pub fn midsection_to_json(s: &SurfaceComplex) -> String {
    let file = MidsectionFile {
        format: MIDSECTION_FORMAT.to_string(),
        cells: s
            .cells()
            .iter()
            .map(|c| CellRecord {
                kind: match c.kind() {
                    CellKind::RedTriangle => KindTag::Red,
                    CellKind::BlueTriangle => KindTag::Blue,
                    CellKind::Quadrangle => KindTag::Quad,
                },
                vertices: c.vertices().to_vec(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialisable")
}

/// Parses an uncoloured triangulated surface. Triangles are stored as red
/// cells; only the combinatorics matter to the slice builders.
pub fn parse_triangulation(text: &str) -> Result<SurfaceComplex, FormatError> {
    let file: TriangulationFile = serde_json::from_str(text)?;
    check_format(file.format, TRIANGULATION_FORMAT)?;
    let cells = file.triangles.iter().map(|t| Cell::red(t[0], t[1], t[2])).collect();
    Ok(build_complex(cells)?)
}

pub fn triangulation_to_json(s: &SurfaceComplex) -> String {
    let file = TriangulationFile {
        format: TRIANGULATION_FORMAT.to_string(),
        triangles: s
            .cells()
            .iter()
            .map(|c| [c.vertices()[0], c.vertices()[1], c.vertices()[2]])
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serialisable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        let s = fixtures::chain3();
        let text = midsection_to_json(&s);
        assert_eq!(parse_midsection(&text).unwrap(), s);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let text = r#"{"format":"midsection/1","cells":[{"kind":"red","vertices":[0,1,2],"extra":1}]}"#;
        assert!(matches!(parse_midsection(text), Err(FormatError::Json(_))));
        let text = r#"{"format":"midsection/1","cells":[],"note":"x"}"#;
        assert!(matches!(parse_midsection(text), Err(FormatError::Json(_))));
    }

    #[test]
    fn wrong_tag() {
        let text = r#"{"format":"midsection/2","cells":[{"kind":"red","vertices":[0,1,2]}]}"#;
        assert!(matches!(parse_midsection(text), Err(FormatError::Format { .. })));
    }

    #[test]
    fn build_errors_surface() {
        let text = r#"{"format":"midsection/1","cells":[{"kind":"red","vertices":[0,1,2]},{"kind":"blue","vertices":[0,1,3]}]}"#;
        assert!(matches!(parse_midsection(text), Err(FormatError::Build(BuildError::EdgeColourConflict { .. }))));
    }

    #[test]
    fn triangulation_round_trip() {
        let s = fixtures::tetrahedron_boundary(crate::surface::Colour::Red);
        let t = parse_triangulation(&triangulation_to_json(&s)).unwrap();
        assert_eq!(s, t);
    }
}
