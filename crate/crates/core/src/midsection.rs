//! The midsection of a causal slice: the cell complex cut out halfway
//! between its red and blue vertices.
//!
//! Each two-coloured edge of the slice becomes a vertex, each tetrahedron a
//! cell, and each two-coloured triangle an edge coloured like the
//! triangle's monochromatic edge. The cut is never computed with
//! coordinates; the combinatorial rules give it exactly.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::causal3d::{boundary_split, monochrome_on_boundary, Complex3, SliceKind, SplitError, Triangle};
use crate::surface::{build_complex, BuildError, Cell, Colour, SurfaceComplex, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MidsectionError {
    #[error("monochromatic simplex {simplex:?} is not on the boundary")]
    InteriorMonochrome { simplex: Vec<Vertex> },
    #[error("boundary is neither a disc-slice nor a sphere-slice boundary ({0})")]
    Split(SplitError),
    #[error("midsection is not a valid cell complex: {0}")]
    Build(#[from] BuildError),
}

/// Traceability maps from the slice to its midsection.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MidsectionLabels {
    /// Two-coloured edge `(red, blue)` of the slice for each midsection
    /// vertex, indexed by vertex id.
    pub vertices: Vec<(Vertex, Vertex)>,
    /// Tetrahedron index for each cell; cells follow tetrahedron order so
    /// this is the identity.
    pub cells: Vec<usize>,
    /// Two-coloured triangle of the slice for each midsection edge, keyed
    /// by the edge's endpoints.
    pub edges: BTreeMap<String, Triangle>,
    pub kind: SliceKind,
}

/// The slice kind implied by the boundary, after checking that
/// monochromatic simplices lie on it.
pub fn slice_kind(k: &Complex3) -> Result<SliceKind, MidsectionError> {
    monochrome_on_boundary(k).map_err(|simplex| MidsectionError::InteriorMonochrome { simplex })?;
    let has_side = k.boundary_triangles().iter().any(|t| k.mono_colour(t).is_none());
    let kind = if has_side { SliceKind::Disc } else { SliceKind::Sphere };
    boundary_split(k, kind).map_err(MidsectionError::Split)?;
    Ok(kind)
}

/// Computes the midsection of a slice. Vertex `i` of the result is the
/// `i`-th two-coloured edge in sorted `(red, blue)` order.
pub fn midsection(k: &Complex3) -> Result<(SurfaceComplex, MidsectionLabels), MidsectionError> {
    let kind = slice_kind(k)?;
    let mut two_coloured: Vec<(Vertex, Vertex)> = k
        .edges()
        .iter()
        .filter(|e| k.colour(e[0]) != k.colour(e[1]))
        .map(|e| if k.colour(e[0]) == Colour::Red { (e[0], e[1]) } else { (e[1], e[0]) })
        .collect();
    two_coloured.sort_unstable();
    let id = |r: Vertex, b: Vertex| two_coloured.binary_search(&(r, b)).expect("edge of the slice") as Vertex;

    let mut cells = Vec::with_capacity(k.tetrahedra().len());
    for t in k.tetrahedra() {
        let (reds, blues): (Vec<Vertex>, Vec<Vertex>) = t.iter().partition(|&&v| k.colour(v) == Colour::Red);
        let cell = match (reds.as_slice(), blues.as_slice()) {
            ([r1, r2, r3], [b]) => Cell::red(id(*r1, *b), id(*r2, *b), id(*r3, *b)),
            ([r], [b1, b2, b3]) => Cell::blue(id(*r, *b1), id(*r, *b2), id(*r, *b3)),
            ([r1, r2], [b1, b2]) => Cell::quad(id(*r1, *b1), id(*r2, *b1), id(*r2, *b2), id(*r1, *b2)),
            _ => unreachable!("tetrahedra are two-coloured"),
        };
        cells.push(cell);
    }
    let s = build_complex(cells)?;

    let mut edges = BTreeMap::new();
    for (t, inc) in k.triangles() {
        if k.mono_colour(t).is_some() {
            continue;
        }
        // the two two-coloured edges of the triangle are the midsection
        // edge's endpoints
        let mut ends = Vec::new();
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            if k.colour(a) != k.colour(b) {
                let (r, bl) = if k.colour(a) == Colour::Red { (a, b) } else { (b, a) };
                ends.push(id(r, bl));
            }
        }
        ends.sort_unstable();
        debug_assert!(!inc.is_empty());
        edges.insert(format!("{}-{}", ends[0], ends[1]), *t);
    }
    let labels = MidsectionLabels {
        vertices: two_coloured,
        cells: (0..k.tetrahedra().len()).collect(),
        edges,
        kind,
    };
    Ok((s, labels))
}
