//! From a midsection back to its slice, plus the slice builders and the
//! cut that turns a sphere midsection into a disc midsection.
//!
//! Red vertices of the slice are the blue components of the midsection and
//! blue vertices are its red components. A red triangle `⟨abc⟩` becomes
//! `(r_a, r_b, r_c, b_a)`, a blue one `(b_a, b_b, b_c, r_a)` and a
//! quadrangle `⟨abcd⟩` becomes `(r_a, r_b, b_a, b_c)`.

mod builders;
mod cut;
mod local;

use thiserror::Error;

use crate::causal3d::{build_complex3, CVertex, Complex3, Complex3Error};
use crate::conditions::{membership, ConditionReport, MidsectionKind};
use crate::surface::{CellKind, Colour, SurfaceComplex, Vertex};
use crate::union_find::UnionFind;

pub use builders::{build_disc_slice, build_sphere_slice, BuildSliceError};
pub use cut::{cut_to_disc, CutError, CutResult, EulerAudit};
pub use local::{local_construction, local_construction_from, LocalConstructionError, Move, MoveSequence, ReplayError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("the midsection fails membership: {}", .report.root_failure().map_or("", |r| r.condition.name()))]
    MembershipFailed { report: Box<ConditionReport> },
    #[error("reconstruction is not a valid complex: {0}")]
    Build(#[from] Complex3Error),
}

/// The slice whose midsection is `s`, after checking membership.
pub fn reconstruct(s: &SurfaceComplex, kind: MidsectionKind) -> Result<Complex3, ReconstructError> {
    let report = membership(s, kind);
    if !report.verdict {
        return Err(ReconstructError::MembershipFailed { report: Box::new(report) });
    }
    Ok(reconstruct_unchecked(s)?)
}

/// The identification construction without the membership check. Red
/// vertex ids come first, numbered by the smallest midsection vertex of
/// their blue component; blue vertex ids follow.
pub fn reconstruct_unchecked(s: &SurfaceComplex) -> Result<Complex3, Complex3Error> {
    let blue = s.component_table(Colour::Blue);
    let red = s.component_table(Colour::Red);
    let offset = blue.count as Vertex;
    let r = |v: Vertex| s.component_of(&blue, v) as Vertex;
    let b = |v: Vertex| offset + s.component_of(&red, v) as Vertex;
    let tets = s
        .cells()
        .iter()
        .map(|c| {
            let v = c.vertices();
            match c.kind() {
                CellKind::RedTriangle => [r(v[0]), r(v[1]), r(v[2]), b(v[0])],
                CellKind::BlueTriangle => [b(v[0]), b(v[1]), b(v[2]), r(v[0])],
                CellKind::Quadrangle => [r(v[0]), r(v[1]), b(v[0]), b(v[2])],
            }
        })
        .collect();
    build_complex3(coloured_vertices(blue.count, red.count), tets)
}

fn coloured_vertices(reds: usize, blues: usize) -> Vec<CVertex> {
    (0..reds + blues)
        .map(|i| CVertex {
            id: i as Vertex,
            colour: if i < reds { Colour::Red } else { Colour::Blue },
        })
        .collect()
}

/// Reconstruction by gluing: every cell gets its own tetrahedron with
/// private vertices, and tetrahedra are glued along the triangles dual to
/// shared midsection edges. Used to cross-check [`reconstruct_unchecked`].
pub fn reconstruct_by_gluing(s: &SurfaceComplex) -> Result<Complex3, Complex3Error> {
    // per cell and corner: the red and blue slot of the tetrahedron edge
    // dual to that corner
    let mut rslot = Vec::new();
    let mut bslot = Vec::new();
    let (mut nr, mut nb) = (0usize, 0usize);
    let fresh = |n: &mut usize| {
        *n += 1;
        *n - 1
    };
    for c in s.cells() {
        let (r, b): (Vec<usize>, Vec<usize>) = match c.kind() {
            CellKind::RedTriangle => {
                let bb = fresh(&mut nb);
                ((0..3).map(|_| fresh(&mut nr)).collect(), vec![bb; 3])
            }
            CellKind::BlueTriangle => {
                let rr = fresh(&mut nr);
                (vec![rr; 3], (0..3).map(|_| fresh(&mut nb)).collect())
            }
            CellKind::Quadrangle => {
                let (r0, r1) = (fresh(&mut nr), fresh(&mut nr));
                let (b0, b1) = (fresh(&mut nb), fresh(&mut nb));
                (vec![r0, r1, r1, r0], vec![b0, b0, b1, b1])
            }
        };
        rslot.push(r);
        bslot.push(b);
    }
    let mut ru = UnionFind::new(nr);
    let mut bu = UnionFind::new(nb);
    let corner = |cell: usize, v: Vertex| s.cell(cell).vertices().iter().position(|&x| x == v).unwrap();
    for e in s.edges() {
        if let [f, g] = e.cells()[..] {
            let (x, y) = e.endpoints();
            for v in [x, y] {
                let (i, j) = (corner(f, v), corner(g, v));
                ru.union(rslot[f][i], rslot[g][j]);
                bu.union(bslot[f][i], bslot[g][j]);
            }
        }
    }
    let (rl, rc) = ru.labels();
    let (bl, bc) = bu.labels();
    let tets = (0..s.cell_count())
        .map(|f| {
            let mut t: Vec<Vertex> = rslot[f].iter().map(|&x| rl[x] as Vertex).collect();
            t.extend(bslot[f].iter().map(|&x| (rc + bl[x]) as Vertex));
            t.sort_unstable();
            t.dedup();
            [t[0], t[1], t[2], t[3]]
        })
        .collect();
    build_complex3(coloured_vertices(rc, bc), tets)
}

#[cfg(test)]
mod tests;
