//! Coloured three-dimensional simplicial complexes and causal slices.
//!
//! Simplices are determined by their vertex sets. Every tetrahedron has
//! vertices of both colours; its type `(p, q)` counts red and blue vertices.

mod iso;
pub mod io;
mod layered;
mod split;
mod validate;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conditions::MidsectionKind;
use crate::surface::{build_complex, Cell, Colour, SurfaceComplex, Vertex};
use crate::union_find::UnionFind;

pub use iso::{code3, isomorphic3};
pub use layered::{layered_union, LayerError, LayeredComplex};
pub use split::{boundary_split, BoundarySplit, SplitError};
pub use validate::{monochrome_on_boundary, validate_slice, Check, SliceReport};

/// A vertex together with its colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CVertex {
    pub id: Vertex,
    pub colour: Colour,
}

/// Sorted vertex ids of a tetrahedron.
pub type Tetra = [Vertex; 4];
/// Sorted vertex ids of a triangle.
pub type Triangle = [Vertex; 3];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SliceKind {
    Disc,
    Sphere,
}

impl SliceKind {
    pub fn euler(self) -> i64 {
        match self {
            SliceKind::Disc => 1,
            SliceKind::Sphere => 2,
        }
    }
}

impl From<SliceKind> for MidsectionKind {
    fn from(k: SliceKind) -> Self {
        match k {
            SliceKind::Disc => MidsectionKind::Disc,
            SliceKind::Sphere => MidsectionKind::Sphere,
        }
    }
}

impl From<MidsectionKind> for SliceKind {
    fn from(k: MidsectionKind) -> Self {
        match k {
            MidsectionKind::Disc => SliceKind::Disc,
            MidsectionKind::Sphere => SliceKind::Sphere,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", rename_all = "kebab-case")]
pub enum Complex3Error {
    #[error("no tetrahedra")]
    Empty,
    #[error("vertex {vertex} listed twice")]
    DuplicateVertex { vertex: Vertex },
    #[error("tetrahedron {tetra:?} uses undeclared vertex {vertex}")]
    UnknownVertex { tetra: Vec<Vertex>, vertex: Vertex },
    #[error("tetrahedron {tetra:?} repeats a vertex")]
    DegenerateTetra { tetra: Vec<Vertex> },
    #[error("tetrahedron {tetra:?} is monochromatic")]
    MonochromeTetra { tetra: Tetra },
    #[error("tetrahedron {tetra:?} appears twice")]
    DuplicateTetra { tetra: Tetra },
    #[error("triangle {triangle:?} lies in more than two tetrahedra")]
    NonPseudomanifold { triangle: Triangle },
    #[error("the tetrahedra are not strongly connected or a vertex is unused")]
    Disconnected,
}

/// Simplex counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts3 {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    pub tetrahedra: usize,
}

impl Counts3 {
    pub fn euler(&self) -> i64 {
        self.vertices as i64 - self.edges as i64 + self.triangles as i64 - self.tetrahedra as i64
    }
}

/// A validated, strongly connected, two-coloured pseudomanifold.
#[derive(Clone, Debug)]
pub struct Complex3 {
    vertices: Vec<CVertex>,
    colour: HashMap<Vertex, Colour>,
    tets: Vec<Tetra>,
    triangles: BTreeMap<Triangle, Vec<usize>>,
    edges: BTreeSet<[Vertex; 2]>,
}

pub(crate) fn sorted4(t: [Vertex; 4]) -> Tetra {
    let mut t = t;
    t.sort_unstable();
    t
}

pub(crate) fn sorted3(t: [Vertex; 3]) -> Triangle {
    let mut t = t;
    t.sort_unstable();
    t
}

/// The face of `t` opposite its `i`-th vertex.
pub(crate) fn face(t: &Tetra, i: usize) -> Triangle {
    let mut f = [0; 3];
    let mut k = 0;
    for (j, &v) in t.iter().enumerate() {
        if j != i {
            f[k] = v;
            k += 1;
        }
    }
    f
}

/// Validates a coloured complex.
pub fn build_complex3(vertices: Vec<CVertex>, tetrahedra: Vec<[Vertex; 4]>) -> Result<Complex3, Complex3Error> {
    if tetrahedra.is_empty() {
        return Err(Complex3Error::Empty);
    }
    let mut colour = HashMap::new();
    for v in &vertices {
        if colour.insert(v.id, v.colour).is_some() {
            return Err(Complex3Error::DuplicateVertex { vertex: v.id });
        }
    }
    let mut tets = Vec::with_capacity(tetrahedra.len());
    let mut seen = BTreeSet::new();
    for raw in tetrahedra {
        if let Some(&v) = raw.iter().find(|v| !colour.contains_key(v)) {
            return Err(Complex3Error::UnknownVertex { tetra: raw.to_vec(), vertex: v });
        }
        let t = sorted4(raw);
        if t.windows(2).any(|w| w[0] == w[1]) {
            return Err(Complex3Error::DegenerateTetra { tetra: raw.to_vec() });
        }
        let reds = t.iter().filter(|v| colour[v] == Colour::Red).count();
        if reds == 0 || reds == 4 {
            return Err(Complex3Error::MonochromeTetra { tetra: t });
        }
        if !seen.insert(t) {
            return Err(Complex3Error::DuplicateTetra { tetra: t });
        }
        tets.push(t);
    }
    let mut triangles: BTreeMap<Triangle, Vec<usize>> = BTreeMap::new();
    let mut edges = BTreeSet::new();
    for (i, t) in tets.iter().enumerate() {
        for j in 0..4 {
            let f = face(t, j);
            let inc = triangles.entry(f).or_default();
            inc.push(i);
            if inc.len() > 2 {
                return Err(Complex3Error::NonPseudomanifold { triangle: f });
            }
        }
        for a in 0..4 {
            for b in a + 1..4 {
                edges.insert([t[a], t[b]]);
            }
        }
    }
    let mut uf = UnionFind::new(tets.len());
    for inc in triangles.values() {
        if let [a, b] = inc[..] {
            uf.union(a, b);
        }
    }
    let used: BTreeSet<Vertex> = tets.iter().flatten().copied().collect();
    if uf.labels().1 != 1 || used.len() != colour.len() {
        return Err(Complex3Error::Disconnected);
    }
    let mut vertices = vertices;
    vertices.sort();
    Ok(Complex3 {
        vertices,
        colour,
        tets,
        triangles,
        edges,
    })
}

impl Complex3 {
    pub fn vertices(&self) -> &[CVertex] {
        &self.vertices
    }

    pub fn colour(&self, v: Vertex) -> Colour {
        self.colour[&v]
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.colour.contains_key(&v)
    }

    pub fn tetrahedra(&self) -> &[Tetra] {
        &self.tets
    }

    /// Triangles with the indices of the tetrahedra containing them.
    pub fn triangles(&self) -> &BTreeMap<Triangle, Vec<usize>> {
        &self.triangles
    }

    pub fn edges(&self) -> &BTreeSet<[Vertex; 2]> {
        &self.edges
    }

    pub fn counts(&self) -> Counts3 {
        Counts3 {
            vertices: self.vertices.len(),
            edges: self.edges.len(),
            triangles: self.triangles.len(),
            tetrahedra: self.tets.len(),
        }
    }

    /// `(red, blue)` vertex counts of tetrahedron `t`.
    pub fn tet_type(&self, t: &Tetra) -> (usize, usize) {
        let reds = t.iter().filter(|v| self.colour[v] == Colour::Red).count();
        (reds, 4 - reds)
    }

    /// The colour shared by all vertices of `simplex`, if any.
    pub fn mono_colour(&self, simplex: &[Vertex]) -> Option<Colour> {
        let c = self.colour[&simplex[0]];
        simplex.iter().all(|v| self.colour[v] == c).then_some(c)
    }

    pub fn is_boundary_triangle(&self, t: &Triangle) -> bool {
        self.triangles.get(t).is_some_and(|inc| inc.len() == 1)
    }

    pub fn boundary_triangles(&self) -> Vec<Triangle> {
        self.triangles
            .iter()
            .filter(|(_, inc)| inc.len() == 1)
            .map(|(t, _)| *t)
            .collect()
    }

    /// For each tetrahedron, the neighbour across the face opposite each
    /// vertex.
    pub fn face_neighbours(&self) -> Vec<[Option<usize>; 4]> {
        self.tets
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut out = [None; 4];
                for (j, slot) in out.iter_mut().enumerate() {
                    *slot = self.triangles[&face(t, j)].iter().copied().find(|&o| o != i);
                }
                out
            })
            .collect()
    }

    /// The link of `v`: the faces opposite `v` in the tetrahedra around it.
    pub fn link(&self, v: Vertex) -> Vec<Triangle> {
        self.tets
            .iter()
            .filter(|t| t.contains(&v))
            .map(|t| face(t, t.iter().position(|&x| x == v).unwrap()))
            .collect()
    }

    pub fn max_vertex(&self) -> Vertex {
        self.vertices.last().map_or(0, |v| v.id)
    }

    /// The same complex with vertex ids passed through `f`.
    pub fn relabelled(&self, f: impl Fn(Vertex) -> Vertex) -> Complex3 {
        let vertices = self
            .vertices
            .iter()
            .map(|v| CVertex {
                id: f(v.id),
                colour: v.colour,
            })
            .collect();
        let tets = self.tets.iter().map(|t| t.map(&f)).collect();
        build_complex3(vertices, tets).expect("relabelling preserves validity")
    }

    /// The same complex with every vertex colour flipped.
    pub fn colours_swapped(&self) -> Complex3 {
        let vertices = self
            .vertices
            .iter()
            .map(|v| CVertex {
                id: v.id,
                colour: v.colour.complement(),
            })
            .collect();
        build_complex3(vertices, self.tets.clone()).expect("colour swap preserves validity")
    }
}

/// Euler characteristic `V - E + F - T`.
pub fn euler3(m: &Complex3) -> i64 {
    m.counts().euler()
}

/// Builds an uncoloured triangulated surface from `triangles`, storing each
/// one as a red cell.
pub(crate) fn triangle_surface(triangles: &[Triangle]) -> Option<SurfaceComplex> {
    if triangles.is_empty() {
        return None;
    }
    build_complex(triangles.iter().map(|t| Cell::red(t[0], t[1], t[2])).collect()).ok()
}

#[cfg(test)]
mod tests;
