//! Coloured two-dimensional cell complexes: red and blue triangles plus
//! two-coloured quadrangles.
//!
//! A quadrangle `⟨v0 v1 v2 v3⟩` has red edges `(v0,v1)`, `(v2,v3)` and blue
//! edges `(v1,v2)`, `(v3,v0)`.

mod arcs;
mod canon;
pub mod io;
mod structure;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::union_find::UnionFind;

pub use arcs::{BoundaryArc, BoundaryArcs, NotADisc};
pub use canon::{decode_code, OrientedCodes};
pub use structure::{Partition, QuadChain};


/// Opaque vertex identifier.
pub type Vertex = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub const BOTH: [Colour; 2] = [Colour::Red, Colour::Blue];

    pub fn complement(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CellKind {
    RedTriangle,
    BlueTriangle,
    Quadrangle,
}

impl CellKind {
    pub fn triangle(colour: Colour) -> CellKind {
        match colour {
            Colour::Red => CellKind::RedTriangle,
            Colour::Blue => CellKind::BlueTriangle,
        }
    }

    pub fn arity(self) -> usize {
        match self {
            CellKind::Quadrangle => 4,
            _ => 3,
        }
    }

    /// Colour of a triangle kind; `None` for quadrangles.
    pub fn triangle_colour(self) -> Option<Colour> {
        match self {
            CellKind::RedTriangle => Some(Colour::Red),
            CellKind::BlueTriangle => Some(Colour::Blue),
            CellKind::Quadrangle => None,
        }
    }
}

/// A 2-cell with a cyclic vertex list.
///
/// Equality and hashing respect the cell's symmetries: triangles compare as
/// vertex sets, quadrangles up to the colour-preserving dihedral moves
/// `⟨abcd⟩ = ⟨cdab⟩ = ⟨dcba⟩ = ⟨badc⟩`.
#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    kind: CellKind,
    vertices: Vec<Vertex>,
}

impl Cell {
    /// Builds a cell without validation; `build_complex` checks arity and
    /// distinctness.
    pub fn new(kind: CellKind, vertices: Vec<Vertex>) -> Cell {
        Cell { kind, vertices }
    }

    pub fn red(a: Vertex, b: Vertex, c: Vertex) -> Cell {
        Cell::new(CellKind::RedTriangle, vec![a, b, c])
    }

    pub fn blue(a: Vertex, b: Vertex, c: Vertex) -> Cell {
        Cell::new(CellKind::BlueTriangle, vec![a, b, c])
    }

    pub fn triangle(colour: Colour, a: Vertex, b: Vertex, c: Vertex) -> Cell {
        Cell::new(CellKind::triangle(colour), vec![a, b, c])
    }

    pub fn quad(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Cell {
        Cell::new(CellKind::Quadrangle, vec![a, b, c, d])
    }

    pub fn kind(&self) -> CellKind {
        self.kind
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_triangle(&self) -> bool {
        self.kind != CellKind::Quadrangle
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Colour of the edge from position `i` to position `i + 1`.
    pub fn edge_colour(&self, i: usize) -> Colour {
        match self.kind {
            CellKind::RedTriangle => Colour::Red,
            CellKind::BlueTriangle => Colour::Blue,
            CellKind::Quadrangle => {
                if i.is_multiple_of(2) {
                    Colour::Red
                } else {
                    Colour::Blue
                }
            }
        }
    }

    /// Edges in cyclic order as `(from, to, colour)`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Colour)> + '_ {
        let k = self.vertices.len();
        (0..k).map(move |i| {
            (
                self.vertices[i],
                self.vertices[(i + 1) % k],
                self.edge_colour(i),
            )
        })
    }

    /// Replaces every occurrence of `from` by `to`.
    pub fn renamed(&self, from: Vertex, to: Vertex) -> Cell {
        let vertices = self
            .vertices
            .iter()
            .map(|&v| if v == from { to } else { v })
            .collect();
        Cell::new(self.kind, vertices)
    }

    pub fn relabelled(&self, f: impl Fn(Vertex) -> Vertex) -> Cell {
        Cell::new(self.kind, self.vertices.iter().map(|&v| f(v)).collect())
    }

    /// Representative vertex list under the cell's symmetries.
    pub fn normal_form(&self) -> (CellKind, Vec<Vertex>) {
        let v = &self.vertices;
        match self.kind {
            CellKind::Quadrangle if v.len() == 4 => {
                let candidates = [
                    [v[0], v[1], v[2], v[3]],
                    [v[2], v[3], v[0], v[1]],
                    [v[3], v[2], v[1], v[0]],
                    [v[1], v[0], v[3], v[2]],
                ];
                let best = candidates.iter().min().copied().unwrap_or_default();
                (self.kind, best.to_vec())
            }
            _ => {
                let mut sorted = v.clone();
                sorted.sort_unstable();
                (self.kind, sorted)
            }
        }
    }
}

impl PartialEq for Cell {
    fn eq(&self, other: &Self) -> bool {
        self.normal_form() == other.normal_form()
    }
}

impl Eq for Cell {}

impl std::hash::Hash for Cell {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.normal_form().hash(state);
    }
}

/// An edge of a validated complex with its incident cells (one or two).
#[derive(Clone, Debug)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
    colour: Colour,
    cells: Vec<usize>,
}

impl Edge {
    /// Endpoints with the smaller identifier first.
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn colour(&self) -> Colour {
        self.colour
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn is_boundary(&self) -> bool {
        self.cells.len() == 1
    }

    pub fn other_cell(&self, cell: usize) -> Option<usize> {
        self.cells.iter().copied().find(|&c| c != cell)
    }

    pub fn has_vertex(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    pub fn other_end(&self, x: Vertex) -> Vertex {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TopologyClass {
    Disc,
    Sphere,
    Other,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Topology {
    pub class: TopologyClass,
    pub euler: i64,
    pub boundary_components: usize,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BuildError {
    #[error("the cell list is empty")]
    Empty,
    #[error("cell {cell} is malformed: {reason}")]
    MalformedCell { cell: usize, reason: &'static str },
    #[error("edge ({u}, {v}) is red in one cell and blue in another")]
    EdgeColourConflict { u: Vertex, v: Vertex },
    #[error("edge ({u}, {v}) lies in more than two cells")]
    EdgeInTooManyCells { u: Vertex, v: Vertex },
    #[error("cells {first} and {second} share more than one edge")]
    CellsShareTwoEdges { first: usize, second: usize },
    #[error("the link of vertex {vertex} is neither a simple path nor a simple cycle")]
    NonSurfaceLink { vertex: Vertex },
    #[error("the complex is not connected")]
    Disconnected,
}

/// A validated coloured surface. Immutable after construction.
#[derive(Clone, Debug)]
pub struct SurfaceComplex {
    cells: Vec<Cell>,
    vertices: Vec<Vertex>,
    vindex: HashMap<Vertex, usize>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<(Vertex, Vertex), usize>,
    cell_edges: Vec<Vec<usize>>,
    vertex_edges: Vec<Vec<usize>>,
    topology: Topology,
}

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Validates `cells` as a connected coloured surface.
pub fn build_complex(cells: Vec<Cell>) -> Result<SurfaceComplex, BuildError> {
    if cells.is_empty() {
        return Err(BuildError::Empty);
    }
    for (i, cell) in cells.iter().enumerate() {
        if cell.vertices.len() != cell.kind.arity() {
            return Err(BuildError::MalformedCell {
                cell: i,
                reason: "wrong number of vertices",
            });
        }
        let vs = &cell.vertices;
        for a in 0..vs.len() {
            for b in a + 1..vs.len() {
                if vs[a] == vs[b] {
                    return Err(BuildError::MalformedCell {
                        cell: i,
                        reason: "repeated vertex",
                    });
                }
            }
        }
    }

    let mut vertices: Vec<Vertex> = cells.iter().flat_map(|c| c.vertices.iter().copied()).collect();
    vertices.sort_unstable();
    vertices.dedup();
    let vindex: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut edges: Vec<Edge> = Vec::new();
    let mut edge_lookup: HashMap<(Vertex, Vertex), usize> = HashMap::new();
    let mut cell_edges = Vec::with_capacity(cells.len());
    for (ci, cell) in cells.iter().enumerate() {
        let mut ids = Vec::with_capacity(cell.len());
        for (a, b, colour) in cell.edges() {
            let k = key(a, b);
            let id = match edge_lookup.get(&k) {
                Some(&id) => {
                    let e = &mut edges[id];
                    if e.colour != colour {
                        return Err(BuildError::EdgeColourConflict { u: k.0, v: k.1 });
                    }
                    if e.cells.len() >= 2 {
                        return Err(BuildError::EdgeInTooManyCells { u: k.0, v: k.1 });
                    }
                    e.cells.push(ci);
                    id
                }
                None => {
                    edges.push(Edge {
                        u: k.0,
                        v: k.1,
                        colour,
                        cells: vec![ci],
                    });
                    edge_lookup.insert(k, edges.len() - 1);
                    edges.len() - 1
                }
            };
            ids.push(id);
        }
        cell_edges.push(ids);
    }

    for (ci, ids) in cell_edges.iter().enumerate() {
        let mut seen: Vec<usize> = Vec::with_capacity(4);
        for &e in ids {
            if let Some(o) = edges[e].other_cell(ci) {
                if seen.contains(&o) {
                    return Err(BuildError::CellsShareTwoEdges {
                        first: ci.min(o),
                        second: ci.max(o),
                    });
                }
                seen.push(o);
            }
        }
    }

    let mut vertex_edges = vec![Vec::new(); vertices.len()];
    for (id, e) in edges.iter().enumerate() {
        vertex_edges[vindex[&e.u]].push(id);
        vertex_edges[vindex[&e.v]].push(id);
    }

    // Each cell at v joins its two edges at v; the link is a path or a cycle
    // exactly when these joins connect all edges at v.
    let mut vertex_cells: Vec<Vec<(usize, usize)>> = vec![Vec::new(); vertices.len()];
    for (ci, cell) in cells.iter().enumerate() {
        let k = cell.len();
        for i in 0..k {
            let prev = cell_edges[ci][(i + k - 1) % k];
            let next = cell_edges[ci][i];
            vertex_cells[vindex[&cell.vertices[i]]].push((prev, next));
        }
    }
    for (vi, joins) in vertex_cells.iter().enumerate() {
        let local = &vertex_edges[vi];
        let pos = |e: usize| local.iter().position(|&x| x == e).unwrap_or(0);
        let mut uf = UnionFind::new(local.len());
        for &(a, b) in joins {
            uf.union(pos(a), pos(b));
        }
        let (_, blocks) = uf.labels();
        if blocks != 1 {
            return Err(BuildError::NonSurfaceLink {
                vertex: vertices[vi],
            });
        }
    }

    let mut uf = UnionFind::new(vertices.len());
    for cell in &cells {
        let first = vindex[&cell.vertices[0]];
        for v in &cell.vertices[1..] {
            uf.union(first, vindex[v]);
        }
    }
    if uf.labels().1 != 1 {
        return Err(BuildError::Disconnected);
    }

    let topology = compute_topology(&vertices, &vindex, &edges, cells.len());
    Ok(SurfaceComplex {
        cells,
        vertices,
        vindex,
        edges,
        edge_lookup,
        cell_edges,
        vertex_edges,
        topology,
    })
}

fn compute_topology(
    vertices: &[Vertex],
    vindex: &HashMap<Vertex, usize>,
    edges: &[Edge],
    faces: usize,
) -> Topology {
    let euler = vertices.len() as i64 - edges.len() as i64 + faces as i64;
    let mut uf = UnionFind::new(vertices.len());
    let mut on_boundary = vec![false; vertices.len()];
    let mut boundary_edges = 0;
    for e in edges.iter().filter(|e| e.is_boundary()) {
        boundary_edges += 1;
        let (a, b) = (vindex[&e.u], vindex[&e.v]);
        on_boundary[a] = true;
        on_boundary[b] = true;
        uf.union(a, b);
    }
    let mut roots: Vec<usize> = (0..vertices.len())
        .filter(|&i| on_boundary[i])
        .map(|i| uf.find(i))
        .collect();
    roots.sort_unstable();
    roots.dedup();
    let boundary_components = roots.len();
    let class = if euler == 1 && boundary_components == 1 {
        TopologyClass::Disc
    } else if euler == 2 && boundary_edges == 0 {
        TopologyClass::Sphere
    } else {
        TopologyClass::Other
    };
    Topology {
        class,
        euler,
        boundary_components,
    }
}

impl SurfaceComplex {
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &Cell {
        &self.cells[i]
    }

    /// Sorted vertex identifiers.
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge {
        &self.edges[id]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vindex.contains_key(&v)
    }

    /// Dense index of `v` in `vertices()`.
    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vindex.get(&v).copied()
    }

    pub fn edge_between(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.edge_lookup.get(&key(a, b)).copied()
    }

    /// Edge identifiers of cell `i` in cyclic order (edge `j` runs from
    /// vertex `j` to vertex `j + 1`).
    pub fn cell_edges(&self, i: usize) -> &[usize] {
        &self.cell_edges[i]
    }

    /// Edges incident to `v`.
    pub fn edges_at(&self, v: Vertex) -> &[usize] {
        &self.vertex_edges[self.vindex[&v]]
    }

    /// Cells adjacent to `i` across a shared edge, as `(edge, cell)`.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cell_edges[i]
            .iter()
            .filter_map(move |&e| self.edges[e].other_cell(i).map(|o| (e, o)))
    }

    pub fn topology(&self) -> Topology {
        self.topology
    }

    pub fn classify(&self) -> TopologyClass {
        self.topology.class
    }

    pub fn is_disc(&self) -> bool {
        self.topology.class == TopologyClass::Disc
    }

    pub fn is_sphere(&self) -> bool {
        self.topology.class == TopologyClass::Sphere
    }

    pub fn count_kind(&self, kind: CellKind) -> usize {
        self.cells.iter().filter(|c| c.kind == kind).count()
    }

    pub fn triangle_count(&self, colour: Colour) -> usize {
        self.count_kind(CellKind::triangle(colour))
    }

    pub fn quad_count(&self) -> usize {
        self.count_kind(CellKind::Quadrangle)
    }

    pub fn is_boundary_vertex(&self, v: Vertex) -> bool {
        self.edges_at(v).iter().any(|&e| self.edges[e].is_boundary())
    }

    pub fn boundary_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.edges.len()).filter(move |&e| self.edges[e].is_boundary())
    }

    /// The boundary of a disc as a cyclic vertex sequence, starting at the
    /// smallest boundary vertex and heading to its smaller boundary
    /// neighbour. `None` unless the complex is a disc.
    pub fn boundary_cycle(&self) -> Option<Vec<Vertex>> {
        if !self.is_disc() {
            return None;
        }
        let start = self
            .vertices
            .iter()
            .copied()
            .find(|&v| self.is_boundary_vertex(v))?;
        let next_of = |v: Vertex, prev: Option<Vertex>| -> Option<Vertex> {
            let mut nbrs: Vec<Vertex> = self
                .edges_at(v)
                .iter()
                .filter(|&&e| self.edges[e].is_boundary())
                .map(|&e| self.edges[e].other_end(v))
                .collect();
            nbrs.sort_unstable();
            match prev {
                None => nbrs.first().copied(),
                Some(p) => nbrs.into_iter().find(|&x| x != p),
            }
        };
        let mut cycle = vec![start];
        let mut prev = None;
        let mut cur = start;
        loop {
            let next = next_of(cur, prev)?;
            if next == start {
                break;
            }
            if cycle.len() > self.vertices.len() {
                return None;
            }
            cycle.push(next);
            prev = Some(cur);
            cur = next;
        }
        Some(cycle)
    }

    /// Cells around `v` in link order, with the edges between them.
    ///
    /// For a boundary vertex the walk starts at its boundary edge with the
    /// smaller far endpoint, so `edges` has one more entry than `cells` and
    /// both ends are boundary edges. For an interior vertex `edges[i]` is
    /// the edge between `cells[i]` and `cells[i + 1]` cyclically.
    pub fn star(&self, v: Vertex) -> (Vec<usize>, Vec<usize>) {
        let at = self.edges_at(v);
        let mut boundary: Vec<usize> = at.iter().copied().filter(|&e| self.edges[e].is_boundary()).collect();
        boundary.sort_by_key(|&e| self.edges[e].other_end(v));
        let first_edge = boundary.first().copied().unwrap_or_else(|| *at.iter().min().unwrap());
        let mut edges = vec![first_edge];
        let mut cells = Vec::new();
        let mut cur_edge = first_edge;
        let mut cur_cell = self.edges[first_edge].cells[0];
        loop {
            cells.push(cur_cell);
            let other = self.cell_edges[cur_cell]
                .iter()
                .copied()
                .find(|&e| e != cur_edge && self.edges[e].has_vertex(v))
                .expect("cell has two edges at each vertex");
            if other == first_edge {
                break;
            }
            edges.push(other);
            match self.edges[other].other_cell(cur_cell) {
                Some(next) => {
                    cur_edge = other;
                    cur_cell = next;
                }
                None => break,
            }
        }
        (cells, edges)
    }

    /// A copy restricted to the given cells. Fails if the result is not a
    /// connected surface.
    pub fn subcomplex(&self, keep: &[usize]) -> Result<SurfaceComplex, BuildError> {
        build_complex(keep.iter().map(|&i| self.cells[i].clone()).collect())
    }

    /// Relabels vertices densely as 0..V in sorted-id order.
    pub fn densified(&self) -> SurfaceComplex {
        let cells = self
            .cells
            .iter()
            .map(|c| c.relabelled(|v| self.vindex[&v] as Vertex))
            .collect();
        build_complex(cells).expect("relabelling preserves validity")
    }

    pub fn max_vertex(&self) -> Vertex {
        self.vertices.last().copied().unwrap_or(0)
    }

    pub fn canonical_code(&self) -> Vec<u8> {
        canon::canonical_code(self)
    }

    /// Codes restricted to the two orientation classes of flags; `None`
    /// for non-orientable surfaces. Used to tell mirror images apart.
    pub fn oriented_codes(&self, vertex_class: &dyn Fn(Vertex) -> u8) -> Option<OrientedCodes> {
        canon::oriented_codes(self, vertex_class)
    }
}

impl PartialEq for SurfaceComplex {
    /// Equal as labelled cell sets.
    fn eq(&self, other: &Self) -> bool {
        if self.cells.len() != other.cells.len() {
            return false;
        }
        let mut a: Vec<_> = self.cells.iter().map(Cell::normal_form).collect();
        let mut b: Vec<_> = other.cells.iter().map(Cell::normal_form).collect();
        a.sort();
        b.sort();
        a == b
    }
}

impl Eq for SurfaceComplex {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_quadrangle_is_a_disc() {
        let s = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
        let t = s.topology();
        assert_eq!(t.class, TopologyClass::Disc);
        assert_eq!(t.euler, 1);
        assert_eq!(t.boundary_components, 1);
        assert_eq!(s.boundary_edges().count(), 4);
    }

    #[test]
    fn chain_counts() {
        let s = fixtures::chain3();
        assert_eq!((s.vertex_count(), s.edge_count(), s.cell_count()), (6, 8, 3));
        assert_eq!(s.topology().euler, 1);
        assert!(s.is_disc());
        // e–a–d–c–f–b, read from the smallest boundary vertex a = 0
        assert_eq!(s.boundary_cycle().unwrap(), vec![0, 3, 2, 5, 1, 4]);
    }

    #[test]
    fn quads_glued_along_both_red_edges_share_two_edges() {
        // both quads have red edges 01 and 23; their blue edges differ
        let err = build_complex(vec![Cell::quad(0, 1, 2, 3), Cell::quad(1, 0, 2, 3)]).unwrap_err();
        assert!(matches!(err, BuildError::CellsShareTwoEdges { .. }));
    }

    #[test]
    fn duplicate_triangles_share_edges() {
        let err = build_complex(vec![Cell::red(0, 1, 2), Cell::red(2, 1, 0)]).unwrap_err();
        assert!(matches!(err, BuildError::CellsShareTwoEdges { .. }));
    }

    #[test]
    fn colour_conflict() {
        let err = build_complex(vec![Cell::red(0, 1, 2), Cell::blue(1, 0, 3)]).unwrap_err();
        assert_eq!(err, BuildError::EdgeColourConflict { u: 0, v: 1 });
    }

    #[test]
    fn three_cells_on_one_edge() {
        let err = build_complex(vec![Cell::red(0, 1, 2), Cell::red(0, 1, 3), Cell::red(0, 1, 4)]).unwrap_err();
        assert_eq!(err, BuildError::EdgeInTooManyCells { u: 0, v: 1 });
    }

    #[test]
    fn pinched_vertex_is_not_a_surface() {
        let err = build_complex(vec![Cell::red(0, 1, 2), Cell::red(0, 3, 4)]).unwrap_err();
        assert_eq!(err, BuildError::NonSurfaceLink { vertex: 0 });
    }

    #[test]
    fn disconnected() {
        let err = build_complex(vec![Cell::red(0, 1, 2), Cell::red(3, 4, 5)]).unwrap_err();
        assert_eq!(err, BuildError::Disconnected);
    }

    #[test]
    fn malformed_cells() {
        assert!(matches!(
            build_complex(vec![Cell::red(0, 0, 1)]),
            Err(BuildError::MalformedCell { .. })
        ));
        assert!(matches!(
            build_complex(vec![Cell::new(CellKind::Quadrangle, vec![0, 1, 2])]),
            Err(BuildError::MalformedCell { .. })
        ));
        assert_eq!(build_complex(vec![]).unwrap_err(), BuildError::Empty);
    }

    #[test]
    fn quadrangle_symmetries() {
        let q = Cell::quad(0, 1, 2, 3);
        assert_eq!(q, Cell::quad(3, 2, 1, 0));
        assert_eq!(q, Cell::quad(2, 3, 0, 1));
        assert_eq!(q, Cell::quad(1, 0, 3, 2));
        // a rotation by one swaps the edge colours
        assert_ne!(q, Cell::quad(1, 2, 3, 0));
        assert_eq!(Cell::red(0, 1, 2), Cell::red(2, 0, 1));
        assert_ne!(Cell::red(0, 1, 2), Cell::blue(0, 1, 2));
    }

    #[test]
    fn tetrahedron_boundary_is_a_sphere() {
        let s = build_complex(vec![
            Cell::red(0, 1, 2),
            Cell::red(0, 3, 1),
            Cell::red(1, 3, 2),
            Cell::red(2, 3, 0),
        ])
        .unwrap();
        assert_eq!(s.topology().class, TopologyClass::Sphere);
        assert_eq!(s.topology().euler, 2);
        assert_eq!(s.boundary_cycle(), None);
    }

    #[test]
    fn annulus_is_other() {
        let s = fixtures::quad_belt(4);
        assert_eq!(s.topology().class, TopologyClass::Other);
        assert_eq!(s.topology().euler, 0);
        assert_eq!(s.topology().boundary_components, 2);
    }

    #[test]
    fn star_order() {
        let s = fixtures::chain3();
        // b = 1 lies on all three cells
        let (cells, edges) = s.star(1);
        assert_eq!(cells.len(), 3);
        assert_eq!(edges.len(), 4);
        assert!(s.edge(edges[0]).is_boundary());
        assert!(s.edge(*edges.last().unwrap()).is_boundary());
    }
}
