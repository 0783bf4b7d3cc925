//! Canonical codes by minimising a breadth-first relabelling over root flags.
//!
//! A flag is a cell together with a starting vertex and a direction. From a
//! root flag the traversal visits cells breadth first; each neighbour is
//! entered across the shared edge in the opposite direction, so the whole
//! labelling is forced by the root. The lexicographically smallest output
//! over all admissible root flags is the code.

use std::collections::VecDeque;

use super::{Cell, CellKind, SurfaceComplex, Vertex};

/// Which root flags to minimise over.
#[derive(Clone, Copy)]
pub(crate) enum FlagSet<'a> {
    /// Both directions in every cell: invariant under reflections.
    All,
    /// Only flags whose direction matches the given per-cell orientation.
    Oriented(&'a [i8]),
}

/// Minimal codes over the two orientation classes of flags.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrientedCodes {
    /// Flags agreeing with the stored vertex order of cell 0.
    pub positive: Vec<u8>,
    pub negative: Vec<u8>,
}

impl OrientedCodes {
    /// True when the surface is not isomorphic to its mirror image.
    pub fn is_chiral(&self) -> bool {
        self.positive != self.negative
    }
}

struct Layout {
    /// Dense vertex indices per cell.
    cells: Vec<Vec<usize>>,
    kinds: Vec<CellKind>,
    /// `nbr[c][e]` for the edge from position `e` to `e + 1`: the other
    /// cell and the positions there of the edge's two ends.
    nbr: Vec<Vec<Option<(usize, usize, usize)>>>,
    vertex_count: usize,
}

fn layout(s: &SurfaceComplex) -> Layout {
    let cells: Vec<Vec<usize>> = s
        .cells()
        .iter()
        .map(|c| c.vertices().iter().map(|v| s.vindex[v]).collect())
        .collect();
    let mut nbr = Vec::with_capacity(cells.len());
    for (ci, verts) in cells.iter().enumerate() {
        let k = verts.len();
        let mut row = Vec::with_capacity(k);
        for e in 0..k {
            let edge = s.edge(s.cell_edges(ci)[e]);
            row.push(edge.other_cell(ci).map(|o| {
                let ov = &cells[o];
                let pa = ov.iter().position(|&x| x == verts[e]).expect("shared edge");
                let pb = ov.iter().position(|&x| x == verts[(e + 1) % k]).expect("shared edge");
                (o, pa, pb)
            }));
        }
        nbr.push(row);
    }
    Layout {
        kinds: s.cells().iter().map(Cell::kind).collect(),
        cells,
        nbr,
        vertex_count: s.vertex_count(),
    }
}

fn symbol(kind: CellKind, k: usize, start: usize, dir: i8) -> u32 {
    match kind {
        CellKind::RedTriangle => 0,
        CellKind::BlueTriangle => 1,
        CellKind::Quadrangle => {
            let first = if dir > 0 { start } else { (start + k - 1) % k };
            if first % 2 == 0 {
                2
            } else {
                3
            }
        }
    }
}

fn at(verts: &[usize], start: usize, dir: i8, i: usize) -> usize {
    let k = verts.len();
    if dir > 0 {
        verts[(start + i) % k]
    } else {
        verts[(start + k * 4 - i) % k]
    }
}

/// Incremental comparison against the best code so far.
struct Emitter<'a> {
    out: &'a mut Vec<u32>,
    best: &'a [u32],
    less: bool,
}

impl Emitter<'_> {
    /// Returns false once the output is known to exceed `best`.
    fn push(&mut self, x: u32) -> bool {
        let i = self.out.len();
        self.out.push(x);
        if !self.less && !self.best.is_empty() {
            match x.cmp(&self.best[i]) {
                std::cmp::Ordering::Greater => return false,
                std::cmp::Ordering::Less => self.less = true,
                std::cmp::Ordering::Equal => {}
            }
        }
        true
    }
}

struct Traverser {
    label: Vec<u32>,
    order: Vec<usize>,
    visited: Vec<bool>,
    queue: VecDeque<(usize, usize, i8)>,
}

impl Traverser {
    /// Writes the code for `root` into `out`; returns true when it is
    /// strictly smaller than `best` (or `best` is empty).
    fn run(
        &mut self,
        lay: &Layout,
        vclass: &[u8],
        header: &[u32],
        root: (usize, usize, i8),
        best: &[u32],
        out: &mut Vec<u32>,
    ) -> bool {
        out.clear();
        self.label.iter_mut().for_each(|l| *l = u32::MAX);
        self.visited.iter_mut().for_each(|v| *v = false);
        self.order.clear();
        self.queue.clear();
        let mut em = Emitter { out, best, less: false };
        for &h in header {
            if !em.push(h) {
                return false;
            }
        }
        self.visited[root.0] = true;
        self.queue.push_back(root);
        while let Some((c, start, dir)) = self.queue.pop_front() {
            let verts = &lay.cells[c];
            let k = verts.len();
            if !em.push(symbol(lay.kinds[c], k, start, dir)) {
                return false;
            }
            for i in 0..k {
                let v = at(verts, start, dir, i);
                if self.label[v] == u32::MAX {
                    self.label[v] = self.order.len() as u32;
                    self.order.push(v);
                }
                if !em.push(self.label[v]) {
                    return false;
                }
            }
            for i in 0..k {
                let e = if dir > 0 { (start + i) % k } else { (start + 2 * k - i - 1) % k };
                if let Some((o, pa, pb)) = lay.nbr[c][e] {
                    if self.visited[o] {
                        continue;
                    }
                    self.visited[o] = true;
                    let ko = lay.cells[o].len();
                    let (ostart, toward) = if dir > 0 { (pb, pa) } else { (pa, pb) };
                    let odir = if (ostart + 1) % ko == toward { 1 } else { -1 };
                    self.queue.push_back((o, ostart, odir));
                }
            }
        }
        for idx in 0..self.order.len() {
            let v = self.order[idx];
            if !em.push(vclass[v] as u32) {
                return false;
            }
        }
        em.less || best.is_empty()
    }
}

/// Rank of per-vertex invariants used to prune root flags.
fn vertex_invariants(s: &SurfaceComplex, lay: &Layout, vclass: &[u8]) -> Vec<u32> {
    let mut cell_count = vec![0u32; lay.vertex_count];
    for verts in &lay.cells {
        for &v in verts {
            cell_count[v] += 1;
        }
    }
    let raw: Vec<(u8, u32, u32)> = (0..lay.vertex_count)
        .map(|v| {
            let id = s.vertices()[v];
            (vclass[v], s.edges_at(id).len() as u32, cell_count[v])
        })
        .collect();
    let mut sorted = raw.clone();
    sorted.sort_unstable();
    sorted.dedup();
    raw.iter()
        .map(|x| sorted.binary_search(x).unwrap_or(0) as u32)
        .collect()
}

/// The minimal code as a sequence of integers. `vclass` gives an extra
/// colour per dense vertex that isomorphisms must preserve.
pub(crate) fn canonical_form(s: &SurfaceComplex, vclass: &[u8], flags: FlagSet<'_>) -> Vec<u32> {
    let lay = layout(s);
    let inv = vertex_invariants(s, &lay, vclass);
    let mut roots: Vec<([u32; 4], (usize, usize, i8))> = Vec::new();
    for (c, verts) in lay.cells.iter().enumerate() {
        let k = verts.len();
        for dir in [1i8, -1] {
            if let FlagSet::Oriented(orient) = flags {
                if orient[c] != dir {
                    continue;
                }
            }
            for start in 0..k {
                let key = [
                    symbol(lay.kinds[c], k, start, dir),
                    inv[at(verts, start, dir, 0)],
                    inv[at(verts, start, dir, 1)],
                    inv[at(verts, start, dir, 2)],
                ];
                roots.push((key, (c, start, dir)));
            }
        }
    }
    let min_key = roots.iter().map(|r| r.0).min().expect("non-empty complex");
    let mut trav = Traverser {
        label: vec![u32::MAX; lay.vertex_count],
        order: Vec::with_capacity(lay.vertex_count),
        visited: vec![false; lay.cells.len()],
        queue: VecDeque::new(),
    };
    let header = [
        lay.cells.len() as u32,
        lay.vertex_count as u32,
        min_key[0],
        min_key[1],
        min_key[2],
        min_key[3],
    ];
    let mut best: Vec<u32> = Vec::new();
    let mut scratch: Vec<u32> = Vec::new();
    for (key, root) in roots {
        if key != min_key {
            continue;
        }
        if trav.run(&lay, vclass, &header, root, &best, &mut scratch) {
            std::mem::swap(&mut best, &mut scratch);
        }
    }
    best
}

pub(crate) fn to_bytes(form: &[u32]) -> Vec<u8> {
    if form.iter().all(|&x| x < 256) {
        let mut out = Vec::with_capacity(form.len() + 1);
        out.push(1);
        out.extend(form.iter().map(|&x| x as u8));
        out
    } else {
        let mut out = Vec::with_capacity(form.len() * 4 + 1);
        out.push(4);
        for &x in form {
            out.extend_from_slice(&x.to_be_bytes());
        }
        out
    }
}

pub(crate) fn from_bytes(bytes: &[u8]) -> Option<Vec<u32>> {
    let (&width, rest) = bytes.split_first()?;
    match width {
        1 => Some(rest.iter().map(|&b| b as u32).collect()),
        4 if rest.len() % 4 == 0 => Some(
            rest.chunks_exact(4)
                .map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]]))
                .collect(),
        ),
        _ => None,
    }
}

pub(crate) fn canonical_code(s: &SurfaceComplex) -> Vec<u8> {
    let zeros = vec![0u8; s.vertex_count()];
    to_bytes(&canonical_form(s, &zeros, FlagSet::All))
}

/// Coherent orientation of the cells relative to cell 0, if one exists.
pub(crate) fn orientation(s: &SurfaceComplex) -> Option<Vec<i8>> {
    let lay = layout(s);
    let n = lay.cells.len();
    let mut orient = vec![0i8; n];
    orient[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(c) = queue.pop_front() {
        for e in 0..lay.cells[c].len() {
            let Some((o, pa, pb)) = lay.nbr[c][e] else { continue };
            let ko = lay.cells[o].len();
            // c runs the edge a→b when positively oriented; o must run b→a.
            let forward_in_o = (pa + 1) % ko == pb;
            let want = if forward_in_o { -orient[c] } else { orient[c] };
            if orient[o] == 0 {
                orient[o] = want;
                queue.push_back(o);
            } else if orient[o] != want {
                return None;
            }
        }
    }
    Some(orient)
}

pub(crate) fn oriented_codes(s: &SurfaceComplex, vertex_class: &dyn Fn(Vertex) -> u8) -> Option<OrientedCodes> {
    let orient = orientation(s)?;
    let vclass: Vec<u8> = s.vertices().iter().map(|&v| vertex_class(v)).collect();
    let flipped: Vec<i8> = orient.iter().map(|&o| -o).collect();
    Some(OrientedCodes {
        positive: to_bytes(&canonical_form(s, &vclass, FlagSet::Oriented(&orient))),
        negative: to_bytes(&canonical_form(s, &vclass, FlagSet::Oriented(&flipped))),
    })
}

/// Recovers a cell list (vertices labelled 0..V) from a canonical code.
pub fn decode_code(bytes: &[u8]) -> Option<Vec<Cell>> {
    let form = from_bytes(bytes)?;
    let (&f, rest) = form.split_first()?;
    let rest = rest.get(1 + 4..)?;
    let mut cells = Vec::with_capacity(f as usize);
    let mut i = 0;
    for _ in 0..f {
        let sym = *rest.get(i)?;
        let k = if sym < 2 { 3 } else { 4 };
        let vs: Vec<Vertex> = rest.get(i + 1..i + 1 + k)?.to_vec();
        i += 1 + k;
        cells.push(match sym {
            0 => Cell::new(CellKind::RedTriangle, vs),
            1 => Cell::new(CellKind::BlueTriangle, vs),
            2 => Cell::new(CellKind::Quadrangle, vs),
            // first edge blue: rotate so the first edge is red
            3 => Cell::quad(vs[1], vs[2], vs[3], vs[0]),
            _ => return None,
        });
    }
    Some(cells)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::surface::build_complex;

    #[test]
    fn relabelling_invariance() {
        let s = fixtures::chain3();
        let t = build_complex(s.cells().iter().map(|c| c.relabelled(|v| 100 - 7 * v)).collect()).unwrap();
        assert_eq!(s.canonical_code(), t.canonical_code());
    }

    #[test]
    fn mirror_chain_has_the_same_code() {
        // blue triangle on the blue edge (a,d) instead of (b,c)
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let mirror = build_complex(vec![Cell::red(a, b, e), Cell::quad(a, b, c, d), Cell::blue(a, d, f)]).unwrap();
        assert_eq!(mirror.canonical_code(), fixtures::chain3().canonical_code());
    }

    #[test]
    fn chain_and_quadrangle_differ() {
        let q = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
        assert_ne!(q.canonical_code(), fixtures::chain3().canonical_code());
    }

    #[test]
    fn colour_swap_is_not_an_isomorphism() {
        let s = fixtures::chain3();
        let swapped = fixtures::swap_colours(&s);
        // the chain has one triangle of each colour and is its own swap in
        // shape, but a lone red triangle is not a lone blue triangle
        let r = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
        let b = build_complex(vec![Cell::blue(0, 1, 2)]).unwrap();
        assert_ne!(r.canonical_code(), b.canonical_code());
        assert_eq!(swapped.cell_count(), 3);
    }

    #[test]
    fn decode_round_trip() {
        let s = fixtures::chain3();
        let code = s.canonical_code();
        let cells = decode_code(&code).unwrap();
        let t = build_complex(cells).unwrap();
        assert_eq!(t.canonical_code(), code);
    }

    #[test]
    fn belt_orientation() {
        let s = fixtures::quad_belt(5);
        let codes = s.oriented_codes(&|_| 0).unwrap();
        assert!(!codes.is_chiral());
    }
}
