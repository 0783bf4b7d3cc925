use std::collections::VecDeque;

use serde::Serialize;

use super::{is_arc_endpoint_pair, ConditionReport};
use crate::surface::{CellKind, Colour, SurfaceComplex, TopologyClass, Vertex};

/// A violating configuration, small enough to re-check by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// Two distinct vertices joined by both a red and a blue path.
    VertexPair { u: Vertex, v: Vertex },
    /// A cell that is not a `colour` triangle and cannot reach the outside
    /// without crossing `colour` edges; `cut` lists the blocking edges.
    EnclosedCell {
        colour: Colour,
        cell: usize,
        cut: Vec<(Vertex, Vertex)>,
    },
    /// Two cells that are not `colour` triangles, separated by `cut`.
    SeparatedCells {
        colour: Colour,
        first: usize,
        second: usize,
        cut: Vec<(Vertex, Vertex)>,
    },
    /// Vertices on distinct arcs of the other colour, joined by a
    /// `path_colour` path but not the ends of a `path_colour` arc.
    ArcPair {
        u: Vertex,
        v: Vertex,
        path_colour: Colour,
        arc_u: usize,
        arc_v: usize,
    },
    MonochromeBoundary { colour: Colour },
    /// Vertex-disjoint `colour` edges with pairwise connected ends and no
    /// `colour` path of quadrangles between them.
    EdgePair {
        colour: Colour,
        first: (Vertex, Vertex),
        second: (Vertex, Vertex),
    },
    /// Two `colour` triangles whose vertices are matched by paths of the
    /// other colour.
    TrianglePair {
        colour: Colour,
        first: usize,
        second: usize,
        matching: Vec<(Vertex, Vertex)>,
    },
    Topology {
        class: TopologyClass,
        euler: i64,
        boundary_components: usize,
    },
    TriangleCount { colour: Colour, found: usize, required: usize },
    /// A failed sub-condition of a membership test.
    Failed { report: Box<ConditionReport> },
}

/// Breadth-first search for a `colour` path from `u` to `v`.
pub(crate) fn coloured_path(s: &SurfaceComplex, colour: Colour, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
    let mut prev: std::collections::HashMap<Vertex, Vertex> = Default::default();
    prev.insert(u, u);
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut path = vec![v];
            let mut cur = v;
            while cur != u {
                cur = prev[&cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for &e in s.edges_at(x) {
            let edge = s.edge(e);
            if edge.colour() != colour {
                continue;
            }
            let y = edge.other_end(x);
            if let std::collections::hash_map::Entry::Vacant(slot) = prev.entry(y) {
                slot.insert(x);
                queue.push_back(y);
            }
        }
    }
    None
}

fn connected(s: &SurfaceComplex, colour: Colour, u: Vertex, v: Vertex) -> bool {
    coloured_path(s, colour, u, v).is_some()
}

/// Quadrangles reachable from edge `e` by stepping across `colour` edges.
fn quad_path_exists(s: &SurfaceComplex, colour: Colour, e: usize, f: usize) -> bool {
    let offset = if colour == Colour::Red { 0 } else { 1 };
    let mut seen = vec![false; s.edge_count()];
    seen[e] = true;
    let mut queue = VecDeque::from([e]);
    while let Some(x) = queue.pop_front() {
        if x == f {
            return true;
        }
        for &cell in s.edge(x).cells() {
            if s.cell(cell).kind() != CellKind::Quadrangle {
                continue;
            }
            let ids = s.cell_edges(cell);
            for y in [ids[offset], ids[offset + 2]] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    false
}

impl Witness {
    /// Re-checks the violation directly on `s`, without the fast checkers'
    /// component tables.
    pub fn confirms(&self, s: &SurfaceComplex) -> bool {
        match self {
            Witness::VertexPair { u, v } => {
                u != v && connected(s, Colour::Red, *u, *v) && connected(s, Colour::Blue, *u, *v)
            }
            Witness::EnclosedCell { colour, cell, cut } => {
                if *cell >= s.cell_count() || s.cell(*cell).kind() == CellKind::triangle(*colour) {
                    return false;
                }
                if !cut.iter().all(|&(a, b)| s.edge_between(a, b).is_some_and(|e| s.edge(e).colour() == *colour)) {
                    return false;
                }
                let in_cut = |e: usize| cut.contains(&s.edge(e).endpoints());
                let region = flood_avoiding(s, *cell, &in_cut);
                region.iter().enumerate().filter(|(_, &r)| r).all(|(c, _)| {
                    s.cell_edges(c)
                        .iter()
                        .all(|&e| !s.edge(e).is_boundary() || in_cut(e))
                })
            }
            Witness::SeparatedCells {
                colour,
                first,
                second,
                cut: _,
            } => {
                let tri = CellKind::triangle(*colour);
                if s.cell(*first).kind() == tri || s.cell(*second).kind() == tri {
                    return false;
                }
                let region = flood_avoiding(s, *first, &|e| s.edge(e).colour() == *colour);
                !region[*second]
            }
            Witness::ArcPair {
                u,
                v,
                path_colour,
                arc_u,
                arc_v,
            } => {
                let Ok(arcs) = s.boundary_arcs() else { return false };
                let other = path_colour.complement();
                let on = |x: Vertex, i: usize| arcs.arcs.get(i).is_some_and(|a| a.colour == other && a.contains(x));
                u != v
                    && arc_u != arc_v
                    && on(*u, *arc_u)
                    && on(*v, *arc_v)
                    && connected(s, *path_colour, *u, *v)
                    && !is_arc_endpoint_pair(&arcs, *path_colour, *u, *v)
            }
            Witness::MonochromeBoundary { colour } => {
                s.is_disc() && s.boundary_edges().all(|e| s.edge(e).colour() == *colour)
            }
            Witness::EdgePair { colour, first, second } => {
                let (Some(e), Some(f)) = (s.edge_between(first.0, first.1), s.edge_between(second.0, second.1)) else {
                    return false;
                };
                if s.edge(e).colour() != *colour || s.edge(f).colour() != *colour {
                    return false;
                }
                let (a, b) = *first;
                let (x, y) = *second;
                if [a, b].iter().any(|p| *p == x || *p == y) {
                    return false;
                }
                let o = colour.complement();
                let triggered = (connected(s, o, a, x) && connected(s, o, b, y)) || (connected(s, o, a, y) && connected(s, o, b, x));
                triggered && !quad_path_exists(s, *colour, e, f)
            }
            Witness::TrianglePair {
                colour,
                first,
                second,
                matching,
            } => {
                let tri = CellKind::triangle(*colour);
                if first == second || s.cell(*first).kind() != tri || s.cell(*second).kind() != tri {
                    return false;
                }
                let a = s.cell(*first).vertices();
                let b = s.cell(*second).vertices();
                matching.len() == 3
                    && matching.iter().all(|(x, y)| a.contains(x) && b.contains(y))
                    && {
                        let mut xs: Vec<_> = matching.iter().map(|m| m.0).collect();
                        let mut ys: Vec<_> = matching.iter().map(|m| m.1).collect();
                        xs.sort_unstable();
                        xs.dedup();
                        ys.sort_unstable();
                        ys.dedup();
                        xs.len() == 3 && ys.len() == 3
                    }
                    && matching.iter().all(|&(x, y)| connected(s, colour.complement(), x, y))
            }
            Witness::Topology { class, .. } => s.topology().class == *class,
            Witness::TriangleCount { colour, found, required } => {
                s.triangle_count(*colour) == *found && found < required
            }
            Witness::Failed { report } => report.witness.as_ref().is_some_and(|w| w.confirms(s)),
        }
    }
}

/// Cells reachable from `start` across interior edges not rejected by
/// `blocked`.
fn flood_avoiding(s: &SurfaceComplex, start: usize, blocked: &dyn Fn(usize) -> bool) -> Vec<bool> {
    let mut seen = vec![false; s.cell_count()];
    seen[start] = true;
    let mut stack = vec![start];
    while let Some(c) = stack.pop() {
        for (e, o) in s.neighbours(c) {
            if !blocked(e) && !seen[o] {
                seen[o] = true;
                stack.push(o);
            }
        }
    }
    seen
}
