//! Brute-force verdicts from explicit enumeration of simple monochromatic
//! paths and cycles. Exponential; meant for small complexes in tests.

use thiserror::Error;

use super::{
    arc_memberships, is_arc_endpoint_pair, Condition, ConditionError, ConditionReport, Witness, PERMUTATIONS3,
};
use crate::surface::{CellKind, Colour, SurfaceComplex, Vertex};

pub const DEFAULT_ORACLE_BUDGET: usize = 12;

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{cells} cells exceed the oracle budget of {budget}")]
    BudgetExceeded { cells: usize, budget: usize },
}

struct Graph {
    /// Neighbours per dense vertex as `(vertex, edge id)`.
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    fn new(s: &SurfaceComplex, colour: Colour) -> Graph {
        let mut adj = vec![Vec::new(); s.vertex_count()];
        for (id, e) in s.edges().iter().enumerate() {
            if e.colour() == colour {
                let (a, b) = e.endpoints();
                let (a, b) = (s.vertex_index(a).unwrap(), s.vertex_index(b).unwrap());
                adj[a].push((b, id));
                adj[b].push((a, id));
            }
        }
        Graph { adj }
    }

    /// `reach[u][v]` iff some simple path runs from `u` to `v`, found by
    /// enumerating every simple path out of `u`.
    fn simple_path_reach(&self) -> Vec<Vec<bool>> {
        let n = self.adj.len();
        let mut reach = vec![vec![false; n]; n];
        for (u, row) in reach.iter_mut().enumerate() {
            let mut on_path = vec![false; n];
            self.extend_paths(u, &mut on_path, row);
        }
        reach
    }

    fn extend_paths(&self, x: usize, on_path: &mut [bool], row: &mut [bool]) {
        on_path[x] = true;
        row[x] = true;
        for &(y, _) in &self.adj[x] {
            if !on_path[y] {
                self.extend_paths(y, on_path, row);
            }
        }
        on_path[x] = false;
    }

    /// Every simple cycle (length ≥ 3) as a sorted list of edge ids.
    fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.adj.len();
        let mut out = Vec::new();
        for s in 0..n {
            let mut vpath = vec![s];
            let mut epath = Vec::new();
            let mut on_path = vec![false; n];
            on_path[s] = true;
            self.cycles_from(s, s, &mut vpath, &mut epath, &mut on_path, &mut out);
        }
        out
    }

    fn cycles_from(
        &self,
        s: usize,
        x: usize,
        vpath: &mut Vec<usize>,
        epath: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        for &(y, e) in &self.adj[x] {
            if y == s && vpath.len() >= 3 && vpath[1] < vpath[vpath.len() - 1] {
                let mut cycle = epath.clone();
                cycle.push(e);
                cycle.sort_unstable();
                out.push(cycle);
            } else if y > s && !on_path[y] {
                on_path[y] = true;
                vpath.push(y);
                epath.push(e);
                self.cycles_from(s, y, vpath, epath, on_path, out);
                epath.pop();
                vpath.pop();
                on_path[y] = false;
            }
        }
    }
}

/// Cell components after cutting along the edges in `cycle`.
fn sides(s: &SurfaceComplex, cycle: &[usize]) -> Vec<Vec<usize>> {
    let mut comp = vec![usize::MAX; s.cell_count()];
    let mut out = Vec::new();
    for start in 0..s.cell_count() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = out.len();
        comp[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(c) = stack.pop() {
            for (e, o) in s.neighbours(c) {
                if !cycle.contains(&e) && comp[o] == usize::MAX {
                    comp[o] = id;
                    members.push(o);
                    stack.push(o);
                }
            }
        }
        members.sort_unstable();
        out.push(members);
    }
    out
}

fn cut_of(s: &SurfaceComplex, cycle: &[usize]) -> Vec<(Vertex, Vertex)> {
    let mut cut: Vec<_> = cycle.iter().map(|&e| s.edge(e).endpoints()).collect();
    cut.sort_unstable();
    cut
}

fn oracle_alpha(s: &SurfaceComplex, red: &[Vec<bool>], blue: &[Vec<bool>]) -> ConditionReport {
    let n = s.vertex_count();
    for i in 0..n {
        for j in i + 1..n {
            if red[i][j] && blue[i][j] {
                let (u, v) = (s.vertices()[i], s.vertices()[j]);
                return ConditionReport::fail(Condition::Alpha, Witness::VertexPair { u, v });
            }
        }
    }
    ConditionReport::pass(Condition::Alpha)
}

fn oracle_beta1(s: &SurfaceComplex, c: Colour, graph: &Graph) -> ConditionReport {
    let tri = CellKind::triangle(c);
    for cycle in graph.simple_cycles() {
        for side in sides(s, &cycle) {
            let touches_outside = side.iter().any(|&cell| {
                s.cell_edges(cell)
                    .iter()
                    .any(|&e| s.edge(e).is_boundary() && !cycle.contains(&e))
            });
            if touches_outside {
                continue;
            }
            if let Some(&cell) = side.iter().find(|&&cell| s.cell(cell).kind() != tri) {
                return ConditionReport::fail(
                    Condition::beta1(c),
                    Witness::EnclosedCell {
                        colour: c,
                        cell,
                        cut: cut_of(s, &cycle),
                    },
                );
            }
        }
    }
    ConditionReport::pass(Condition::beta1(c))
}

fn oracle_beta_sphere(s: &SurfaceComplex, c: Colour, graph: &Graph) -> ConditionReport {
    let tri = CellKind::triangle(c);
    for cycle in graph.simple_cycles() {
        let mixed: Vec<usize> = sides(s, &cycle)
            .iter()
            .filter_map(|side| side.iter().copied().find(|&cell| s.cell(cell).kind() != tri))
            .collect();
        if mixed.len() >= 2 {
            return ConditionReport::fail(
                Condition::beta(c),
                Witness::SeparatedCells {
                    colour: c,
                    first: mixed[0],
                    second: mixed[1],
                    cut: cut_of(s, &cycle),
                },
            );
        }
    }
    ConditionReport::pass(Condition::beta(c))
}

fn oracle_beta2(s: &SurfaceComplex, red: &[Vec<bool>], blue: &[Vec<bool>]) -> Result<ConditionReport, ConditionError> {
    let arcs = s.boundary_arcs().map_err(|_| ConditionError::NotADisc)?;
    if arcs.is_monochrome() {
        return Err(ConditionError::NoArcs);
    }
    for path_colour in Colour::BOTH {
        let reach = if path_colour == Colour::Red { red } else { blue };
        let members = arc_memberships(&arcs, path_colour.complement());
        for &(u, au) in &members {
            for &(v, av) in &members {
                if u >= v || au == av {
                    continue;
                }
                let (i, j) = (s.vertex_index(u).unwrap(), s.vertex_index(v).unwrap());
                if reach[i][j] && !is_arc_endpoint_pair(&arcs, path_colour, u, v) {
                    return Ok(ConditionReport::fail(
                        Condition::Beta2,
                        Witness::ArcPair {
                            u,
                            v,
                            path_colour,
                            arc_u: au,
                            arc_v: av,
                        },
                    ));
                }
            }
        }
    }
    Ok(ConditionReport::pass(Condition::Beta2))
}

/// Searches sequences of quadrangles, consecutive ones sharing a `colour`
/// edge, from one containing `e` to one containing `f`.
fn quad_sequence(s: &SurfaceComplex, colour: Colour, e: usize, f: usize) -> bool {
    let offset = if colour == Colour::Red { 0 } else { 1 };
    let pair = |q: usize| {
        let ids = s.cell_edges(q);
        (ids[offset], ids[offset + 2])
    };
    let quads_on = |x: usize| {
        s.edge(x)
            .cells()
            .iter()
            .copied()
            .filter(|&q| s.cell(q).kind() == CellKind::Quadrangle)
            .collect::<Vec<_>>()
    };
    fn walk(
        q: usize,
        entry: usize,
        f: usize,
        used: &mut Vec<usize>,
        pair: &dyn Fn(usize) -> (usize, usize),
        quads_on: &dyn Fn(usize) -> Vec<usize>,
    ) -> bool {
        let (a, b) = pair(q);
        let exit = if a == entry { b } else { a };
        if a == f || b == f {
            return true;
        }
        used.push(q);
        let mut found = false;
        for n in quads_on(exit) {
            if !used.contains(&n) && walk(n, exit, f, used, pair, quads_on) {
                found = true;
                break;
            }
        }
        used.pop();
        found
    }
    quads_on(e)
        .into_iter()
        .any(|q| walk(q, e, f, &mut Vec::new(), &pair, &quads_on))
}

fn oracle_gamma(s: &SurfaceComplex, red: &[Vec<bool>], blue: &[Vec<bool>]) -> ConditionReport {
    for c in [Colour::Blue, Colour::Red] {
        let reach = if c == Colour::Red { blue } else { red };
        let idx = |v: Vertex| s.vertex_index(v).unwrap();
        let joined = |a: Vertex, b: Vertex| reach[idx(a)][idx(b)];
        let mut edges: Vec<usize> = (0..s.edge_count()).filter(|&e| s.edge(e).colour() == c).collect();
        edges.sort_by_key(|&e| s.edge(e).endpoints());
        for &e in &edges {
            for &f in &edges {
                if s.edge(e).endpoints() >= s.edge(f).endpoints() {
                    continue;
                }
                let (a, b) = s.edge(e).endpoints();
                let (x, y) = s.edge(f).endpoints();
                if a == x || a == y || b == x || b == y {
                    continue;
                }
                let triggered = (joined(a, x) && joined(b, y)) || (joined(a, y) && joined(b, x));
                if triggered && !quad_sequence(s, c, e, f) {
                    return ConditionReport::fail(
                        Condition::Gamma,
                        Witness::EdgePair {
                            colour: c,
                            first: (a, b),
                            second: (x, y),
                        },
                    );
                }
            }
        }
    }
    ConditionReport::pass(Condition::Gamma)
}

fn oracle_delta(s: &SurfaceComplex, red: &[Vec<bool>], blue: &[Vec<bool>]) -> ConditionReport {
    for c in Colour::BOTH {
        let reach = if c == Colour::Red { blue } else { red };
        let tri = CellKind::triangle(c);
        let idx = |v: Vertex| s.vertex_index(v).unwrap();
        for t1 in 0..s.cell_count() {
            for t2 in t1 + 1..s.cell_count() {
                if s.cell(t1).kind() != tri || s.cell(t2).kind() != tri {
                    continue;
                }
                let (a, b) = (s.cell(t1).vertices(), s.cell(t2).vertices());
                for p in PERMUTATIONS3 {
                    if (0..3).all(|k| reach[idx(a[k])][idx(b[p[k]])]) {
                        return ConditionReport::fail(
                            Condition::Delta,
                            Witness::TrianglePair {
                                colour: c,
                                first: t1,
                                second: t2,
                                matching: (0..3).map(|k| (a[k], b[p[k]])).collect(),
                            },
                        );
                    }
                }
            }
        }
    }
    ConditionReport::pass(Condition::Delta)
}

/// Oracle verdicts in the order of [`super::fast_conditions`].
pub fn oracle_conditions(
    s: &SurfaceComplex,
    budget: usize,
) -> Result<Vec<Result<ConditionReport, ConditionError>>, OracleError> {
    if s.cell_count() > budget {
        return Err(OracleError::BudgetExceeded {
            cells: s.cell_count(),
            budget,
        });
    }
    let red_graph = Graph::new(s, Colour::Red);
    let blue_graph = Graph::new(s, Colour::Blue);
    let red = red_graph.simple_path_reach();
    let blue = blue_graph.simple_path_reach();
    let graph = |c: Colour| if c == Colour::Red { &red_graph } else { &blue_graph };

    let mut out = vec![Ok(oracle_alpha(s, &red, &blue))];
    if s.is_disc() {
        for c in Colour::BOTH {
            out.push(Ok(oracle_beta1(s, c, graph(c))));
        }
        out.push(oracle_beta2(s, &red, &blue));
    } else if s.is_sphere() {
        for c in Colour::BOTH {
            out.push(Ok(oracle_beta_sphere(s, c, graph(c))));
        }
    }
    out.push(Ok(oracle_gamma(s, &red, &blue)));
    out.push(Ok(oracle_delta(s, &red, &blue)));
    Ok(out)
}
