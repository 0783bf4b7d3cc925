use serde::Serialize;
use thiserror::Error;

use crate::surface::{build_complex, Cell, CellKind, SurfaceComplex, Vertex};

/// One step of a local construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "kebab-case")]
pub enum Move {
    /// Attach `cell` along the boundary edge `edge`; its other vertices are
    /// new.
    GlueCell { cell: Cell, edge: (Vertex, Vertex) },
    /// Identify the boundary edges `(apex, keep)` and `(apex, merge)` by
    /// renaming `merge` to `keep`.
    IdentifyEdges { apex: Vertex, keep: Vertex, merge: Vertex },
}

/// A local construction of a disc, starting from a single cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveSequence {
    pub initial: Cell,
    pub moves: Vec<Move>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LocalConstructionError {
    #[error("the complex is not a disc")]
    NotADisc,
    #[error("anchor cell {0} does not exist")]
    NoSuchCell(usize),
    #[error("no reverse move applies to a disc with {cells} cells")]
    Stuck { cells: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("move {step}: {reason}")]
pub struct ReplayError {
    pub step: usize,
    pub reason: String,
}

/// A local construction of the disc `d`, found by undoing moves greedily:
/// remove a cell hanging on a single edge (triangles before quadrangles,
/// lowest index first), otherwise cut along the smallest edge from a
/// boundary vertex to an interior vertex.
pub fn local_construction(d: &SurfaceComplex) -> Result<MoveSequence, LocalConstructionError> {
    run(d, None)
}

/// As [`local_construction`], but the construction starts from cell
/// `anchor` of `d`.
pub fn local_construction_from(d: &SurfaceComplex, anchor: usize) -> Result<MoveSequence, LocalConstructionError> {
    if anchor >= d.cell_count() {
        return Err(LocalConstructionError::NoSuchCell(anchor));
    }
    run(d, Some(anchor))
}

fn run(d: &SurfaceComplex, anchor: Option<usize>) -> Result<MoveSequence, LocalConstructionError> {
    if !d.is_disc() {
        return Err(LocalConstructionError::NotADisc);
    }
    // (original index, current cell)
    let mut cells: Vec<(usize, Cell)> = d.cells().iter().cloned().enumerate().collect();
    let mut next_fresh = d.max_vertex() + 1;
    let mut undone = Vec::new();
    while cells.len() > 1 {
        let s = build_complex(cells.iter().map(|(_, c)| c.clone()).collect()).expect("reverse moves keep a valid disc");
        if let Some((pos, edge)) = leaf(&s, &cells, anchor) {
            let (_, cell) = cells.remove(pos);
            undone.push(Move::GlueCell { cell, edge });
            continue;
        }
        let Some((w, v)) = cut_edge(&s) else {
            return Err(LocalConstructionError::Stuck { cells: cells.len() });
        };
        let (star_cells, star_edges) = s.star(w);
        let at = star_edges
            .iter()
            .position(|&e| s.edge(e).endpoints() == key(w, v))
            .expect("edge lies in the star");
        let fresh = next_fresh;
        next_fresh += 1;
        for &c in &star_cells[at..] {
            cells[c].1 = cells[c].1.renamed(w, fresh);
        }
        undone.push(Move::IdentifyEdges {
            apex: v,
            keep: w,
            merge: fresh,
        });
    }
    undone.reverse();
    Ok(MoveSequence {
        initial: cells.pop().unwrap().1,
        moves: undone,
    })
}

fn key(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A cell other than the anchor with exactly one interior edge whose other
/// vertices belong to no other cell.
fn leaf(s: &SurfaceComplex, cells: &[(usize, Cell)], anchor: Option<usize>) -> Option<(usize, (Vertex, Vertex))> {
    let mut best: Option<(bool, usize, usize, (Vertex, Vertex))> = None;
    for (pos, (orig, cell)) in cells.iter().enumerate() {
        if Some(*orig) == anchor {
            continue;
        }
        let interior: Vec<usize> = s.cell_edges(pos).iter().copied().filter(|&e| !s.edge(e).is_boundary()).collect();
        let [e] = interior[..] else { continue };
        let (a, b) = s.edge(e).endpoints();
        let private = cell
            .vertices()
            .iter()
            .filter(|&&x| x != a && x != b)
            .all(|&x| s.edges_at(x).iter().all(|&f| s.edge(f).cells() == [pos]));
        if !private {
            continue;
        }
        let rank = (cell.kind() == CellKind::Quadrangle, *orig, pos, (a, b));
        if best.is_none_or(|b| (rank.0, rank.1) < (b.0, b.1)) {
            best = Some(rank);
        }
    }
    best.map(|(_, _, pos, edge)| (pos, edge))
}

/// The smallest `(w, v)` with `w` on the boundary, `v` interior and `wv` an
/// edge.
fn cut_edge(s: &SurfaceComplex) -> Option<(Vertex, Vertex)> {
    s.edges()
        .iter()
        .filter_map(|e| {
            let (a, b) = e.endpoints();
            match (s.is_boundary_vertex(a), s.is_boundary_vertex(b)) {
                (true, false) => Some((a, b)),
                (false, true) => Some((b, a)),
                _ => None,
            }
        })
        .min()
}

impl MoveSequence {
    /// Replays the moves, checking each one and that every intermediate
    /// complex is a disc.
    pub fn replay(&self) -> Result<SurfaceComplex, ReplayError> {
        let fail = |step: usize, reason: String| ReplayError { step, reason };
        let mut cells = vec![self.initial.clone()];
        let mut s = build_complex(cells.clone()).map_err(|e| fail(0, e.to_string()))?;
        for (i, m) in self.moves.iter().enumerate() {
            let step = i + 1;
            match m {
                Move::GlueCell { cell, edge } => {
                    let e = s
                        .edge_between(edge.0, edge.1)
                        .ok_or_else(|| fail(step, format!("{edge:?} is not an edge")))?;
                    if !s.edge(e).is_boundary() {
                        return Err(fail(step, format!("{edge:?} is not a boundary edge")));
                    }
                    if !cell.contains(edge.0) || !cell.contains(edge.1) {
                        return Err(fail(step, "the cell does not contain the gluing edge".into()));
                    }
                    if let Some(&x) = cell
                        .vertices()
                        .iter()
                        .find(|&&x| x != edge.0 && x != edge.1 && s.has_vertex(x))
                    {
                        return Err(fail(step, format!("vertex {x} is not new")));
                    }
                    cells.push(cell.clone());
                }
                Move::IdentifyEdges { apex, keep, merge } => {
                    let e1 = s.edge_between(*apex, *keep);
                    let e2 = s.edge_between(*apex, *merge);
                    let (Some(e1), Some(e2)) = (e1, e2) else {
                        return Err(fail(step, "identified edges are missing".into()));
                    };
                    if !s.edge(e1).is_boundary() || !s.edge(e2).is_boundary() || s.edge(e1).colour() != s.edge(e2).colour() {
                        return Err(fail(step, "identified edges must be same-coloured boundary edges".into()));
                    }
                    cells = cells.iter().map(|c| c.renamed(*merge, *keep)).collect();
                }
            }
            s = build_complex(cells.clone()).map_err(|e| fail(step, e.to_string()))?;
            if !s.is_disc() {
                return Err(fail(step, "intermediate complex is not a disc".into()));
            }
        }
        Ok(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn single_cell() {
        let q = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
        let seq = local_construction(&q).unwrap();
        assert!(seq.moves.is_empty());
        assert_eq!(seq.replay().unwrap(), q);
    }

    #[test]
    fn chain_grows_from_the_quadrangle() {
        let s = fixtures::chain3();
        let seq = local_construction(&s).unwrap();
        assert_eq!(seq.initial.kind(), CellKind::Quadrangle);
        assert_eq!(seq.moves.len(), 2);
        assert!(seq.moves.iter().all(|m| matches!(m, Move::GlueCell { .. })));
        assert_eq!(seq.replay().unwrap(), s);
    }

    #[test]
    fn interior_vertex_needs_an_identification() {
        // four triangles around vertex 4
        let s = build_complex((0..4).map(|i| Cell::red(i, (i + 1) % 4, 4)).collect()).unwrap();
        let seq = local_construction(&s).unwrap();
        assert_eq!(seq.moves.iter().filter(|m| matches!(m, Move::IdentifyEdges { .. })).count(), 1);
        assert_eq!(seq.replay().unwrap(), s);
    }

    #[test]
    fn anchored_construction_starts_at_the_anchor() {
        let s = fixtures::chain3();
        let seq = local_construction_from(&s, 2).unwrap();
        assert_eq!(&seq.initial, s.cell(2));
        assert_eq!(seq.replay().unwrap(), s);
    }

    #[test]
    fn spheres_are_rejected() {
        let s = fixtures::tetrahedron_boundary(crate::surface::Colour::Red);
        assert_eq!(local_construction(&s), Err(LocalConstructionError::NotADisc));
    }

    #[test]
    fn replay_rejects_bad_moves() {
        let seq = MoveSequence {
            initial: Cell::red(0, 1, 2),
            moves: vec![Move::GlueCell {
                cell: Cell::red(0, 1, 2),
                edge: (0, 1),
            }],
        };
        assert_eq!(seq.replay().unwrap_err().step, 1);
    }
}
