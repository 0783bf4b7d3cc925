use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use super::local::{local_construction_from, Move, MoveSequence};
use crate::causal3d::{build_complex3, sorted3, validate_slice, CVertex, Complex3, SliceKind, Triangle};
use crate::surface::{build_complex, Cell, CellKind, Colour, SurfaceComplex, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum BuildSliceError {
    #[error("the {colour} input is not a disc")]
    NotADisc { colour: Colour },
    #[error("the {colour} input is not a sphere")]
    NotASphere { colour: Colour },
    #[error("the {colour} input has a quadrangle")]
    NotTriangulated { colour: Colour },
    #[error("construction failed: {0}")]
    Construction(String),
}

fn check_triangulated(s: &SurfaceComplex, colour: Colour) -> Result<(), BuildSliceError> {
    if s.cells().iter().any(|c| c.kind() == CellKind::Quadrangle) {
        return Err(BuildSliceError::NotTriangulated { colour });
    }
    Ok(())
}

/// A disc-slice whose red and blue parts are the triangulated discs `d1`
/// and `d2`, with the vertex ids of `d1` and the ids of `d2` shifted past
/// them.
///
/// Starts from the prism on the anchor cells of local constructions of both
/// discs, then replays the red construction and the blue one. Gluing a
/// triangle adds a tetrahedron over the side triangle on its edge;
/// identifying two edges first closes the fan of side triangles between
/// them with `(2,2)` tetrahedra. Anchor pairs are tried in order until the
/// replay gives a valid disc-slice.
pub fn build_disc_slice(d1: &SurfaceComplex, d2: &SurfaceComplex) -> Result<Complex3, BuildSliceError> {
    let mut first = None;
    for a1 in 0..d1.cell_count() {
        for a2 in 0..d2.cell_count() {
            match build_anchored(d1, a1, d2, a2) {
                Ok((k, _)) => return Ok(k),
                Err(e @ BuildSliceError::Construction(_)) => {
                    first.get_or_insert(e);
                }
                Err(e) => return Err(e),
            }
        }
    }
    Err(first.expect("discs have cells"))
}

/// Builds the disc-slice starting from cells `a1` and `a2`; also returns
/// the shift applied to the blue vertex ids.
fn build_anchored(d1: &SurfaceComplex, a1: usize, d2: &SurfaceComplex, a2: usize) -> Result<(Complex3, Vertex), BuildSliceError> {
    for (s, colour) in [(d1, Colour::Red), (d2, Colour::Blue)] {
        if !s.is_disc() {
            return Err(BuildSliceError::NotADisc { colour });
        }
        check_triangulated(s, colour)?;
    }
    let construction = |s, a| local_construction_from(s, a).map_err(|e| BuildSliceError::Construction(e.to_string()));
    let red_moves = construction(d1, a1)?;
    let mut blue_moves = construction(d2, a2)?;
    let offset = sequence_max(&red_moves).max(d1.max_vertex()) + 1;
    shift(&mut blue_moves, offset);

    let mut b = Builder::new(&red_moves.initial, &blue_moves.initial);
    for (moves, colour) in [(&red_moves, Colour::Red), (&blue_moves, Colour::Blue)] {
        for m in &moves.moves {
            b.apply(m, colour)?;
        }
    }
    let k = b.complex()?;
    let report = validate_slice(&k, SliceKind::Disc, false);
    if !report.valid {
        let f = report.first_failure().unwrap();
        return Err(BuildSliceError::Construction(format!("{}: {}", f.name, f.detail)));
    }
    Ok((k, offset))
}

fn sequence_max(seq: &MoveSequence) -> Vertex {
    let mut m = seq.initial.vertices().iter().copied().max().unwrap_or(0);
    for mv in &seq.moves {
        let x = match mv {
            Move::GlueCell { cell, .. } => cell.vertices().iter().copied().max().unwrap_or(0),
            Move::IdentifyEdges { apex, keep, merge } => *apex.max(keep).max(merge),
        };
        m = m.max(x);
    }
    m
}

fn shift(seq: &mut MoveSequence, by: Vertex) {
    seq.initial = seq.initial.relabelled(|v| v + by);
    for mv in &mut seq.moves {
        match mv {
            Move::GlueCell { cell, edge } => {
                *cell = cell.relabelled(|v| v + by);
                *edge = (edge.0 + by, edge.1 + by);
            }
            Move::IdentifyEdges { apex, keep, merge } => {
                *apex += by;
                *keep += by;
                *merge += by;
            }
        }
    }
}

struct Builder {
    colour: HashMap<Vertex, Colour>,
    tets: Vec<[Vertex; 4]>,
}

impl Builder {
    /// The prism on red triangle `(p, q, t)` and blue triangle `(m, n, o)`:
    /// `(p q t m)`, `(p q m n)` and `(m n o p)`.
    fn new(red: &Cell, blue: &Cell) -> Builder {
        let (p, q, t) = (red.vertices()[0], red.vertices()[1], red.vertices()[2]);
        let (m, n, o) = (blue.vertices()[0], blue.vertices()[1], blue.vertices()[2]);
        let mut colour = HashMap::new();
        for v in [p, q, t] {
            colour.insert(v, Colour::Red);
        }
        for v in [m, n, o] {
            colour.insert(v, Colour::Blue);
        }
        Builder {
            colour,
            tets: vec![[p, q, t, m], [p, q, m, n], [m, n, o, p]],
        }
    }

    fn complex(&self) -> Result<Complex3, BuildSliceError> {
        let vertices = self.colour.iter().map(|(&id, &colour)| CVertex { id, colour }).collect();
        build_complex3(vertices, self.tets.clone()).map_err(|e| BuildSliceError::Construction(e.to_string()))
    }

    /// Two-coloured boundary triangles of the current complex.
    fn side(&self) -> Result<Vec<Triangle>, BuildSliceError> {
        let k = self.complex()?;
        Ok(k.boundary_triangles()
            .into_iter()
            .filter(|t| k.mono_colour(t).is_none())
            .collect())
    }

    fn apply(&mut self, m: &Move, colour: Colour) -> Result<(), BuildSliceError> {
        let side = self.side()?;
        let err = |s: &str| BuildSliceError::Construction(s.to_string());
        match m {
            Move::GlueCell { cell, edge } => {
                let (a, b) = *edge;
                let apex = side
                    .iter()
                    .find(|t| t.contains(&a) && t.contains(&b))
                    .and_then(|t| t.iter().copied().find(|&x| x != a && x != b))
                    .ok_or_else(|| err("no side triangle on the gluing edge"))?;
                let c = cell
                    .vertices()
                    .iter()
                    .copied()
                    .find(|&x| x != a && x != b)
                    .ok_or_else(|| err("degenerate cell"))?;
                self.colour.insert(c, colour);
                self.tets.push([a, b, c, apex]);
            }
            Move::IdentifyEdges { apex: v, keep: w1, merge: w2 } => {
                let (v, w1, w2) = (*v, *w1, *w2);
                // walk the side triangles at v from the one on (w1, v) to
                // the one on (v, w2); the ones in between meet the
                // `colour` part only in v
                let at_v: Vec<Triangle> = side.iter().copied().filter(|t| t.contains(&v)).collect();
                let start = *at_v
                    .iter()
                    .find(|t| t.contains(&w1))
                    .ok_or_else(|| err("no side triangle on the first identified edge"))?;
                let mut y = start.iter().copied().find(|&x| x != v && x != w1).unwrap();
                let mut prev = start;
                let mut fan = Vec::new();
                loop {
                    let next = *at_v
                        .iter()
                        .find(|t| **t != prev && t.contains(&y))
                        .ok_or_else(|| err("side fan is not closed"))?;
                    if next.contains(&w2) {
                        break;
                    }
                    let z = next.iter().copied().find(|&x| x != v && x != y).unwrap();
                    fan.push((y, z));
                    if fan.len() > at_v.len() {
                        return Err(err("side fan does not reach the second edge"));
                    }
                    prev = next;
                    y = z;
                }
                // cone the fan from w1; if a fan tetrahedron then collapses
                // onto an existing one, cone from w2 instead
                let mut last = None;
                for cone in [w1, w2] {
                    let mut tets = self.tets.clone();
                    tets.extend(fan.iter().map(|&(y0, y1)| [v, cone, y0, y1]));
                    for t in &mut tets {
                        for x in t.iter_mut() {
                            if *x == w2 {
                                *x = w1;
                            }
                        }
                    }
                    let mut colour = self.colour.clone();
                    colour.remove(&w2);
                    let vertices = colour.iter().map(|(&id, &colour)| CVertex { id, colour }).collect();
                    match build_complex3(vertices, tets.clone()) {
                        Ok(_) => {
                            self.tets = tets;
                            self.colour = colour;
                            return Ok(());
                        }
                        Err(e) => last = Some(e),
                    }
                }
                return Err(BuildSliceError::Construction(last.unwrap().to_string()));
            }
        }
        Ok(())
    }
}

fn triangles_of(s: &SurfaceComplex) -> Vec<Triangle> {
    s.cells()
        .iter()
        .map(|c| sorted3([c.vertices()[0], c.vertices()[1], c.vertices()[2]]))
        .collect()
}

/// A sphere-slice between the triangulated spheres `s1` and `s2`.
///
/// Removes the triangle with the smallest vertex triple from each sphere,
/// builds the disc-slice between the remaining discs starting from the
/// cells next to those triangles, and closes the cylinder left between the
/// two removed triangles with the first set of tetrahedra on their six
/// vertices (smallest sets first) that makes a valid sphere-slice.
pub fn build_sphere_slice(s1: &SurfaceComplex, s2: &SurfaceComplex) -> Result<Complex3, BuildSliceError> {
    let mut parts = Vec::new();
    for (s, colour) in [(s1, Colour::Red), (s2, Colour::Blue)] {
        if !s.is_sphere() {
            return Err(BuildSliceError::NotASphere { colour });
        }
        check_triangulated(s, colour)?;
        let tris = triangles_of(s);
        let removed = *tris.iter().min().unwrap();
        let rest: Vec<Cell> = tris
            .iter()
            .filter(|t| **t != removed)
            .map(|t| Cell::red(t[0], t[1], t[2]))
            .collect();
        let disc = build_complex(rest).map_err(|e| BuildSliceError::Construction(e.to_string()))?;
        let anchor = disc
            .cells()
            .iter()
            .position(|c| c.contains(removed[0]) && c.contains(removed[1]))
            .expect("a sphere has a triangle across each edge");
        parts.push((removed, disc, anchor));
    }
    let (t1, d1, a1) = &parts[0];
    let (t2, d2, a2) = &parts[1];
    let (k, offset) = build_anchored(d1, *a1, d2, *a2)?;
    let t2 = t2.map(|v| v + offset);
    plug(&k, t1, &t2).ok_or_else(|| BuildSliceError::Construction("no closing set of tetrahedra found".into()))
}

/// Searches for tetrahedra on the vertices of `t1` and `t2` that close
/// the disc-slice `k` into a valid sphere-slice.
fn plug(k: &Complex3, t1: &Triangle, t2: &Triangle) -> Option<Complex3> {
    let existing: BTreeSet<[Vertex; 4]> = k.tetrahedra().iter().copied().collect();
    let mut candidates: Vec<[Vertex; 4]> = Vec::new();
    let pool: Vec<Vertex> = t1.iter().chain(t2.iter()).copied().collect();
    for a in 0..6 {
        for b in a + 1..6 {
            for c in b + 1..6 {
                for d in c + 1..6 {
                    let mut t = [pool[a], pool[b], pool[c], pool[d]];
                    t.sort_unstable();
                    let reds = [a, b, c, d].iter().filter(|&&i| i < 3).count();
                    if reds > 0 && reds < 4 && !existing.contains(&t) {
                        candidates.push(t);
                    }
                }
            }
        }
    }
    candidates.sort_unstable();
    let n = candidates.len();
    let mut subsets: Vec<u32> = (1u32..1 << n).collect();
    subsets.sort_by_key(|&mask| (mask.count_ones(), mask.reverse_bits()));
    for mask in subsets {
        let mut tets = k.tetrahedra().to_vec();
        tets.extend((0..n).filter(|i| mask & (1 << i) != 0).map(|i| candidates[i]));
        let Ok(m) = build_complex3(k.vertices().to_vec(), tets) else { continue };
        if validate_slice(&m, SliceKind::Sphere, false).valid {
            return Some(m);
        }
    }
    None
}
