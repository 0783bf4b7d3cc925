//! Random surfaces for the integration tests.

#![allow(dead_code)]

use midsection_core::{build_complex, Cell, Colour, SurfaceComplex, Vertex};
use rand::seq::SliceRandom;
use rand::Rng;

fn boundary(s: &SurfaceComplex) -> Vec<(Vertex, Vertex, Colour)> {
    s.boundary_edges()
        .map(|e| {
            let (a, b) = s.edge(e).endpoints();
            (a, b, s.edge(e).colour())
        })
        .collect()
}

/// A triangulated disc with `triangles` triangles, grown by gluing a
/// triangle onto a boundary edge or into the corner between two boundary
/// edges.
pub fn random_disc<R: Rng>(rng: &mut R, triangles: usize) -> SurfaceComplex {
    let mut s = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
    while s.cell_count() < triangles {
        let edges = boundary(&s);
        let &(a, b, _) = edges.choose(rng).unwrap();
        let mut cells = s.cells().to_vec();
        if rng.gen_bool(0.4) {
            // fill the corner at b
            let Some(&(c, d, _)) = edges.iter().find(|&&(c, d, _)| (c == b || d == b) && (c, d) != (a, b)) else {
                continue;
            };
            let far = if c == b { d } else { c };
            cells.push(Cell::red(a, b, far));
        } else {
            cells.push(Cell::red(a, b, s.max_vertex() + 1));
        }
        if let Ok(next) = build_complex(cells) {
            if next.is_disc() {
                s = next;
            }
        }
    }
    s
}

/// A coloured disc with `cells` cells, grown with the local-construction
/// moves in random order.
pub fn random_coloured_disc<R: Rng>(rng: &mut R, cells: usize) -> SurfaceComplex {
    let first = match rng.gen_range(0..3) {
        0 => Cell::red(0, 1, 2),
        1 => Cell::blue(0, 1, 2),
        _ => Cell::quad(0, 1, 2, 3),
    };
    let mut s = build_complex(vec![first]).unwrap();
    let mut attempts = 0;
    while s.cell_count() < cells && attempts < 1000 {
        attempts += 1;
        let edges = boundary(&s);
        let &(a, b, colour) = edges.choose(rng).unwrap();
        let mut next = s.cells().to_vec();
        if rng.gen_bool(0.3) {
            // fold the two boundary edges at a vertex of one colour
            let v = if rng.gen_bool(0.5) { a } else { b };
            let at: Vec<_> = edges.iter().filter(|e| e.0 == v || e.1 == v).collect();
            if at.len() != 2 || at[0].2 != at[1].2 {
                continue;
            }
            let w1 = if at[0].0 == v { at[0].1 } else { at[0].0 };
            let w2 = if at[1].0 == v { at[1].1 } else { at[1].0 };
            next = next.iter().map(|c| c.renamed(w2, w1)).collect();
        } else {
            let (x, y) = (s.max_vertex() + 1, s.max_vertex() + 2);
            next.push(if rng.gen_bool(0.5) {
                Cell::triangle(colour, a, b, x)
            } else if colour == Colour::Red {
                Cell::quad(a, b, x, y)
            } else {
                Cell::quad(x, a, b, y)
            });
        }
        if let Ok(n) = build_complex(next) {
            if n.is_disc() {
                s = n;
            }
        }
    }
    s
}

/// `s` with its vertex ids permuted and spread out.
pub fn shuffled<R: Rng>(rng: &mut R, s: &SurfaceComplex) -> SurfaceComplex {
    let mut ids: Vec<Vertex> = s.vertices().iter().map(|&v| 3 * v + 7).collect();
    ids.shuffle(rng);
    let dense = s.densified();
    let mut cells: Vec<Cell> = dense.cells().iter().map(|c| c.relabelled(|v| ids[v as usize])).collect();
    cells.shuffle(rng);
    build_complex(cells).unwrap()
}
