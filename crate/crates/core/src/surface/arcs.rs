use serde::Serialize;
use thiserror::Error;

use super::{Colour, SurfaceComplex, Vertex};

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
#[error("the complex is not a disc")]
pub struct NotADisc;

/// A maximal monochromatic path along the boundary of a disc.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryArc {
    pub colour: Colour,
    /// Vertices in boundary order; the first and last are the endpoints.
    /// For a monochromatic boundary the single arc is closed and its last
    /// vertex repeats the first.
    pub vertices: Vec<Vertex>,
}

impl BoundaryArc {
    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.vertices[0], self.vertices[self.vertices.len() - 1])
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }
}

/// Boundary arcs of a disc in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryArcs {
    pub arcs: Vec<BoundaryArc>,
}

impl BoundaryArcs {
    pub fn is_monochrome(&self) -> bool {
        self.arcs.len() == 1
    }

    pub fn of_colour(&self, colour: Colour) -> impl Iterator<Item = (usize, &BoundaryArc)> {
        self.arcs.iter().enumerate().filter(move |(_, a)| a.colour == colour)
    }

    /// Indices of the arcs of `colour` containing `v` (two when `v` is a
    /// shared endpoint of a monochrome boundary, else at most one).
    pub fn arcs_containing(&self, v: Vertex, colour: Colour) -> Vec<usize> {
        self.of_colour(colour)
            .filter(|(_, a)| a.contains(v))
            .map(|(i, _)| i)
            .collect()
    }
}

impl SurfaceComplex {
    pub fn boundary_arcs(&self) -> Result<BoundaryArcs, NotADisc> {
        let cycle = self.boundary_cycle().ok_or(NotADisc)?;
        let n = cycle.len();
        let colour_of = |i: usize| {
            let e = self
                .edge_between(cycle[i % n], cycle[(i + 1) % n])
                .expect("consecutive boundary vertices span an edge");
            self.edge(e).colour()
        };
        let colours: Vec<Colour> = (0..n).map(colour_of).collect();
        let Some(start) = (0..n).find(|&i| colours[(i + n - 1) % n] != colours[i]) else {
            let mut vertices = cycle.clone();
            vertices.push(cycle[0]);
            return Ok(BoundaryArcs {
                arcs: vec![BoundaryArc {
                    colour: colours[0],
                    vertices,
                }],
            });
        };
        let mut arcs: Vec<BoundaryArc> = Vec::new();
        for step in 0..n {
            let i = (start + step) % n;
            let (a, b) = (cycle[i], cycle[(i + 1) % n]);
            match arcs.last_mut() {
                Some(arc) if arc.colour == colours[i] => arc.vertices.push(b),
                _ => arcs.push(BoundaryArc {
                    colour: colours[i],
                    vertices: vec![a, b],
                }),
            }
        }
        Ok(BoundaryArcs { arcs })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::surface::{build_complex, Cell};

    #[test]
    fn chain_arcs() {
        let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
        let arcs = fixtures::chain3().boundary_arcs().unwrap();
        let got: Vec<(Colour, Vec<Vertex>)> = arcs.arcs.iter().map(|x| (x.colour, x.vertices.clone())).collect();
        assert_eq!(
            got,
            vec![
                (Colour::Blue, vec![a, d]),
                (Colour::Red, vec![d, c]),
                (Colour::Blue, vec![c, f, b]),
                (Colour::Red, vec![b, e, a]),
            ]
        );
    }

    #[test]
    fn quadrangle_arcs_alternate() {
        let s = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
        let arcs = s.boundary_arcs().unwrap();
        assert_eq!(arcs.arcs.len(), 4);
        for (i, arc) in arcs.arcs.iter().enumerate() {
            assert_eq!(arc.len(), 1);
            assert_ne!(arc.colour, arcs.arcs[(i + 1) % 4].colour);
        }
    }

    #[test]
    fn red_triangle_has_one_closed_arc() {
        let s = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
        let arcs = s.boundary_arcs().unwrap();
        assert!(arcs.is_monochrome());
        assert_eq!(arcs.arcs[0].colour, Colour::Red);
        assert_eq!(arcs.arcs[0].vertices, vec![0, 1, 2, 0]);
    }

    #[test]
    fn sphere_has_no_arcs() {
        let s = fixtures::tetrahedron_boundary(Colour::Red);
        assert_eq!(s.boundary_arcs(), Err(NotADisc));
    }
}
