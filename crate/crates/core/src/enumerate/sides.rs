use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::causal3d::triangle_surface;
use crate::surface::{SurfaceComplex, Vertex};

/// Side triangulations of a slice between one red and one blue triangle.
#[derive(Clone, Debug)]
pub struct SideCensus {
    /// Apex choices tried: one blue apex per red edge, one red apex per
    /// blue edge.
    pub candidates: usize,
    /// Choices whose side triangles form a cylinder on the two rims.
    pub cylinders: usize,
    /// Classes up to colour-preserving isomorphism that keeps the red rim
    /// running 0, 1, 2.
    pub oriented_classes: usize,
    /// Classes when mirror images are identified.
    pub unoriented_classes: usize,
    /// One cylinder per oriented class, in code order.
    pub representatives: Vec<SurfaceComplex>,
}

const RED: [Vertex; 3] = [0, 1, 2];
const BLUE: [Vertex; 3] = [3, 4, 5];

fn rim_edges(t: [Vertex; 3]) -> [(Vertex, Vertex); 3] {
    [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
}

pub fn side_census() -> SideCensus {
    let red_rim = rim_edges(RED);
    let blue_rim = rim_edges(BLUE);
    let rims: BTreeSet<(Vertex, Vertex)> = red_rim.iter().chain(&blue_rim).copied().collect();
    let class = |v: Vertex| u8::from(v >= 3);
    let mut candidates = 0;
    let mut cylinders = 0;
    let mut oriented = BTreeMap::new();
    let mut unoriented = BTreeSet::new();
    let choices = std::iter::repeat_n(BLUE, 3)
        .multi_cartesian_product()
        .cartesian_product(std::iter::repeat_n(RED, 3).multi_cartesian_product());
    for (blue_apex, red_apex) in choices {
        candidates += 1;
        let mut triangles: Vec<[Vertex; 3]> = Vec::new();
        for (&(a, b), &x) in red_rim.iter().zip(&blue_apex).chain(blue_rim.iter().zip(&red_apex)) {
            let mut t = [a, b, x];
            t.sort_unstable();
            triangles.push(t);
        }
        let Some(s) = triangle_surface(&triangles) else { continue };
        let topo = s.topology();
        let boundary: BTreeSet<(Vertex, Vertex)> = s.boundary_edges().map(|e| s.edge(e).endpoints()).collect();
        if topo.euler != 0 || topo.boundary_components != 2 || boundary != rims {
            continue;
        }
        cylinders += 1;
        // cell 0 is the triangle on the red edge (0, 1), stored in increasing
        // order, so the positive code is the one where the red rim runs 0, 1, 2
        let codes = s.oriented_codes(&class).expect("a cylinder is orientable");
        unoriented.insert(codes.positive.clone().min(codes.negative.clone()));
        oriented.entry(codes.positive).or_insert(s);
    }
    SideCensus {
        candidates,
        cylinders,
        oriented_classes: oriented.len(),
        unoriented_classes: unoriented.len(),
        representatives: oriented.into_values().collect(),
    }
}
