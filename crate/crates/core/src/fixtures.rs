//! Small hand-built complexes used by tests, benches and the CLI.

use crate::causal3d::{build_complex3, CVertex, Complex3};
use crate::surface::{build_complex, Cell, CellKind, Colour, SurfaceComplex, Vertex};

/// Red ⟨abe⟩, quadrangle ⟨abcd⟩, blue ⟨bcf⟩ with a..f = 0..5.
pub fn chain3() -> SurfaceComplex {
    let (a, b, c, d, e, f) = (0, 1, 2, 3, 4, 5);
    build_complex(vec![Cell::red(a, b, e), Cell::quad(a, b, c, d), Cell::blue(b, c, f)]).expect("valid chain")
}

pub fn chain3_json() -> String {
    crate::surface::io::midsection_to_json(&chain3())
}

/// The boundary of a tetrahedron on vertices 0..4, all triangles of one
/// colour.
pub fn tetrahedron_boundary(colour: Colour) -> SurfaceComplex {
    build_complex(vec![
        Cell::triangle(colour, 0, 1, 2),
        Cell::triangle(colour, 0, 3, 1),
        Cell::triangle(colour, 1, 3, 2),
        Cell::triangle(colour, 2, 3, 0),
    ])
    .expect("valid sphere")
}

/// The 6-triangle bipyramid over the triangle 0,1,2 with apexes 3 and 4.
pub fn bipyramid() -> SurfaceComplex {
    let mut cells = Vec::new();
    for i in 0..3 {
        let (a, b) = (i, (i + 1) % 3);
        cells.push(Cell::red(a, b, 3));
        cells.push(Cell::red(b, a, 4));
    }
    build_complex(cells).expect("valid sphere")
}

/// Swaps red and blue: triangles change colour and each quadrangle is
/// rotated by one place.
pub fn swap_colours(s: &SurfaceComplex) -> SurfaceComplex {
    let cells = s
        .cells()
        .iter()
        .map(|c| {
            let v = c.vertices();
            match c.kind() {
                CellKind::RedTriangle => Cell::blue(v[0], v[1], v[2]),
                CellKind::BlueTriangle => Cell::red(v[0], v[1], v[2]),
                CellKind::Quadrangle => Cell::quad(v[1], v[2], v[3], v[0]),
            }
        })
        .collect();
    build_complex(cells).expect("colour swap preserves validity")
}

/// Quadrangles `⟨b_i b_{i+1} a_{i+1} a_i⟩` around a belt of length `k`,
/// joined along their blue edges `a_i b_i`. Both boundary cycles are red.
fn belt_cells(a: &[Vertex], b: &[Vertex]) -> Vec<Cell> {
    let k = a.len();
    (0..k)
        .map(|i| {
            let j = (i + 1) % k;
            Cell::quad(b[i], b[j], a[j], a[i])
        })
        .collect()
}

/// A closed belt of `k ≥ 3` quadrangles (an annulus).
pub fn quad_belt(k: usize) -> SurfaceComplex {
    let a: Vec<Vertex> = (0..k as Vertex).collect();
    let b: Vec<Vertex> = (k as Vertex..2 * k as Vertex).collect();
    build_complex(belt_cells(&a, &b)).expect("valid belt")
}

/// Red triangles capping the cycle `ring`: a single triangle for length 3,
/// a fan around `centre` otherwise.
fn cap(ring: &[Vertex], centre: Vertex) -> Vec<Cell> {
    if ring.len() == 3 {
        return vec![Cell::red(ring[0], ring[1], ring[2])];
    }
    let k = ring.len();
    (0..k).map(|i| Cell::red(ring[i], ring[(i + 1) % k], centre)).collect()
}

/// A sphere made of two red caps joined by one quadrangle belt of length
/// `k`. For `k = 4` it has 8 triangles.
pub fn capped_belt(k: usize) -> SurfaceComplex {
    let a: Vec<Vertex> = (0..k as Vertex).collect();
    let b: Vec<Vertex> = (k as Vertex..2 * k as Vertex).collect();
    let mut cells = cap(&a, 2 * k as Vertex);
    cells.extend(belt_cells(&a, &b));
    cells.extend(cap(&b, 2 * k as Vertex + 1));
    build_complex(cells).expect("valid sphere")
}

/// Two belts of three quadrangles with a red annulus between them, capped
/// by red triangles. The belts are separated by red cycles. With
/// `Colour::Blue` the colours are swapped.
pub fn two_belt_sphere(colour: Colour) -> SurfaceComplex {
    let ring = |o: Vertex| -> Vec<Vertex> { vec![o, o + 1, o + 2] };
    let (a, b, c, d) = (ring(0), ring(3), ring(6), ring(9));
    let mut cells = cap(&a, 99);
    cells.extend(belt_cells(&a, &b));
    for i in 0..3 {
        let j = (i + 1) % 3;
        cells.push(Cell::red(b[i], b[j], c[i]));
        cells.push(Cell::red(b[j], c[j], c[i]));
    }
    cells.extend(belt_cells(&c, &d));
    cells.extend(cap(&d, 99));
    let s = build_complex(cells).expect("valid sphere");
    match colour {
        Colour::Red => s,
        Colour::Blue => swap_colours(&s),
    }
}

/// A triangle of `colour` wrapped in a ring of three quadrangles whose
/// outer edges also have `colour`.
pub fn ringed_triangle(colour: Colour) -> SurfaceComplex {
    let a = [0, 1, 2];
    let b = [3, 4, 5];
    let mut cells = vec![Cell::red(a[0], a[1], a[2])];
    for i in 0..3 {
        let j = (i + 1) % 3;
        cells.push(Cell::quad(a[i], a[j], b[j], b[i]));
    }
    let s = build_complex(cells).expect("valid disc");
    match colour {
        Colour::Red => s,
        Colour::Blue => swap_colours(&s),
    }
}

/// The three-tetrahedron prism: red 0, 1, 2 and blue 3, 4, 5 with one
/// tetrahedron of each type.
pub fn prism() -> Complex3 {
    let vertices = (0..6)
        .map(|id| CVertex {
            id,
            colour: if id < 3 { Colour::Red } else { Colour::Blue },
        })
        .collect();
    build_complex3(vertices, vec![[0, 1, 2, 3], [0, 1, 3, 4], [1, 3, 4, 5]]).expect("valid prism")
}

pub fn prism_json() -> String {
    crate::causal3d::io::slice_to_json(&prism())
}

/// A single `(2,2)` tetrahedron on red 0, 1 and blue 2, 3.
pub fn single_tetra() -> Complex3 {
    let vertices = (0..4)
        .map(|id| CVertex {
            id,
            colour: if id < 2 { Colour::Red } else { Colour::Blue },
        })
        .collect();
    build_complex3(vertices, vec![[0, 1, 2, 3]]).expect("valid tetrahedron")
}
