use std::collections::{BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use super::{triangle_surface, Complex3, SliceKind, Triangle};
use crate::surface::{Colour, SurfaceComplex, TopologyClass, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "error", rename_all = "kebab-case")]
pub enum SplitError {
    #[error("the complex has no boundary")]
    EmptyBoundary,
    #[error("the {colour} boundary part is not a disc")]
    MonochromePartNotDisc { colour: Colour },
    #[error("the {colour} boundary part is not a sphere")]
    MonochromePartNotSphere { colour: Colour },
    #[error("the two-coloured boundary triangles do not form a cylinder joining the two discs")]
    SideNotCylinder,
    #[error("{count} two-coloured boundary triangles in a sphere-slice")]
    UnexpectedSide { count: usize },
}

/// The boundary of a slice: red part, blue part and the two-coloured side.
///
/// `side` is in walk order: starting at the smallest vertex of the red
/// boundary cycle, each red boundary edge contributes the side triangle on
/// it followed by the fan of triangles at its far end that meet the red
/// part only in that vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundarySplit {
    pub red: Vec<Triangle>,
    pub blue: Vec<Triangle>,
    pub side: Vec<Triangle>,
}

impl BoundarySplit {
    pub fn part(&self, colour: Colour) -> &[Triangle] {
        match colour {
            Colour::Red => &self.red,
            Colour::Blue => &self.blue,
        }
    }
}

fn boundary_edge_set(s: &SurfaceComplex) -> BTreeSet<(Vertex, Vertex)> {
    s.boundary_edges().map(|e| s.edge(e).endpoints()).collect()
}

/// Classifies the boundary triangles of `m` and checks the topology
/// required by `kind`.
pub fn boundary_split(m: &Complex3, kind: SliceKind) -> Result<BoundarySplit, SplitError> {
    let boundary = m.boundary_triangles();
    if boundary.is_empty() {
        return Err(SplitError::EmptyBoundary);
    }
    let (mut red, mut blue, mut side) = (Vec::new(), Vec::new(), Vec::new());
    for t in boundary {
        match m.mono_colour(&t) {
            Some(Colour::Red) => red.push(t),
            Some(Colour::Blue) => blue.push(t),
            None => side.push(t),
        }
    }
    let parts = [(Colour::Red, &red), (Colour::Blue, &blue)].map(|(c, ts)| (c, triangle_surface(ts)));
    match kind {
        SliceKind::Sphere => {
            for (colour, s) in &parts {
                if s.as_ref().map(|s| s.classify()) != Some(TopologyClass::Sphere) {
                    return Err(SplitError::MonochromePartNotSphere { colour: *colour });
                }
            }
            if !side.is_empty() {
                return Err(SplitError::UnexpectedSide { count: side.len() });
            }
            Ok(BoundarySplit { red, blue, side })
        }
        SliceKind::Disc => {
            for (colour, s) in &parts {
                if !s.as_ref().is_some_and(|s| s.is_disc()) {
                    return Err(SplitError::MonochromePartNotDisc { colour: *colour });
                }
            }
            let red_disc = parts[0].1.as_ref().unwrap();
            let blue_disc = parts[1].1.as_ref().unwrap();
            let cylinder = triangle_surface(&side).ok_or(SplitError::SideNotCylinder)?;
            let topo = cylinder.topology();
            let mut rims = boundary_edge_set(red_disc);
            rims.extend(boundary_edge_set(blue_disc));
            if topo.euler != 0 || topo.boundary_components != 2 || boundary_edge_set(&cylinder) != rims {
                return Err(SplitError::SideNotCylinder);
            }
            let side = walk_side(m, red_disc, &side).ok_or(SplitError::SideNotCylinder)?;
            Ok(BoundarySplit { red, blue, side })
        }
    }
}

/// Orders the side triangles by walking around the cylinder across their
/// two-coloured edges, starting from the triangle on the first red
/// boundary edge and leaving it through the edge at that edge's far end.
fn walk_side(m: &Complex3, red_disc: &SurfaceComplex, side: &[Triangle]) -> Option<Vec<Triangle>> {
    let cycle = red_disc.boundary_cycle()?;
    let (v1, v2) = (cycle[0], cycle[1]);
    let mut by_edge: HashMap<(Vertex, Vertex), Vec<usize>> = HashMap::new();
    for (i, t) in side.iter().enumerate() {
        for (a, b) in [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])] {
            by_edge.entry((a, b)).or_default().push(i);
        }
    }
    let key = |a: Vertex, b: Vertex| if a < b { (a, b) } else { (b, a) };
    let start = *by_edge.get(&key(v1, v2))?.first()?;
    let apex = side[start].iter().copied().find(|&x| x != v1 && x != v2)?;
    let mut order = vec![side[start]];
    let mut cur = start;
    let mut exit = key(v2, apex);
    loop {
        let next = by_edge.get(&exit)?.iter().copied().find(|&i| i != cur)?;
        if next == start {
            break;
        }
        if order.len() > side.len() {
            return None;
        }
        order.push(side[next]);
        let t = side[next];
        let mut two_coloured = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
            .into_iter()
            .filter(|&(a, b)| m.colour(a) != m.colour(b));
        let (e1, e2) = (two_coloured.next()?, two_coloured.next()?);
        exit = if e1 == exit { e2 } else { e1 };
        cur = next;
    }
    (order.len() == side.len()).then_some(order)
}

