//! Decision procedures for the midsection conditions and for membership in
//! the disc class (𝒮𝒟) and the sphere class (𝒮).
//!
//! * (α) no two distinct vertices are joined by both a red and a blue path;
//! * (β₁) in a disc, a closed simple colour-`c` path encloses only
//!   colour-`c` triangles;
//! * (β₂) two vertices on distinct blue arcs are joined by a red path only
//!   when they are the endpoints of a red arc, and with colours swapped;
//! * (β) in a sphere, a closed simple colour-`c` path has only colour-`c`
//!   triangles on one of its sides;
//! * (γ) vertex-disjoint blue edges whose ends are pairwise red-connected
//!   are joined by a blue path of quadrangles, and with colours swapped;
//! * (δ) no two triangles of one colour have their vertices matched
//!   pairwise by paths of the other colour.

mod oracle;
mod witness;

use serde::Serialize;
use thiserror::Error;

use crate::surface::{CellKind, Colour, SurfaceComplex, TopologyClass, Vertex};

pub use oracle::{oracle_conditions, OracleError, DEFAULT_ORACLE_BUDGET};
pub use witness::Witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Condition {
    #[serde(rename = "topology")]
    Topology,
    #[serde(rename = "triangles")]
    TriangleCount,
    #[serde(rename = "alpha")]
    Alpha,
    #[serde(rename = "beta1-red")]
    Beta1Red,
    #[serde(rename = "beta1-blue")]
    Beta1Blue,
    #[serde(rename = "beta2")]
    Beta2,
    #[serde(rename = "beta-red")]
    BetaRed,
    #[serde(rename = "beta-blue")]
    BetaBlue,
    #[serde(rename = "gamma")]
    Gamma,
    #[serde(rename = "delta")]
    Delta,
    #[serde(rename = "membership-disc")]
    DiscMembership,
    #[serde(rename = "membership-sphere")]
    SphereMembership,
}

impl Condition {
    pub fn beta1(c: Colour) -> Condition {
        match c {
            Colour::Red => Condition::Beta1Red,
            Colour::Blue => Condition::Beta1Blue,
        }
    }

    pub fn beta(c: Colour) -> Condition {
        match c {
            Colour::Red => Condition::BetaRed,
            Colour::Blue => Condition::BetaBlue,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Condition::Topology => "topology",
            Condition::TriangleCount => "triangles",
            Condition::Alpha => "alpha",
            Condition::Beta1Red => "beta1-red",
            Condition::Beta1Blue => "beta1-blue",
            Condition::Beta2 => "beta2",
            Condition::BetaRed => "beta-red",
            Condition::BetaBlue => "beta-blue",
            Condition::Gamma => "gamma",
            Condition::Delta => "delta",
            Condition::DiscMembership => "membership-disc",
            Condition::SphereMembership => "membership-sphere",
        }
    }
}

/// Outcome of one condition. A false verdict always carries a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub condition: Condition,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl ConditionReport {
    pub fn pass(condition: Condition) -> Self {
        ConditionReport {
            condition,
            verdict: true,
            witness: None,
        }
    }

    pub fn fail(condition: Condition, witness: Witness) -> Self {
        ConditionReport {
            condition,
            verdict: false,
            witness: Some(witness),
        }
    }

    /// The innermost failing report of a membership verdict.
    pub fn root_failure(&self) -> Option<&ConditionReport> {
        match &self.witness {
            Some(Witness::Failed { report }) => report.root_failure(),
            Some(_) if !self.verdict => Some(self),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, Error, PartialEq, Eq)]
pub enum ConditionError {
    #[error("the complex is not a disc")]
    NotADisc,
    #[error("the complex is not a sphere")]
    NotASphere,
    #[error("the boundary is monochromatic, so there are no arcs to compare")]
    NoArcs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MidsectionKind {
    Disc,
    Sphere,
}

fn sorted_pair(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

pub fn check_alpha(s: &SurfaceComplex) -> ConditionReport {
    let red = s.component_table(Colour::Red);
    let blue = s.component_table(Colour::Blue);
    let mut first_with: std::collections::HashMap<(usize, usize), Vertex> = Default::default();
    let mut best: Option<(Vertex, Vertex)> = None;
    for (i, &v) in s.vertices().iter().enumerate() {
        let key = (red.of[i], blue.of[i]);
        match first_with.get(&key) {
            Some(&u) => {
                if best.is_none_or(|b| (u, v) < b) {
                    best = Some((u, v));
                }
            }
            None => {
                first_with.insert(key, v);
            }
        }
    }
    match best {
        None => ConditionReport::pass(Condition::Alpha),
        Some((u, v)) => ConditionReport::fail(Condition::Alpha, Witness::VertexPair { u, v }),
    }
}

/// Cells reachable from the outer region crossing only non-`c` edges.
fn outer_reachable(s: &SurfaceComplex, c: Colour) -> Vec<bool> {
    let mut reached = vec![false; s.cell_count()];
    let mut stack = Vec::new();
    for e in s.boundary_edges() {
        let edge = s.edge(e);
        if edge.colour() != c {
            let cell = edge.cells()[0];
            if !reached[cell] {
                reached[cell] = true;
                stack.push(cell);
            }
        }
    }
    flood(s, c, &mut reached, stack);
    reached
}

/// Extends `reached` across interior edges whose colour is not `c`.
fn flood(s: &SurfaceComplex, c: Colour, reached: &mut [bool], mut stack: Vec<usize>) {
    while let Some(cell) = stack.pop() {
        for (e, o) in s.neighbours(cell) {
            if s.edge(e).colour() != c && !reached[o] {
                reached[o] = true;
                stack.push(o);
            }
        }
    }
}

/// The cells reachable from `start` across non-`c` edges, and the
/// colour-`c` edges bounding that region.
fn region_and_cut(s: &SurfaceComplex, c: Colour, start: usize) -> (Vec<bool>, Vec<(Vertex, Vertex)>) {
    let mut inside = vec![false; s.cell_count()];
    inside[start] = true;
    flood(s, c, &mut inside, vec![start]);
    let mut cut: Vec<(Vertex, Vertex)> = Vec::new();
    for (cell, _) in inside.iter().enumerate().filter(|(_, &x)| x) {
        for &e in s.cell_edges(cell) {
            let edge = s.edge(e);
            if edge.colour() == c && edge.other_cell(cell).is_none_or(|o| !inside[o]) {
                cut.push(edge.endpoints());
            }
        }
    }
    cut.sort_unstable();
    cut.dedup();
    (inside, cut)
}

fn is_c_triangle(s: &SurfaceComplex, cell: usize, c: Colour) -> bool {
    s.cell(cell).kind() == CellKind::triangle(c)
}

pub fn check_beta1(s: &SurfaceComplex, c: Colour) -> Result<ConditionReport, ConditionError> {
    if !s.is_disc() {
        return Err(ConditionError::NotADisc);
    }
    let reached = outer_reachable(s, c);
    let stuck = (0..s.cell_count()).find(|&i| !reached[i] && !is_c_triangle(s, i, c));
    Ok(match stuck {
        None => ConditionReport::pass(Condition::beta1(c)),
        Some(cell) => {
            let (_, cut) = region_and_cut(s, c, cell);
            ConditionReport::fail(Condition::beta1(c), Witness::EnclosedCell { colour: c, cell, cut })
        }
    })
}

pub fn check_beta_sphere(s: &SurfaceComplex, c: Colour) -> Result<ConditionReport, ConditionError> {
    if !s.is_sphere() {
        return Err(ConditionError::NotASphere);
    }
    let non_c: Vec<usize> = (0..s.cell_count()).filter(|&i| !is_c_triangle(s, i, c)).collect();
    let Some(&first) = non_c.first() else {
        return Ok(ConditionReport::pass(Condition::beta(c)));
    };
    let (inside, cut) = region_and_cut(s, c, first);
    Ok(match non_c.iter().copied().find(|&i| !inside[i]) {
        None => ConditionReport::pass(Condition::beta(c)),
        Some(second) => ConditionReport::fail(
            Condition::beta(c),
            Witness::SeparatedCells {
                colour: c,
                first,
                second,
                cut,
            },
        ),
    })
}

/// Arc memberships `(vertex, arc index)` for arcs of colour `arc_colour`.
pub(crate) fn arc_memberships(arcs: &crate::surface::BoundaryArcs, arc_colour: Colour) -> Vec<(Vertex, usize)> {
    let mut out = Vec::new();
    for (i, arc) in arcs.of_colour(arc_colour) {
        for &v in &arc.vertices {
            if !out.contains(&(v, i)) {
                out.push((v, i));
            }
        }
    }
    out
}

pub(crate) fn is_arc_endpoint_pair(arcs: &crate::surface::BoundaryArcs, colour: Colour, u: Vertex, v: Vertex) -> bool {
    arcs.of_colour(colour).any(|(_, a)| {
        let (x, y) = a.endpoints();
        sorted_pair(x, y) == sorted_pair(u, v)
    })
}

pub fn check_beta2(s: &SurfaceComplex) -> Result<ConditionReport, ConditionError> {
    let arcs = s.boundary_arcs().map_err(|_| ConditionError::NotADisc)?;
    if arcs.is_monochrome() {
        return Err(ConditionError::NoArcs);
    }
    let mut best: Option<(Vertex, Vertex, Colour, usize, usize)> = None;
    for path_colour in Colour::BOTH {
        let table = s.component_table(path_colour);
        let members = arc_memberships(&arcs, path_colour.complement());
        for (i, &(u, au)) in members.iter().enumerate() {
            for &(v, av) in &members[i + 1..] {
                if u == v || au == av {
                    continue;
                }
                if s.component_of(&table, u) != s.component_of(&table, v) {
                    continue;
                }
                if is_arc_endpoint_pair(&arcs, path_colour, u, v) {
                    continue;
                }
                let (a, b) = sorted_pair(u, v);
                let (arc_a, arc_b) = if a == u { (au, av) } else { (av, au) };
                let cand = (a, b, path_colour, arc_a, arc_b);
                if best.is_none_or(|x| (cand.0, cand.1) < (x.0, x.1)) {
                    best = Some(cand);
                }
            }
        }
        if best.is_some() {
            break;
        }
    }
    Ok(match best {
        None => ConditionReport::pass(Condition::Beta2),
        Some((u, v, path_colour, arc_u, arc_v)) => ConditionReport::fail(
            Condition::Beta2,
            Witness::ArcPair {
                u,
                v,
                path_colour,
                arc_u,
                arc_v,
            },
        ),
    })
}

pub fn check_gamma(s: &SurfaceComplex) -> ConditionReport {
    for c in [Colour::Blue, Colour::Red] {
        let other = s.component_table(c.complement());
        let (_, chain) = s.chain_index(c);
        let mut edges: Vec<usize> = (0..s.edge_count()).filter(|&e| s.edge(e).colour() == c).collect();
        edges.sort_by_key(|&e| s.edge(e).endpoints());
        for (i, &e) in edges.iter().enumerate() {
            let (a, b) = s.edge(e).endpoints();
            for &f in &edges[i + 1..] {
                let (x, y) = s.edge(f).endpoints();
                if a == x || a == y || b == x || b == y {
                    continue;
                }
                let comp = |v| s.component_of(&other, v);
                let triggered = (comp(a) == comp(x) && comp(b) == comp(y)) || (comp(a) == comp(y) && comp(b) == comp(x));
                if triggered && chain[e] != chain[f] {
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

pub(crate) const PERMUTATIONS3: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

pub fn check_delta(s: &SurfaceComplex) -> ConditionReport {
    for c in Colour::BOTH {
        let table = s.component_table(c.complement());
        let triangles: Vec<usize> = (0..s.cell_count()).filter(|&i| is_c_triangle(s, i, c)).collect();
        for (i, &t1) in triangles.iter().enumerate() {
            let a = s.cell(t1).vertices();
            for &t2 in &triangles[i + 1..] {
                let b = s.cell(t2).vertices();
                for p in PERMUTATIONS3 {
                    if (0..3).all(|k| s.component_of(&table, a[k]) == s.component_of(&table, b[p[k]])) {
                        let matching = (0..3).map(|k| (a[k], b[p[k]])).collect();
                        return ConditionReport::fail(
                            Condition::Delta,
                            Witness::TrianglePair {
                                colour: c,
                                first: t1,
                                second: t2,
                                matching,
                            },
                        );
                    }
                }
            }
        }
    }
    ConditionReport::pass(Condition::Delta)
}

fn topology_report(s: &SurfaceComplex, want: TopologyClass) -> ConditionReport {
    let t = s.topology();
    if t.class == want {
        ConditionReport::pass(Condition::Topology)
    } else {
        ConditionReport::fail(
            Condition::Topology,
            Witness::Topology {
                class: t.class,
                euler: t.euler,
                boundary_components: t.boundary_components,
            },
        )
    }
}

fn triangle_report(s: &SurfaceComplex, required: usize) -> ConditionReport {
    for c in Colour::BOTH {
        let found = s.triangle_count(c);
        if found < required {
            return ConditionReport::fail(
                Condition::TriangleCount,
                Witness::TriangleCount {
                    colour: c,
                    found,
                    required,
                },
            );
        }
    }
    ConditionReport::pass(Condition::TriangleCount)
}

fn beta2_report(s: &SurfaceComplex) -> ConditionReport {
    match check_beta2(s) {
        Ok(r) => r,
        Err(_) => {
            let colour = s
                .boundary_edges()
                .next()
                .map(|e| s.edge(e).colour())
                .unwrap_or(Colour::Red);
            ConditionReport::fail(Condition::Beta2, Witness::MonochromeBoundary { colour })
        }
    }
}

/// Membership in 𝒮𝒟 or 𝒮. Sub-checks run in order and stop at the first
/// failure, which becomes the witness.
pub fn membership(s: &SurfaceComplex, kind: MidsectionKind) -> ConditionReport {
    let (name, steps): (Condition, Vec<Box<dyn Fn() -> ConditionReport + '_>>) = match kind {
        MidsectionKind::Disc => (
            Condition::DiscMembership,
            vec![
                Box::new(|| topology_report(s, TopologyClass::Disc)),
                Box::new(|| triangle_report(s, 1)),
                Box::new(|| check_alpha(s)),
                Box::new(|| check_beta1(s, Colour::Red).expect("disc")),
                Box::new(|| check_beta1(s, Colour::Blue).expect("disc")),
                Box::new(|| beta2_report(s)),
                Box::new(|| check_gamma(s)),
            ],
        ),
        MidsectionKind::Sphere => (
            Condition::SphereMembership,
            vec![
                Box::new(|| topology_report(s, TopologyClass::Sphere)),
                Box::new(|| triangle_report(s, 4)),
                Box::new(|| check_alpha(s)),
                Box::new(|| check_beta_sphere(s, Colour::Red).expect("sphere")),
                Box::new(|| check_beta_sphere(s, Colour::Blue).expect("sphere")),
                Box::new(|| check_gamma(s)),
            ],
        ),
    };
    for step in steps {
        let r = step();
        if !r.verdict {
            return ConditionReport::fail(name, Witness::Failed { report: Box::new(r) });
        }
    }
    ConditionReport::pass(name)
}

pub fn is_member(s: &SurfaceComplex, kind: MidsectionKind) -> bool {
    membership(s, kind).verdict
}

/// The fast verdicts compared against the oracle, in a fixed order:
/// α, β₁ (red, blue) and β₂ for discs or β (red, blue) for spheres, γ, δ.
/// `Err` entries record β₂'s `NoArcs`.
pub fn fast_conditions(s: &SurfaceComplex) -> Vec<Result<ConditionReport, ConditionError>> {
    let mut out = vec![Ok(check_alpha(s))];
    if s.is_disc() {
        out.push(check_beta1(s, Colour::Red));
        out.push(check_beta1(s, Colour::Blue));
        out.push(check_beta2(s));
    } else if s.is_sphere() {
        out.push(check_beta_sphere(s, Colour::Red));
        out.push(check_beta_sphere(s, Colour::Blue));
    }
    out.push(Ok(check_gamma(s)));
    out.push(Ok(check_delta(s)));
    out
}

#[cfg(test)]
mod tests;
