use serde::Serialize;

use super::{boundary_split, triangle_surface, Complex3, SliceKind};
use crate::conditions::membership;
use crate::surface::Vertex;

/// One named step of slice validation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SliceReport {
    pub kind: SliceKind,
    pub checks: Vec<Check>,
    pub valid: bool,
}

impl SliceReport {
    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Every monochromatic vertex, edge and triangle lies in a boundary
/// triangle of its own colour. Returns the first offending simplex.
pub fn monochrome_on_boundary(m: &Complex3) -> Result<(), Vec<Vertex>> {
    let boundary = m.boundary_triangles();
    let mono: Vec<_> = boundary.iter().filter(|t| m.mono_colour(&t[..]).is_some()).collect();
    for v in m.vertices() {
        if !mono.iter().any(|t| t.contains(&v.id)) {
            return Err(vec![v.id]);
        }
    }
    for e in m.edges() {
        if m.mono_colour(e).is_some() && !mono.iter().any(|t| t.contains(&e[0]) && t.contains(&e[1])) {
            return Err(e.to_vec());
        }
    }
    for (t, inc) in m.triangles() {
        if m.mono_colour(t).is_some() && inc.len() != 1 {
            return Err(t.to_vec());
        }
    }
    Ok(())
}

fn links_are_discs(m: &Complex3) -> Result<(), Vertex> {
    for v in m.vertices() {
        if !triangle_surface(&m.link(v.id)).is_some_and(|s| s.is_disc()) {
            return Err(v.id);
        }
    }
    Ok(())
}

/// Checks `m` as a slice of the given kind, stopping at the first failed
/// check. With `certificate` set, a final check maps `m` to its midsection,
/// tests membership, reconstructs and compares with `m`.
pub fn validate_slice(m: &Complex3, kind: SliceKind, certificate: bool) -> SliceReport {
    let mut checks = Vec::new();
    let mut push = |name, result: Result<String, String>| {
        let passed = result.is_ok();
        let detail = result.unwrap_or_else(|e| e);
        checks.push(Check { name, passed, detail });
        passed
    };
    let ok = push(
        "monochrome-on-boundary",
        monochrome_on_boundary(m)
            .map(|_| String::new())
            .map_err(|s| format!("monochromatic simplex {s:?} is not in a boundary triangle of its colour")),
    ) && push(
        "vertex-links",
        links_are_discs(m)
            .map(|_| String::new())
            .map_err(|v| format!("the link of vertex {v} is not a disc")),
    ) && push(
        "boundary-split",
        boundary_split(m, kind)
            .map(|s| format!("{} red, {} blue, {} side triangles", s.red.len(), s.blue.len(), s.side.len()))
            .map_err(|e| e.to_string()),
    ) && {
        let chi = m.counts().euler();
        push(
            "euler",
            if chi == kind.euler() {
                Ok(format!("χ = {chi}"))
            } else {
                Err(format!("χ = {chi}, expected {}", kind.euler()))
            },
        )
    };
    if ok && certificate {
        push("certificate", certify(m, kind));
    }
    let valid = checks.iter().all(|c| c.passed);
    SliceReport { kind, checks, valid }
}

fn certify(m: &Complex3, kind: SliceKind) -> Result<String, String> {
    let (s, _) = crate::midsection::midsection(m).map_err(|e| e.to_string())?;
    let report = membership(&s, kind.into());
    if !report.verdict {
        let root = report.root_failure().map_or(report.condition, |r| r.condition);
        return Err(format!("midsection fails {}", root.name()));
    }
    let back = crate::reconstruct::reconstruct(&s, kind.into()).map_err(|e| e.to_string())?;
    if super::isomorphic3(&back, m) {
        Ok(format!("midsection has {} cells and reconstructs to the input", s.cell_count()))
    } else {
        Err("reconstruction is not isomorphic to the input".into())
    }
}
