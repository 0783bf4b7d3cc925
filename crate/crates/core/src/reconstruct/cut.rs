use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use super::reconstruct_unchecked;
use crate::causal3d::{face, Complex3};
use crate::conditions::{membership, ConditionReport, MidsectionKind};
use crate::surface::{build_complex, CellKind, Colour, SurfaceComplex, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CutError {
    #[error("the input is not a sphere midsection: {}", .report.root_failure().map_or("", |r| r.condition.name()))]
    MembershipFailed { report: Box<ConditionReport> },
    #[error("the strip through quadrangle {quad} does not end in blue triangles")]
    OpenStrip { quad: usize },
    #[error("no quadrangle borders the red cluster")]
    NoBoundaryQuadrangle,
    #[error("the remaining complex is not valid: {0}")]
    Remainder(String),
    #[error("the remaining disc fails membership: {}", .report.root_failure().map_or("", |r| r.condition.name()))]
    RemainderNotMember { report: Box<ConditionReport> },
}

/// An Euler characteristic computed on part of the reconstructed slice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerAudit {
    pub name: &'static str,
    pub euler: i64,
}

/// The pieces of a sphere midsection removed to leave a disc midsection.
/// Cell indices refer to the input.
#[derive(Clone, Debug, Serialize)]
pub struct CutResult {
    /// Maximal edge-connected cluster of red triangles.
    pub red_cluster: Vec<usize>,
    /// Maximal blue path of quadrangles next to the cluster.
    pub strip: Vec<usize>,
    /// The blue triangles at the two ends of the strip.
    pub end_triangles: (usize, usize),
    /// Cells of the input that make up the remaining disc.
    pub remainder: Vec<usize>,
    #[serde(skip)]
    pub disc: SurfaceComplex,
    pub audits: Vec<EulerAudit>,
}

fn sorted_cell(s: &SurfaceComplex, i: usize) -> Vec<Vertex> {
    let mut v = s.cell(i).vertices().to_vec();
    v.sort_unstable();
    v
}

/// Removes the red cluster through the smallest red triangle, the blue
/// quadrangle strip through the smallest quadrangle bordering it, and the
/// strip's end triangles. "Smallest" compares sorted vertex lists.
pub fn cut_to_disc(s0: &SurfaceComplex) -> Result<CutResult, CutError> {
    let report = membership(s0, MidsectionKind::Sphere);
    if !report.verdict {
        return Err(CutError::MembershipFailed { report: Box::new(report) });
    }
    let red_tri = CellKind::RedTriangle;
    let seed = (0..s0.cell_count())
        .filter(|&i| s0.cell(i).kind() == red_tri)
        .min_by_key(|&i| sorted_cell(s0, i))
        .expect("members have red triangles");
    let mut in_cluster = vec![false; s0.cell_count()];
    in_cluster[seed] = true;
    let mut stack = vec![seed];
    while let Some(c) = stack.pop() {
        for (_, o) in s0.neighbours(c) {
            if !in_cluster[o] && s0.cell(o).kind() == red_tri {
                in_cluster[o] = true;
                stack.push(o);
            }
        }
    }
    let red_cluster: Vec<usize> = (0..s0.cell_count()).filter(|&i| in_cluster[i]).collect();

    let bordering = (0..s0.cell_count())
        .filter(|&i| s0.cell(i).kind() == CellKind::Quadrangle)
        .filter(|&i| s0.neighbours(i).any(|(_, o)| in_cluster[o]))
        .min_by_key(|&i| sorted_cell(s0, i))
        .ok_or(CutError::NoBoundaryQuadrangle)?;
    let chain = s0
        .quad_chains(Colour::Blue)
        .into_iter()
        .find(|ch| ch.quads.contains(&bordering))
        .expect("every quadrangle is in a chain");
    if chain.closed {
        return Err(CutError::OpenStrip { quad: bordering });
    }
    let end_triangle = |e: usize| {
        s0.edge(e)
            .cells()
            .iter()
            .copied()
            .find(|&c| s0.cell(c).kind() == CellKind::BlueTriangle)
    };
    let (Some(d1), Some(d2)) = (end_triangle(chain.edges[0]), end_triangle(*chain.edges.last().unwrap())) else {
        return Err(CutError::OpenStrip { quad: bordering });
    };

    let mut removed: BTreeSet<usize> = red_cluster.iter().copied().collect();
    removed.extend(chain.quads.iter().copied());
    removed.insert(d1);
    removed.insert(d2);
    let remainder: Vec<usize> = (0..s0.cell_count()).filter(|i| !removed.contains(i)).collect();
    let disc = build_complex(remainder.iter().map(|&i| s0.cell(i).clone()).collect()).map_err(|e| CutError::Remainder(e.to_string()))?;
    let report = membership(&disc, MidsectionKind::Disc);
    if !report.verdict {
        return Err(CutError::RemainderNotMember { report: Box::new(report) });
    }

    let audits = audits(s0, &red_cluster, &disc);
    let mut strip = chain.quads;
    strip.sort_unstable();
    Ok(CutResult {
        red_cluster,
        strip,
        end_triangles: (d1.min(d2), d1.max(d2)),
        remainder,
        disc,
        audits,
    })
}

/// Euler characteristic of the simplicial closure of some tetrahedra.
fn closure_euler(tets: &[[Vertex; 4]]) -> i64 {
    let (v, e, f) = closure(tets);
    v.len() as i64 - e.len() as i64 + f.len() as i64 - tets.len() as i64
}

type Closure = (BTreeSet<Vertex>, BTreeSet<[Vertex; 2]>, BTreeSet<[Vertex; 3]>);

fn closure(tets: &[[Vertex; 4]]) -> Closure {
    let mut vs = BTreeSet::new();
    let mut es = BTreeSet::new();
    let mut fs = BTreeSet::new();
    for t in tets {
        for i in 0..4 {
            vs.insert(t[i]);
            fs.insert(face(t, i));
            for j in i + 1..4 {
                es.insert([t[i], t[j]]);
            }
        }
    }
    (vs, es, fs)
}

fn audits(s0: &SurfaceComplex, red_cluster: &[usize], disc: &SurfaceComplex) -> Vec<EulerAudit> {
    let mut out = Vec::new();
    let Ok(k0): Result<Complex3, _> = reconstruct_unchecked(s0) else {
        return out;
    };
    out.push(EulerAudit {
        name: "slice",
        euler: k0.counts().euler(),
    });
    let tets = k0.tetrahedra();
    let over_cluster: Vec<[Vertex; 4]> = red_cluster.iter().map(|&i| tets[i]).collect();
    let rest: Vec<[Vertex; 4]> = (0..tets.len()).filter(|i| !red_cluster.contains(i)).map(|i| tets[i]).collect();
    out.push(EulerAudit {
        name: "over-red-cluster",
        euler: closure_euler(&over_cluster),
    });
    out.push(EulerAudit {
        name: "over-complement",
        euler: closure_euler(&rest),
    });
    let (av, ae, af) = closure(&over_cluster);
    let (bv, be, bf) = closure(&rest);
    let common = av.intersection(&bv).count() as i64 - ae.intersection(&be).count() as i64
        + af.intersection(&bf).count() as i64;
    out.push(EulerAudit {
        name: "intersection",
        euler: common,
    });
    if let Ok(k) = reconstruct_unchecked(disc) {
        out.push(EulerAudit {
            name: "disc-slice",
            euler: k.counts().euler(),
        });
    }
    out
}
