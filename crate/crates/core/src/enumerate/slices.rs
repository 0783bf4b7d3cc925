//! Disc-slices grown one tetrahedron at a time, independently of the
//! midsection side.
//!
//! A slice is strongly connected, so it can be grown from one tetrahedron by
//! gluing tetrahedra onto boundary triangles. Intermediate complexes are
//! pruned by properties no later tetrahedron can repair: a monochromatic
//! triangle in two tetrahedra, or a vertex or monochromatic edge whose
//! triangles are all interior.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::spheres::sphere_slice_records;
use super::{check_budget, CensusEntry, CensusKind, CensusRecord, EnumerateError, Shard, DEFAULT_SLICE_BUDGET, DEFAULT_SPHERE_BUDGET};
use crate::causal3d::{build_complex3, code3, validate_slice, CVertex, Complex3, SliceKind};
use crate::surface::{Colour, Vertex};

fn viable(m: &Complex3) -> bool {
    let boundary = m.boundary_triangles();
    let on_boundary = |simplex: &[Vertex]| boundary.iter().any(|t| simplex.iter().all(|v| t.contains(v)));
    m.triangles().iter().all(|(t, inc)| inc.len() == 1 || m.mono_colour(t).is_none())
        && m.vertices().iter().all(|v| on_boundary(&[v.id]))
        && m.edges().iter().all(|e| m.mono_colour(e).is_none() || on_boundary(e))
}

fn children(m: &Complex3) -> Vec<Complex3> {
    let next = m.max_vertex() + 1;
    let mut out = Vec::new();
    for (t, inc) in m.triangles() {
        if inc.len() != 1 || m.mono_colour(t).is_some() {
            continue;
        }
        let mut apexes: Vec<(Vertex, Option<Colour>)> = m
            .vertices()
            .iter()
            .filter(|v| !t.contains(&v.id))
            .map(|v| (v.id, None))
            .collect();
        apexes.push((next, Some(Colour::Red)));
        apexes.push((next, Some(Colour::Blue)));
        for (x, fresh) in apexes {
            let mut vertices = m.vertices().to_vec();
            if let Some(colour) = fresh {
                vertices.push(CVertex { id: x, colour });
            }
            let mut tets = m.tetrahedra().to_vec();
            tets.push([t[0], t[1], t[2], x]);
            if let Ok(k) = build_complex3(vertices, tets) {
                if viable(&k) {
                    out.push(k);
                }
            }
        }
    }
    out
}

fn single(reds: usize) -> Complex3 {
    let vertices = (0..4)
        .map(|i| CVertex {
            id: i,
            colour: if (i as usize) < reds { Colour::Red } else { Colour::Blue },
        })
        .collect();
    build_complex3(vertices, vec![[0, 1, 2, 3]]).expect("one tetrahedron")
}

/// Disc-slices with 1 to `max_tetrahedra` tetrahedra, one per isomorphism
/// class. Entry `k` holds those with `k` tetrahedra.
pub(crate) fn disc_slices(max_tetrahedra: usize) -> Vec<Vec<Complex3>> {
    let mut partial: BTreeMap<Vec<u8>, Complex3> = (1..=3).map(single).map(|k| (code3(&k), k)).collect();
    let mut out = vec![Vec::new()];
    for size in 1..=max_tetrahedra {
        if size > 1 {
            let grown: Vec<(Vec<u8>, Complex3)> = partial
                .par_iter()
                .flat_map_iter(|(_, m)| children(m))
                .map(|k| (code3(&k), k))
                .collect();
            partial = grown.into_iter().collect();
        }
        let valid: Vec<Complex3> = partial
            .values()
            .filter(|k| validate_slice(k, SliceKind::Disc, false).valid)
            .cloned()
            .collect();
        out.push(valid);
    }
    out
}

/// Slice census by tetrahedron count. Disc-slices come from the
/// tetrahedron-gluing search; sphere-slices from the sphere-pair generator.
pub fn enumerate_slices_bruteforce(kind: SliceKind, max_tetrahedra: usize) -> Result<Vec<CensusRecord>, EnumerateError> {
    enumerate_slices_sharded(kind, max_tetrahedra, Shard::whole())
}

/// As [`enumerate_slices_bruteforce`], restricted to one shard. Disc-slice
/// runs are not split: shard 0 produces every record and the others none.
pub fn enumerate_slices_sharded(kind: SliceKind, max_tetrahedra: usize, shard: Shard) -> Result<Vec<CensusRecord>, EnumerateError> {
    match kind {
        SliceKind::Disc => {
            check_budget(max_tetrahedra, DEFAULT_SLICE_BUDGET)?;
            if !shard.is_first() {
                return Ok(Vec::new());
            }
            Ok(disc_slices(max_tetrahedra)
                .into_iter()
                .enumerate()
                .skip(1)
                .map(|(k, level)| {
                    let entries = level
                        .iter()
                        .map(|m| CensusEntry {
                            code: hex::encode(code3(m)),
                            conditions: Vec::new(),
                        })
                        .collect();
                    CensusRecord::new(CensusKind::SliceDisc, k, entries)
                })
                .collect())
        }
        SliceKind::Sphere => {
            check_budget(max_tetrahedra, DEFAULT_SPHERE_BUDGET)?;
            Ok(sphere_slice_records(max_tetrahedra, shard))
        }
    }
}
