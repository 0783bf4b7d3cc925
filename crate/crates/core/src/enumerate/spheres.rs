//! Sphere-slices generated over pairs of triangulated spheres.
//!
//! Every boundary triangle of a sphere-slice is monochromatic, each lies in
//! exactly one tetrahedron, and every monochromatic edge is a boundary edge.
//! So a sphere-slice is fixed by an apex for each boundary triangle and by
//! the (2,2) tetrahedra, each pairing a red boundary edge with a blue one.
//! The link of a red boundary edge is an arc, so the blue edges paired with
//! it form a simple path between the apexes of its two triangles, and the
//! same holds with colours exchanged.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;

use super::{summary, CensusEntry, CensusKind, CensusRecord, Shard};
use crate::causal3d::{build_complex3, code3, validate_slice, CVertex, Complex3, SliceKind};
use crate::conditions::{is_member, MidsectionKind};
use crate::midsection::midsection;
use crate::surface::{build_complex, Cell, Colour, SurfaceComplex, Vertex};

/// Triangulated spheres with at most `max_triangles` triangles (at most 8),
/// one per isomorphism class, as red triangle complexes.
pub fn small_sphere_triangulations(max_triangles: usize) -> Vec<SurfaceComplex> {
    assert!(max_triangles <= 8, "sphere list is brute-forced up to 8 triangles");
    let mut out = Vec::new();
    for t in (4..=max_triangles).step_by(2) {
        let n = (t / 2 + 2) as Vertex;
        let all: Vec<[Vertex; 3]> = (0..n).combinations(3).map(|c| [c[0], c[1], c[2]]).collect();
        let mut seen = BTreeSet::new();
        for subset in all.iter().combinations(t) {
            let mut degree: BTreeMap<(Vertex, Vertex), u8> = BTreeMap::new();
            for tri in &subset {
                for (a, b) in [(tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2])] {
                    *degree.entry((a, b)).or_default() += 1;
                }
            }
            if degree.len() != 3 * t / 2 || degree.values().any(|&d| d != 2) {
                continue;
            }
            let Ok(s) = build_complex(subset.iter().map(|t| Cell::red(t[0], t[1], t[2])).collect()) else {
                continue;
            };
            if s.is_sphere() && seen.insert(s.canonical_code()) {
                out.push(s);
            }
        }
    }
    out
}

/// A triangulated sphere with dense vertex ids starting at `offset`.
struct Side {
    vertices: Vec<Vertex>,
    triangles: Vec<[Vertex; 3]>,
    edges: Vec<(Vertex, Vertex)>,
    /// The two triangles on each edge.
    edge_triangles: Vec<[usize; 2]>,
    /// Simple paths between ordered vertex pairs, as sorted edge indices.
    paths: BTreeMap<(Vertex, Vertex), Vec<Vec<usize>>>,
}

impl Side {
    fn new(s: &SurfaceComplex, offset: Vertex) -> Side {
        let dense = s.densified();
        let vertices: Vec<Vertex> = dense.vertices().iter().map(|&v| v + offset).collect();
        let triangles: Vec<[Vertex; 3]> = dense
            .cells()
            .iter()
            .map(|c| {
                let v = c.vertices();
                let mut t = [v[0] + offset, v[1] + offset, v[2] + offset];
                t.sort_unstable();
                t
            })
            .collect();
        let edges: Vec<(Vertex, Vertex)> = dense.edges().iter().map(|e| e.endpoints()).map(|(a, b)| (a + offset, b + offset)).collect();
        let edge_triangles = dense.edges().iter().map(|e| [e.cells()[0], e.cells()[1]]).collect();
        let mut paths = BTreeMap::new();
        for &u in &vertices {
            for &v in &vertices {
                if u != v {
                    paths.insert((u, v), simple_paths(&edges, u, v));
                }
            }
        }
        Side {
            vertices,
            triangles,
            edges,
            edge_triangles,
            paths,
        }
    }

    fn distance(&self, u: Vertex, v: Vertex) -> usize {
        if u == v {
            0
        } else {
            self.paths[&(u, v)].iter().map(Vec::len).min().unwrap_or(usize::MAX)
        }
    }

    /// The end vertices if `set` is the edge set of a simple path.
    fn path_ends(&self, set: &[usize]) -> Option<(Vertex, Vertex)> {
        let mut degree: BTreeMap<Vertex, usize> = BTreeMap::new();
        for &e in set {
            let (a, b) = self.edges[e];
            *degree.entry(a).or_default() += 1;
            *degree.entry(b).or_default() += 1;
        }
        let ends: Vec<Vertex> = degree.iter().filter(|(_, &d)| d == 1).map(|(&v, _)| v).collect();
        if degree.values().any(|&d| d > 2) || ends.len() != 2 || degree.len() != set.len() + 1 {
            return None;
        }
        // a path plus disjoint cycles has the same degrees; require the path
        // from one end to reach every vertex
        let found = self.paths[&(ends[0], ends[1])].iter().any(|p| {
            let mut p = p.clone();
            p.sort_unstable();
            let mut s = set.to_vec();
            s.sort_unstable();
            p == s
        });
        found.then_some((ends[0], ends[1]))
    }
}

fn simple_paths(edges: &[(Vertex, Vertex)], from: Vertex, to: Vertex) -> Vec<Vec<usize>> {
    fn walk(edges: &[(Vertex, Vertex)], at: Vertex, to: Vertex, seen: &mut Vec<Vertex>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == to {
            out.push(path.clone());
            return;
        }
        for (i, &(a, b)) in edges.iter().enumerate() {
            let next = if a == at {
                b
            } else if b == at {
                a
            } else {
                continue;
            };
            if seen.contains(&next) {
                continue;
            }
            seen.push(next);
            path.push(i);
            walk(edges, next, to, seen, path, out);
            path.pop();
            seen.pop();
        }
    }
    let mut out = Vec::new();
    walk(edges, from, to, &mut vec![from], &mut Vec::new(), &mut out);
    out
}

struct Pair<'a> {
    red: &'a Side,
    blue: &'a Side,
    max_quads: usize,
}

impl Pair<'_> {
    /// All apex assignments of the red triangles whose forced path lengths
    /// fit in the quadrangle budget.
    fn red_apexes(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        self.assign_red(&mut Vec::new(), 0, &mut out);
        out
    }

    fn assign_red(&self, apex: &mut Vec<Vertex>, cost: usize, out: &mut Vec<Vec<Vertex>>) {
        let i = apex.len();
        if i == self.red.triangles.len() {
            out.push(apex.clone());
            return;
        }
        for &b in &self.blue.vertices {
            apex.push(b);
            let added: usize = self
                .red
                .edge_triangles
                .iter()
                .filter(|t| t.contains(&i) && t[0].max(t[1]) == i)
                .map(|t| self.blue.distance(apex[t[0]], apex[t[1]]))
                .fold(0usize, |a, d| a.saturating_add(d));
            if cost.saturating_add(added) <= self.max_quads {
                self.assign_red(apex, cost + added, out);
            }
            apex.pop();
        }
    }

    /// Choices of a blue path for every red edge.
    fn pairings(&self, apex: &[Vertex]) -> Vec<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        self.choose_paths(apex, 0, &mut Vec::new(), &mut out);
        out
    }

    fn choose_paths(&self, apex: &[Vertex], e: usize, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if e == self.red.edges.len() {
            out.push(acc.clone());
            return;
        }
        let [t1, t2] = self.red.edge_triangles[e];
        let (u, v) = (apex[t1], apex[t2]);
        if u == v {
            self.choose_paths(apex, e + 1, acc, out);
            return;
        }
        for path in &self.blue.paths[&(u, v)] {
            if acc.len() + path.len() > self.max_quads {
                continue;
            }
            let len = acc.len();
            acc.extend(path.iter().map(|&f| (e, f)));
            self.choose_paths(apex, e + 1, acc, out);
            acc.truncate(len);
        }
    }

    /// Blue apex assignments matching the red edges paired with each blue
    /// edge.
    fn blue_apexes(&self, pairs: &[(usize, usize)]) -> Vec<Vec<Vertex>> {
        let mut constraints = Vec::new();
        for f in 0..self.blue.edges.len() {
            let set: Vec<usize> = pairs.iter().filter(|p| p.1 == f).map(|p| p.0).collect();
            let ends = if set.is_empty() {
                None
            } else {
                match self.red.path_ends(&set) {
                    Some(ends) => Some(ends),
                    None => return Vec::new(),
                }
            };
            constraints.push((self.blue.edge_triangles[f], ends));
        }
        let mut out = Vec::new();
        self.assign_blue(&constraints, &mut Vec::new(), &mut out);
        out
    }

    #[allow(clippy::type_complexity)]
    fn assign_blue(&self, constraints: &[([usize; 2], Option<(Vertex, Vertex)>)], apex: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        let i = apex.len();
        if i == self.blue.triangles.len() {
            out.push(apex.clone());
            return;
        }
        for &r in &self.red.vertices {
            apex.push(r);
            let ok = constraints.iter().filter(|(t, _)| t.contains(&i) && t[0].max(t[1]) == i).all(|(t, ends)| {
                let (a, b) = (apex[t[0]], apex[t[1]]);
                match ends {
                    None => a == b,
                    Some((x, y)) => (a, b) == (*x, *y) || (a, b) == (*y, *x),
                }
            });
            if ok {
                self.assign_blue(constraints, apex, out);
            }
            apex.pop();
        }
    }

    fn build(&self, red_apex: &[Vertex], pairs: &[(usize, usize)], blue_apex: &[Vertex]) -> Option<Complex3> {
        let mut tets: Vec<[Vertex; 4]> = Vec::new();
        for (t, &a) in self.red.triangles.iter().zip(red_apex) {
            tets.push([t[0], t[1], t[2], a]);
        }
        for (t, &a) in self.blue.triangles.iter().zip(blue_apex) {
            tets.push([t[0], t[1], t[2], a]);
        }
        for &(e, f) in pairs {
            let (a, b) = self.red.edges[e];
            let (c, d) = self.blue.edges[f];
            tets.push([a, b, c, d]);
        }
        let mut vertices: Vec<CVertex> = self.red.vertices.iter().map(|&id| CVertex { id, colour: Colour::Red }).collect();
        vertices.extend(self.blue.vertices.iter().map(|&id| CVertex { id, colour: Colour::Blue }));
        let k = build_complex3(vertices, tets).ok()?;
        validate_slice(&k, SliceKind::Sphere, false).valid.then_some(k)
    }
}

/// Sphere-slices with at most `max_tetrahedra` tetrahedra, one per
/// isomorphism class, keyed by size and then by slice code.
pub(crate) fn sphere_slice_map(max_tetrahedra: usize, shard: Shard) -> BTreeMap<usize, BTreeMap<Vec<u8>, Complex3>> {
    let spheres = small_sphere_triangulations(max_tetrahedra.saturating_sub(4).min(8));
    let mut jobs = Vec::new();
    for r in &spheres {
        for b in &spheres {
            if r.cell_count() + b.cell_count() <= max_tetrahedra {
                jobs.push((r, b));
            }
        }
    }
    let mut tasks = Vec::new();
    let sides: Vec<(Side, Side, usize)> = jobs
        .iter()
        .map(|(r, b)| {
            let red = Side::new(r, 0);
            let blue = Side::new(b, red.vertices.len() as Vertex);
            let q = max_tetrahedra - r.cell_count() - b.cell_count();
            (red, blue, q)
        })
        .collect();
    for (j, (red, blue, q)) in sides.iter().enumerate() {
        let pair = Pair { red, blue, max_quads: *q };
        for apex in pair.red_apexes() {
            tasks.push((j, apex));
        }
    }
    let found: Vec<(usize, Vec<u8>, Complex3)> = tasks
        .par_iter()
        .enumerate()
        .filter(|(i, _)| shard.owns(*i))
        .flat_map_iter(|(_, (j, apex))| {
            let (red, blue, q) = &sides[*j];
            let pair = Pair { red, blue, max_quads: *q };
            let mut out = Vec::new();
            for pairs in pair.pairings(apex) {
                for blue_apex in pair.blue_apexes(&pairs) {
                    if let Some(k) = pair.build(apex, &pairs, &blue_apex) {
                        out.push((k.tetrahedra().len(), code3(&k), k));
                    }
                }
            }
            out
        })
        .collect();
    let mut map: BTreeMap<usize, BTreeMap<Vec<u8>, Complex3>> = BTreeMap::new();
    for (size, code, k) in found {
        map.entry(size).or_default().entry(code).or_insert(k);
    }
    map
}

/// Sphere-slices with at most `max_tetrahedra` tetrahedra, by size. Entry
/// `k` holds one slice per isomorphism class with `k` tetrahedra.
pub fn sphere_slices(max_tetrahedra: usize) -> Vec<Vec<Complex3>> {
    let map = sphere_slice_map(max_tetrahedra, Shard::whole());
    (0..=max_tetrahedra)
        .map(|k| map.get(&k).map(|m| m.values().cloned().collect()).unwrap_or_default())
        .collect()
}

/// Sphere members, found as midsections of the generated sphere-slices.
pub(crate) fn sphere_members(max_cells: usize, shard: Shard) -> Vec<CensusRecord> {
    let map = sphere_slice_map(max_cells, shard);
    (1..=max_cells)
        .map(|k| {
            let entries: Vec<CensusEntry> = map
                .get(&k)
                .map(|m| {
                    m.values()
                        .filter_map(|slice| {
                            let (s, _) = midsection(slice).ok()?;
                            is_member(&s, MidsectionKind::Sphere).then(|| CensusEntry {
                                code: hex::encode(s.canonical_code()),
                                conditions: summary(&s),
                            })
                        })
                        .collect()
                })
                .unwrap_or_default();
            CensusRecord::new(CensusKind::MidsectionSphere, k, entries)
        })
        .collect()
}

pub(crate) fn sphere_slice_records(max_tetrahedra: usize, shard: Shard) -> Vec<CensusRecord> {
    let map = sphere_slice_map(max_tetrahedra, shard);
    (1..=max_tetrahedra)
        .map(|k| {
            let entries = map
                .get(&k)
                .map(|m| {
                    m.keys()
                        .map(|c| CensusEntry {
                            code: hex::encode(c),
                            conditions: Vec::new(),
                        })
                        .collect()
                })
                .unwrap_or_default();
            CensusRecord::new(CensusKind::SliceSphere, k, entries)
        })
        .collect()
}
