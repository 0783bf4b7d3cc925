use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{complex_from_code, summary, CensusEntry, CensusKind, CensusRecord};
use crate::conditions::{check_alpha, check_beta1, check_delta, is_member, MidsectionKind};
use crate::surface::{build_complex, Cell, Colour, SurfaceComplex, Vertex};

/// Splits the last level of a census between independent runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Shard {
    pub count: usize,
    pub index: usize,
}

impl Shard {
    pub fn whole() -> Shard {
        Shard { count: 1, index: 0 }
    }

    pub(crate) fn owns(&self, i: usize) -> bool {
        i % self.count == self.index
    }

    pub(crate) fn is_first(&self) -> bool {
        self.index == 0
    }
}

type Prune = dyn Fn(&SurfaceComplex) -> bool + Sync;

fn accept(cells: Vec<Cell>, prune: &Prune) -> Option<Vec<u8>> {
    let s = build_complex(cells).ok()?;
    (s.is_disc() && prune(&s)).then(|| s.canonical_code())
}

fn glue_moves(s: &SurfaceComplex, prune: &Prune) -> Vec<Vec<u8>> {
    let x = s.max_vertex() + 1;
    let y = x + 1;
    let mut out = Vec::new();
    for e in s.boundary_edges() {
        let edge = s.edge(e);
        let (a, b) = edge.endpoints();
        let quad = match edge.colour() {
            Colour::Red => Cell::quad(a, b, x, y),
            Colour::Blue => Cell::quad(x, a, b, y),
        };
        for cell in [Cell::triangle(edge.colour(), a, b, x), quad] {
            let mut cells = s.cells().to_vec();
            cells.push(cell);
            out.extend(accept(cells, prune));
        }
    }
    out
}

/// Folds two boundary edges of one colour at a common vertex together.
fn identify_moves(s: &SurfaceComplex, prune: &Prune) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for &v in s.vertices() {
        let at: Vec<(Vertex, Colour)> = s
            .edges_at(v)
            .iter()
            .map(|&e| s.edge(e))
            .filter(|e| e.is_boundary())
            .map(|e| (e.other_end(v), e.colour()))
            .collect();
        if let [(w1, c1), (w2, c2)] = at[..] {
            if c1 == c2 {
                let cells = s.cells().iter().map(|c| c.renamed(w2, w1)).collect();
                out.extend(accept(cells, prune));
            }
        }
    }
    out
}

fn expand(sources: &[Vec<u8>], step: fn(&SurfaceComplex, &Prune) -> Vec<Vec<u8>>, prune: &Prune) -> BTreeSet<Vec<u8>> {
    sources
        .par_iter()
        .flat_map_iter(|code| step(&complex_from_code(code), prune))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}

/// Canonical codes of the discs with 1 to `max_cells` cells reachable by
/// local-construction moves through discs accepted by `prune`. Entry `k` of
/// the result holds the codes with `k` cells; entry 0 is empty. Only the
/// shard's part of the second-to-last level is expanded into the last.
pub fn disc_levels(max_cells: usize, prune: &Prune, shard: Shard) -> Vec<Vec<Vec<u8>>> {
    let mut levels = vec![Vec::new()];
    if max_cells == 0 {
        return levels;
    }
    let first: BTreeSet<Vec<u8>> = [Cell::red(0, 1, 2), Cell::blue(0, 1, 2), Cell::quad(0, 1, 2, 3)]
        .into_iter()
        .filter_map(|c| accept(vec![c], prune))
        .collect();
    levels.push(first.into_iter().collect());
    for size in 2..=max_cells {
        let prev = &levels[size - 1];
        let sources: Vec<Vec<u8>> = if size == max_cells {
            prev.iter().enumerate().filter(|(i, _)| shard.owns(*i)).map(|(_, c)| c.clone()).collect()
        } else {
            prev.clone()
        };
        let mut level = expand(&sources, glue_moves, prune);
        let mut frontier: Vec<Vec<u8>> = level.iter().cloned().collect();
        while !frontier.is_empty() {
            let found = expand(&frontier, identify_moves, prune);
            frontier = found.into_iter().filter(|c| level.insert(c.clone())).collect();
        }
        levels.push(level.into_iter().collect());
    }
    levels
}

/// The conditions that undoing a local-construction move cannot break.
pub(crate) fn hereditary(s: &SurfaceComplex) -> bool {
    let beta = |c| check_beta1(s, c).is_ok_and(|r| r.verdict);
    check_alpha(s).verdict && beta(Colour::Red) && beta(Colour::Blue) && check_delta(s).verdict
}

pub(crate) fn disc_members(max_cells: usize, shard: Shard) -> Vec<CensusRecord> {
    let levels = disc_levels(max_cells, &hereditary, shard);
    (1..=max_cells)
        .filter(|&k| k == max_cells || shard.is_first())
        .map(|k| {
            let entries = levels[k]
                .par_iter()
                .filter_map(|code| {
                    let s = complex_from_code(code);
                    is_member(&s, MidsectionKind::Disc).then(|| CensusEntry {
                        code: hex::encode(code),
                        conditions: summary(&s),
                    })
                })
                .collect();
            CensusRecord::new(CensusKind::MidsectionDisc, k, entries)
        })
        .collect()
}

/// Every disc with at most `max_cells` cells, by size, without pruning.
pub fn all_discs(max_cells: usize) -> Vec<Vec<Vec<u8>>> {
    disc_levels(max_cells, &|_| true, Shard::whole())
}

/// Every sphere with at most `max_cells` cells, by size. A sphere minus one
/// cell is a disc, so each sphere is a disc with its boundary capped.
pub fn all_spheres(max_cells: usize) -> Vec<Vec<Vec<u8>>> {
    let discs = all_discs(max_cells.saturating_sub(1));
    let mut levels = vec![Vec::new(); max_cells + 1];
    for (k, level) in discs.iter().enumerate().skip(1) {
        let found: BTreeSet<Vec<u8>> = level
            .par_iter()
            .filter_map(|code| {
                let s = complex_from_code(code);
                let cycle = s.boundary_cycle()?;
                let first = s.edge(s.edge_between(cycle[0], cycle[1])?).colour();
                let colours: Vec<Colour> = (0..cycle.len())
                    .map(|i| s.edge(s.edge_between(cycle[i], cycle[(i + 1) % cycle.len()]).unwrap()).colour())
                    .collect();
                let cap = match cycle[..] {
                    [a, b, c] if colours.iter().all(|&x| x == first) => Cell::triangle(first, a, b, c),
                    [a, b, c, d] if colours == [first, first.complement(), first, first.complement()] => match first {
                        Colour::Red => Cell::quad(a, b, c, d),
                        Colour::Blue => Cell::quad(b, c, d, a),
                    },
                    _ => return None,
                };
                let mut cells = s.cells().to_vec();
                cells.push(cap);
                let sphere = build_complex(cells).ok()?;
                sphere.is_sphere().then(|| sphere.canonical_code())
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        if k < max_cells {
            levels[k + 1] = found.into_iter().collect();
        }
    }
    levels
}
