use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;
use thiserror::Error;

use super::{boundary_split, face, sorted3, sorted4, Complex3, Counts3, SliceKind, SplitError, Tetra, Triangle};
use crate::surface::{Colour, Vertex};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LayerError {
    #[error("no slices given")]
    Empty,
    #[error("expected {expected} interface maps, got {found}")]
    InterfaceCount { expected: usize, found: usize },
    #[error("slice {index}: {source}")]
    Split { index: usize, source: SplitError },
    #[error("the blue part of slice {index} does not match the red part of slice {next} under the given map", next = index + 1)]
    InterfaceMismatch { index: usize },
    #[error("triangle {triangle:?} lies in more than two tetrahedra after gluing")]
    NonPseudomanifold { triangle: Triangle },
}

/// Slices stacked along their interfaces. Vertices carry a time index
/// instead of a colour: slice `i` spans times `i` and `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayeredComplex {
    pub times: BTreeMap<Vertex, usize>,
    pub tetrahedra: Vec<Tetra>,
}

impl LayeredComplex {
    pub fn counts(&self) -> Counts3 {
        let mut edges = BTreeSet::new();
        let mut triangles = BTreeSet::new();
        for t in &self.tetrahedra {
            for i in 0..4 {
                triangles.insert(face(t, i));
                for j in i + 1..4 {
                    edges.insert([t[i], t[j]]);
                }
            }
        }
        Counts3 {
            vertices: self.times.len(),
            edges: edges.len(),
            triangles: triangles.len(),
            tetrahedra: self.tetrahedra.len(),
        }
    }
}

/// Glues `slices` in order. `interfaces[i]` maps each blue boundary vertex
/// of slice `i` to a red boundary vertex of slice `i + 1` and must carry
/// the blue part onto the red part.
pub fn layered_union(
    slices: &[Complex3],
    interfaces: &[HashMap<Vertex, Vertex>],
    kind: SliceKind,
) -> Result<LayeredComplex, LayerError> {
    if slices.is_empty() {
        return Err(LayerError::Empty);
    }
    if interfaces.len() + 1 != slices.len() {
        return Err(LayerError::InterfaceCount {
            expected: slices.len() - 1,
            found: interfaces.len(),
        });
    }
    let splits = slices
        .iter()
        .enumerate()
        .map(|(index, m)| boundary_split(m, kind).map_err(|source| LayerError::Split { index, source }))
        .collect::<Result<Vec<_>, _>>()?;
    for (i, map) in interfaces.iter().enumerate() {
        let mapped: Option<BTreeSet<Triangle>> = splits[i]
            .blue
            .iter()
            .map(|t| Some(sorted3([*map.get(&t[0])?, *map.get(&t[1])?, *map.get(&t[2])?])))
            .collect();
        let target: BTreeSet<Triangle> = splits[i + 1].red.iter().copied().collect();
        if mapped.as_ref() != Some(&target) || splits[i].blue.len() != target.len() {
            return Err(LayerError::InterfaceMismatch { index: i });
        }
    }

    let mut times = BTreeMap::new();
    let mut tetrahedra = Vec::new();
    // global ids of the previous slice's blue vertices, keyed by the red
    // vertex of the current slice they are glued to
    let mut carried: HashMap<Vertex, Vertex> = HashMap::new();
    let mut next_id: Vertex = 0;
    for (i, m) in slices.iter().enumerate() {
        let mut global: HashMap<Vertex, Vertex> = HashMap::new();
        for v in m.vertices() {
            let id = match (v.colour, carried.get(&v.id)) {
                (Colour::Red, Some(&g)) => g,
                _ => {
                    let g = next_id;
                    next_id += 1;
                    let t = if v.colour == Colour::Red { i } else { i + 1 };
                    times.insert(g, t);
                    g
                }
            };
            global.insert(v.id, id);
        }
        tetrahedra.extend(m.tetrahedra().iter().map(|t| sorted4(t.map(|v| global[&v]))));
        carried = interfaces
            .get(i)
            .map(|map| map.iter().map(|(b, r)| (*r, global[b])).collect())
            .unwrap_or_default();
    }
    let mut incidence: HashMap<Triangle, usize> = HashMap::new();
    for t in &tetrahedra {
        for k in 0..4 {
            let f = face(t, k);
            let n = incidence.entry(f).or_default();
            *n += 1;
            if *n > 2 {
                return Err(LayerError::NonPseudomanifold { triangle: f });
            }
        }
    }
    Ok(LayeredComplex { times, tetrahedra })
}
