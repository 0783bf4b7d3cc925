use serde::Serialize;

use super::{CellKind, Colour, SurfaceComplex, Vertex};
use crate::union_find::UnionFind;

/// A partition of the vertex set; blocks are sorted and ordered by their
/// smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Partition {
    pub blocks: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn block_of(&self, v: Vertex) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }
}

/// Component labels of the colour-`c` edge graph, indexed by dense vertex
/// position.
#[derive(Clone, Debug)]
pub(crate) struct ComponentTable {
    pub(crate) of: Vec<usize>,
    pub(crate) count: usize,
}

/// A maximal path or cycle of quadrangles joined along colour-`c` edges.
///
/// `edges[i]` and `edges[i + 1]` are the two colour-`c` edges of `quads[i]`;
/// for a closed chain the last quad joins the last edge back to the first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadChain {
    pub edges: Vec<usize>,
    pub quads: Vec<usize>,
    pub closed: bool,
}

impl SurfaceComplex {
    pub(crate) fn component_table(&self, colour: Colour) -> ComponentTable {
        let mut uf = UnionFind::new(self.vertex_count());
        for e in self.edges().iter().filter(|e| e.colour() == colour) {
            let (a, b) = e.endpoints();
            uf.union(self.vindex[&a], self.vindex[&b]);
        }
        let (of, count) = uf.labels();
        ComponentTable { of, count }
    }

    /// Component label of `v` in the colour-`c` edge graph.
    pub(crate) fn component_of(&self, table: &ComponentTable, v: Vertex) -> usize {
        table.of[self.vindex[&v]]
    }

    pub fn monochrome_vertex_components(&self, colour: Colour) -> Partition {
        let table = self.component_table(colour);
        let mut blocks: Vec<Vec<Vertex>> = vec![Vec::new(); table.count];
        for (i, &v) in self.vertices().iter().enumerate() {
            blocks[table.of[i]].push(v);
        }
        Partition { blocks }
    }

    /// For each colour-`c` edge, the quadrangles containing it paired with
    /// the quadrangle's other colour-`c` edge.
    fn quad_links(&self, colour: Colour) -> Vec<Vec<(usize, usize)>> {
        let mut links = vec![Vec::new(); self.edge_count()];
        let offset = match colour {
            Colour::Red => 0,
            Colour::Blue => 1,
        };
        for (q, cell) in self.cells().iter().enumerate() {
            if cell.kind() != CellKind::Quadrangle {
                continue;
            }
            let ids = self.cell_edges(q);
            let (e, f) = (ids[offset], ids[offset + 2]);
            links[e].push((q, f));
            links[f].push((q, e));
        }
        links
    }

    pub fn quad_chains(&self, colour: Colour) -> Vec<QuadChain> {
        let links = self.quad_links(colour);
        let mut nodes: Vec<usize> = (0..self.edge_count())
            .filter(|&e| self.edge(e).colour() == colour)
            .collect();
        nodes.sort_by_key(|&e| self.edge(e).endpoints());
        let mut seen = vec![false; self.edge_count()];
        let mut chains = Vec::new();

        let walk = |start: usize, seen: &mut Vec<bool>| -> QuadChain {
            let mut edges = vec![start];
            let mut quads = Vec::new();
            seen[start] = true;
            let mut cur = start;
            let mut came_by: Option<usize> = None;
            loop {
                let step = links[cur].iter().find(|&&(q, _)| Some(q) != came_by);
                match step {
                    Some(&(q, next)) if !seen[next] => {
                        quads.push(q);
                        edges.push(next);
                        seen[next] = true;
                        came_by = Some(q);
                        cur = next;
                    }
                    Some(&(q, next)) if next == start && edges.len() > 1 => {
                        quads.push(q);
                        return QuadChain {
                            edges,
                            quads,
                            closed: true,
                        };
                    }
                    _ => {
                        return QuadChain {
                            edges,
                            quads,
                            closed: false,
                        }
                    }
                }
            }
        };

        for &e in &nodes {
            if !seen[e] && links[e].len() <= 1 {
                chains.push(walk(e, &mut seen));
            }
        }
        for &e in &nodes {
            if !seen[e] {
                chains.push(walk(e, &mut seen));
            }
        }
        chains
    }

    /// Chain index for every edge (`None` for edges of the other colour).
    pub(crate) fn chain_index(&self, colour: Colour) -> (Vec<QuadChain>, Vec<Option<usize>>) {
        let chains = self.quad_chains(colour);
        let mut index = vec![None; self.edge_count()];
        for (i, chain) in chains.iter().enumerate() {
            for &e in &chain.edges {
                index[e] = Some(i);
            }
        }
        (chains, index)
    }
}
