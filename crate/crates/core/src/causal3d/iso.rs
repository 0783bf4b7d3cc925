use std::collections::{HashMap, VecDeque};

use super::{face, sorted4, Complex3, Tetra};
use crate::surface::{Colour, Vertex};

/// All 24 orderings of four positions.
fn orderings() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|i| p.contains(&i)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn colour_bit(c: Colour) -> u32 {
    match c {
        Colour::Red => 0,
        Colour::Blue => 1,
    }
}

/// Labels vertices in the order a face-adjacency traversal meets them,
/// starting from tetrahedron `root` with its vertices in `order`.
///
/// Each visited tetrahedron carries a vertex order; its neighbour across
/// the face opposite position `k` inherits the face in that order followed
/// by its own remaining vertex.
fn traversal_labels(m: &Complex3, nbrs: &[[Option<usize>; 4]], root: usize, order: [Vertex; 4]) -> HashMap<Vertex, u32> {
    let tets = m.tetrahedra();
    let mut label: HashMap<Vertex, u32> = HashMap::with_capacity(m.vertices().len());
    for &v in &order {
        let next = label.len() as u32;
        label.insert(v, next);
    }
    let mut visited = vec![false; tets.len()];
    visited[root] = true;
    let mut queue = VecDeque::from([(root, order)]);
    while let Some((t, ord)) = queue.pop_front() {
        for k in 0..4 {
            let pos = tets[t].iter().position(|&x| x == ord[k]).unwrap();
            let Some(n) = nbrs[t][pos] else { continue };
            if visited[n] {
                continue;
            }
            visited[n] = true;
            let mut next = [0; 4];
            let mut j = 0;
            for (i, &v) in ord.iter().enumerate() {
                if i != k {
                    next[j] = v;
                    j += 1;
                }
            }
            let apex = tets[n].iter().copied().find(|v| !next[..3].contains(v)).unwrap();
            next[3] = apex;
            if !label.contains_key(&apex) {
                let l = label.len() as u32;
                label.insert(apex, l);
            }
            queue.push_back((n, next));
        }
    }
    label
}

/// Canonical code of a coloured complex: equal codes exactly when the
/// complexes are isomorphic by a colour-preserving vertex bijection.
///
/// Minimises, over every tetrahedron and vertex order, the vertex colours
/// and the sorted tetrahedra under the traversal labelling.
pub fn code3(m: &Complex3) -> Vec<u8> {
    let nbrs = m.face_neighbours();
    let tets = m.tetrahedra();
    let mut best: Option<Vec<u32>> = None;
    for (t, tet) in tets.iter().enumerate() {
        for p in orderings() {
            let order = p.map(|i| tet[i]);
            let label = traversal_labels(m, &nbrs, t, order);
            let mut form = vec![label.len() as u32, tets.len() as u32];
            let mut colours = vec![0; label.len()];
            for (&v, &l) in &label {
                colours[l as usize] = colour_bit(m.colour(v));
            }
            form.extend(colours);
            if let Some(b) = &best {
                if form[..] > b[..form.len()] {
                    continue;
                }
            }
            let mut relabelled: Vec<[u32; 4]> = tets.iter().map(|x| sorted4(x.map(|v| label[&v]))).collect();
            relabelled.sort_unstable();
            form.extend(relabelled.into_iter().flatten());
            if best.as_ref().is_none_or(|b| form < *b) {
                best = Some(form);
            }
        }
    }
    best.unwrap_or_default().iter().flat_map(|x| x.to_be_bytes()).collect()
}

/// Whether a colour-preserving simplicial isomorphism exists.
///
/// Fixes one tetrahedron of `a`, tries every colour-compatible placement on
/// a tetrahedron of `b`, and propagates the vertex map across faces.
pub fn isomorphic3(a: &Complex3, b: &Complex3) -> bool {
    if a.counts() != b.counts() {
        return false;
    }
    let type_counts = |m: &Complex3| {
        let mut c = [0usize; 5];
        for t in m.tetrahedra() {
            c[m.tet_type(t).0] += 1;
        }
        c
    };
    if type_counts(a) != type_counts(b) {
        return false;
    }
    let an = a.face_neighbours();
    let bn = b.face_neighbours();
    let root = a.tetrahedra()[0];
    for (u, target) in b.tetrahedra().iter().enumerate() {
        for p in orderings() {
            let image = p.map(|i| target[i]);
            if (0..4).any(|i| a.colour(root[i]) != b.colour(image[i])) {
                continue;
            }
            if propagate(a, b, &an, &bn, u, image) {
                return true;
            }
        }
    }
    false
}

fn propagate(a: &Complex3, b: &Complex3, an: &[[Option<usize>; 4]], bn: &[[Option<usize>; 4]], u: usize, image: [Vertex; 4]) -> bool {
    let mut fwd: HashMap<Vertex, Vertex> = HashMap::new();
    let mut back: HashMap<Vertex, Vertex> = HashMap::new();
    let mut bind = |x: Vertex, y: Vertex, fwd: &mut HashMap<Vertex, Vertex>| -> bool {
        if a.colour(x) != b.colour(y) {
            return false;
        }
        match (fwd.get(&x), back.get(&y)) {
            (Some(&fy), _) if fy != y => false,
            (_, Some(&bx)) if bx != x => false,
            _ => {
                fwd.insert(x, y);
                back.insert(y, x);
                true
            }
        }
    };
    let root = a.tetrahedra()[0];
    for i in 0..4 {
        if !bind(root[i], image[i], &mut fwd) {
            return false;
        }
    }
    let mut tet_map: Vec<Option<usize>> = vec![None; a.tetrahedra().len()];
    tet_map[0] = Some(u);
    let mut queue = VecDeque::from([0usize]);
    while let Some(t) = queue.pop_front() {
        let mapped = tet_map[t].unwrap();
        let ta: Tetra = a.tetrahedra()[t];
        let tb: Tetra = b.tetrahedra()[mapped];
        for k in 0..4 {
            let fa = face(&ta, k);
            let img = sorted4([fwd[&fa[0]], fwd[&fa[1]], fwd[&fa[2]], Vertex::MAX]);
            let fb = [img[0], img[1], img[2]];
            let Some(kb) = (0..4).find(|&j| face(&tb, j) == fb) else { return false };
            match (an[t][k], bn[mapped][kb]) {
                (None, None) => {}
                (Some(n), Some(m)) => {
                    let apex_a = a.tetrahedra()[n].iter().copied().find(|v| !fa.contains(v)).unwrap();
                    let apex_b = b.tetrahedra()[m].iter().copied().find(|v| !fb.contains(v)).unwrap();
                    if !bind(apex_a, apex_b, &mut fwd) {
                        return false;
                    }
                    match tet_map[n] {
                        Some(prev) if prev != m => return false,
                        Some(_) => {}
                        None => {
                            tet_map[n] = Some(m);
                            queue.push_back(n);
                        }
                    }
                }
                _ => return false,
            }
        }
    }
    let mut images: Vec<Tetra> = a.tetrahedra().iter().map(|t| sorted4(t.map(|v| fwd[&v]))).collect();
    let mut targets = b.tetrahedra().to_vec();
    images.sort_unstable();
    targets.sort_unstable();
    images == targets
}
