use std::collections::HashMap;

use super::*;
use crate::fixtures;

fn coloured(reds: &[Vertex], blues: &[Vertex]) -> Vec<CVertex> {
    let mut v: Vec<CVertex> = reds
        .iter()
        .map(|&id| CVertex { id, colour: Colour::Red })
        .collect();
    v.extend(blues.iter().map(|&id| CVertex { id, colour: Colour::Blue }));
    v
}

#[test]
fn single_tetra_counts() {
    let m = fixtures::single_tetra();
    let c = m.counts();
    assert_eq!((c.vertices, c.edges, c.triangles, c.tetrahedra), (4, 6, 4, 1));
    assert_eq!(euler3(&m), 1);
}

#[test]
fn prism_counts() {
    let m = fixtures::prism();
    let c = m.counts();
    assert_eq!((c.vertices, c.edges, c.triangles, c.tetrahedra), (6, 12, 10, 3));
    assert_eq!(euler3(&m), 1);
    let types: Vec<_> = m.tetrahedra().iter().map(|t| m.tet_type(t)).collect();
    assert_eq!(types, vec![(3, 1), (2, 2), (1, 3)]);
}

#[test]
fn build_errors() {
    let v = coloured(&[0, 1, 2], &[3, 4, 5]);
    assert_eq!(
        build_complex3(v.clone(), vec![[0, 1, 2, 3], [3, 2, 1, 0]]).unwrap_err(),
        Complex3Error::DuplicateTetra { tetra: [0, 1, 2, 3] }
    );
    let mono = coloured(&[0, 1, 2, 3], &[]);
    assert!(matches!(
        build_complex3(mono, vec![[0, 1, 2, 3]]),
        Err(Complex3Error::MonochromeTetra { .. })
    ));
    assert_eq!(
        build_complex3(v.clone(), vec![[0, 1, 2, 3], [0, 1, 2, 4], [0, 1, 2, 5]]).unwrap_err(),
        Complex3Error::NonPseudomanifold { triangle: [0, 1, 2] }
    );
    // meet in an edge only
    assert_eq!(
        build_complex3(v.clone(), vec![[0, 1, 2, 3], [0, 1, 4, 5]]).unwrap_err(),
        Complex3Error::Disconnected
    );
    assert_eq!(build_complex3(v.clone(), vec![[0, 1, 2, 3]]).unwrap_err(), Complex3Error::Disconnected);
    assert!(matches!(
        build_complex3(v.clone(), vec![[0, 1, 2, 9]]),
        Err(Complex3Error::UnknownVertex { vertex: 9, .. })
    ));
    assert!(matches!(
        build_complex3(v, vec![[0, 1, 1, 3]]),
        Err(Complex3Error::DegenerateTetra { .. })
    ));
}

#[test]
fn prism_boundary_split() {
    let m = fixtures::prism();
    let split = boundary_split(&m, SliceKind::Disc).unwrap();
    assert_eq!(split.red, vec![[0, 1, 2]]);
    assert_eq!(split.blue, vec![[3, 4, 5]]);
    assert_eq!(split.side.len(), 6);
    // the walk starts on the red edge (0, 1) and leaves through vertex 1
    assert!(split.side[0].contains(&0) && split.side[0].contains(&1));
    assert!(split.side[1].contains(&1));
    assert_eq!(
        boundary_split(&m, SliceKind::Sphere).unwrap_err(),
        SplitError::MonochromePartNotSphere { colour: Colour::Red }
    );
}

#[test]
fn side_walk_visits_each_red_edge_once() {
    let m = fixtures::prism();
    let split = boundary_split(&m, SliceKind::Disc).unwrap();
    let forward: Vec<_> = split
        .side
        .iter()
        .filter(|t| t.iter().filter(|&&v| m.colour(v) == Colour::Red).count() == 2)
        .collect();
    assert_eq!(forward.len(), 3);
}

#[test]
fn single_31_tetra_has_no_blue_disc() {
    let m = build_complex3(coloured(&[0, 1, 2], &[3]), vec![[0, 1, 2, 3]]).unwrap();
    assert_eq!(
        boundary_split(&m, SliceKind::Disc).unwrap_err(),
        SplitError::MonochromePartNotDisc { colour: Colour::Blue }
    );
}

#[test]
fn prism_is_a_disc_slice() {
    let report = validate_slice(&fixtures::prism(), SliceKind::Disc, true);
    assert!(report.valid, "{report:?}");
    assert_eq!(report.checks.len(), 5);
    assert!(!validate_slice(&fixtures::prism(), SliceKind::Sphere, false).valid);
}

#[test]
fn recoloured_prism_is_rejected() {
    let m = fixtures::prism();
    let mut v = m.vertices().to_vec();
    v[0].colour = Colour::Blue;
    let recoloured = build_complex3(v, m.tetrahedra().to_vec()).unwrap();
    let report = validate_slice(&recoloured, SliceKind::Disc, true);
    assert!(!report.valid);
    assert_eq!(report.first_failure().unwrap().name, "monochrome-on-boundary");
}

#[test]
fn single_22_tetra_is_not_a_slice() {
    let report = validate_slice(&fixtures::single_tetra(), SliceKind::Disc, true);
    assert!(!report.valid);
}

#[test]
fn isomorphism_and_codes() {
    let m = fixtures::prism();
    let r = m.relabelled(|v| 100 - 3 * v);
    assert!(isomorphic3(&m, &r));
    assert_eq!(code3(&m), code3(&r));
    assert!(!isomorphic3(&m, &fixtures::single_tetra()));
    assert_ne!(code3(&m), code3(&fixtures::single_tetra()));
}

#[test]
fn swapping_the_prism_colours_gives_an_isomorphic_prism() {
    // reflecting the prism exchanges its red and blue halves
    let m = fixtures::prism();
    let s = m.colours_swapped();
    assert!(isomorphic3(&m, &s));
    assert_eq!(code3(&m), code3(&s));
}

#[test]
fn layered_prisms() {
    let p = fixtures::prism();
    let map: HashMap<Vertex, Vertex> = [(3, 0), (4, 1), (5, 2)].into_iter().collect();
    let l = layered_union(&[p.clone(), p.clone()], &[map], SliceKind::Disc).unwrap();
    assert_eq!(l.tetrahedra.len(), 6);
    assert_eq!(l.times.len(), 9);
    assert_eq!(l.counts().euler(), 1);

    let single = layered_union(std::slice::from_ref(&p), &[], SliceKind::Disc).unwrap();
    assert_eq!(single.tetrahedra.len(), 3);

    let short: HashMap<Vertex, Vertex> = [(3, 0), (4, 1)].into_iter().collect();
    assert_eq!(
        layered_union(&[p.clone(), p], &[short], SliceKind::Disc).unwrap_err(),
        LayerError::InterfaceMismatch { index: 0 }
    );
}
