use super::*;
use crate::causal3d::{code3, isomorphic3, validate_slice, SliceKind};
use crate::fixtures;
use crate::midsection::midsection;
use crate::surface::{build_complex, Cell};

#[test]
fn chain_reconstructs_to_the_prism() {
    let k = reconstruct(&fixtures::chain3(), MidsectionKind::Disc).unwrap();
    // blue components of the chain: {a,d}, {b,c,f}, {e} -> red 0, 1, 2;
    // red components {a,b,e}, {c,d}, {f} -> blue 3, 4, 5
    assert_eq!(k.tetrahedra(), &[[0, 1, 2, 3], [0, 1, 3, 4], [1, 3, 4, 5]]);
    assert!(isomorphic3(&k, &fixtures::prism()));
    let c = k.counts();
    assert_eq!((c.vertices, c.edges, c.triangles, c.tetrahedra), (6, 12, 10, 3));
}

#[test]
fn quadrangle_fails_membership() {
    let q = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
    assert!(matches!(
        reconstruct(&q, MidsectionKind::Disc),
        Err(ReconstructError::MembershipFailed { .. })
    ));
}

#[test]
fn gluing_agrees_with_identification() {
    let s = fixtures::chain3();
    let a = reconstruct_unchecked(&s).unwrap();
    let b = reconstruct_by_gluing(&s).unwrap();
    assert!(isomorphic3(&a, &b));
}

#[test]
fn colour_swap_is_not_always_an_isomorphism() {
    // two red triangles against one blue triangle
    let d1 = build_complex(vec![Cell::red(0, 1, 2), Cell::red(1, 0, 3)]).unwrap();
    let d2 = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
    let k = build_disc_slice(&d1, &d2).unwrap();
    assert!(!isomorphic3(&k, &k.colours_swapped()));
    assert_ne!(code3(&k), code3(&k.colours_swapped()));
}

#[test]
fn triangle_pair_gives_the_prism() {
    let t = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
    let k = build_disc_slice(&t, &t).unwrap();
    assert!(isomorphic3(&k, &fixtures::prism()));
}

#[test]
fn two_triangles_and_one() {
    let d1 = build_complex(vec![Cell::red(0, 1, 2), Cell::red(1, 0, 3)]).unwrap();
    let d2 = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
    let k = build_disc_slice(&d1, &d2).unwrap();
    assert_eq!(k.tetrahedra().len(), 4);
    assert!(validate_slice(&k, SliceKind::Disc, true).valid);
}

#[test]
fn disc_slice_with_interior_vertices() {
    // a hexagon fan on each side
    let fan = build_complex((0..6).map(|i| Cell::red(i, (i + 1) % 6, 6)).collect()).unwrap();
    let k = build_disc_slice(&fan, &fan).unwrap();
    let report = validate_slice(&k, SliceKind::Disc, true);
    assert!(report.valid, "{report:?}");
}

#[test]
fn tetrahedron_pair_sphere_slice() {
    let t = fixtures::tetrahedron_boundary(crate::surface::Colour::Red);
    let k = build_sphere_slice(&t, &t).unwrap();
    let report = validate_slice(&k, SliceKind::Sphere, true);
    assert!(report.valid, "{report:?}");
    assert_eq!(k.counts().euler(), 2);
    let (s, _) = midsection(&k).unwrap();
    assert_eq!(s.triangle_count(crate::surface::Colour::Red), 4);
    assert_eq!(s.triangle_count(crate::surface::Colour::Blue), 4);
}

#[test]
fn tetrahedron_and_bipyramid() {
    let t = fixtures::tetrahedron_boundary(crate::surface::Colour::Red);
    let k = build_sphere_slice(&t, &fixtures::bipyramid()).unwrap();
    assert!(validate_slice(&k, SliceKind::Sphere, true).valid);
}

#[test]
fn sphere_builder_rejects_discs() {
    let t = fixtures::tetrahedron_boundary(crate::surface::Colour::Red);
    let d = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
    assert_eq!(
        build_sphere_slice(&t, &d).unwrap_err(),
        BuildSliceError::NotASphere { colour: crate::surface::Colour::Blue }
    );
}

#[test]
fn cut_of_the_minimal_sphere() {
    let t = fixtures::tetrahedron_boundary(crate::surface::Colour::Red);
    let k = build_sphere_slice(&t, &t).unwrap();
    let (s, _) = midsection(&k).unwrap();
    let cut = cut_to_disc(&s).unwrap();
    // adjacent red triangles come from (3,1) tetrahedra with a common blue
    // apex; four of them would make that apex an interior vertex
    assert_eq!(cut.red_cluster.len(), 3);
    assert!(crate::conditions::is_member(&cut.disc, MidsectionKind::Disc));
    let audit = |name: &str| cut.audits.iter().find(|a| a.name == name).unwrap().euler;
    assert_eq!(audit("slice"), 2);
    assert_eq!(audit("disc-slice"), 1);
    // inclusion-exclusion over the two parts
    assert_eq!(audit("over-red-cluster"), 1);
    assert_eq!(audit("over-complement"), 2);
    assert_eq!(audit("intersection"), 1);
}

#[test]
fn cut_rejects_discs() {
    assert!(matches!(
        cut_to_disc(&fixtures::chain3()),
        Err(CutError::MembershipFailed { .. })
    ));
}
