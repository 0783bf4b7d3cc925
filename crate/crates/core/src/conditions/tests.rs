use super::*;
use crate::fixtures;
use crate::surface::{build_complex, Cell};

fn verdicts(rs: &[Result<ConditionReport, ConditionError>]) -> Vec<Result<bool, ConditionError>> {
    rs.iter().map(|r| r.as_ref().map(|x| x.verdict).map_err(|e| *e)).collect()
}

#[test]
fn quadrangle_passes_alpha_and_beta() {
    let q = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
    assert!(check_alpha(&q).verdict);
    assert!(check_beta1(&q, Colour::Red).unwrap().verdict);
    assert!(check_beta1(&q, Colour::Blue).unwrap().verdict);
    assert!(check_beta2(&q).unwrap().verdict);
    assert!(check_gamma(&q).verdict);
}

#[test]
fn chain_passes_everything() {
    let s = fixtures::chain3();
    assert!(check_alpha(&s).verdict);
    for c in Colour::BOTH {
        assert!(check_beta1(&s, c).unwrap().verdict);
    }
    assert!(check_beta2(&s).unwrap().verdict);
    assert!(check_gamma(&s).verdict);
    assert!(check_delta(&s).verdict);
    assert_eq!(membership(&s, MidsectionKind::Disc), ConditionReport::pass(Condition::DiscMembership));
}

#[test]
fn quadrangle_is_not_a_member() {
    let q = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
    let r = membership(&q, MidsectionKind::Disc);
    assert!(!r.verdict);
    assert_eq!(r.root_failure().unwrap().condition, Condition::TriangleCount);
}

#[test]
fn oracle_agrees_on_the_small_fixtures() {
    for s in [fixtures::chain3(), build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap()] {
        let fast = fast_conditions(&s);
        let slow = oracle_conditions(&s, DEFAULT_ORACLE_BUDGET).unwrap();
        assert_eq!(verdicts(&fast), verdicts(&slow));
    }
}

#[test]
fn oracle_budget() {
    let s = fixtures::chain3();
    assert_eq!(
        oracle_conditions(&s, 2).unwrap_err(),
        OracleError::BudgetExceeded { cells: 3, budget: 2 }
    );
}

#[test]
fn beta1_needs_a_disc() {
    let s = fixtures::tetrahedron_boundary(Colour::Red);
    assert_eq!(check_beta1(&s, Colour::Red), Err(ConditionError::NotADisc));
    assert_eq!(check_beta2(&s), Err(ConditionError::NotADisc));
}

#[test]
fn beta2_no_arcs() {
    let s = build_complex(vec![Cell::red(0, 1, 2)]).unwrap();
    assert_eq!(check_beta2(&s), Err(ConditionError::NoArcs));
    let r = membership(&s, MidsectionKind::Disc);
    assert!(!r.verdict);
}

#[test]
fn ringed_triangle_fails_beta1() {
    // a red triangle inside a ring of quads; the ring's outer edges are red
    let s = fixtures::ringed_triangle(Colour::Red);
    let r = check_beta1(&s, Colour::Red).unwrap();
    assert!(!r.verdict);
    let w = r.witness.unwrap();
    assert!(w.confirms(&s));
    assert!(check_beta1(&s, Colour::Blue).unwrap().verdict);
    let slow = oracle_conditions(&s, DEFAULT_ORACLE_BUDGET).unwrap();
    assert_eq!(verdicts(&fast_conditions(&s)), verdicts(&slow));
}

#[test]
fn sphere_with_one_belt_passes_beta() {
    let s = fixtures::capped_belt(3);
    assert!(s.is_sphere());
    for c in Colour::BOTH {
        assert!(check_beta_sphere(&s, c).unwrap().verdict);
    }
}

#[test]
fn sphere_with_two_belts_fails_red_beta() {
    let s = fixtures::two_belt_sphere(Colour::Red);
    assert!(s.is_sphere());
    let r = check_beta_sphere(&s, Colour::Red).unwrap();
    assert!(!r.verdict);
    assert!(r.witness.as_ref().unwrap().confirms(&s));
    assert!(check_beta_sphere(&s, Colour::Blue).unwrap().verdict);

    let mirrored = fixtures::swap_colours(&s);
    let r = check_beta_sphere(&mirrored, Colour::Blue).unwrap();
    assert!(!r.verdict);
    assert!(check_beta_sphere(&mirrored, Colour::Red).unwrap().verdict);

    let slow = oracle_conditions(&s, DEFAULT_ORACLE_BUDGET + 4).unwrap();
    assert_eq!(verdicts(&fast_conditions(&s)), verdicts(&slow));
}

#[test]
fn beta_sphere_needs_a_sphere() {
    assert_eq!(check_beta_sphere(&fixtures::chain3(), Colour::Red), Err(ConditionError::NotASphere));
}

#[test]
fn delta_catches_matched_triangles() {
    // two red triangles 0,1,2 and 3,4,5 joined vertex by vertex through
    // quads; their blue edges put i and i + 3 in one blue component
    let s = build_complex(vec![
        Cell::red(0, 1, 2),
        Cell::quad(1, 0, 3, 4),
        Cell::quad(2, 1, 4, 5),
        Cell::quad(0, 2, 5, 3),
        Cell::red(3, 5, 4),
    ])
    .unwrap();
    let r = check_delta(&s);
    assert!(!r.verdict);
    assert!(r.witness.as_ref().unwrap().confirms(&s));
}

#[test]
fn sphere_with_too_few_triangles() {
    let s = fixtures::capped_belt(3);
    let r = membership(&s, MidsectionKind::Sphere);
    assert!(!r.verdict);
    assert_eq!(r.root_failure().unwrap().condition, Condition::TriangleCount);
}

#[test]
fn report_json_shape() {
    let s = build_complex(vec![Cell::quad(0, 1, 2, 3)]).unwrap();
    let v = serde_json::to_value(membership(&s, MidsectionKind::Disc)).unwrap();
    assert_eq!(v["condition"], "membership-disc");
    assert_eq!(v["verdict"], false);
    assert_eq!(v["witness"]["type"], "failed");
    assert_eq!(v["witness"]["report"]["condition"], "triangles");
}
