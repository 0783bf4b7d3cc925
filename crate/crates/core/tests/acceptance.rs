//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use midsection_core::causal3d::{boundary_split, isomorphic3, validate_slice};
use midsection_core::conditions::{
    check_alpha, check_beta1, check_beta2, check_delta, check_gamma, fast_conditions, is_member, oracle_conditions,
    DEFAULT_ORACLE_BUDGET,
};
use midsection_core::enumerate::{
    all_discs, all_spheres, enumerate_midsections, enumerate_slices_bruteforce, roundtrip_report, side_census,
    small_sphere_triangulations, CensusRecord,
};
use midsection_core::midsection::midsection;
use midsection_core::reconstruct::{build_disc_slice, build_sphere_slice, cut_to_disc, reconstruct};
use midsection_core::surface::decode_code;
use midsection_core::{build_complex, fixtures, Cell, Colour, MidsectionKind, SliceKind, SurfaceComplex};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn decode(code: &[u8]) -> SurfaceComplex {
    build_complex(decode_code(code).unwrap()).unwrap()
}

fn members(kind: MidsectionKind, max: usize) -> Vec<CensusRecord> {
    enumerate_midsections(kind, max).expect("within budget")
}

fn prism_fixture() -> Verdict {
    let prism = fixtures::prism();
    let report = validate_slice(&prism, SliceKind::Disc, true);
    ensure(report.valid, || format!("prism rejected: {:?}", report.first_failure()))?;
    let (s, _) = midsection(&prism).map_err(|e| e.to_string())?;
    ensure(s.canonical_code() == fixtures::chain3().canonical_code(), || "midsection is not the 3-cell chain".into())?;
    let k = reconstruct(&fixtures::chain3(), MidsectionKind::Disc).map_err(|e| e.to_string())?;
    ensure(isomorphic3(&k, &prism), || "reconstruction is not the prism".into())?;
    let c = k.counts();
    let tally = (c.vertices, c.edges, c.triangles, c.tetrahedra, c.euler());
    ensure(tally == (6, 12, 10, 3, 1), || format!("counts {tally:?}"))?;
    Ok("V=6 E=12 F=10 T=3 χ=1".into())
}

fn side_classes() -> Verdict {
    let sides = side_census();
    ensure(sides.oriented_classes == 3, || format!("{} classes", sides.oriented_classes))?;
    Ok(format!(
        "{} cylinders among {} apex choices, 3 classes ({} up to reflection)",
        sides.cylinders, sides.candidates, sides.unoriented_classes
    ))
}

fn bijection() -> Verdict {
    let mids = members(MidsectionKind::Disc, 5);
    let slices = enumerate_slices_bruteforce(SliceKind::Disc, 5).map_err(|e| e.to_string())?;
    let a: Vec<usize> = mids.iter().map(|r| r.count).collect();
    let b: Vec<usize> = slices.iter().map(|r| r.count).collect();
    ensure(a == b, || format!("midsections {a:?} vs slices {b:?}"))?;

    let disc = roundtrip_report(MidsectionKind::Disc, 7).map_err(|e| e.to_string())?;
    ensure(disc.passed(), || format!("disc failures: {:?}", disc.failures))?;

    let spheres = members(MidsectionKind::Sphere, 13);
    let occupied: Vec<usize> = spheres.iter().filter(|r| r.count > 0).map(|r| r.size).take(2).collect();
    ensure(occupied.len() == 2, || format!("occupied sphere sizes up to 13: {occupied:?}"))?;
    let sphere = roundtrip_report(MidsectionKind::Sphere, occupied[1]).map_err(|e| e.to_string())?;
    ensure(sphere.passed(), || format!("sphere failures: {:?}", sphere.failures))?;
    Ok(format!(
        "disc counts {a:?}; disc roundtrip {} midsections + {} slices; sphere sizes {occupied:?} roundtrip {} + {}",
        disc.midsections_checked, disc.slices_checked, sphere.midsections_checked, sphere.slices_checked
    ))
}

fn member_invariants() -> Verdict {
    let mut checked = 0;
    for (kind, max) in [(MidsectionKind::Disc, 7), (MidsectionKind::Sphere, 13)] {
        for record in members(kind, max) {
            for (s, e) in record.complexes().iter().zip(&record.entries) {
                checked += 1;
                ensure(check_delta(s).verdict, || format!("{} fails delta", e.code))?;
                for c in Colour::BOTH {
                    ensure(s.quad_chains(c).iter().all(|q| !q.closed), || format!("{} has a {c} quad-chain cycle", e.code))?;
                }
                if kind == MidsectionKind::Disc {
                    let arcs = s.boundary_arcs().map_err(|_| format!("{} has no boundary arcs", e.code))?.arcs;
                    let n = arcs.len();
                    let alternating = (0..n).all(|i| arcs[i].colour != arcs[(i + 1) % n].colour);
                    let both = Colour::BOTH.iter().all(|&c| arcs.iter().any(|a| a.colour == c));
                    ensure(alternating && both, || format!("{} has arcs {:?}", e.code, arcs.iter().map(|a| a.colour).collect::<Vec<_>>()))?;
                }
            }
        }
    }
    Ok(format!("{checked} members (discs ≤ 7 cells, spheres ≤ 13 cells)"))
}

fn gamma_is_independent() -> Verdict {
    for (size, level) in all_discs(7).iter().enumerate() {
        for code in level {
            let s = decode(code);
            let beta1 = |c| check_beta1(&s, c).is_ok_and(|r| r.verdict);
            if check_alpha(&s).verdict
                && beta1(Colour::Red)
                && beta1(Colour::Blue)
                && check_beta2(&s).is_ok_and(|r| r.verdict)
                && !check_gamma(&s).verdict
            {
                return Ok(format!("{size}-cell disc {}", hex::encode(code)));
            }
        }
    }
    Err("no disc with ≤ 7 cells passes α, β₁, β₂ and fails γ".into())
}

fn oracle_equivalence() -> Verdict {
    let mut checked = 0;
    let complexes = all_discs(7).into_iter().chain(all_spheres(7)).flatten();
    for code in complexes {
        let s = decode(&code);
        let fast: Vec<_> = fast_conditions(&s).into_iter().map(|r| r.map(|r| (r.condition, r.verdict))).collect();
        let oracle: Vec<_> = oracle_conditions(&s, DEFAULT_ORACLE_BUDGET)
            .map_err(|e| e.to_string())?
            .into_iter()
            .map(|r| r.map(|r| (r.condition, r.verdict)))
            .collect();
        ensure(fast == oracle, || format!("{}: fast {fast:?} oracle {oracle:?}", hex::encode(&code)))?;
        checked += 1;
    }
    Ok(format!("{checked} discs and spheres with ≤ 7 cells"))
}

fn red_part(triangles: &[[u32; 3]]) -> SurfaceComplex {
    build_complex(triangles.iter().map(|t| Cell::red(t[0], t[1], t[2])).collect()).unwrap()
}

fn constructors() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..200 {
        let n1 = rng.gen_range(1..=8);
        let n2 = rng.gen_range(1..=8);
        let d1 = common::random_disc(&mut rng, n1);
        let d2 = common::random_disc(&mut rng, n2);
        let k = build_disc_slice(&d1, &d2).map_err(|e| format!("pair {i}: {e}"))?;
        let report = validate_slice(&k, SliceKind::Disc, true);
        ensure(report.valid, || format!("pair {i}: {:?}", report.first_failure()))?;
        let split = boundary_split(&k, SliceKind::Disc).map_err(|e| e.to_string())?;
        ensure(red_part(&split.red).canonical_code() == d1.canonical_code(), || format!("pair {i}: red disc differs"))?;
        ensure(red_part(&split.blue).canonical_code() == d2.canonical_code(), || format!("pair {i}: blue disc differs"))?;
    }
    let spheres = small_sphere_triangulations(8);
    for i in 0..20 {
        let (a, b) = (spheres.choose(&mut rng).unwrap(), spheres.choose(&mut rng).unwrap());
        let s1 = common::shuffled(&mut rng, a);
        let s2 = common::shuffled(&mut rng, b);
        let k = build_sphere_slice(&s1, &s2).map_err(|e| format!("sphere pair {i}: {e}"))?;
        let report = validate_slice(&k, SliceKind::Sphere, true);
        ensure(report.valid, || format!("sphere pair {i}: {:?}", report.first_failure()))?;
        ensure(k.counts().euler() == 2, || format!("sphere pair {i}: χ = {}", k.counts().euler()))?;
        let split = boundary_split(&k, SliceKind::Sphere).map_err(|e| e.to_string())?;
        ensure(red_part(&split.red).canonical_code() == s1.canonical_code(), || format!("sphere pair {i}: red sphere differs"))?;
        ensure(red_part(&split.blue).canonical_code() == s2.canonical_code(), || format!("sphere pair {i}: blue sphere differs"))?;
    }
    Ok("200 disc pairs and 20 sphere pairs valid with matching boundaries".into())
}

fn sphere_cut() -> Verdict {
    let mut cut = 0;
    for record in members(MidsectionKind::Sphere, 13) {
        for (s, e) in record.complexes().iter().zip(&record.entries) {
            let result = cut_to_disc(s).map_err(|err| format!("{}: {err}", e.code))?;
            ensure(is_member(&result.disc, MidsectionKind::Disc), || format!("{}: S″ is not a disc member", e.code))?;
            cut += 1;
        }
    }
    ensure(cut > 0, || "no sphere members to cut".into())?;
    Ok(format!("{cut} sphere members (≤ 13 cells)"))
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 8] = [
        ("prism fixture", prism_fixture),
        ("side census", side_classes),
        ("bijection at desk scale", bijection),
        ("member invariants", member_invariants),
        ("γ is independent", gamma_is_independent),
        ("oracle equivalence", oracle_equivalence),
        ("constructors", constructors),
        ("sphere cut", sphere_cut),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {} {name}: PASS ({secs:.1}s) {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1}s) {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
