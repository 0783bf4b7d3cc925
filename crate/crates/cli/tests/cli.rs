use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use midsection_core::causal3d::io::parse_slice;
use midsection_core::causal3d::{isomorphic3, validate_slice};
use midsection_core::conditions::is_member;
use midsection_core::surface::io::{parse_midsection, parse_triangulation};
use midsection_core::{fixtures, MidsectionKind, SliceKind};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_midsection")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn validate_prism() {
    let out = run(&["--format", "json", "validate", path(&fixture("prism.slice")), "--kind", "disc"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["valid"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
}

#[test]
fn validate_text_lists_checks() {
    let out = run(&["validate", path(&fixture("prism.slice")), "--kind", "sphere"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL  boundary-split"), "{text}");
    assert!(text.ends_with("invalid\n"));
}

#[test]
fn monochrome_tetra_is_invalid_input() {
    let out = run(&["--format", "json", "validate", path(&fixture("broken.slice")), "--kind", "disc"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["error"]["error"], "monochrome-tetra");
}

#[test]
fn malformed_json_is_a_parse_failure() {
    let out = run(&["validate", path(&fixture("malformed.json")), "--kind", "disc"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("invalid JSON"));
    assert!(out.stdout.is_empty());
}

#[test]
fn missing_file_and_usage_errors() {
    assert_eq!(run(&["validate", "/nonexistent/x.slice", "--kind", "disc"]).status.code(), Some(2));
    assert_eq!(run(&["validate", path(&fixture("prism.slice"))]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn chain_is_a_disc_member() {
    let out = run(&["validate", path(&fixture("chain3.midsection")), "--kind", "midsection-disc"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["validate", path(&fixture("chain3.midsection")), "--kind", "midsection-sphere"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("fails topology"));
}

#[test]
fn midsection_and_reconstruct() {
    let dir = tempfile::tempdir().unwrap();
    let mid = dir.path().join("prism.midsection");
    let out = run(&["midsection", path(&fixture("prism.slice")), "-o", path(&mid)]);
    assert_eq!(out.status.code(), Some(0));
    let s = parse_midsection(&fs::read_to_string(&mid).unwrap()).unwrap();
    assert_eq!(s.canonical_code(), fixtures::chain3().canonical_code());

    let back = dir.path().join("back.slice");
    assert_eq!(run(&["reconstruct", path(&mid), "-o", path(&back)]).status.code(), Some(0));
    let k = parse_slice(&fs::read_to_string(&back).unwrap()).unwrap();
    assert!(isomorphic3(&k, &fixtures::prism()));
}

#[test]
fn builders() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("disc.slice");
    let status = run(&[
        "build-slice",
        "--red",
        path(&fixture("hexagon.triangulation")),
        "--blue",
        path(&fixture("triangle.triangulation")),
        "-o",
        path(&out),
    ]);
    assert_eq!(status.status.code(), Some(0));
    let k = parse_slice(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(validate_slice(&k, SliceKind::Disc, true).valid);

    let sphere = dir.path().join("sphere.slice");
    let status = run(&[
        "build-sphere-slice",
        "--red",
        path(&fixture("tetrahedron.triangulation")),
        "--blue",
        path(&fixture("bipyramid.triangulation")),
        "-o",
        path(&sphere),
    ]);
    assert_eq!(status.status.code(), Some(0));
    let k = parse_slice(&fs::read_to_string(&sphere).unwrap()).unwrap();
    assert!(validate_slice(&k, SliceKind::Sphere, true).valid);
    assert_eq!(k.counts().euler(), 2);

    let wrong = run(&[
        "build-slice",
        "--red",
        path(&fixture("tetrahedron.triangulation")),
        "--blue",
        path(&fixture("triangle.triangulation")),
        "-o",
        path(&dir.path().join("never.slice")),
    ]);
    assert_eq!(wrong.status.code(), Some(1));
    assert!(!dir.path().join("never.slice").exists());
}

#[test]
fn cut_the_minimal_sphere() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("disc.midsection");
    let res = run(&["--format", "json", "cut", path(&fixture("minimal-sphere.midsection")), "-o", path(&out)]);
    assert_eq!(res.status.code(), Some(0));
    assert_eq!(json_of(&res)["audits"].as_array().unwrap().len(), 5);
    let s = parse_midsection(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(is_member(&s, MidsectionKind::Disc));

    let disc = run(&["cut", path(&fixture("chain3.midsection")), "-o", path(&dir.path().join("x"))]);
    assert_eq!(disc.status.code(), Some(1));
}

#[test]
fn side_fixtures_are_distinct_cylinders() {
    let mut codes = Vec::new();
    for i in 1..=3 {
        let s = parse_triangulation(&fs::read_to_string(fixture(&format!("side-{i}.triangulation"))).unwrap()).unwrap();
        let topo = s.topology();
        assert_eq!((topo.euler, topo.boundary_components), (0, 2));
        let codes_i = s.oriented_codes(&|v| u8::from(v >= 3)).unwrap();
        codes.push(codes_i.positive);
    }
    codes.sort();
    codes.dedup();
    assert_eq!(codes.len(), 3);
}

#[test]
fn roundtrip_disc_six() {
    let out = run(&["roundtrip", "--kind", "disc", "--max-cells", "6"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains(", 0 failures"));
}

#[test]
fn budget_exceeded() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["enumerate", "--kind", "disc", "--max-cells", "40", "-o", path(dir.path())]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("budget"));
}

fn dir_contents(dir: &Path) -> BTreeMap<String, Vec<u8>> {
    fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap())
        .map(|e| (e.file_name().into_string().unwrap(), fs::read(e.path()).unwrap()))
        .collect()
}

#[test]
fn sharded_census_merges_to_the_same_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let whole = dir.path().join("whole");
    let out = run(&["enumerate", "--kind", "disc", "--max-cells", "6", "-o", path(&whole)]);
    assert_eq!(out.status.code(), Some(0));
    let mut shards = Vec::new();
    for i in 0..3 {
        let d = dir.path().join(format!("shard{i}"));
        let out = run(&[
            "--jobs",
            "1",
            "enumerate",
            "--kind",
            "disc",
            "--max-cells",
            "6",
            "--shards",
            "3",
            "--shard",
            &i.to_string(),
            "-o",
            path(&d),
        ]);
        assert_eq!(out.status.code(), Some(0));
        shards.push(d);
    }
    let merged = dir.path().join("merged");
    let mut args = vec!["merge"];
    args.extend(shards.iter().map(|d| path(d)));
    args.extend(["-o", path(&merged)]);
    assert_eq!(run(&args).status.code(), Some(0));
    assert_eq!(dir_contents(&whole), dir_contents(&merged));

    let stats = run(&["stats", path(&merged)]);
    assert_eq!(stats.status.code(), Some(0));
    let text = String::from_utf8(stats.stdout).unwrap();
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["midsection-disc", "3", "1"]), "{text}");
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["midsection-disc", "6", "234"]), "{text}");
}

#[test]
fn slice_census_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["--format", "json", "enumerate", "--kind", "disc", "--source", "slices", "--max-cells", "4", "-o", path(dir.path())]);
    assert_eq!(out.status.code(), Some(0));
    let counts: Vec<u64> = json_of(&out).as_array().unwrap().iter().map(|r| r["count"].as_u64().unwrap()).collect();
    assert_eq!(counts, vec![0, 0, 1, 9]);
    assert!(dir.path().join("slice-disc-03.jsonl").exists());
    assert!(dir.path().join("counts.txt").exists());
}
