//! `midsection`: validate slices and midsections, convert between them,
//! build slices from boundary triangulations, and run census jobs.
//!
//! Exit status is 0 for success or a valid verdict, 1 for semantically
//! invalid input (the report goes to stdout) and 2 for I/O, parse and usage
//! errors (diagnostics on stderr).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use midsection_core::causal3d::io::{parse_slice_parts, slice_to_json, SliceFormatError};
use midsection_core::causal3d::{build_complex3, validate_slice, Complex3};
use midsection_core::conditions::{membership, MidsectionKind};
use midsection_core::enumerate::{
    enumerate_midsections_sharded, enumerate_slices_sharded, merge_census_dirs, read_census_dir, roundtrip_report,
    write_census_dir, CensusRecord, Shard,
};
use midsection_core::midsection::midsection;
use midsection_core::reconstruct::{build_disc_slice, build_sphere_slice, cut_to_disc, reconstruct};
use midsection_core::surface::io::{midsection_to_json, parse_midsection_cells, parse_triangulation, FormatError};
use midsection_core::{build_complex, SliceKind, SurfaceComplex};

#[derive(Parser)]
#[command(name = "midsection", version, about)]
struct Cli {
    /// Output format for verdicts and reports.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Worker threads for enumerate and roundtrip (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ValidateKind {
    Disc,
    Sphere,
    MidsectionDisc,
    MidsectionSphere,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Disc,
    Sphere,
}

impl From<Kind> for MidsectionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Disc => MidsectionKind::Disc,
            Kind::Sphere => MidsectionKind::Sphere,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Midsections,
    Slices,
}

#[derive(Subcommand)]
enum Command {
    /// Check a slice file or a midsection file.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: ValidateKind,
        /// Skip the midsection round trip when validating a slice.
        #[arg(long)]
        no_certificate: bool,
    },
    /// Write the midsection of a slice.
    Midsection {
        slice: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the slice whose midsection is given.
    Reconstruct {
        midsection: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// Defaults to sphere for closed midsections and disc otherwise.
        #[arg(long, value_enum)]
        kind: Option<Kind>,
    },
    /// Build a disc-slice with the given red and blue boundary discs.
    BuildSlice {
        #[arg(long)]
        red: PathBuf,
        #[arg(long)]
        blue: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Build a sphere-slice with the given red and blue boundary spheres.
    BuildSphereSlice {
        #[arg(long)]
        red: PathBuf,
        #[arg(long)]
        blue: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Cut a sphere midsection down to a disc midsection.
    Cut {
        midsection: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Run a census and write it as a census directory.
    Enumerate {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Source::Midsections)]
        source: Source,
        /// Largest cell count (midsections) or tetrahedron count (slices).
        #[arg(long)]
        max_cells: usize,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        #[arg(long, default_value_t = 0)]
        shard: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Union shard directories into one census directory.
    Merge {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Check both directions of the correspondence over a census.
    Roundtrip {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        max_cells: usize,
    },
    /// Print the counts table of a census directory.
    Stats { dir: PathBuf },
}

/// A failure that is not a verdict: status 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

/// A verdict or report. `valid` decides between status 0 and 1.
struct Outcome {
    valid: bool,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: impl Into<String>, json: Value) -> Outcome {
        Outcome {
            valid: true,
            text: text.into(),
            json,
        }
    }

    fn invalid(text: impl Into<String>, json: Value) -> Outcome {
        Outcome {
            valid: false,
            text: text.into(),
            json,
        }
    }
}

fn read(path: &Path) -> Result<String, Fatal> {
    fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Fatal> {
    fs::write(path, format!("{text}\n")).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

/// A parsed file, or the verdict for a file that parses but is not a valid
/// complex.
enum Loaded<T> {
    Complex(T),
    Rejected(Outcome),
}

fn rejected(what: &str, error: Value, message: String) -> Outcome {
    Outcome::invalid(format!("invalid {what}: {message}"), json!({ "valid": false, "error": error, "message": message }))
}

fn load_slice(path: &Path) -> Result<Loaded<Complex3>, Fatal> {
    let (vertices, tets) = parse_slice_parts(&read(path)?).map_err(|e| match e {
        SliceFormatError::Build(e) => Fatal(e.to_string()),
        e => Fatal(format!("{}: {e}", path.display())),
    })?;
    Ok(match build_complex3(vertices, tets) {
        Ok(k) => Loaded::Complex(k),
        Err(e) => Loaded::Rejected(rejected("slice", serde_json::to_value(&e)?, e.to_string())),
    })
}

fn load_midsection(path: &Path) -> Result<Loaded<SurfaceComplex>, Fatal> {
    let cells = parse_midsection_cells(&read(path)?).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    Ok(match build_complex(cells) {
        Ok(s) => Loaded::Complex(s),
        Err(e) => Loaded::Rejected(rejected("midsection", json!({ "error": "build" }), e.to_string())),
    })
}

fn load_triangulation(path: &Path) -> Result<Loaded<SurfaceComplex>, Fatal> {
    match parse_triangulation(&read(path)?) {
        Ok(s) => Ok(Loaded::Complex(s)),
        Err(FormatError::Build(e)) => Ok(Loaded::Rejected(rejected(
            "triangulation",
            json!({ "error": "build" }),
            e.to_string(),
        ))),
        Err(e) => Err(Fatal(format!("{}: {e}", path.display()))),
    }
}

macro_rules! load {
    ($e:expr) => {
        match $e? {
            Loaded::Complex(c) => c,
            Loaded::Rejected(outcome) => return Ok(outcome),
        }
    };
}

fn membership_outcome(s: &SurfaceComplex, kind: MidsectionKind) -> Result<Outcome, Fatal> {
    let report = membership(s, kind);
    let text = match report.root_failure() {
        None => format!("member: {}", report.condition.name()),
        Some(r) => format!("not a member: fails {}", r.condition.name()),
    };
    let json = serde_json::to_value(&report)?;
    Ok(if report.verdict { Outcome::ok(text, json) } else { Outcome::invalid(text, json) })
}

fn validate(file: &Path, kind: ValidateKind, certificate: bool) -> Result<Outcome, Fatal> {
    let slice_kind = match kind {
        ValidateKind::MidsectionDisc => return membership_outcome(&load!(load_midsection(file)), MidsectionKind::Disc),
        ValidateKind::MidsectionSphere => return membership_outcome(&load!(load_midsection(file)), MidsectionKind::Sphere),
        ValidateKind::Disc => SliceKind::Disc,
        ValidateKind::Sphere => SliceKind::Sphere,
    };
    let k = load!(load_slice(file));
    let report = validate_slice(&k, slice_kind, certificate);
    let mut text = String::new();
    for c in &report.checks {
        let mark = if c.passed { "pass" } else { "FAIL" };
        text.push_str(&format!("{mark}  {}", c.name));
        if !c.detail.is_empty() {
            text.push_str(&format!(": {}", c.detail));
        }
        text.push('\n');
    }
    text.push_str(if report.valid { "valid" } else { "invalid" });
    let json = serde_json::to_value(&report)?;
    Ok(if report.valid { Outcome::ok(text, json) } else { Outcome::invalid(text, json) })
}

fn cell_summary(s: &SurfaceComplex) -> Value {
    use midsection_core::Colour;
    json!({
        "cells": s.cell_count(),
        "red_triangles": s.triangle_count(Colour::Red),
        "blue_triangles": s.triangle_count(Colour::Blue),
        "quadrangles": s.quad_count(),
        "vertices": s.vertex_count(),
    })
}

fn slice_summary(k: &Complex3) -> Value {
    let c = k.counts();
    json!({
        "vertices": c.vertices,
        "edges": c.edges,
        "triangles": c.triangles,
        "tetrahedra": c.tetrahedra,
        "euler": c.euler(),
    })
}

fn run_midsection(slice: &Path, output: &Path) -> Result<Outcome, Fatal> {
    let k = load!(load_slice(slice));
    match midsection(&k) {
        Ok((s, labels)) => {
            write(output, &midsection_to_json(&s))?;
            let summary = cell_summary(&s);
            Ok(Outcome::ok(
                format!("{} midsection with {} cells written to {}", kind_name(labels.kind), s.cell_count(), output.display()),
                json!({ "kind": labels.kind, "midsection": summary }),
            ))
        }
        Err(e) => Ok(rejected("slice", json!({ "error": "midsection" }), e.to_string())),
    }
}

fn kind_name(k: SliceKind) -> &'static str {
    match k {
        SliceKind::Disc => "disc",
        SliceKind::Sphere => "sphere",
    }
}

fn run_reconstruct(path: &Path, output: &Path, kind: Option<Kind>) -> Result<Outcome, Fatal> {
    let s = load!(load_midsection(path));
    let kind = kind.map(MidsectionKind::from).unwrap_or(if s.is_sphere() { MidsectionKind::Sphere } else { MidsectionKind::Disc });
    match reconstruct(&s, kind) {
        Ok(k) => {
            write(output, &slice_to_json(&k))?;
            Ok(Outcome::ok(
                format!("slice with {} tetrahedra written to {}", k.tetrahedra().len(), output.display()),
                json!({ "slice": slice_summary(&k) }),
            ))
        }
        Err(e) => {
            let root = membership(&s, kind);
            Ok(Outcome::invalid(format!("cannot reconstruct: {e}"), serde_json::to_value(&root)?))
        }
    }
}

fn run_build(red: &Path, blue: &Path, output: &Path, kind: SliceKind) -> Result<Outcome, Fatal> {
    let d1 = load!(load_triangulation(red));
    let d2 = load!(load_triangulation(blue));
    let built = match kind {
        SliceKind::Disc => build_disc_slice(&d1, &d2),
        SliceKind::Sphere => build_sphere_slice(&d1, &d2),
    };
    match built {
        Ok(k) => {
            write(output, &slice_to_json(&k))?;
            Ok(Outcome::ok(
                format!("{}-slice with {} tetrahedra written to {}", kind_name(kind), k.tetrahedra().len(), output.display()),
                json!({ "slice": slice_summary(&k) }),
            ))
        }
        Err(e) => Ok(rejected("input", json!({ "error": "build-slice" }), e.to_string())),
    }
}

fn run_cut(path: &Path, output: &Path) -> Result<Outcome, Fatal> {
    let s = load!(load_midsection(path));
    match cut_to_disc(&s) {
        Ok(cut) => {
            write(output, &midsection_to_json(&cut.disc))?;
            let mut text = format!(
                "cut {} red triangles and {} quadrangles; disc with {} cells written to {}",
                cut.red_cluster.len(),
                cut.strip.len(),
                cut.disc.cell_count(),
                output.display()
            );
            for a in &cut.audits {
                text.push_str(&format!("\nχ({}) = {}", a.name, a.euler));
            }
            Ok(Outcome::ok(text, serde_json::to_value(&cut)?))
        }
        Err(e) => Ok(rejected("sphere midsection", json!({ "error": "cut" }), e.to_string())),
    }
}

fn counts_text(records: &[CensusRecord]) -> String {
    let width = records.iter().map(|r| r.kind.name().len()).max().unwrap_or(4).max(4);
    let mut text = format!("{:<width$}  {:>4}  {:>8}", "kind", "size", "count");
    for r in records {
        text.push_str(&format!("\n{:<width$}  {:>4}  {:>8}", r.kind.name(), r.size, r.count));
    }
    text
}

fn counts_json(records: &[CensusRecord]) -> Value {
    Value::Array(
        records
            .iter()
            .map(|r| json!({ "kind": r.kind, "size": r.size, "count": r.count }))
            .collect(),
    )
}

fn run_enumerate(kind: Kind, source: Source, max_cells: usize, shards: usize, shard: usize, output: &Path) -> Result<Outcome, Fatal> {
    if shards == 0 || shard >= shards {
        return Err(Fatal(format!("shard {shard} is not in 0..{shards}")));
    }
    let shard = Shard { count: shards, index: shard };
    let result = match source {
        Source::Midsections => enumerate_midsections_sharded(kind.into(), max_cells, shard),
        Source::Slices => enumerate_slices_sharded(MidsectionKind::from(kind).into(), max_cells, shard),
    };
    let records = match result {
        Ok(r) => r,
        Err(e) => return Ok(Outcome::invalid(e.to_string(), json!({ "error": e.to_string() }))),
    };
    write_census_dir(output, &records)?;
    Ok(Outcome::ok(counts_text(&records), counts_json(&records)))
}

fn run_roundtrip(kind: Kind, max_cells: usize) -> Result<Outcome, Fatal> {
    let report = match roundtrip_report(kind.into(), max_cells) {
        Ok(r) => r,
        Err(e) => return Ok(Outcome::invalid(e.to_string(), json!({ "error": e.to_string() }))),
    };
    let mut text = format!(
        "{} midsections and {} slices checked, {} failures",
        report.midsections_checked,
        report.slices_checked,
        report.failures.len()
    );
    for f in &report.failures {
        text.push_str(&format!("\n{}: {}", f.code, f.detail));
    }
    let json = serde_json::to_value(&report)?;
    Ok(if report.passed() { Outcome::ok(text, json) } else { Outcome::invalid(text, json) })
}

fn run(cli: Cli) -> Result<Outcome, Fatal> {
    match cli.command {
        Command::Validate {
            file,
            kind,
            no_certificate,
        } => validate(&file, kind, !no_certificate),
        Command::Midsection { slice, output } => run_midsection(&slice, &output),
        Command::Reconstruct { midsection, output, kind } => run_reconstruct(&midsection, &output, kind),
        Command::BuildSlice { red, blue, output } => run_build(&red, &blue, &output, SliceKind::Disc),
        Command::BuildSphereSlice { red, blue, output } => run_build(&red, &blue, &output, SliceKind::Sphere),
        Command::Cut { midsection, output } => run_cut(&midsection, &output),
        Command::Enumerate {
            kind,
            source,
            max_cells,
            shards,
            shard,
            output,
        } => run_enumerate(kind, source, max_cells, shards, shard, &output),
        Command::Merge { inputs, output } => {
            let inputs: Vec<&Path> = inputs.iter().map(PathBuf::as_path).collect();
            let records = merge_census_dirs(&inputs, &output)?;
            Ok(Outcome::ok(counts_text(&records), counts_json(&records)))
        }
        Command::Roundtrip { kind, max_cells } => run_roundtrip(kind, max_cells),
        Command::Stats { dir } => {
            let records = read_census_dir(&dir).map_err(|e| Fatal(format!("{}: {e}", dir.display())))?;
            Ok(Outcome::ok(counts_text(&records), counts_json(&records)))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let format = cli.format;
    match run(cli) {
        Ok(outcome) => {
            match format {
                Format::Text => println!("{}", outcome.text),
                Format::Json => println!("{}", serde_json::to_string_pretty(&outcome.json).expect("JSON value")),
            }
            ExitCode::from(if outcome.valid { 0 } else { 1 })
        }
        Err(Fatal(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
