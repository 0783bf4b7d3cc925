//! Census directories: one JSON-lines file per kind and size, plus
//! `counts.json` and `counts.txt`.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{CensusEntry, CensusKind, CensusRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountsRow {
    pub kind: CensusKind,
    pub size: usize,
    pub count: usize,
}

fn file_name(kind: CensusKind, size: usize) -> String {
    format!("{}-{size:02}.jsonl", kind.name())
}

fn parse_file_name(name: &str) -> Option<(CensusKind, usize)> {
    let stem = name.strip_suffix(".jsonl")?;
    let (kind, size) = stem.rsplit_once('-')?;
    Some((CensusKind::from_name(kind)?, size.parse().ok()?))
}

fn invalid(e: impl std::fmt::Display) -> io::Error {
    io::Error::new(io::ErrorKind::InvalidData, e.to_string())
}

/// Writes `records` into `dir`, creating it if needed. Files of other kinds
/// and sizes already in `dir` are left alone; the counts files describe
/// `records` only.
pub fn write_census_dir(dir: &Path, records: &[CensusRecord]) -> io::Result<()> {
    fs::create_dir_all(dir)?;
    let mut rows = Vec::new();
    for r in records {
        let mut f = io::BufWriter::new(fs::File::create(dir.join(file_name(r.kind, r.size)))?);
        for e in &r.entries {
            serde_json::to_writer(&mut f, e).map_err(invalid)?;
            f.write_all(b"\n")?;
        }
        f.flush()?;
        rows.push(CountsRow {
            kind: r.kind,
            size: r.size,
            count: r.count,
        });
    }
    rows.sort_by_key(|r| (r.kind, r.size));
    fs::write(dir.join("counts.json"), serde_json::to_string_pretty(&rows).map_err(invalid)? + "\n")?;
    let mut text = String::from("kind\tsize\tcount\n");
    for r in &rows {
        text.push_str(&format!("{}\t{}\t{}\n", r.kind.name(), r.size, r.count));
    }
    fs::write(dir.join("counts.txt"), text)
}

/// Reads every census file in `dir`, sorted by kind and size.
pub fn read_census_dir(dir: &Path) -> io::Result<Vec<CensusRecord>> {
    let mut records = Vec::new();
    for item in fs::read_dir(dir)? {
        let item = item?;
        let name = item.file_name();
        let Some((kind, size)) = name.to_str().and_then(parse_file_name) else { continue };
        let mut entries = Vec::new();
        for line in io::BufReader::new(fs::File::open(item.path())?).lines() {
            let line = line?;
            if !line.trim().is_empty() {
                entries.push(serde_json::from_str::<CensusEntry>(&line).map_err(invalid)?);
            }
        }
        records.push(CensusRecord::new(kind, size, entries));
    }
    records.sort_by_key(|r| (r.kind, r.size));
    Ok(records)
}

/// Unions the census directories in `inputs` into `out`.
pub fn merge_census_dirs(inputs: &[&Path], out: &Path) -> io::Result<Vec<CensusRecord>> {
    let mut merged: BTreeMap<(CensusKind, usize), Vec<CensusEntry>> = BTreeMap::new();
    for dir in inputs {
        for r in read_census_dir(dir)? {
            merged.entry((r.kind, r.size)).or_default().extend(r.entries);
        }
    }
    let records: Vec<CensusRecord> = merged
        .into_iter()
        .map(|((kind, size), entries)| CensusRecord::new(kind, size, entries))
        .collect();
    write_census_dir(out, &records)?;
    Ok(records)
}
