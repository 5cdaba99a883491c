//! File formats and canonical JSON.

use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::cover::{validate_cover, RawCover, SingularCover};
use crate::error::{CoverError, Error, Result};
use crate::graph::ThetaCycle;

/// Pretty JSON with every object's keys sorted, newline-terminated.
pub fn canonical_json<T: Serialize + ?Sized>(value: &T) -> String {
    // `serde_json::Value` keeps object keys in a `BTreeMap`
    let value = serde_json::to_value(value).expect("report types serialize");
    let mut out = serde_json::to_string_pretty(&value).expect("values serialize");
    out.push('\n');
    out
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// A file that was read, with its content hash for report provenance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputFile {
    pub path: String,
    pub sha256: String,
}

pub fn read_bytes(path: &Path) -> Result<(Vec<u8>, InputFile)> {
    let bytes = fs::read(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    let input = InputFile { path: path.display().to_string(), sha256: sha256_hex(&bytes) };
    Ok((bytes, input))
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<(T, InputFile)> {
    let (bytes, input) = read_bytes(path)?;
    let value = serde_json::from_slice(&bytes).map_err(|source| Error::Json { path: input.path.clone(), source })?;
    Ok((value, input))
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    fs::write(path, canonical_json(value)).map_err(|source| Error::Io { path: path.display().to_string(), source })
}

#[derive(Deserialize)]
struct GraphFile {
    thetas: Vec<Vec<u32>>,
}

/// A loaded defining graph plus loader warnings (unsorted branch lists,
/// adjacent single-branch thetas).
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub graph: ThetaCycle,
    pub warnings: Vec<String>,
    pub input: InputFile,
}

pub fn read_graph(path: &Path) -> Result<LoadedGraph> {
    let (file, input): (GraphFile, _) = read_json(path)?;
    let mut warnings = Vec::new();
    for (i, branches) in file.thetas.iter().enumerate() {
        if branches.windows(2).any(|w| w[0] > w[1]) {
            let mut sorted = branches.clone();
            sorted.sort_unstable();
            warnings.push(format!("theta {}: branches {branches:?} sorted to {sorted:?}", i + 1));
        }
    }
    let graph = ThetaCycle::from_lists_relaxed(&file.thetas)?;
    if let Some(i) = graph.adjacent_single_branch() {
        warnings.push(format!(
            "thetas {i} and {} both have a single branch",
            i % graph.len() + 1
        ));
    }
    Ok(LoadedGraph { graph, warnings, input })
}

pub fn read_raw_cover(path: &Path) -> Result<(RawCover, InputFile)> {
    read_json(path)
}

/// Reads and validates a cover, against `graph` when given.
pub fn read_cover(path: &Path, graph: Option<&ThetaCycle>) -> Result<(SingularCover, InputFile)> {
    let (raw, input) = read_raw_cover(path)?;
    let report = validate_cover(&raw, graph);
    if !report.valid {
        return Err(CoverError::Invalid(report.violations).into());
    }
    Ok((SingularCover::from_raw(&raw)?, input))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_json_sorts_keys() {
        let value = serde_json::json!({"b": 1, "a": {"d": 2, "c": 3}});
        assert_eq!(canonical_json(&value), "{\n  \"a\": {\n    \"c\": 3,\n    \"d\": 2\n  },\n  \"b\": 1\n}\n");
    }

    #[test]
    fn graph_loader_warns() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("g.json");
        fs::write(&path, r#"{"thetas": [[5,3],[4],[3],[3,4]]}"#).unwrap();
        let loaded = read_graph(&path).unwrap();
        assert_eq!(loaded.graph.branch_lists(), vec![vec![3, 5], vec![4], vec![3], vec![3, 4]]);
        assert_eq!(loaded.warnings.len(), 2);
        assert_eq!(loaded.input.sha256.len(), 64);
    }

    #[test]
    fn cover_reader_rejects_invalid() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        fs::write(&path, r#"{"N": 3, "d": 2, "matchings": {"1": [[0,1]], "2": [[0,1]], "3": [[0,0]]}}"#).unwrap();
        let err = read_cover(&path, None).unwrap_err();
        assert_eq!(err.kind(), "invalid_cover");
        assert!(err.is_validation());
        let missing = read_cover(&dir.path().join("none.json"), None).unwrap_err();
        assert_eq!(missing.kind(), "io");
    }
}
