//! On-disk formats: GraphFile and ColoringFile JSON, and a plain-text
//! adjacency-list reader for externally produced graphs.
//!
//! Graphs are small here (≤ 728 vertices), so both formats are pretty-
//! printed JSON — inspectable, diffable, and byte-stable across runs.
//! Vertex ids in files are 0-based. Every parse failure is a [`FileError`]
//! carrying the offending path, which the CLI maps to its parse-error exit
//! code.

use crate::coloring::PackingColoring;
use crate::graphcore::Graph;
use serde::{Deserialize, Serialize};
use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: invalid JSON: {msg}")]
    Json { path: String, msg: String },
    #[error("{path}: {msg}")]
    Format { path: String, msg: String },
}

impl FileError {
    fn format(path: &str, msg: impl ToString) -> Self {
        FileError::Format {
            path: path.to_string(),
            msg: msg.to_string(),
        }
    }
}

const MEMORY: &str = "<memory>";

fn path_str(path: &Path) -> String {
    path.display().to_string()
}

fn read_file(path: &Path) -> Result<String, FileError> {
    fs::read_to_string(path).map_err(|source| FileError::Io {
        path: path_str(path),
        source,
    })
}

/// Optional provenance block of a [`GraphFile`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphMeta {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<u32>,
}

/// JSON graph container: 0-based sorted adjacency lists plus optional
/// labels, bipartition sides and family metadata.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub n: usize,
    pub adj: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<GraphMeta>,
}

impl GraphFile {
    pub fn from_graph(g: &Graph) -> Self {
        GraphFile {
            n: g.n(),
            adj: g.adjacency().to_vec(),
            labels: g.labels().map(<[String]>::to_vec),
            side: g.sides().map(<[u8]>::to_vec),
            meta: None,
        }
    }

    pub fn with_meta(mut self, meta: GraphMeta) -> Self {
        self.meta = Some(meta);
        self
    }

    /// Validate and build the in-memory graph (symmetry, label/side
    /// lengths, side values).
    pub fn to_graph(&self) -> Result<Graph, FileError> {
        self.to_graph_at(MEMORY)
    }

    fn to_graph_at(&self, path: &str) -> Result<Graph, FileError> {
        if self.adj.len() != self.n {
            return Err(FileError::format(
                path,
                format!("n = {} but adj has {} rows", self.n, self.adj.len()),
            ));
        }
        let mut g = Graph::from_adjacency(self.adj.clone())
            .map_err(|e| FileError::format(path, e))?;
        if let Some(labels) = &self.labels {
            g = g
                .with_labels(labels.clone())
                .map_err(|e| FileError::format(path, e))?;
        }
        if let Some(side) = &self.side {
            g = g
                .with_sides(side.clone())
                .map_err(|e| FileError::format(path, e))?;
        }
        Ok(g)
    }

    pub fn from_json_str(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json {
            path: MEMORY.to_string(),
            msg: e.to_string(),
        })
    }

    /// Canonical pretty JSON with a trailing newline; byte-stable for a
    /// given graph.
    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, FileError> {
        let path = path.as_ref();
        serde_json::from_str(&read_file(path)?).map_err(|e| FileError::Json {
            path: path_str(path),
            msg: e.to_string(),
        })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), FileError> {
        let path = path.as_ref();
        fs::write(path, self.to_json_string()).map_err(|source| FileError::Io {
            path: path_str(path),
            source,
        })
    }
}

fn is_false(b: &bool) -> bool {
    !b
}

/// JSON coloring container: `colors[v]` is the 1-based color of vertex v
/// (0-based v). Files whose vertex ids were originally 1-based may carry a
/// marker flag — accepted under its legacy spelling `paper_numbering` too.
/// The flag is provenance only: a JSON array is positional, so entry v is
/// vertex v either way and no index shift is applied.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringFile {
    pub colors: Vec<u32>,
    #[serde(
        default,
        alias = "paper_numbering",
        skip_serializing_if = "is_false"
    )]
    pub one_based: bool,
}

impl ColoringFile {
    pub fn from_coloring(c: &PackingColoring) -> Self {
        ColoringFile {
            colors: c.colors().to_vec(),
            one_based: false,
        }
    }

    /// Validate against `g` (length, positive colors) and build the
    /// coloring.
    pub fn to_coloring(&self, g: &Graph) -> Result<PackingColoring, FileError> {
        PackingColoring::for_graph(g, self.colors.clone())
            .map_err(|e| FileError::format(MEMORY, e))
    }

    pub fn from_json_str(text: &str) -> Result<Self, FileError> {
        serde_json::from_str(text).map_err(|e| FileError::Json {
            path: MEMORY.to_string(),
            msg: e.to_string(),
        })
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self, FileError> {
        let path = path.as_ref();
        serde_json::from_str(&read_file(path)?).map_err(|e| FileError::Json {
            path: path_str(path),
            msg: e.to_string(),
        })
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<(), FileError> {
        let path = path.as_ref();
        fs::write(path, self.to_json_string()).map_err(|source| FileError::Io {
            path: path_str(path),
            source,
        })
    }
}

/// Parse a plain-text adjacency list: one line per vertex in id order,
/// whitespace-separated neighbor ids, `#` starting a comment, blank lines
/// ignored. Ids may be 0-based or 1-based; 1-based is assumed exactly when
/// 0 never appears and the largest id equals the number of vertex lines.
/// The result must be symmetric, like any other graph input.
pub fn parse_adjacency_text(text: &str, origin: &str) -> Result<Graph, FileError> {
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<u32>().map_err(|_| {
                    FileError::format(
                        origin,
                        format!("line {}: bad vertex id {tok:?}", lineno + 1),
                    )
                })
            })
            .collect::<Result<Vec<u32>, _>>()?;
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(FileError::format(origin, "no adjacency lines found"));
    }
    let ids = rows.iter().flatten().copied();
    let (mut min, mut max) = (u32::MAX, 0u32);
    for id in ids {
        min = min.min(id);
        max = max.max(id);
    }
    let one_based = min >= 1 && max as usize == n;
    if one_based {
        for row in &mut rows {
            for id in row.iter_mut() {
                *id -= 1;
            }
        }
    } else if max as usize >= n {
        return Err(FileError::format(
            origin,
            format!("vertex id {max} out of range for {n} vertices"),
        ));
    }
    Graph::from_adjacency(rows).map_err(|e| FileError::format(origin, e))
}

/// Load a graph from either format: GraphFile JSON when the content starts
/// with `{`, plain-text adjacency otherwise.
pub fn load_graph_auto(path: impl AsRef<Path>) -> Result<Graph, FileError> {
    let path = path.as_ref();
    let text = read_file(path)?;
    let origin = path_str(path);
    if text.trim_start().starts_with('{') {
        let file: GraphFile = serde_json::from_str(&text).map_err(|e| FileError::Json {
            path: origin,
            msg: e.to_string(),
        })?;
        file.to_graph_at(&path_str(path))
    } else {
        parse_adjacency_text(&text, &origin)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::CAGE312_ADJ;
    use crate::generators::{gen_cage_3_12, gen_gq_incidence};
    use std::fmt::Write as _;

    #[test]
    fn graph_file_round_trips_with_labels_and_sides() {
        let g = gen_gq_incidence(2).unwrap();
        let file = GraphFile::from_graph(&g).with_meta(GraphMeta {
            family: "gq".to_string(),
            q: Some(2),
            g: Some(8),
        });
        let text = file.to_json_string();
        assert!(text.ends_with('\n'));
        assert_eq!(text, file.to_json_string(), "byte-stable");
        let back = GraphFile::from_json_str(&text).unwrap();
        assert_eq!(back, file);
        let h = back.to_graph().unwrap();
        assert_eq!(h, g);
        assert_eq!(h.labels(), g.labels());
        assert_eq!(h.sides(), g.sides());
    }

    #[test]
    fn graph_file_io_via_tempdir() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("gq2.json");
        let g = gen_gq_incidence(2).unwrap();
        GraphFile::from_graph(&g).write(&path).unwrap();
        let back = GraphFile::read(&path).unwrap().to_graph().unwrap();
        assert_eq!(back, g);
        let auto = load_graph_auto(&path).unwrap();
        assert_eq!(auto, g);
    }

    #[test]
    fn graph_file_rejects_bad_structure() {
        assert!(matches!(
            GraphFile::from_json_str("{\"n\": 2"),
            Err(FileError::Json { .. })
        ));
        // Asymmetric adjacency.
        let file = GraphFile {
            n: 2,
            adj: vec![vec![1], vec![]],
            labels: None,
            side: None,
            meta: None,
        };
        assert!(matches!(file.to_graph(), Err(FileError::Format { .. })));
        // Label count mismatch.
        let file = GraphFile {
            n: 2,
            adj: vec![vec![1], vec![0]],
            labels: Some(vec!["a".to_string()]),
            side: None,
            meta: None,
        };
        assert!(matches!(file.to_graph(), Err(FileError::Format { .. })));
    }

    #[test]
    fn coloring_file_round_trip_and_validation() {
        let g = gen_cage_3_12();
        let c = PackingColoring::for_graph(&g, crate::fixtures::cage312_gamma()).unwrap();
        let file = ColoringFile::from_coloring(&c);
        let text = file.to_json_string();
        assert!(!text.contains("one_based"), "flag omitted when false");
        let back = ColoringFile::from_json_str(&text).unwrap();
        assert_eq!(back.to_coloring(&g).unwrap(), c);

        // Truncated array fails validation, not verification.
        let short = ColoringFile {
            colors: vec![1, 2, 3],
            one_based: false,
        };
        assert!(matches!(
            short.to_coloring(&g),
            Err(FileError::Format { .. })
        ));
        // Color 0 is rejected at the same boundary.
        let zero = ColoringFile {
            colors: vec![0; g.n()],
            one_based: false,
        };
        assert!(matches!(zero.to_coloring(&g), Err(FileError::Format { .. })));
    }

    #[test]
    fn coloring_file_accepts_legacy_flag_spelling() {
        let a = ColoringFile::from_json_str("{\"colors\": [1], \"paper_numbering\": true}")
            .unwrap();
        let b = ColoringFile::from_json_str("{\"colors\": [1], \"one_based\": true}").unwrap();
        assert!(a.one_based && b.one_based);
        assert!(a.to_json_string().contains("one_based"));
    }

    #[test]
    fn adjacency_text_autodetects_base() {
        // The embedded cage rows are 1-based; render them as text.
        let mut text = String::from("# 126-vertex cage\n\n");
        for row in CAGE312_ADJ {
            writeln!(text, "{} {} {}", row[0], row[1], row[2]).unwrap();
        }
        let g = parse_adjacency_text(&text, "<test>").unwrap();
        let expected = gen_cage_3_12();
        assert_eq!(g.adjacency(), expected.adjacency());

        // A 0-based triangle with comments.
        let g = parse_adjacency_text("1 2 # a\n0 2\n0 1\n", "<test>").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);

        // Out-of-range and garbage ids are parse errors.
        assert!(parse_adjacency_text("1 5\n0\n", "<test>").is_err());
        assert!(parse_adjacency_text("1 x\n0\n", "<test>").is_err());
        assert!(parse_adjacency_text("  \n# only comments\n", "<test>").is_err());
    }

    #[test]
    fn load_graph_auto_reads_text_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("cage.adj");
        let mut text = String::new();
        for row in CAGE312_ADJ {
            writeln!(text, "{} {} {}", row[0], row[1], row[2]).unwrap();
        }
        std::fs::write(&path, text).unwrap();
        let g = load_graph_auto(&path).unwrap();
        assert_eq!(g.adjacency(), gen_cage_3_12().adjacency());
        assert!(matches!(
            load_graph_auto(dir.path().join("missing.json")),
            Err(FileError::Io { .. })
        ));
    }
}
