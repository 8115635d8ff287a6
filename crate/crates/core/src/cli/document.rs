use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::graph::{complete_graph, Edge, LabeledGraph, Path, PathDecomposition, Vertex};
use crate::removal::RemovalRecord;

/// On-disk form of a decomposition of `K_n` minus `removed_edges`.
///
/// Emitted documents are normalized: removed edges smaller-first and sorted,
/// paths orientation-normalized and sorted. Parsing and re-serializing a
/// normalized document reproduces it byte for byte.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDocument {
    pub n: usize,
    #[serde(default)]
    pub removed_edges: Vec<[Vertex; 2]>,
    pub paths: Vec<Vec<Vertex>>,
    #[serde(default)]
    pub metadata: BTreeMap<String, Value>,
}

impl DecompositionDocument {
    pub fn from_decomposition(d: &PathDecomposition) -> DecompositionDocument {
        let host = d.host();
        let removed_edges = complete_graph(d.n())
            .map(|k| {
                k.edges()
                    .iter()
                    .filter(|e| !host.contains(**e))
                    .map(|e| [e.lo(), e.hi()])
                    .collect()
            })
            .unwrap_or_default();
        DecompositionDocument {
            n: d.n(),
            removed_edges,
            paths: d
                .sorted_paths()
                .into_iter()
                .map(Path::into_vertices)
                .collect(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn with_metadata(mut self, key: &str, value: Value) -> DecompositionDocument {
        self.metadata.insert(key.to_string(), value);
        self
    }

    /// Sorts and orients fields the way emitted documents have them.
    pub fn normalize(&mut self) {
        for pair in &mut self.removed_edges {
            pair.sort_unstable();
        }
        self.removed_edges.sort_unstable();
        self.removed_edges.dedup();
        for p in &mut self.paths {
            crate::graph::normalize_orientation(p);
        }
        self.paths.sort();
    }

    /// The host graph `K_n` minus the removed edges.
    pub fn host(&self) -> Result<LabeledGraph> {
        let removed = self
            .removed_edges
            .iter()
            .map(|&[a, b]| checked_edge(a, b, self.n))
            .collect::<Result<BTreeSet<Edge>>>()?;
        complete_graph(self.n).map(|k| k.without_edges(removed.iter()))
    }

    /// The decomposition described by the document. Paths are taken as
    /// given; whether they decompose the host is up to the verifier.
    pub fn decomposition(&self) -> Result<PathDecomposition> {
        let host = self.host()?;
        let paths = self
            .paths
            .iter()
            .enumerate()
            .map(|(i, p)| {
                Path::new(p.clone()).map_err(|e| Error::InvalidPath(format!("path {i}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PathDecomposition::new(host, paths))
    }

    /// Indented JSON with fields in schema order and vertex lists on one
    /// line, ending in a newline.
    pub fn to_json(&self) -> String {
        let metadata = Value::Object(self.metadata.clone().into_iter().collect());
        let entries = [
            ("n", Value::from(self.n)),
            (
                "removed_edges",
                serde_json::to_value(&self.removed_edges).expect("integers"),
            ),
            (
                "paths",
                serde_json::to_value(&self.paths).expect("integers"),
            ),
            ("metadata", metadata),
        ];
        let mut out = String::new();
        write_object(&mut out, entries.iter().map(|(k, v)| (*k, v)), 0);
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<DecompositionDocument> {
        serde_json::from_str(text)
    }
}

pub(crate) fn checked_edge(a: Vertex, b: Vertex, n: usize) -> Result<Edge> {
    for v in [a, b] {
        if v == 0 || v > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    Edge::try_new(a, b)
}

pub(crate) fn edge_pairs<'a>(edges: impl IntoIterator<Item = &'a Edge>) -> Value {
    Value::Array(
        edges
            .into_iter()
            .map(|e| Value::from(vec![e.lo(), e.hi()]))
            .collect(),
    )
}

/// Semantic fields of a removal, for document metadata.
pub(crate) fn removal_metadata(record: &RemovalRecord) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("kind".into(), Value::from(record.kind.as_str()));
    if let Some(c) = record.center {
        m.insert("center".into(), Value::from(c));
    }
    if let Some(len) = record.cycle_length {
        m.insert("cycle_length".into(), Value::from(len));
        m.insert("cycle".into(), Value::from(record.cycle.clone()));
    }
    if let Some(t) = record.tail {
        m.insert("tail".into(), Value::from(vec![t.lo(), t.hi()]));
    }
    m.insert("edge_count".into(), Value::from(record.removed_edges.len()));
    Value::Object(m)
}

/// Like [`DecompositionDocument::to_json`] for arbitrary values; object keys
/// come out sorted.
pub fn to_pretty_json(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out.push('\n');
    out
}

fn write_value(out: &mut String, value: &Value, indent: usize) {
    match value {
        Value::Array(items) if items.iter().any(|v| v.is_array() || v.is_object()) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                push_indent(out, indent + 1);
                write_value(out, item, indent + 1);
            }
            out.push('\n');
            push_indent(out, indent);
            out.push(']');
        }
        Value::Array(items) => {
            out.push('[');
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push_str(", ");
                }
                out.push_str(&item.to_string());
            }
            out.push(']');
        }
        Value::Object(map) => write_object(out, map.iter().map(|(k, v)| (k.as_str(), v)), indent),
        scalar => out.push_str(&scalar.to_string()),
    }
}

fn write_object<'a>(
    out: &mut String,
    entries: impl Iterator<Item = (&'a str, &'a Value)>,
    indent: usize,
) {
    out.push('{');
    let mut empty = true;
    for (i, (key, value)) in entries.enumerate() {
        empty = false;
        out.push_str(if i == 0 { "\n" } else { ",\n" });
        push_indent(out, indent + 1);
        out.push_str(&Value::from(key).to_string());
        out.push_str(": ");
        write_value(out, value, indent + 1);
    }
    if !empty {
        out.push('\n');
        push_indent(out, indent);
    }
    out.push('}');
}

fn push_indent(out: &mut String, indent: usize) {
    for _ in 0..indent {
        out.push_str("  ");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::construct;

    #[test]
    fn json_layout() {
        let doc = DecompositionDocument::from_decomposition(&construct(3).unwrap());
        assert_eq!(
            doc.to_json(),
            "{\n  \"n\": 3,\n  \"removed_edges\": [],\n  \"paths\": [\n    [1, 2],\n    [1, 3, 2]\n  ],\n  \"metadata\": {}\n}\n"
        );
        let back = DecompositionDocument::from_json(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn normalize_sorts_and_orients() {
        let mut doc = DecompositionDocument {
            n: 4,
            removed_edges: vec![[4, 1], [2, 3], [1, 4]],
            paths: vec![vec![3, 2, 1], vec![4, 2]],
            metadata: BTreeMap::new(),
        };
        doc.normalize();
        assert_eq!(doc.removed_edges, vec![[1, 4], [2, 3]]);
        assert_eq!(doc.paths, vec![vec![1, 2, 3], vec![2, 4]]);
    }
}
