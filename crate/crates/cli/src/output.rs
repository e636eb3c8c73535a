//! Graph document formats and output plumbing.
//!
//! JSON is the canonical interchange form; DOT and the edge list are lossy
//! convenience views derived from the same sorted edge list.

use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::{Path, PathBuf};

use hlnet_core::{CompactGraph, GraphBuilder};

/// Canonical JSON form of a graph: spec string, order, labels, and the
/// edge list with `u < v` sorted lexicographically.
#[derive(Serialize, Deserialize)]
pub struct GraphDoc {
    pub spec: String,
    pub order: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

impl GraphDoc {
    pub fn from_graph(spec: &str, graph: &CompactGraph) -> GraphDoc {
        GraphDoc {
            spec: spec.to_string(),
            order: graph.order(),
            labels: graph.labels().map(<[String]>::to_vec).unwrap_or_default(),
            edges: graph.edges(),
        }
    }

    pub fn into_graph(self) -> hlnet_core::Result<CompactGraph> {
        let mut builder = GraphBuilder::new(self.order)?;
        for (u, v) in self.edges {
            builder.add_edge(u, v)?;
        }
        if self.labels.is_empty() {
            Ok(builder.build())
        } else {
            builder.build_labeled(self.labels)
        }
    }
}

pub fn render_dot(doc: &GraphDoc) -> String {
    let mut out = String::from("graph hlnet {\n");
    for v in 0..doc.order {
        if let Some(label) = doc.labels.get(v) {
            out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
        } else {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in &doc.edges {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

pub fn render_edgelist(doc: &GraphDoc) -> String {
    let mut out = String::new();
    for (u, v) in &doc.edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn render_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

/// Resolves a user-supplied output path against the default output
/// directory from the environment, when the path is relative.
pub fn resolve_path(path: &Path) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var("HLNET_OUT_DIR") {
            if !dir.is_empty() {
                return PathBuf::from(dir).join(path);
            }
        }
    }
    path.to_path_buf()
}

/// Writes to the path (honoring `HLNET_OUT_DIR` for relative paths) or to
/// standard output when no path is given.
pub fn emit(content: &str, output: Option<&Path>) -> std::io::Result<()> {
    match output {
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
        Some(path) => std::fs::write(resolve_path(path), content),
    }
}
