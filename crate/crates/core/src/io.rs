//! Canonical JSON documents for hypergraphs.
//!
//! ```json
//! {"r":3,"vertex_count":4,"edges":[[0,1,2],[0,1,3]],"classes":[[0,1],[2,3]],"provenance":["..."]}
//! ```
//!
//! `classes` is present only for sigma-hypergraphs. Writers always emit edges
//! in canonical order, so saving the same hypergraph is byte-for-byte stable.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::constructors::SigmaMeta;
use crate::hypergraph::Hypergraph;
use crate::partitions::Partition;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: line {line}, column {column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{path}: field `{field}`: {message}")]
    Invalid {
        path: String,
        field: String,
        message: String,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    r: usize,
    vertex_count: usize,
    edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    classes: Option<Vec<Vec<usize>>>,
    #[serde(default)]
    provenance: Vec<String>,
}

/// A hypergraph together with its sigma class structure, when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loaded {
    pub hypergraph: Hypergraph,
    pub sigma: Option<SigmaMeta>,
}

/// Serializes to the canonical one-line JSON form (with trailing newline).
pub fn to_json(h: &Hypergraph, meta: Option<&SigmaMeta>) -> String {
    let doc = Document {
        r: h.r(),
        vertex_count: h.vertex_count(),
        edges: h.edges().to_vec(),
        classes: meta.map(|m| m.classes.clone()),
        provenance: h.provenance().to_vec(),
    };
    let mut out = serde_json::to_string(&doc).expect("document serialization is infallible");
    out.push('\n');
    out
}

/// Parses a JSON document; `origin` names the source in diagnostics.
pub fn from_json(text: &str, origin: &str) -> Result<Loaded, IoError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| IoError::Parse {
        path: origin.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let invalid = |field: String, message: String| IoError::Invalid {
        path: origin.to_string(),
        field,
        message,
    };
    let h = Hypergraph::new(doc.r, doc.vertex_count, doc.edges).map_err(|e| {
        let field = match &e {
            crate::hypergraph::HypergraphError::UniformityTooSmall(_) => "r".to_string(),
            crate::hypergraph::HypergraphError::NonUniformEdge { index, .. }
            | crate::hypergraph::HypergraphError::VertexOutOfRange { index, .. }
            | crate::hypergraph::HypergraphError::DuplicateVertexInEdge { index, .. } => {
                format!("edges[{index}]")
            }
        };
        invalid(field, e.to_string())
    })?;
    let mut h = h;
    h.set_provenance(doc.provenance);
    let sigma = match doc.classes {
        None => None,
        Some(classes) => Some(restore_sigma(&h, classes).map_err(|m| invalid("classes".into(), m))?),
    };
    Ok(Loaded { hypergraph: h, sigma })
}

fn restore_sigma(h: &Hypergraph, classes: Vec<Vec<usize>>) -> Result<SigmaMeta, String> {
    let n = classes.len();
    let q = classes.first().map_or(0, Vec::len);
    if n == 0 || q == 0 || n * q != h.vertex_count() {
        return Err(format!(
            "expected non-empty classes covering {} vertices",
            h.vertex_count()
        ));
    }
    let expected = SigmaMeta::new(n, q, Partition::from_parts(vec![1]));
    if classes != expected.classes {
        return Err("classes must be consecutive blocks of equal size".into());
    }
    let sigma = match h.edges().first() {
        Some(e) => expected.pattern(e).expect("edges are non-empty"),
        None => sigma_from_provenance(h).ok_or("edgeless hypergraph without a sigma provenance record")?,
    };
    let meta = SigmaMeta::new(n, q, sigma);
    if let Some(bad) = h.edges().iter().find(|e| meta.pattern(e).as_ref() != Some(&meta.sigma)) {
        return Err(format!("edge {bad:?} does not follow the class pattern {}", meta.sigma));
    }
    Ok(meta)
}

fn sigma_from_provenance(h: &Hypergraph) -> Option<Partition> {
    h.provenance().iter().find_map(|rec| {
        let rest = rec.strip_prefix("sigma ")?;
        let value = rest.split_whitespace().find_map(|kv| kv.strip_prefix("sigma="))?;
        Partition::parse_csv(value).ok()
    })
}

pub fn save(path: impl AsRef<Path>, h: &Hypergraph, meta: Option<&SigmaMeta>) -> Result<(), IoError> {
    let path = path.as_ref();
    fs::write(path, to_json(h, meta)).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load(path: impl AsRef<Path>) -> Result<Loaded, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    from_json(&text, &path.display().to_string())
}
