//! JSON interchange for embeddings.

use serde::{Deserialize, Serialize};

use crate::embed::{BookEmbedding, Layout, Method, Route, PALETTE};
use crate::graph::{CirculantSpec, Edge};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DocEdge {
    pub u: usize,
    pub v: usize,
    pub page: usize,
}

/// Serialized form of a [`BookEmbedding`]. Field order is the key order of
/// the emitted JSON; edges are listed in canonical `(u, v)` order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDocument {
    pub n: usize,
    pub jumps: Vec<usize>,
    pub route: Route,
    pub method: Method,
    pub order: Vec<usize>,
    pub pages: usize,
    pub edges: Vec<DocEdge>,
    pub palette: Vec<String>,
}

impl EmbeddingDocument {
    pub fn new(spec: &CirculantSpec, emb: &BookEmbedding) -> Self {
        let mut edges: Vec<DocEdge> = emb
            .assignment
            .iter()
            .map(|&(e, page)| DocEdge {
                u: e.u,
                v: e.v,
                page,
            })
            .collect();
        edges.sort_unstable_by_key(|e| (e.u, e.v));
        EmbeddingDocument {
            n: spec.n(),
            jumps: spec.jumps().to_vec(),
            route: emb.route,
            method: emb.method,
            order: emb.layout.order().to_vec(),
            pages: emb.pages,
            edges,
            palette: PALETTE
                .iter()
                .take(emb.pages.max(1))
                .map(|s| s.to_string())
                .collect(),
        }
    }

    pub fn spec(&self) -> Result<CirculantSpec> {
        CirculantSpec::build(self.n, &self.jumps)
    }

    pub fn embedding(&self) -> BookEmbedding {
        BookEmbedding {
            method: self.method,
            ..BookEmbedding::new(
                Layout::new(self.order.clone()),
                self.pages,
                self.edges
                    .iter()
                    .map(|e| (Edge::new(e.u, e.v), e.page))
                    .collect(),
                self.route,
            )
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::PreconditionViolated(format!("bad embedding document: {e}")))
    }
}
