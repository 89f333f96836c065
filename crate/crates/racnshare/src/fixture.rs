//! Topology fixtures: a graph document plus notes on how it was obtained.

use std::path::Path;

use racnshare_core::Graph;
use serde::{Deserialize, Serialize};

use crate::formats::GraphDoc;
use crate::FormatError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub description: String,
    /// The topology is only partly known; missing edges were not invented.
    pub partial_reconstruction: bool,
    pub weights_known: bool,
    /// Longest cycle the dissemination rounds may use.
    #[serde(default)]
    pub max_cycle_len: Option<usize>,
    pub graph: GraphDoc,
}

impl Fixture {
    pub fn load(path: &Path) -> Result<Self, FormatError> {
        let text = std::fs::read_to_string(path).map_err(|e| FormatError::Io(format!("{}: {e}", path.display())))?;
        crate::formats::from_json(&text)
    }

    pub fn graph(&self) -> Result<Graph, FormatError> {
        self.graph.to_graph()
    }
}

/// The bundled dissemination fixture.
pub fn fig1_inferred() -> Fixture {
    serde_json::from_str(include_str!("../fixtures/fig1_inferred.json")).expect("bundled fixture parses")
}

/// Parses `5,7` into vertex ids by display name.
pub fn parse_vertex_list(g: &Graph, list: &str) -> Result<Vec<usize>, FormatError> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| g.find(name).ok_or_else(|| FormatError::Invalid(format!("no participant named {name:?}"))))
        .collect()
}
