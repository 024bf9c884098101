//! Graph views: generating graphs, swap graphs, and the shared BFS and
//! export machinery.

mod export;
mod gen;
mod metrics;
mod swap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

pub use export::{export, ExportFormat, GraphDocument};
pub use gen::{adjacent, degree, neighborhood, non_isolated, GenGraph, Neighborhood};
pub use metrics::{bfs_distances, graph_metrics, ComponentMap, GraphMetrics};
pub use swap::{swap_graph, SwapCheck, SwapGraph};

/// Where a graph view comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    GeneratingGraph,
    SwapGraph,
    ProductGraph,
    Synthetic,
}

/// An undirected simple graph over a vertex domain `0..domain_size()`, only
/// part of which may be vertices.
pub trait GraphView: Sync {
    fn domain_size(&self) -> usize;

    fn is_vertex(&self, v: usize) -> bool {
        v < self.domain_size()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool;

    fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.domain_size())
            .filter(|&u| self.is_vertex(u) && self.adjacent(v, u))
            .collect()
    }

    /// A vertex adjacent to both ends of the edge `u -- v`.
    fn triangle_apex(&self, u: usize, v: usize) -> Option<usize> {
        self.neighbors(u)
            .into_iter()
            .find(|&w| w != v && self.adjacent(v, w))
    }

    /// Neighbours as a bitset over the domain, when materialized.
    fn neighbor_bits(&self, _v: usize) -> Option<&FixedBitSet> {
        None
    }

    fn label(&self, v: usize) -> String {
        v.to_string()
    }

    fn provenance(&self) -> Provenance;

    /// A representative of the orbit of `v` under some graph automorphism
    /// group; vertices sharing a representative have equal eccentricity.
    fn symmetry_rep(&self, v: usize) -> usize {
        v
    }

    /// Name recorded in exports.
    fn name(&self) -> Option<String> {
        None
    }

    /// Domain points that are not vertices, listed in exports.
    fn excluded(&self) -> Option<Vec<usize>> {
        None
    }

    fn vertices(&self) -> Vec<usize> {
        (0..self.domain_size()).filter(|&v| self.is_vertex(v)).collect()
    }
}

/// A graph given by explicit adjacency lists.
#[derive(Debug, Clone)]
pub struct ListGraph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl ListGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> ListGraph {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u != v && !adj[u].contains(&v) {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        ListGraph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> ListGraph {
        self.labels = Some(labels);
        self
    }
}

impl GraphView for ListGraph {
    fn domain_size(&self) -> usize {
        self.adj.len()
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    fn neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v].clone()
    }

    fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    fn provenance(&self) -> Provenance {
        Provenance::Synthetic
    }
}
