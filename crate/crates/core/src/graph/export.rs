use std::fmt::Write;
use std::str::FromStr;

use serde::Serialize;

use super::GraphView;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dot" => Ok(ExportFormat::Dot),
            "json" => Ok(ExportFormat::Json),
            other => Err(Error::Unsupported(format!("export format `{other}`"))),
        }
    }
}

/// Serializable form of a graph; edges index into `vertices` with `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isolated: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_view(view: &(impl GraphView + ?Sized)) -> GraphDocument {
        let vertices = view.vertices();
        let position: std::collections::HashMap<usize, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            let mut nb: Vec<usize> = view
                .neighbors(v)
                .into_iter()
                .filter_map(|u| position.get(&u).copied())
                .filter(|&j| j > i)
                .collect();
            nb.sort_unstable();
            edges.extend(nb.into_iter().map(|j| [i, j]));
        }
        GraphDocument {
            group: view.name(),
            vertices: vertices.iter().map(|&v| view.label(v)).collect(),
            edges,
            isolated: view
                .excluded()
                .map(|ex| ex.into_iter().map(|v| view.label(v)).collect()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph documents serialize")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let name = self.group.as_deref().unwrap_or("G");
        let _ = writeln!(out, "graph \"{}\" {{", escape(name));
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{}\"];", escape(v));
        }
        for [i, j] in &self.edges {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renders a view as DOT or JSON.
pub fn export(view: &(impl GraphView + ?Sized), format: ExportFormat) -> String {
    let doc = GraphDocument::from_view(view);
    match format {
        ExportFormat::Dot => doc.to_dot(),
        ExportFormat::Json => doc.to_json(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{GenGraph, ListGraph};
    use crate::test_support::group;

    #[test]
    fn empty_graph_json() {
        let g = ListGraph::new(0, &[]);
        assert_eq!(export(&g, ExportFormat::Json), r#"{"vertices":[],"edges":[]}"#);
    }

    #[test]
    fn s4_dot_export() {
        let g = group("Sym(4)");
        let gen = GenGraph::new(&g).unwrap();
        let dot = export(&gen, ExportFormat::Dot);
        assert!(dot.starts_with("graph \"Sym(4)\" {"));
        assert_eq!(dot.matches("[label=").count(), 20);
        assert!(dot.contains("[label=\"(1234)\"]"));
        assert!(!dot.contains("->"));
        assert_eq!(dot.matches(" -- ").count(), gen.edge_count());
    }

    #[test]
    fn sl2_4_json_export() {
        let g = group("SL2(4)");
        let gen = GenGraph::new(&g).unwrap();
        let doc = GraphDocument::from_view(&gen);
        assert_eq!(doc.vertices.len(), 59);
        assert_eq!(doc.edges.len(), 1140);
        assert!(doc.edges.iter().all(|[i, j]| i < j));
        assert_eq!(doc.isolated.as_ref().map(Vec::len), Some(1));
        let v: serde_json::Value = serde_json::from_str(&doc.to_json()).unwrap();
        assert_eq!(v["group"], "SL2(4)");
        assert_eq!(v["edges"].as_array().unwrap().len(), 1140);
    }

    #[test]
    fn export_is_deterministic() {
        let g = group("KleinCp3(3)");
        let a = export(&GenGraph::new(&g).unwrap(), ExportFormat::Json);
        let b = export(&GenGraph::new(&g).unwrap(), ExportFormat::Json);
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_format() {
        assert!("graphml".parse::<ExportFormat>().is_err());
        assert_eq!("DOT".parse::<ExportFormat>().unwrap(), ExportFormat::Dot);
    }
}
