use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{PosetGraph, VertexId};

/// Machine-readable graph: `{n, relation, vertices: [words], edges: [[i, j]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub relation: String,
    pub vertices: Vec<String>,
    pub edges: Vec<[VertexId; 2]>,
}

pub fn to_json(g: &PosetGraph) -> GraphJson {
    GraphJson {
        n: g.n(),
        relation: g.relation().to_string(),
        vertices: g.vertices().iter().map(|p| p.to_string()).collect(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    }
}

/// Graphviz rendering. Edges of `g` are solid; edges of `overlay` (built on
/// the same semilength) that are not in `g` are drawn dashed red. Each node
/// carries `rank` = its longest-chain distance from the bottom of `g`.
pub fn to_dot(g: &PosetGraph, overlay: Option<&PosetGraph>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}_n{}\" {{", g.relation(), g.n());
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=box, fontname=\"monospace\"];");
    for (i, p) in g.vertices().iter().enumerate() {
        let label = if p.is_empty() { "ε".to_string() } else { p.to_string() };
        let _ = writeln!(out, "  v{i} [label=\"{label}\", rank={}];", g.rank(i as VertexId));
    }
    let own: HashSet<(VertexId, VertexId)> = g.edges().collect();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  v{u} -> v{v} [style=solid];");
    }
    if let Some(other) = overlay {
        assert_eq!(other.vertices(), g.vertices(), "overlay must share the vertex table");
        for (u, v) in other.edges().filter(|e| !own.contains(e)) {
            let _ = writeln!(out, "  v{u} -> v{v} [style=dashed, color=red];");
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::covering::CoveringRelation;
    use crate::poset::build_hasse;

    #[test]
    fn dot_for_s4_with_tamari_overlay() {
        let g = build_hasse(4, CoveringRelation::Restricted).unwrap();
        let t = build_hasse(4, CoveringRelation::Tamari).unwrap();
        let dot = to_dot(&g, Some(&t));
        assert_eq!(dot.matches("[label=").count(), 14);
        assert_eq!(dot.matches("style=solid").count(), 20);
        assert_eq!(dot.matches("style=dashed").count(), 1);
        assert!(dot.contains("label=\"UUUUDDDD\""));
    }

    #[test]
    fn json_round_trip() {
        let g = build_hasse(3, CoveringRelation::Restricted).unwrap();
        let j = to_json(&g);
        assert_eq!(j.vertices.len(), 5);
        assert_eq!(j.edges.len(), 5);
        let text = serde_json::to_string(&j).unwrap();
        let back: GraphJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        assert_eq!(j.relation, "restricted");
    }
}
