//! Wire formats shared by the CLI and the examples.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;

/// `{"q": int, "n": int, "edges": [[u, v, w], ...]}`; omitted pairs weigh 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub q: u32,
    pub n: usize,
    pub edges: Vec<[u32; 3]>,
}

impl From<&WeightedGraph> for GraphJson {
    fn from(g: &WeightedGraph) -> Self {
        let edges = g.edges().into_iter().map(|(u, v, w)| [u as u32, v as u32, w as u32]).collect();
        Self { q: g.q(), n: g.n(), edges }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<WeightedGraph> {
        let edges: Vec<(usize, usize, u32)> = self.edges.iter().map(|e| (e[0] as usize, e[1] as usize, e[2])).collect();
        WeightedGraph::new(self.q, self.n, &edges)
    }
}

pub fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Invalid(e.to_string()))
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_round_trip() {
        let g = WeightedGraph::new(3, 4, &[(0, 2, 1), (1, 3, 2)]).unwrap();
        let j = GraphJson::from(&g);
        let back: GraphJson = parse(&to_string(&j)).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
        assert!(parse::<GraphJson>("{\"q\":2}").is_err());
        let bad = GraphJson { q: 2, n: 3, edges: vec![[0, 0, 1]] };
        assert!(bad.to_graph().is_err());
    }
}
