//! The exceptional critical family for even `q` and odd `n`.
//!
//! Vertices are `a_0, a_1..a_k, b_1..b_k` with `k = (n-1)/2`, stored at
//! indices `0, 1..k, k+1..2k`. `a_0` is isolated; `a`-`a` and `b`-`b` edges
//! weigh `gamma`; the edge `a_l b_m` weighs `gamma` when `l < m` and
//! `gamma + q/2` otherwise.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::separability::{is_separable_set, separable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: usize,
    pub q: u32,
    pub gamma: u32,
}

impl FamilyParams {
    pub fn new(n: usize, q: u32, gamma: u32) -> Result<Self> {
        let p = Self { n, q, gamma };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        if self.n < 5 || self.n.is_multiple_of(2) {
            return Err(Error::FamilyParams(format!("n = {} must be odd and at least 5", self.n)));
        }
        if self.q % 2 == 1 || self.q < 2 || self.q > crate::graph::MAX_MODULUS {
            return Err(Error::FamilyParams(format!("q = {} must be even and at most 254", self.q)));
        }
        if self.gamma >= self.q {
            return Err(Error::FamilyParams(format!("gamma = {} must be below q = {}", self.gamma, self.q)));
        }
        Ok(())
    }

    pub fn k(&self) -> usize {
        (self.n - 1) / 2
    }

    pub fn a(&self, l: usize) -> usize {
        l
    }

    pub fn b(&self, m: usize) -> usize {
        self.k() + m
    }

    /// Display name of a vertex index, e.g. `a0` or `b2`.
    pub fn name(&self, v: usize) -> String {
        if v <= self.k() {
            format!("a{v}")
        } else {
            format!("b{}", v - self.k())
        }
    }
}

pub fn make_family(p: FamilyParams) -> Result<WeightedGraph> {
    p.validate()?;
    let k = p.k();
    let (g, h) = (p.gamma, (p.gamma + p.q / 2) % p.q);
    let mut edges = Vec::new();
    for u in 1..p.n {
        for v in u + 1..p.n {
            let w = match (u <= k, v <= k) {
                (true, false) => {
                    let (l, m) = (u, v - k);
                    if l < m {
                        g
                    } else {
                        h
                    }
                }
                _ => g,
            };
            edges.push((u, v, w));
        }
    }
    WeightedGraph::new(p.q, p.n, &edges)
}

/// A pair claimed separable after deleting one vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedWitness {
    pub deleted: String,
    pub pair: [String; 2],
    pub separable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub n: usize,
    pub q: u32,
    pub gamma: u32,
    pub separable: bool,
    /// separability of the graph with vertex `v` deleted, by `v`
    pub subgraph_separable: Vec<bool>,
    pub witnesses: Vec<NamedWitness>,
    pub critical: bool,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.critical && self.witnesses.iter().all(|w| w.separable)
    }
}

fn witness(p: &FamilyParams, g: &WeightedGraph, deleted: usize, x: usize, y: usize) -> NamedWitness {
    let sub = g.delete_vertex(deleted).expect("in range");
    let shift = |v: usize| if v > deleted { v - 1 } else { v };
    let ok = is_separable_set(&sub, &[shift(x), shift(y)]).expect("in range").is_some();
    NamedWitness { deleted: p.name(deleted), pair: [p.name(x), p.name(y)], separable: ok }
}

/// Checks that the family graph is nonseparable, that every vertex-deleted
/// subgraph is separable, and that each explicitly named separating pair
/// really separates.
pub fn verify_family_critical(p: FamilyParams) -> Result<FamilyReport> {
    let g = make_family(p)?;
    let k = p.k();
    let is_sep = separable(&g);
    let subgraph_separable: Vec<bool> = (0..p.n).map(|v| separable(&g.delete_vertex(v).expect("in range"))).collect();
    let mut witnesses = vec![witness(&p, &g, p.a(0), p.a(k), p.b(1))];
    for i in 1..k {
        witnesses.push(witness(&p, &g, p.a(i), p.b(i), p.b(i + 1)));
    }
    witnesses.push(witness(&p, &g, p.a(k), p.b(k), p.a(0)));
    for i in 1..=k {
        witnesses.push(witness(&p, &g, p.b(i), p.a(i - 1), p.a(i)));
    }
    let critical = !is_sep && subgraph_separable.iter().all(|&s| s);
    Ok(FamilyReport { n: p.n, q: p.q, gamma: p.gamma, separable: is_sep, subgraph_separable, witnesses, critical })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn heavy(g: &WeightedGraph) -> Vec<(usize, usize)> {
        g.edges().into_iter().filter(|e| e.2 == 1).map(|e| (e.0, e.1)).collect()
    }

    #[test]
    fn smallest_members() {
        let g0 = make_family(FamilyParams::new(5, 2, 0).unwrap()).unwrap();
        assert_eq!(heavy(&g0), vec![(1, 3), (2, 3), (2, 4)]);
        assert_eq!(g0.edges().len(), 3);
        let g1 = make_family(FamilyParams::new(5, 2, 1).unwrap()).unwrap();
        assert_eq!(heavy(&g1), vec![(1, 2), (1, 4), (3, 4)]);
    }

    #[test]
    fn q4_weights() {
        let g = make_family(FamilyParams::new(5, 4, 1).unwrap()).unwrap();
        assert_eq!(g.weight(1, 2), 1);
        assert_eq!(g.weight(3, 4), 1);
        assert_eq!(g.weight(1, 4), 1);
        assert_eq!(g.weight(1, 3), 3);
        assert_eq!(g.weight(2, 3), 3);
        assert_eq!(g.weight(2, 4), 3);
        assert!(g.row(0).iter().all(|&w| w == 0));
    }

    #[test]
    fn rejects_bad_params() {
        assert!(FamilyParams::new(6, 2, 0).is_err());
        assert!(FamilyParams::new(3, 2, 0).is_err());
        assert!(FamilyParams::new(5, 3, 0).is_err());
        assert!(FamilyParams::new(5, 2, 2).is_err());
    }

    #[test]
    fn members_are_critical() {
        for (n, q, gamma) in [(5, 2, 0), (7, 4, 2), (9, 6, 0)] {
            let r = verify_family_critical(FamilyParams::new(n, q, gamma).unwrap()).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.witnesses.len(), n);
        }
    }
}
