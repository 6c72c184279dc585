//! Switching isomorphism: is some vertex relabeling of `G` switching
//! equivalent to `H`?
//!
//! Backtracking over permutations. Candidates are pruned by a per-vertex
//! invariant that is constant on switching classes, and every partial map is
//! checked for additivity of the difference `H - pi(G)` restricted to the
//! vertices mapped so far. Intended for `n <= 11`; larger inputs are accepted
//! but may be slow.

use crate::error::{Error, Result};
use crate::graph::{VertexLabeling, WeightedGraph};
use crate::zq;

/// `switch(g.permute(permutation), labeling) == h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoWitness {
    pub permutation: Vec<usize>,
    pub labeling: VertexLabeling,
}

/// Invariant of vertex `v`: isolate `v`, take every other vertex's weight
/// histogram toward the remaining vertices, sort, and minimize over the
/// residual global shifts of the isolated graph.
pub fn vertex_invariant(g: &WeightedGraph, v: usize) -> Vec<u16> {
    let q = g.modulus();
    let n = g.n();
    let (iso, _) = g.isolate(v).expect("vertex in range");
    let qs = q as usize;
    let mut hists: Vec<Vec<u16>> = (0..n)
        .filter(|&u| u != v)
        .map(|u| {
            let mut h = vec![0u16; qs];
            for x in (0..n).filter(|&x| x != v && x != u) {
                h[iso.weight(u, x) as usize] += 1;
            }
            h
        })
        .collect();
    let mut best: Option<Vec<u16>> = None;
    for t in 0..q {
        let d = zq::add(t, t, q) as usize;
        let mut shifted: Vec<Vec<u16>> = hists
            .iter()
            .map(|h| (0..qs).map(|c| h[(c + qs - d) % qs]).collect())
            .collect();
        shifted.sort_unstable();
        let flat: Vec<u16> = shifted.concat();
        if best.as_ref().is_none_or(|b| flat < *b) {
            best = Some(flat);
        }
    }
    hists.clear();
    best.unwrap_or_default()
}

/// Searches for `(pi, lab)` with `switch(pi(g), lab) == h`.
pub fn switching_isomorphic(g: &WeightedGraph, h: &WeightedGraph) -> Result<Option<IsoWitness>> {
    if g.q() != h.q() || g.n() != h.n() {
        return Err(Error::Mismatch(format!(
            "graphs (q={}, n={}) and (q={}, n={})",
            g.q(),
            g.n(),
            h.q(),
            h.n()
        )));
    }
    let n = g.n();
    let gi: Vec<Vec<u16>> = (0..n).map(|v| vertex_invariant(g, v)).collect();
    let hi: Vec<Vec<u16>> = (0..n).map(|v| vertex_invariant(h, v)).collect();
    let mut gs = gi.clone();
    let mut hs = hi.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return Ok(None);
    }
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|v| (0..n).filter(|&u| hi[u] == gi[v]).collect()).collect();
    let mut search = Search { g, h, candidates, image: Vec::with_capacity(n), used: vec![false; n], c: None };
    if !search.extend() {
        return Ok(None);
    }
    let permutation = search.image;
    let labeling = g
        .permute(&permutation)?
        .switching_equivalent(h)?
        .expect("search only completes on additive differences");
    Ok(Some(IsoWitness { permutation, labeling }))
}

struct Search<'a> {
    g: &'a WeightedGraph,
    h: &'a WeightedGraph,
    candidates: Vec<Vec<usize>>,
    /// image[v] = pi(v) for the vertices of g mapped so far (a prefix)
    image: Vec<usize>,
    used: Vec<bool>,
    /// the pair constant of the partial difference once three vertices are mapped
    c: Option<u8>,
}

impl Search<'_> {
    /// D(i, j) = H(pi i, pi j) - G(i, j) over mapped g-vertices i, j.
    fn diff(&self, i: usize, j: usize) -> u8 {
        zq::sub(self.h.weight(self.image[i], self.image[j]), self.g.weight(i, j), self.g.modulus())
    }

    fn consistent(&mut self) -> bool {
        let k = self.image.len() - 1;
        if k < 2 {
            return true;
        }
        let q = self.g.modulus();
        let pair = |s: &Self, u: usize| zq::sub(zq::add(s.diff(0, u), s.diff(0, k), q), s.diff(u, k), q);
        let c = match self.c {
            Some(c) => c,
            None => {
                let c = pair(self, 1);
                if zq::halve(c, q).is_none() {
                    return false;
                }
                c
            }
        };
        if (1..k).all(|u| pair(self, u) == c) {
            self.c = Some(c);
            true
        } else {
            false
        }
    }

    fn extend(&mut self) -> bool {
        let v = self.image.len();
        if v == self.g.n() {
            return true;
        }
        let saved_c = self.c;
        for idx in 0..self.candidates[v].len() {
            let u = self.candidates[v][idx];
            if self.used[u] {
                continue;
            }
            self.used[u] = true;
            self.image.push(u);
            if self.consistent() && self.extend() {
                return true;
            }
            self.image.pop();
            self.used[u] = false;
            self.c = saved_c;
        }
        false
    }
}
