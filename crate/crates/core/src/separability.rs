//! Separable vertex sets and separable graphs.
//!
//! A set `W` is separable when some switching of the graph has no edge
//! between `W` and its complement. Sets of size 0, 1, n-1 and n are always
//! separable; a graph is separable when it has any other separable set.
//!
//! Deciding a single set solves the cross-edge system
//! `lab(w) + lab(v) = -w(w, v)` for `w in W`, `v` outside, by propagation.
//! Whole-graph searches first isolate vertex 0, after which a set `W`
//! containing 0 is separable iff every member of `W` sees the complement
//! through a single weight.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{VertexLabeling, WeightedGraph};
use crate::zq;

/// A separable set `W` with a labeling whose switching leaves no edge
/// between `W` and the complement.
///
/// The labeling also encodes the weight classes of the complementary
/// partition: a vertex with label `l` sits in class `-l (mod q)`, and an
/// edge between classes `i` (inside) and `j` (outside) has weight `i + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationCertificate {
    pub set: Vec<usize>,
    pub labels: VertexLabeling,
}

impl SeparationCertificate {
    /// Weight class of vertex `v`.
    pub fn class_of(&self, v: usize) -> u8 {
        zq::neg(self.labels.get(v), self.labels.q() as u8)
    }

    pub fn to_json(&self) -> CertificateJson {
        CertificateJson {
            set: self.set.clone(),
            labels: self.labels.labels().iter().map(|&l| l as u32).collect(),
        }
    }
}

/// Wire form: `{"W": [ints], "labels": [ints]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    #[serde(rename = "W")]
    pub set: Vec<usize>,
    pub labels: Vec<u32>,
}

impl CertificateJson {
    pub fn into_certificate(self, q: u32) -> Result<SeparationCertificate> {
        Ok(SeparationCertificate { set: self.set, labels: VertexLabeling::new(q, self.labels)? })
    }
}

fn normalize_set(g: &WeightedGraph, set: &[usize]) -> Result<Vec<usize>> {
    let mut s = set.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(s)
}

/// Decides whether `set` is separable in `g`, returning a certificate.
pub fn is_separable_set(g: &WeightedGraph, set: &[usize]) -> Result<Option<SeparationCertificate>> {
    let set = normalize_set(g, set)?;
    let n = g.n();
    let q = g.modulus();
    let mut inside = vec![false; n];
    for &v in &set {
        inside[v] = true;
    }
    let outside: Vec<usize> = (0..n).filter(|&v| !inside[v]).collect();
    if set.is_empty() || outside.is_empty() {
        let labels = VertexLabeling::from_raw(q, vec![0; n]);
        return Ok(Some(SeparationCertificate { set, labels }));
    }
    let (w0, v0) = (set[0], outside[0]);
    let mut lab = vec![0u8; n];
    for &v in &outside {
        lab[v] = zq::neg(g.weight(w0, v), q);
    }
    for &w in &set {
        lab[w] = zq::sub(zq::neg(g.weight(w, v0), q), lab[v0], q);
    }
    for &w in &set {
        for &v in &outside {
            if zq::add(g.weight(w, v), zq::add(lab[w], lab[v], q), q) != 0 {
                return Ok(None);
            }
        }
    }
    Ok(Some(SeparationCertificate { set, labels: VertexLabeling::from_raw(q, lab) }))
}

/// Checks that `cert.labels` switches away every edge across `cert.set`.
pub fn verify_certificate(g: &WeightedGraph, cert: &SeparationCertificate) -> bool {
    let n = g.n();
    if cert.labels.len() != n || cert.labels.q() != g.q() || cert.set.iter().any(|&v| v >= n) {
        return false;
    }
    let q = g.modulus();
    let mut inside = vec![false; n];
    for &v in &cert.set {
        inside[v] = true;
    }
    (0..n).filter(|&w| inside[w]).all(|w| {
        (0..n)
            .filter(|&v| !inside[v])
            .all(|v| zq::add(g.weight(w, v), zq::add(cert.labels.get(w), cert.labels.get(v), q), q) == 0)
    })
}

/// Lexicographic k-subsets of `0..m`, reused in place.
pub(crate) struct Combinations {
    idx: Vec<usize>,
    m: usize,
    first: bool,
}

impl Combinations {
    pub(crate) fn new(m: usize, k: usize) -> Self {
        Self { idx: (0..k).collect(), m, first: true }
    }

    pub(crate) fn advance(&mut self) -> Option<&[usize]> {
        let k = self.idx.len();
        if k > self.m {
            return None;
        }
        if self.first {
            self.first = false;
            return Some(&self.idx);
        }
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.idx[i] < self.m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
        None
    }
}

/// Bitmask view of a graph with vertex 0 isolated.
struct IsolatedView {
    n: usize,
    q: usize,
    /// `by_weight[v * q + c]`: vertices joined to `v` by weight `c`
    by_weight: Vec<u64>,
    /// weights of `g` after isolating vertex 0
    iso: WeightedGraph,
    iso_labels: VertexLabeling,
}

impl IsolatedView {
    fn new(g: &WeightedGraph) -> Self {
        assert!(g.n() <= 64, "subset search supports at most 64 vertices");
        let (iso, iso_labels) = g.isolate(0).expect("n >= 1");
        let n = g.n();
        let q = g.q() as usize;
        let mut by_weight = vec![0u64; n * q];
        for v in 0..n {
            for u in 0..n {
                if u != v {
                    by_weight[v * q + iso.weight(v, u) as usize] |= 1 << u;
                }
            }
        }
        Self { n, q, by_weight, iso, iso_labels }
    }

    /// `mask` must contain vertex 0 and miss at least one vertex.
    #[inline]
    fn separable(&self, mask: u64) -> bool {
        let full = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let comp = full & !mask;
        let v0 = comp.trailing_zeros() as usize;
        let mut rest = mask & !1;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let c = self.iso.weight(w, v0) as usize;
            if comp & !self.by_weight[w * self.q + c] != 0 {
                return false;
            }
        }
        true
    }

    fn certificate(&self, set: Vec<usize>) -> SeparationCertificate {
        let q = self.iso.modulus();
        let mut inside = vec![false; self.n];
        for &w in &set {
            inside[w] = true;
        }
        let v0 = (0..self.n).find(|&v| !inside[v]).expect("proper subset");
        let mu: Vec<u8> = (0..self.n)
            .map(|w| if inside[w] { zq::neg(self.iso.weight(w, v0), q) } else { 0 })
            .collect();
        let labels = self.iso_labels.add(&VertexLabeling::from_raw(q, mu)).expect("same shape");
        SeparationCertificate { set, labels }
    }

    /// Visits sets `W` containing 0 with `2 <= |W| <= n-2`, size-ascending
    /// then lexicographic; stops when `f` returns false.
    fn scan(&self, mut f: impl FnMut(&[usize], u64) -> bool) {
        if self.n < 4 {
            return;
        }
        let mut set = Vec::with_capacity(self.n);
        for size in 2..=self.n - 2 {
            let mut combos = Combinations::new(self.n - 1, size - 1);
            while let Some(c) = combos.advance() {
                set.clear();
                set.push(0);
                set.extend(c.iter().map(|&x| x + 1));
                let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
                if !f(&set, mask) {
                    return;
                }
            }
        }
    }
}

/// Every nontrivial separable set containing vertex 0, by size then
/// lexicographically. Complements are implied.
pub fn nontrivial_separable_sets(g: &WeightedGraph) -> Vec<SeparationCertificate> {
    if g.n() < 4 {
        return Vec::new();
    }
    let view = IsolatedView::new(g);
    let mut out = Vec::new();
    view.scan(|set, mask| {
        if view.separable(mask) {
            out.push(view.certificate(set.to_vec()));
        }
        true
    });
    out
}

/// First nontrivial separable set (minimum size, then lexicographic), if any.
/// Graphs on at most 3 vertices have no nontrivial sets and are nonseparable.
pub fn is_separable(g: &WeightedGraph) -> Option<SeparationCertificate> {
    if g.n() < 4 {
        return None;
    }
    let view = IsolatedView::new(g);
    let mut found = None;
    view.scan(|set, mask| {
        if view.separable(mask) {
            found = Some(set.to_vec());
            false
        } else {
            true
        }
    });
    found.map(|s| view.certificate(s))
}

/// Separability verdict without building a certificate.
pub fn separable(g: &WeightedGraph) -> bool {
    if g.n() < 4 {
        return false;
    }
    let view = IsolatedView::new(g);
    let mut hit = false;
    view.scan(|_, mask| {
        hit = view.separable(mask);
        !hit
    });
    hit
}

/// Nonseparable, yet every vertex-deleted subgraph is separable.
pub fn is_critical(g: &WeightedGraph) -> bool {
    !separable(g) && (0..g.n()).all(|v| separable(&g.delete_vertex(v).expect("in range")))
}

/// Number of vertices whose deletion leaves a nonseparable graph.
pub fn nonseparable_subgraph_count(g: &WeightedGraph) -> usize {
    (0..g.n()).filter(|&v| !separable(&g.delete_vertex(v).expect("in range"))).count()
}
