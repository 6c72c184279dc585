//! Edge-weighted graphs over `Z_q` and their switching algebra.
//!
//! A [`WeightedGraph`] is a symmetric `n x n` matrix of residues mod `q` with
//! a zero diagonal; weight 0 means "no edge". Adding an additive graph (one
//! whose weights are pairwise sums of vertex labels) is a *switching*, and
//! graphs related by a switching form a switching class.

use std::fmt;

use crate::error::{Error, Result};
use crate::zq;

/// Largest supported modulus; weights are stored as bytes.
pub const MAX_MODULUS: u32 = 255;

fn check_modulus(q: u32) -> Result<u8> {
    if (2..=MAX_MODULUS).contains(&q) {
        Ok(q as u8)
    } else {
        Err(Error::Modulus(q))
    }
}

/// A map `V -> Z_q`. Generates an additive graph and doubles as the
/// labeling part of a separation certificate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexLabeling {
    q: u8,
    labels: Vec<u8>,
}

impl VertexLabeling {
    pub fn new(q: u32, labels: Vec<u32>) -> Result<Self> {
        let qq = check_modulus(q)?;
        let labels = labels
            .into_iter()
            .map(|l| {
                if l < q {
                    Ok(l as u8)
                } else {
                    Err(Error::WeightOutOfRange { weight: l, q })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { q: qq, labels })
    }

    pub(crate) fn from_raw(q: u8, labels: Vec<u8>) -> Self {
        debug_assert!(labels.iter().all(|&l| l < q));
        Self { q, labels }
    }

    pub fn zero(q: u32, n: usize) -> Result<Self> {
        Ok(Self::from_raw(check_modulus(q)?, vec![0; n]))
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn get(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn is_zero(&self) -> bool {
        self.labels.iter().all(|&l| l == 0)
    }

    /// Entrywise sum; composing two switchings adds their labelings.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.q != other.q || self.len() != other.len() {
            return Err(Error::Mismatch(format!(
                "labelings (q={}, n={}) and (q={}, n={})",
                self.q,
                self.len(),
                other.q,
                other.len()
            )));
        }
        let labels = self
            .labels
            .iter()
            .zip(&other.labels)
            .map(|(&a, &b)| zq::add(a, b, self.q))
            .collect();
        Ok(Self::from_raw(self.q, labels))
    }

    pub fn negate(&self) -> Self {
        Self::from_raw(self.q, self.labels.iter().map(|&l| zq::neg(l, self.q)).collect())
    }

    /// Restricts to the vertices of `subset`, in the order given.
    pub fn restrict(&self, subset: &[usize]) -> Self {
        Self::from_raw(self.q, subset.iter().map(|&v| self.labels[v]).collect())
    }
}

/// Symmetric weight matrix over `Z_q` with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightedGraph {
    q: u8,
    n: usize,
    w: Vec<u8>,
}

impl fmt::Debug for WeightedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightedGraph(q={}, n={}, edges={:?})", self.q, self.n, self.edges())
    }
}

impl WeightedGraph {
    /// Builds a graph from an edge list; unlisted pairs get weight 0.
    pub fn new(q: u32, n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let qq = check_modulus(q)?;
        let mut w = vec![0u8; n * n];
        let mut seen = vec![false; n * n];
        for &(u, v, wt) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if wt >= q {
                return Err(Error::WeightOutOfRange { weight: wt, q });
            }
            if seen[u * n + v] {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            seen[u * n + v] = true;
            seen[v * n + u] = true;
            w[u * n + v] = wt as u8;
            w[v * n + u] = wt as u8;
        }
        Ok(Self { q: qq, n, w })
    }

    pub fn empty(q: u32, n: usize) -> Result<Self> {
        Self::new(q, n, &[])
    }

    /// Builds a graph from a full weight matrix, validating every invariant.
    pub fn from_matrix(q: u32, rows: &[Vec<u32>]) -> Result<Self> {
        let qq = check_modulus(q)?;
        let n = rows.len();
        let mut w = vec![0u8; n * n];
        for (u, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Mismatch(format!("row {u} has length {}", row.len())));
            }
            for (v, &x) in row.iter().enumerate() {
                if x >= q {
                    return Err(Error::WeightOutOfRange { weight: x, q });
                }
                if u == v && x != 0 {
                    return Err(Error::SelfLoop(u));
                }
                if rows[v][u] != x {
                    return Err(Error::Asymmetric(u, v));
                }
                w[u * n + v] = x as u8;
            }
        }
        Ok(Self { q: qq, n, w })
    }

    /// `f(u, v)` is consulted for `u < v` only.
    pub(crate) fn from_fn(q: u8, n: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut w = vec![0u8; n * n];
        for u in 0..n {
            for v in u + 1..n {
                let x = f(u, v);
                debug_assert!(x < q);
                w[u * n + v] = x;
                w[v * n + u] = x;
            }
        }
        Self { q, n, w }
    }

    /// Builds a graph from its row-major upper triangle (`u < v`).
    pub(crate) fn from_upper(q: u8, n: usize, upper: &[u8]) -> Self {
        let mut it = upper.iter().copied();
        Self::from_fn(q, n, |_, _| it.next().expect("upper triangle too short"))
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub(crate) fn modulus(&self) -> u8 {
        self.q
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, u: usize, v: usize) -> u8 {
        self.w[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u8] {
        &self.w[u * self.n..(u + 1) * self.n]
    }

    /// Nonzero edges `(u, v, w)` with `u < v`, in row-major order.
    pub fn edges(&self) -> Vec<(usize, usize, u8)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let x = self.weight(u, v);
                if x != 0 {
                    out.push((u, v, x));
                }
            }
        }
        out
    }

    /// Row-major upper triangle, `u < v`.
    pub fn upper_triangle(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            out.extend_from_slice(&self.row(u)[u + 1..]);
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.q != other.q || self.n != other.n {
            return Err(Error::Mismatch(format!(
                "graphs (q={}, n={}) and (q={}, n={})",
                self.q, self.n, other.q, other.n
            )));
        }
        Ok(())
    }

    /// Entrywise sum mod `q`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let w = self.w.iter().zip(&other.w).map(|(&a, &b)| zq::add(a, b, self.q)).collect();
        Ok(Self { q: self.q, n: self.n, w })
    }

    pub fn negate(&self) -> Self {
        Self { q: self.q, n: self.n, w: self.w.iter().map(|&x| zq::neg(x, self.q)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.negate())
    }

    /// The additive graph generated by `lab`: `w(u, v) = lab(u) + lab(v)`.
    pub fn additive(lab: &VertexLabeling) -> Self {
        let q = lab.q;
        Self::from_fn(q, lab.len(), |u, v| zq::add(lab.get(u), lab.get(v), q))
    }

    /// Returns a generating labeling if the graph is additive.
    ///
    /// Rooted at vertex 0 with `lab(0) = t` and `lab(u) = w(0,u) - t`, the
    /// graph is additive iff `c = w(0,u) + w(0,v) - w(u,v)` is one constant
    /// over all pairs `u, v != 0` and `2t = c` is solvable mod `q`.
    pub fn is_additive(&self) -> Option<VertexLabeling> {
        let q = self.q;
        match self.n {
            0 => return Some(VertexLabeling::from_raw(q, vec![])),
            1 => return Some(VertexLabeling::from_raw(q, vec![0])),
            2 => return Some(VertexLabeling::from_raw(q, vec![0, self.weight(0, 1)])),
            _ => {}
        }
        let c = zq::sub(zq::add(self.weight(0, 1), self.weight(0, 2), q), self.weight(1, 2), q);
        for u in 1..self.n {
            for v in u + 1..self.n {
                let cuv = zq::sub(zq::add(self.weight(0, u), self.weight(0, v), q), self.weight(u, v), q);
                if cuv != c {
                    return None;
                }
            }
        }
        let t = zq::halve(c, q)?;
        let mut labels = vec![t];
        labels.extend((1..self.n).map(|u| zq::sub(self.weight(0, u), t, q)));
        Some(VertexLabeling::from_raw(q, labels))
    }

    /// `self + additive(lab)`.
    pub fn switch(&self, lab: &VertexLabeling) -> Result<Self> {
        if lab.q != self.q || lab.len() != self.n {
            return Err(Error::Mismatch(format!(
                "labeling (q={}, n={}) for graph (q={}, n={})",
                lab.q,
                lab.len(),
                self.q,
                self.n
            )));
        }
        let q = self.q;
        Ok(Self::from_fn(q, self.n, |u, v| {
            zq::add(self.weight(u, v), zq::add(lab.get(u), lab.get(v), q), q)
        }))
    }

    /// The labeling that isolates vertex `o`: `lab(o) = 0`, `lab(v) = -w(o, v)`.
    pub fn isolating_labeling(&self, o: usize) -> Result<VertexLabeling> {
        self.check_vertex(o)?;
        Ok(VertexLabeling::from_raw(
            self.q,
            (0..self.n).map(|v| zq::neg(self.weight(o, v), self.q)).collect(),
        ))
    }

    /// Switches so that vertex `o` has all incident weights 0.
    pub fn isolate(&self, o: usize) -> Result<(Self, VertexLabeling)> {
        let lab = self.isolating_labeling(o)?;
        let g = self.switch(&lab)?;
        Ok((g, lab))
    }

    /// A labeling `lab` with `switch(self, lab) == other`, if one exists.
    pub fn switching_equivalent(&self, other: &Self) -> Result<Option<VertexLabeling>> {
        self.check_same_shape(other)?;
        Ok(other.sub(self)?.is_additive())
    }

    /// Deterministic representative of the switching class.
    ///
    /// Vertex 0 is isolated; the graphs with vertex 0 isolated that remain in
    /// the class differ by a global shift of all other weights by `-2t`, and
    /// the lexicographically smallest upper triangle among those is chosen.
    pub fn canonical_rep(&self) -> Self {
        if self.n < 2 {
            return self.clone();
        }
        let (iso, _) = self.isolate(0).expect("vertex 0 exists");
        let q = self.q;
        let base = iso.upper_triangle();
        let mut best = base.clone();
        let mut cand = vec![0u8; base.len()];
        for t in 1..q {
            let d = zq::neg(zq::add(t, t, q), q);
            for (c, (&b, u)) in cand.iter_mut().zip(base.iter().zip(0..)) {
                // row 0 is all zero after isolation; it stays fixed
                *c = if u < self.n - 1 { b } else { zq::add(b, d, q) };
            }
            if cand < best {
                best.copy_from_slice(&cand);
            }
        }
        Self::from_upper(q, self.n, &best)
    }

    /// Subgraph induced by `subset`; vertex order follows increasing original index.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Self> {
        let mut s = subset.to_vec();
        s.sort_unstable();
        s.dedup();
        for &v in &s {
            self.check_vertex(v)?;
        }
        Ok(self.induced_ordered(&s))
    }

    /// Induced subgraph in exactly the given vertex order (no validation).
    pub(crate) fn induced_ordered(&self, s: &[usize]) -> Self {
        Self::from_fn(self.q, s.len(), |i, j| self.weight(s[i], s[j]))
    }

    /// The subgraph with vertex `v` removed.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        Ok(self.induced_ordered(&keep))
    }

    /// Relabels vertices: vertex `u` of `self` becomes vertex `perm[u]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::Mismatch(format!("permutation of length {} for n={}", perm.len(), self.n)));
        }
        let mut inv = vec![usize::MAX; self.n];
        for (u, &p) in perm.iter().enumerate() {
            self.check_vertex(p)?;
            if inv[p] != usize::MAX {
                return Err(Error::Invalid(format!("not a permutation: {perm:?}")));
            }
            inv[p] = u;
        }
        Ok(Self::from_fn(self.q, self.n, |a, b| self.weight(inv[a], inv[b])))
    }

    /// Exchanges weights `i` and `j` on every edge.
    pub fn swap_weights(&self, i: u32, j: u32) -> Result<Self> {
        for x in [i, j] {
            if x >= self.q as u32 {
                return Err(Error::WeightOutOfRange { weight: x, q: self.q as u32 });
            }
        }
        let (i, j) = (i as u8, j as u8);
        Ok(Self::from_fn(self.q, self.n, |u, v| match self.weight(u, v) {
            x if x == i => j,
            x if x == j => i,
            x => x,
        }))
    }

    /// True if some vertex has all incident weights 0.
    pub fn has_isolated_vertex(&self) -> bool {
        (0..self.n).any(|v| self.row(v).iter().all(|&x| x == 0))
    }
}
