//! Functions over prime `Z_q`, their extensions to the hyperplane
//! `x_1 + ... + x_n + x_0 = a`, and separability of those extensions.
//!
//! Conventions:
//! - tables are row-major over `(x_1, ..., x_n)` with `x_1` most significant;
//! - a polynomial describing an extension has `n + 1` variables, stored as
//!   `(x_1, ..., x_n, x_0)` so the hidden argument comes last;
//! - argument sets use labels `0..=n` where label `i >= 1` is `x_i` and label
//!   `0` is `x_0`; the graph of a quadratic uses the same labels as vertices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::WeightedGraph;
use crate::rng::SampleRng;
use crate::separability::{is_separable_set, nontrivial_separable_sets};
use crate::zq;

/// Largest dense table built without an explicit override.
pub const TABLE_CAP: u128 = 2_000_000;

fn check_prime(q: u32) -> Result<u8> {
    if !zq::is_prime(q) || q > crate::graph::MAX_MODULUS {
        return Err(Error::NotPrime(q));
    }
    Ok(q as u8)
}

fn table_len(q: u8, n: usize) -> Result<usize> {
    let len = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if len > TABLE_CAP {
        return Err(Error::Budget { required: len, budget: TABLE_CAP });
    }
    Ok(len as usize)
}

/// Reduces an exponent with `x^q = x`.
fn reduce_exp(e: u32, q: u8) -> u8 {
    if e == 0 {
        0
    } else {
        ((e - 1) % (q as u32 - 1) + 1) as u8
    }
}

/// Sparse polynomial over prime `Z_q`; exponents below `q`, no zero terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialZq {
    q: u8,
    nvars: usize,
    terms: BTreeMap<Vec<u8>, u8>,
}

impl PolynomialZq {
    pub fn zero(q: u32, nvars: usize) -> Result<Self> {
        Ok(Self { q: check_prime(q)?, nvars, terms: BTreeMap::new() })
    }

    pub fn constant(q: u32, nvars: usize, c: i64) -> Result<Self> {
        let mut p = Self::zero(q, nvars)?;
        p.add_term(&vec![0; nvars], c)?;
        Ok(p)
    }

    /// The variable with 0-based position `i`.
    pub fn var(q: u32, nvars: usize, i: usize) -> Result<Self> {
        let mut e = vec![0; nvars];
        *e.get_mut(i).ok_or(Error::ArgOutOfRange { index: i, arity: nvars })? = 1;
        let mut p = Self::zero(q, nvars)?;
        p.add_term(&e, 1)?;
        Ok(p)
    }

    pub fn from_terms(q: u32, nvars: usize, terms: &[(Vec<u32>, i64)]) -> Result<Self> {
        let mut p = Self::zero(q, nvars)?;
        for (e, c) in terms {
            p.add_term(e, *c)?;
        }
        Ok(p)
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u8], u8)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with exponents `exps` (already reduced).
    pub fn coefficient(&self, exps: &[u8]) -> u8 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exps: &[u32], coef: i64) -> Result<()> {
        if exps.len() != self.nvars {
            return Err(Error::Mismatch(format!("{} exponents for {} variables", exps.len(), self.nvars)));
        }
        let key: Vec<u8> = exps.iter().map(|&e| reduce_exp(e, self.q)).collect();
        self.accumulate(key, zq::reduce(coef, self.q));
        Ok(())
    }

    fn accumulate(&mut self, key: Vec<u8>, c: u8) {
        if c == 0 {
            return;
        }
        let q = self.q;
        let slot = self.terms.entry(key).or_insert(0);
        *slot = zq::add(*slot, c, q);
        if *slot == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.q != other.q || self.nvars != other.nvars {
            return Err(Error::Mismatch(format!(
                "polynomials over (q={}, {} vars) and (q={}, {} vars)",
                self.q, self.nvars, other.q, other.nvars
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.accumulate(e.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: i64) -> Self {
        let c = zq::reduce(c, self.q);
        let mut out = Self { q: self.q, nvars: self.nvars, terms: BTreeMap::new() };
        for (e, &v) in &self.terms {
            out.accumulate(e.clone(), zq::mul(v, c, self.q));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self { q: self.q, nvars: self.nvars, terms: BTreeMap::new() };
        for (e1, &c1) in &self.terms {
            for (e2, &c2) in &other.terms {
                let key = e1.iter().zip(e2).map(|(&a, &b)| reduce_exp(a as u32 + b as u32, self.q)).collect();
                out.accumulate(key, zq::mul(c1, c2, self.q));
            }
        }
        Ok(out)
    }

    /// Total degree of the reduced form; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max().unwrap_or(0)
    }

    pub fn eval(&self, point: &[u8]) -> Result<u8> {
        if point.len() != self.nvars {
            return Err(Error::Mismatch(format!("point of length {} for {} variables", point.len(), self.nvars)));
        }
        Ok(self.eval_unchecked(point))
    }

    fn eval_unchecked(&self, point: &[u8]) -> u8 {
        let q = self.q;
        self.terms.iter().fold(0, |acc, (e, &c)| {
            let m = e.iter().zip(point).fold(c, |m, (&k, &x)| zq::mul(m, zq::pow(x, k as u32, q), q));
            zq::add(acc, m, q)
        })
    }

    /// Appends `extra` variables that do not occur.
    pub fn widen(&self, extra: usize) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e = e.clone();
                e.resize(self.nvars + extra, 0);
                (e, c)
            })
            .collect();
        Self { q: self.q, nvars: self.nvars + extra, terms }
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            q: self.q as u32,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| TermJson { exps: e.iter().map(|&x| x as u32).collect(), coef: c as i64 })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub coef: i64,
}

/// `{"q": int, "nvars": int, "terms": [{"exps": [ints], "coef": int}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub q: u32,
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<PolynomialZq> {
        let terms: Vec<(Vec<u32>, i64)> = self.terms.iter().map(|t| (t.exps.clone(), t.coef)).collect();
        PolynomialZq::from_terms(self.q, self.nvars, &terms)
    }
}

/// Dense table of a function `Z_q^n -> Z_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctionTable {
    q: u8,
    n: usize,
    values: Vec<u8>,
}

impl FunctionTable {
    pub fn new(q: u32, n: usize, values: Vec<u32>) -> Result<Self> {
        let q8 = check_prime(q)?;
        let len = table_len(q8, n)?;
        if values.len() != len {
            return Err(Error::Mismatch(format!("{} values for a table of {len}", values.len())));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= q) {
            return Err(Error::WeightOutOfRange { weight: v, q });
        }
        Ok(Self { q: q8, n, values: values.into_iter().map(|v| v as u8).collect() })
    }

    pub fn from_fn(q: u32, n: usize, mut f: impl FnMut(&[u8]) -> u8) -> Result<Self> {
        let q8 = check_prime(q)?;
        let len = table_len(q8, n)?;
        let mut point = vec![0u8; n];
        let mut values = Vec::with_capacity(len);
        for _ in 0..len {
            values.push(f(&point) % q8);
            increment(&mut point, q8);
        }
        Ok(Self { q: q8, n, values })
    }

    pub fn constant(q: u32, n: usize, c: u32) -> Result<Self> {
        Self::from_fn(q, n, |_| (c % q) as u8)
    }

    pub fn q(&self) -> u32 {
        self.q as u32
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn index(&self, point: &[u8]) -> usize {
        point.iter().fold(0, |acc, &x| acc * self.q as usize + x as usize)
    }

    pub fn get(&self, point: &[u8]) -> u8 {
        self.values[self.index(point)]
    }

    pub fn to_json(&self) -> TableJson {
        TableJson { q: self.q as u32, n: self.n, values: self.values.iter().map(|&v| v as u32).collect() }
    }
}

/// Advances a base-`q` counter, last coordinate fastest.
pub(crate) fn increment(point: &mut [u8], q: u8) {
    for x in point.iter_mut().rev() {
        *x += 1;
        if *x < q {
            return;
        }
        *x = 0;
    }
}

/// `{"q": int, "n": int, "values": [ints]}`, row-major with `x_1` slowest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub q: u32,
    pub n: usize,
    pub values: Vec<u32>,
}

impl TableJson {
    pub fn to_table(&self) -> Result<FunctionTable> {
        FunctionTable::new(self.q, self.n, self.values.clone())
    }
}

pub fn table_from_poly(p: &PolynomialZq) -> Result<FunctionTable> {
    FunctionTable::from_fn(p.q(), p.nvars, |x| p.eval_unchecked(x))
}

/// The unique reduced polynomial with the given values, by applying the
/// one-variable interpolation `v(c) -> sum_c v(c) (1 - (x - c)^(q-1))`
/// along every axis.
pub fn poly_from_table(t: &FunctionTable) -> PolynomialZq {
    let q = t.q;
    let qs = q as usize;
    // m[e][c]: coefficient of x^e in 1 - (x - c)^(q-1)
    let mut binom = vec![1u8; qs];
    for e in 1..qs {
        // C(q-1, e) = C(q-1, e-1) * (q-e) / e
        binom[e] = zq::mul(zq::mul(binom[e - 1], (q as usize - e) as u8, q), zq::inv(e as u8, q), q);
    }
    let mut m = vec![vec![0u8; qs]; qs];
    #[allow(clippy::needless_range_loop)]
    for c in 0..qs {
        for e in 0..qs {
            let term = zq::mul(binom[e], zq::pow(zq::neg(c as u8, q), (qs - 1 - e) as u32, q), q);
            m[e][c] = zq::neg(term, q);
        }
        m[0][c] = zq::add(m[0][c], 1, q);
    }
    let mut coef = t.values.clone();
    let len = coef.len();
    let mut stride = 1;
    let mut line = vec![0u8; qs];
    for _ in 0..t.n {
        let block = stride * qs;
        for base in (0..len).step_by(block) {
            for off in 0..stride {
                for (c, slot) in line.iter_mut().enumerate() {
                    *slot = coef[base + off + c * stride];
                }
                for e in 0..qs {
                    let v = (0..qs).fold(0u8, |acc, c| zq::add(acc, zq::mul(m[e][c], line[c], q), q));
                    coef[base + off + e * stride] = v;
                }
            }
        }
        stride = block;
    }
    let mut p = PolynomialZq { q, nvars: t.n, terms: BTreeMap::new() };
    let mut exps = vec![0u8; t.n];
    for &c in &coef {
        if c != 0 {
            p.terms.insert(exps.clone(), c);
        }
        increment(&mut exps, q);
    }
    p
}

/// A function `f` read on the hyperplane `x_1 + ... + x_n + x_0 = a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialExtension {
    pub f: FunctionTable,
    a: u8,
}

impl PartialExtension {
    pub fn new(f: FunctionTable, a: u32) -> Self {
        let a = (a % f.q()) as u8;
        Self { f, a }
    }

    pub fn a(&self) -> u32 {
        self.a as u32
    }

    pub fn q(&self) -> u32 {
        self.f.q()
    }

    pub fn n(&self) -> usize {
        self.f.n
    }

    /// Value at `(x_1, ..., x_n)` with hidden `x_0`; errors off the hyperplane.
    pub fn eval(&self, x: &[u8], x0: u8) -> Result<u8> {
        let q = self.f.q;
        if x.len() != self.n() {
            return Err(Error::Mismatch(format!("point of length {} for arity {}", x.len(), self.n())));
        }
        if x.iter().any(|&v| v >= q) || x0 >= q {
            return Err(Error::Invalid("coordinate out of range".into()));
        }
        let sum = x.iter().fold(x0, |s, &v| zq::add(s, v, q));
        if sum != self.a {
            return Err(Error::OffDomain { sum: sum as u32, a: self.a as u32, q: q as u32 });
        }
        Ok(self.f.get(x))
    }

    /// Value at a full point indexed by label (`point[0]` is `x_0`), assumed
    /// to lie on the hyperplane.
    fn at_labels(&self, point: &[u8]) -> u8 {
        self.f.get(&point[1..])
    }

    /// The hidden coordinate completing `x` to a hyperplane point.
    pub fn hidden(&self, x: &[u8]) -> u8 {
        let q = self.f.q;
        zq::sub(self.a, x.iter().fold(0, |s, &v| zq::add(s, v, q)), q)
    }

    /// Exchanges the roles of `x_i` (`1 <= i <= n`) and `x_0`:
    /// `g(z) = f(z with z_i replaced by a - sum z)`.
    pub fn swap_with_x0(&self, i: usize) -> Result<Self> {
        let n = self.n();
        if i == 0 || i > n {
            return Err(Error::ArgOutOfRange { index: i, arity: n });
        }
        let q = self.f.q;
        let mut y = vec![0u8; n];
        let g = FunctionTable::from_fn(q as u32, n, |z| {
            y.copy_from_slice(z);
            y[i - 1] = self.hidden(z);
            self.f.get(&y)
        })?;
        Ok(Self { f: g, a: self.a })
    }

    /// Fixes the argument with label `i` to `b`.
    ///
    /// The result has constant `a - b`. For `i >= 1` its visible arguments are
    /// the remaining `x_j` in order and its hidden argument is still `x_0`.
    /// For `i = 0` the visible arguments are `x_1..x_{n-1}` and `x_n` becomes
    /// hidden.
    pub fn fix_argument(&self, i: usize, b: u32) -> Result<Self> {
        let n = self.n();
        if i > n {
            return Err(Error::ArgOutOfRange { index: i, arity: n + 1 });
        }
        if n == 0 {
            return Err(Error::Invalid("no visible argument left to fix".into()));
        }
        let q = self.f.q;
        let b = (b % q as u32) as u8;
        let a = zq::sub(self.a, b, q);
        let mut y = vec![0u8; n];
        let g = if i == 0 {
            FunctionTable::from_fn(q as u32, n - 1, |z| {
                y[..n - 1].copy_from_slice(z);
                y[n - 1] = zq::sub(a, z.iter().fold(0, |s, &v| zq::add(s, v, q)), q);
                self.f.get(&y)
            })?
        } else {
            FunctionTable::from_fn(q as u32, n - 1, |z| {
                y[..i - 1].copy_from_slice(&z[..i - 1]);
                y[i - 1] = b;
                y[i..].copy_from_slice(&z[i - 1..]);
                self.f.get(&y)
            })?
        };
        Ok(Self { f: g, a })
    }
}

/// The graph on labels `0..=n` whose edge `{i, j}` carries the coefficient
/// of `x_i x_j` in an extension polynomial (variables `x_1..x_n, x_0`).
pub fn graph_of_quadratic(p: &PolynomialZq) -> Result<WeightedGraph> {
    if p.degree() > 2 {
        return Err(Error::NotQuadratic(p.degree()));
    }
    let nv = p.nvars;
    let label = |pos: usize| if pos + 1 == nv { 0 } else { pos + 1 };
    let mut edges = Vec::new();
    for (e, &c) in &p.terms {
        let vars: Vec<usize> = (0..nv).filter(|&k| e[k] == 1).collect();
        if vars.len() == 2 {
            edges.push((label(vars[0]), label(vars[1]), c as u32));
        }
    }
    WeightedGraph::new(p.q(), nv, &edges)
}

/// Substitutes `x_0 = a - (x_1 + ... + x_n)` into an extension polynomial
/// (hidden variable last) and returns the reduced polynomial in `x_1..x_n`.
pub fn reduce_mod_constraint(p: &PolynomialZq, a: u32) -> Result<PolynomialZq> {
    let nv = p.nvars;
    if nv == 0 {
        return Err(Error::Invalid("an extension polynomial needs the hidden variable".into()));
    }
    let n = nv - 1;
    let q = p.q();
    let mut hidden = PolynomialZq::constant(q, n, a as i64)?;
    for i in 0..n {
        hidden = hidden.add(&PolynomialZq::var(q, n, i)?.scale(-1))?;
    }
    let mut powers = vec![PolynomialZq::constant(q, n, 1)?];
    for k in 1..p.q as usize {
        let next = powers[k - 1].mul(&hidden)?;
        powers.push(next);
    }
    let mut out = PolynomialZq::zero(q, n)?;
    for (e, &c) in &p.terms {
        let mono = PolynomialZq { q: p.q, nvars: n, terms: BTreeMap::from([(e[..n].to_vec(), c)]) };
        out = out.add(&mono.mul(&powers[e[n] as usize])?)?;
    }
    Ok(out)
}

/// Normalizes an argument set given by labels in `0..=n`; requires
/// `2 <= |W| <= n - 1`.
pub fn normalize_arg_set(w: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&i) = s.iter().find(|&&i| i > n) {
        return Err(Error::ArgOutOfRange { index: i, arity: n + 1 });
    }
    if s.len() < 2 || s.len() + 1 > n {
        return Err(Error::SetSize(s));
    }
    Ok(s)
}

/// Separability of `W` via the graph of a quadratic extension polynomial.
pub fn is_w_separable_quadratic(p: &PolynomialZq, w: &[usize]) -> Result<bool> {
    if p.nvars == 0 {
        return Err(Error::Invalid("an extension polynomial needs the hidden variable".into()));
    }
    let w = normalize_arg_set(w, p.nvars - 1)?;
    let g = graph_of_quadratic(p)?;
    Ok(is_separable_set(&g, &w)?.is_some())
}

/// `f'(x_W) + f''(x_U)`, with `W` and `U` in increasing label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub w: Vec<usize>,
    pub u: Vec<usize>,
    pub f_w: FunctionTable,
    pub f_u: FunctionTable,
}

/// Orders labels as arguments: `x_1..x_n` then `x_0`.
fn positional(labels: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = labels.iter().copied().filter(|&l| l != 0).collect();
    if labels.contains(&0) {
        out.push(0);
    }
    out
}

/// Decides whether the extension splits as `f'(x_W) + f''(x_U)` on the whole
/// hyperplane. Works for any function, not only quadratic ones.
///
/// Candidates: with `w*`, `u*` the first arguments of `W` and `U`,
/// `f'(x_W) = F(x_W, u* = a - s_W) - F(w* = s_W, u* = a - s_W)` and
/// `f''(x_U) = F(w* = a - s_U, x_U)`, all other coordinates zero. The sum is
/// then checked on every hyperplane point and `f''(0)` is shifted to 0.
pub fn oracle_is_w_separable(e: &PartialExtension, w: &[usize]) -> Result<Option<Decomposition>> {
    let n = e.n();
    let w = normalize_arg_set(w, n)?;
    let u: Vec<usize> = (0..=n).filter(|l| !w.contains(l)).collect();
    let (wp, up) = (positional(&w), positional(&u));
    let (ws, us) = (wp[0], up[0]);
    let q = e.f.q;
    let sum = |x: &[u8]| x.iter().fold(0u8, |s, &v| zq::add(s, v, q));
    let mut point = vec![0u8; n + 1];
    let mut f_w = FunctionTable::from_fn(q as u32, wp.len(), |xw| {
        let s = sum(xw);
        point.fill(0);
        for (&l, &x) in wp.iter().zip(xw) {
            point[l] = x;
        }
        point[us] = zq::sub(e.a, s, q);
        let first = e.at_labels(&point);
        point.fill(0);
        point[ws] = s;
        point[us] = zq::sub(e.a, s, q);
        zq::sub(first, e.at_labels(&point), q)
    })?;
    let mut f_u = FunctionTable::from_fn(q as u32, up.len(), |xu| {
        point.fill(0);
        for (&l, &x) in up.iter().zip(xu) {
            point[l] = x;
        }
        point[ws] = zq::sub(e.a, sum(xu), q);
        e.at_labels(&point)
    })?;
    let shift = f_u.values[0];
    for v in f_u.values.iter_mut() {
        *v = zq::sub(*v, shift, q);
    }
    for v in f_w.values.iter_mut() {
        *v = zq::add(*v, shift, q);
    }
    let mut x = vec![0u8; n];
    let (mut xw, mut xu) = (vec![0u8; wp.len()], vec![0u8; up.len()]);
    for (idx, &value) in e.f.values.iter().enumerate() {
        point[1..].copy_from_slice(&x);
        point[0] = e.hidden(&x);
        for (slot, &l) in xw.iter_mut().zip(&wp) {
            *slot = point[l];
        }
        for (slot, &l) in xu.iter_mut().zip(&up) {
            *slot = point[l];
        }
        if zq::add(f_w.get(&xw), f_u.get(&xu), q) != value {
            return Ok(None);
        }
        debug_assert_eq!(idx, e.f.index(&x));
        increment(&mut x, q);
    }
    Ok(Some(Decomposition { w: wp, u: up, f_w, f_u }))
}

/// Argument sets containing `x_0` with `2 <= |W| <= n - 1`, by size then
/// lexicographically.
pub fn candidate_sets(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 2..n {
        let mut c = crate::separability::Combinations::new(n, size - 1);
        while let Some(rest) = c.advance() {
            let mut s = vec![0];
            s.extend(rest.iter().map(|&x| x + 1));
            out.push(s);
        }
    }
    out
}

/// Every admissible argument set over labels `0..=n`, by size then
/// lexicographically.
pub fn candidate_sets_all(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in 2..n {
        let mut c = crate::separability::Combinations::new(n + 1, size);
        while let Some(s) = c.advance() {
            out.push(s.to_vec());
        }
    }
    out
}

/// First separating argument set (containing `x_0`) and its decomposition.
pub fn is_separable_extension(e: &PartialExtension) -> Result<Option<Decomposition>> {
    for w in candidate_sets(e.n()) {
        if let Some(d) = oracle_is_w_separable(e, &w)? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Graph-side decision for a quadratic extension polynomial: the first
/// nontrivial separable vertex set, if any.
pub fn separable_set_quadratic(p: &PolynomialZq) -> Result<Option<Vec<usize>>> {
    let g = graph_of_quadratic(p)?;
    Ok(nontrivial_separable_sets(&g).into_iter().next().map(|c| c.set))
}

/// Random polynomial of degree at most 2 in `n` variables: every monomial
/// `1, x_i, x_i^2, x_i x_j` gets an independent uniform coefficient.
pub fn random_quadratic(q: u32, n: usize, rng: &mut SampleRng) -> Result<PolynomialZq> {
    let mut p = PolynomialZq::zero(q, n)?;
    let mut e = vec![0u32; n];
    p.add_term(&e, rng.below(q) as i64)?;
    for i in 0..n {
        for j in i..n {
            e[i] += 1;
            e[j] += 1;
            p.add_term(&e, rng.below(q) as i64)?;
            e[i] = 0;
            e[j] = 0;
        }
        e[i] = 1;
        p.add_term(&e, rng.below(q) as i64)?;
        e[i] = 0;
    }
    Ok(p)
}

/// The extension of the function described by `p` (variables `x_1..x_n`).
pub fn extension_of(p: &PolynomialZq, a: u32) -> Result<PartialExtension> {
    Ok(PartialExtension::new(table_from_poly(p)?, a))
}
