//! n-ary quasigroups as dense Latin hypercubes, the order-`q^2` quasigroups
//! `Q_{f,a}`, retracts, inverses and a complete separability test.
//!
//! Argument positions are numbered `1..=n`; label `0` stands for the output.
//! `Q_{f,a}([x_1,y_1], ..., [x_n,y_n]) = [a - sum x, f(x) - sum y]`, with the
//! pair `[x, y]` encoded as `x * q + y`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::function::{FunctionTable, PartialExtension};
use crate::separability::Combinations;
use crate::zq;

/// Largest table built by this module.
pub const QG_CAP: u128 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasigroupTable {
    m: usize,
    n: usize,
    values: Vec<u16>,
}

fn qg_len(m: usize, n: usize) -> Result<usize> {
    let len = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if len > QG_CAP {
        return Err(Error::Budget { required: len, budget: QG_CAP });
    }
    Ok(len as usize)
}

impl QuasigroupTable {
    /// Any table of the right shape; Latin-ness is checked separately.
    pub fn new(m: usize, n: usize, values: Vec<u32>) -> Result<Self> {
        if m == 0 || m > u16::MAX as usize {
            return Err(Error::Invalid(format!("order {m} out of range")));
        }
        let len = qg_len(m, n)?;
        if values.len() != len {
            return Err(Error::Mismatch(format!("{} values for a table of {len}", values.len())));
        }
        if values.iter().any(|&v| v as usize >= m) {
            return Err(Error::Invalid(format!("entry out of range for order {m}")));
        }
        Ok(Self { m, n, values: values.into_iter().map(|v| v as u16).collect() })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u16] {
        &self.values
    }

    fn index(&self, args: &[u16]) -> usize {
        args.iter().fold(0, |acc, &x| acc * self.m + x as usize)
    }

    pub fn get(&self, args: &[u16]) -> u16 {
        self.values[self.index(args)]
    }

    /// Distance in the flat array between neighbors along position `i`.
    fn stride(&self, i: usize) -> usize {
        self.m.pow((self.n - i) as u32)
    }

    fn check_position(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n {
            return Err(Error::ArgOutOfRange { index: i, arity: self.n });
        }
        Ok(())
    }

    pub fn to_json(&self) -> QuasigroupJson {
        QuasigroupJson { m: self.m, n: self.n, values: self.values.iter().map(|&v| v as u32).collect() }
    }

    /// Calls `f(flat index, args)` for every argument tuple in row-major order.
    fn for_each(&self, mut f: impl FnMut(usize, &[u16])) {
        let mut args = vec![0u16; self.n];
        for idx in 0..self.values.len() {
            f(idx, &args);
            for x in args.iter_mut().rev() {
                *x += 1;
                if (*x as usize) < self.m {
                    break;
                }
                *x = 0;
            }
        }
    }
}

/// `{"m": int, "n": int, "values": [ints]}`, row-major with position 1 slowest.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuasigroupJson {
    pub m: usize,
    pub n: usize,
    pub values: Vec<u32>,
}

impl QuasigroupJson {
    pub fn to_table(&self) -> Result<QuasigroupTable> {
        QuasigroupTable::new(self.m, self.n, self.values.clone())
    }
}

/// Builds `Q_{f,a}` of order `q^2` and arity `n`.
pub fn build_qfa(f: &FunctionTable, a: u32) -> Result<QuasigroupTable> {
    let q = f.q() as u8;
    let n = f.n();
    let m = q as usize * q as usize;
    let len = qg_len(m, n)?;
    let a = (a % q as u32) as u8;
    let mut values = Vec::with_capacity(len);
    let mut x = vec![0u8; n];
    let mut y = vec![0u8; n];
    for _ in 0..len {
        let sx = x.iter().fold(0, |s, &v| zq::add(s, v, q));
        let sy = y.iter().fold(0, |s, &v| zq::add(s, v, q));
        let hi = zq::sub(a, sx, q);
        let lo = zq::sub(f.get(&x), sy, q);
        values.push(hi as u16 * q as u16 + lo as u16);
        // advance the pair counter, last position fastest
        for k in (0..n).rev() {
            y[k] += 1;
            if y[k] < q {
                break;
            }
            y[k] = 0;
            x[k] += 1;
            if x[k] < q {
                break;
            }
            x[k] = 0;
        }
    }
    Ok(QuasigroupTable { m, n, values })
}

/// Every one-dimensional section is a permutation of `0..m`.
pub fn is_quasigroup(t: &QuasigroupTable) -> bool {
    let m = t.m;
    let mut stamp = vec![usize::MAX; m];
    let mut line_id = 0usize;
    for i in 1..=t.n {
        let stride = t.stride(i);
        let block = stride * m;
        for base in (0..t.values.len()).step_by(block) {
            for off in 0..stride {
                for c in 0..m {
                    let v = t.values[base + off + c * stride] as usize;
                    if stamp[v] == line_id {
                        return false;
                    }
                    stamp[v] = line_id;
                }
                line_id += 1;
            }
        }
    }
    true
}

/// Fixes argument `i` (1-based) to `c`.
pub fn retract(t: &QuasigroupTable, i: usize, c: u32) -> Result<QuasigroupTable> {
    t.check_position(i)?;
    if c as usize >= t.m {
        return Err(Error::Invalid(format!("element {c} out of range for order {}", t.m)));
    }
    let stride = t.stride(i);
    let block = stride * t.m;
    let mut values = Vec::with_capacity(t.values.len() / t.m);
    for base in (0..t.values.len()).step_by(block) {
        let start = base + c as usize * stride;
        values.extend_from_slice(&t.values[start..start + stride]);
    }
    Ok(QuasigroupTable { m: t.m, n: t.n - 1, values })
}

/// The inverse in position `i`: `R(.., x_0 at i, ..) = x_i` iff `Q(.., x_i, ..) = x_0`.
pub fn invert(t: &QuasigroupTable, i: usize) -> Result<QuasigroupTable> {
    t.check_position(i)?;
    let stride = t.stride(i);
    let m = t.m;
    let mut values = vec![u16::MAX; t.values.len()];
    for (idx, &v) in t.values.iter().enumerate() {
        let xi = (idx / stride) % m;
        let target = idx - xi * stride + v as usize * stride;
        if values[target] != u16::MAX {
            return Err(Error::NotQuasigroup);
        }
        values[target] = xi as u16;
    }
    Ok(QuasigroupTable { m, n: t.n, values })
}

/// `Q(x) = G(x', H(x_W))`, where `x'` lists the positions outside `W` in
/// order and `H`'s value is `G`'s last argument. When `W` contains the
/// output label 0, the decomposition is of the inverse at position
/// `inverted_at`, with that position standing in for label 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QgDecomposition {
    pub w: Vec<usize>,
    pub inverted_at: Option<usize>,
    pub h: QuasigroupTable,
    pub g: QuasigroupTable,
}

impl QgDecomposition {
    /// Rebuilds the (possibly inverted) table from `G` and `H`.
    pub fn recompose(&self) -> QuasigroupTable {
        let n = self.g.n + self.h.n - 1;
        let positions: Vec<usize> = self.w.iter().map(|&l| if l == 0 { self.inverted_at.unwrap_or(0) } else { l }).collect();
        let m = self.g.m;
        let template = QuasigroupTable { m, n, values: vec![0; m.pow(n as u32)] };
        let mut values = Vec::with_capacity(template.values.len());
        let mut inner = Vec::with_capacity(self.h.n);
        let mut outer = Vec::with_capacity(self.g.n);
        template.for_each(|_, args| {
            inner.clear();
            outer.clear();
            for (k, &x) in args.iter().enumerate() {
                if positions.contains(&(k + 1)) {
                    inner.push(x);
                } else {
                    outer.push(x);
                }
            }
            outer.push(self.h.get(&inner));
            values.push(self.g.get(&outer));
        });
        QuasigroupTable { m, n, values }
    }
}

fn normalize_qg_set(w: &[usize], n: usize, inclusive: bool) -> Result<Vec<usize>> {
    let mut s = w.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&i) = s.iter().find(|&&i| i > n) {
        return Err(Error::ArgOutOfRange { index: i, arity: n + 1 });
    }
    let max = if inclusive { n } else { n - 1 };
    if n < 2 || s.len() < 2 || s.len() > max {
        return Err(Error::SetSize(s));
    }
    Ok(s)
}

/// Decides `W`-separability (labels in `0..=n`, `2 <= |W| <= n - 1`, or
/// `<= n` with `inclusive`) by the congruence that identifies `W`-tuples
/// with identical columns.
pub fn is_w_separable_qg(t: &QuasigroupTable, w: &[usize], inclusive: bool) -> Result<Option<QgDecomposition>> {
    let w = normalize_qg_set(w, t.n, inclusive)?;
    if w[0] == 0 {
        let j = (1..=t.n).find(|l| !w.contains(l)).ok_or_else(|| Error::SetSize(w.clone()))?;
        let inv = invert(t, j)?;
        let mut positions: Vec<usize> = w[1..].to_vec();
        positions.push(j);
        positions.sort_unstable();
        return Ok(congruence(&inv, &positions)?.map(|(h, g)| QgDecomposition { w, inverted_at: Some(j), h, g }));
    }
    Ok(congruence(t, &w)?.map(|(h, g)| QgDecomposition { w, inverted_at: None, h, g }))
}

/// `positions` sorted, 1-based, all in range.
fn congruence(t: &QuasigroupTable, positions: &[usize]) -> Result<Option<(QuasigroupTable, QuasigroupTable)>> {
    let (m, n) = (t.m, t.n);
    let outer: Vec<usize> = (1..=n).filter(|p| !positions.contains(p)).collect();
    let inner_len = m.pow(positions.len() as u32);
    let outer_len = m.pow(outer.len() as u32);
    let in_strides: Vec<usize> = positions.iter().map(|&p| t.stride(p)).collect();
    let out_strides: Vec<usize> = outer.iter().map(|&p| t.stride(p)).collect();
    let offsets = |strides: &[usize], count: usize| -> Vec<usize> {
        let mut digits = vec![0usize; strides.len()];
        (0..count)
            .map(|_| {
                let off = digits.iter().zip(strides).map(|(d, s)| d * s).sum();
                for d in digits.iter_mut().rev() {
                    *d += 1;
                    if *d < m {
                        break;
                    }
                    *d = 0;
                }
                off
            })
            .collect()
    };
    let inner_off = offsets(&in_strides, inner_len);
    let outer_off = offsets(&out_strides, outer_len);
    let mut classes: HashMap<Vec<u16>, u16> = HashMap::new();
    let mut h = Vec::with_capacity(inner_len);
    let mut reps: Vec<usize> = Vec::new();
    for &io in &inner_off {
        let column: Vec<u16> = outer_off.iter().map(|&oo| t.values[io + oo]).collect();
        let next = classes.len();
        let id = *classes.entry(column).or_insert_with(|| {
            reps.push(io);
            next as u16
        });
        if classes.len() > m {
            return Ok(None);
        }
        h.push(id);
    }
    if classes.len() != m {
        return Ok(None);
    }
    let h = QuasigroupTable { m, n: positions.len(), values: h };
    let mut g = Vec::with_capacity(outer_len * m);
    for &oo in &outer_off {
        for &rep in &reps {
            g.push(t.values[rep + oo]);
        }
    }
    let g = QuasigroupTable { m, n: outer.len() + 1, values: g };
    if !(is_quasigroup(&h) && is_quasigroup(&g)) {
        return Ok(None);
    }
    Ok(Some((h, g)))
}

/// First separable `W` among subsets of `1..=n`, by size then
/// lexicographically. Every set containing 0 has such a complement.
pub fn is_separable_qg(t: &QuasigroupTable, inclusive: bool) -> Result<Option<QgDecomposition>> {
    let n = t.n;
    let max = if inclusive { n } else { n.saturating_sub(1) };
    for size in 2..=max {
        let mut c = Combinations::new(n, size);
        while let Some(s) = c.advance() {
            let w: Vec<usize> = s.iter().map(|&x| x + 1).collect();
            if let Some(d) = is_w_separable_qg(t, &w, inclusive)? {
                return Ok(Some(d));
            }
        }
    }
    Ok(None)
}

/// Separability of all `(n-1)`-ary retracts of `Q` and of its inverses
/// versus separability of `Q` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RetractReport {
    pub n: usize,
    pub a: u32,
    pub retracts_checked: usize,
    pub separable_retracts: usize,
    pub all_retracts_separable: bool,
    pub quasigroup_separable: bool,
}

impl RetractReport {
    /// All retracts separable implies the quasigroup is separable.
    pub fn implication_holds(&self) -> bool {
        !self.all_retracts_separable || self.quasigroup_separable
    }
}

pub fn verify_retract_corollary(f: &FunctionTable, a: u32) -> Result<RetractReport> {
    let t = build_qfa(f, a)?;
    let mut tables = vec![t.clone()];
    for j in 1..=t.n {
        tables.push(invert(&t, j)?);
    }
    let (mut checked, mut separable) = (0, 0);
    for s in &tables {
        for i in 1..=s.n {
            for c in 0..s.m as u32 {
                checked += 1;
                if is_separable_qg(&retract(s, i, c)?, false)?.is_some() {
                    separable += 1;
                }
            }
        }
    }
    Ok(RetractReport {
        n: t.n,
        a: a % f.q(),
        retracts_checked: checked,
        separable_retracts: separable,
        all_retracts_separable: checked == separable,
        quasigroup_separable: is_separable_qg(&t, false)?.is_some(),
    })
}

/// `f` restricted by `x_i = b` with `c` subtracted from every value; the
/// function whose quasigroup equals the retract at `i` by `[b, c]`.
pub fn retract_function(f: &FunctionTable, i: usize, b: u32, c: u32) -> Result<FunctionTable> {
    let q = f.q() as u8;
    let ext = PartialExtension::new(f.clone(), 0).fix_argument(i, b)?;
    let c = (c % q as u32) as u8;
    FunctionTable::from_fn(q as u32, f.n() - 1, |x| zq::sub(ext.f.get(x), c, q))
}

/// Agreement between quasigroup and function-side separability, plus the
/// retract and inverse table identities, over seeded random quadratics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrespondenceReport {
    pub q: u32,
    pub n: usize,
    pub seed: u64,
    pub functions: usize,
    /// `(f, a, W)` triples compared
    pub comparisons: usize,
    /// quasigroup verdict differs from the extension with constant 0
    pub disagreements: usize,
    /// quasigroup verdict differs from the extension with the same constant
    pub disagreements_same_constant: usize,
    pub retract_identity_failures: usize,
    pub inverse_identity_failures: usize,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.disagreements == 0 && self.retract_identity_failures == 0 && self.inverse_identity_failures == 0
    }
}

/// For `count` random quadratic `f` and every constant `a`: compares
/// `W`-separability of `Q_{f,a}` with that of the extension of `f`, and
/// checks `retract(Q_{f,a}, i, [b,c]) = Q_{g, a-b}` with
/// `g = f|_{x_i=b} - c` and `invert(Q_{f,a}, i) = Q_{g,a}` with `g` the
/// extension with `x_i` and `x_0` exchanged.
pub fn verify_correspondence(q: u32, n: usize, count: usize, seed: u64) -> Result<CorrespondenceReport> {
    use crate::function::{candidate_sets_all, oracle_is_w_separable, random_quadratic, table_from_poly};
    let mut rng = crate::rng::SampleRng::new(seed);
    let mut r = CorrespondenceReport {
        q,
        n,
        seed,
        functions: count,
        comparisons: 0,
        disagreements: 0,
        disagreements_same_constant: 0,
        retract_identity_failures: 0,
        inverse_identity_failures: 0,
    };
    let sets = candidate_sets_all(n);
    for _ in 0..count {
        let f = table_from_poly(&random_quadratic(q, n, &mut rng)?)?;
        let ext0 = PartialExtension::new(f.clone(), 0);
        let verdict0: Vec<bool> =
            sets.iter().map(|w| oracle_is_w_separable(&ext0, w).map(|d| d.is_some())).collect::<Result<_>>()?;
        for a in 0..q {
            let t = build_qfa(&f, a)?;
            let ext = PartialExtension::new(f.clone(), a);
            for (w, &v0) in sets.iter().zip(&verdict0) {
                let qg = is_w_separable_qg(&t, w, false)?.is_some();
                r.comparisons += 1;
                r.disagreements += (qg != v0) as usize;
                r.disagreements_same_constant += (qg != oracle_is_w_separable(&ext, w)?.is_some()) as usize;
            }
            for i in 1..=n {
                for code in 0..q * q {
                    let (b, c) = (code / q, code % q);
                    let g = retract_function(&f, i, b, c)?;
                    if retract(&t, i, code)? != build_qfa(&g, (a + q - b) % q)? {
                        r.retract_identity_failures += 1;
                    }
                }
                if invert(&t, i)? != build_qfa(&ext.swap_with_x0(i)?.f, a)? {
                    r.inverse_identity_failures += 1;
                }
            }
        }
    }
    Ok(r)
}

/// Retract implication over seeded random quadratics and every constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationReport {
    pub q: u32,
    pub n: usize,
    pub seed: u64,
    pub instances: usize,
    pub premise_instances: usize,
    pub violations: usize,
}

impl ImplicationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

pub fn verify_retract_implication(q: u32, n: usize, count: usize, seed: u64) -> Result<ImplicationReport> {
    use crate::function::{random_quadratic, table_from_poly};
    let mut rng = crate::rng::SampleRng::new(seed);
    let mut r = ImplicationReport { q, n, seed, instances: 0, premise_instances: 0, violations: 0 };
    for _ in 0..count {
        let f = table_from_poly(&random_quadratic(q, n, &mut rng)?)?;
        for a in 0..q {
            let rep = verify_retract_corollary(&f, a)?;
            r.instances += 1;
            r.premise_instances += rep.all_retracts_separable as usize;
            r.violations += !rep.implication_holds() as usize;
        }
    }
    Ok(r)
}
