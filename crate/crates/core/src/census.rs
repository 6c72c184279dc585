//! Exhaustive scans over switching classes.
//!
//! Every class has exactly one member with vertex 0 isolated up to the
//! residual shift of all remaining weights by `2t`. Fixing the weight of
//! `{1, 2}` to `[0, gcd(2, q))` removes that shift, so classes are indexed
//! directly by mixed-radix integers: the `{1, 2}` digit has radix
//! `gcd(2, q)`, every later pair among `1..n` has radix `q`.
//!
//! Work is split into fixed-size index chunks and merged in chunk order, so
//! reports do not depend on the thread count.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{make_family, FamilyParams};
use crate::graph::WeightedGraph;
use crate::iso::switching_isomorphic;
use crate::json::GraphJson;
use crate::rng::SampleRng;
use crate::separability::{is_critical, nonseparable_subgraph_count, separable, Combinations};
use crate::zq;

pub const DEFAULT_BUDGET: u128 = 100_000_000;
pub const DEFAULT_SAMPLES: u64 = 10_000;
const CHUNK: u64 = 1024;
const MAX_REPORTED: usize = 16;

/// Closed-form number of switching classes: `q^C(n,2) * gcd(2,q) / q^n`.
pub fn class_count(q: u32, n: usize) -> u128 {
    if n <= 2 {
        return 1;
    }
    let g = zq::gcd(2, q) as u128;
    let free = (n - 1) * (n - 2) / 2 - 1;
    g * (q as u128).pow(free as u32)
}

/// Source of class representatives.
#[derive(Debug, Clone, Copy)]
pub struct RepSpace {
    q: u8,
    n: usize,
    count: u64,
}

impl RepSpace {
    pub fn new(q: u32, n: usize, budget: u128) -> Result<Self> {
        if !(2..=crate::graph::MAX_MODULUS).contains(&q) {
            return Err(Error::Modulus(q));
        }
        if n > 64 {
            return Err(Error::Invalid(format!("n = {n} exceeds 64")));
        }
        let required = class_count(q, n);
        if required > budget || required > u64::MAX as u128 {
            return Err(Error::Budget { required, budget });
        }
        Ok(Self { q: q as u8, n, count: required as u64 })
    }

    pub fn len(&self) -> u64 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// The representative with the given index.
    pub fn rep(&self, mut index: u64) -> WeightedGraph {
        let q = self.q as u64;
        let g = zq::gcd(2, self.q as u32) as u64;
        let m = self.n.saturating_sub(1);
        let mut upper = vec![0u8; self.n * (self.n.saturating_sub(1)) / 2];
        let mut first = true;
        let mut pos = self.n.saturating_sub(1); // skip row 0
        for u in 1..self.n {
            for _ in u + 1..self.n {
                let radix = if first { g } else { q };
                first = false;
                upper[pos] = (index % radix) as u8;
                index /= radix;
                pos += 1;
            }
        }
        debug_assert!(m == 0 || pos == upper.len());
        WeightedGraph::from_upper(self.q, self.n, &upper)
    }

    pub fn iter(&self) -> impl Iterator<Item = WeightedGraph> + '_ {
        (0..self.count).map(|i| self.rep(i))
    }

    /// Applies `f` to every representative in parallel; results come back in
    /// index order.
    fn par_map<T: Send>(&self, jobs: usize, f: impl Fn(u64, &WeightedGraph) -> Option<T> + Sync) -> Vec<(u64, T)> {
        let chunks = self.count.div_ceil(CHUNK);
        let run = || {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let end = ((c + 1) * CHUNK).min(self.count);
                    (c * CHUNK..end).filter_map(|i| f(i, &self.rep(i)).map(|t| (i, t))).collect::<Vec<_>>()
                })
                .collect::<Vec<_>>()
                .into_iter()
                .flatten()
                .collect()
        };
        with_jobs(jobs, run)
    }
}

fn with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool").install(f)
}

/// Counts classes by canonicalizing every graph; the cross-check for
/// [`class_count`].
pub fn count_classes_by_scan(q: u32, n: usize, budget: u128) -> Result<u64> {
    if !(2..=crate::graph::MAX_MODULUS).contains(&q) {
        return Err(Error::Modulus(q));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let total = (q as u128).checked_pow(pairs as u32).unwrap_or(u128::MAX);
    if total > budget {
        return Err(Error::Budget { required: total, budget });
    }
    let mut seen = HashSet::new();
    let mut upper = vec![0u8; pairs];
    for mut code in 0..total as u64 {
        for d in upper.iter_mut() {
            *d = (code % q as u64) as u8;
            code /= q as u64;
        }
        seen.insert(WeightedGraph::from_upper(q as u8, n, &upper).canonical_rep().upper_triangle());
    }
    Ok(seen.len() as u64)
}

/// One critical class matched to a family member:
/// `switch(permute(family(gamma), permutation), labeling)` is the class rep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub class: usize,
    pub gamma: u32,
    pub permutation: Vec<usize>,
    pub labeling: Vec<u32>,
}

/// How a family member relates to the critical classes found.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyMember {
    pub gamma: u32,
    /// critical classes whose first match is this member
    pub matched_classes: usize,
    /// other members switching-isomorphic to this one
    pub isomorphic_to: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub q: u32,
    pub n: usize,
    pub classes_scanned: u64,
    pub expected_classes: u64,
    pub critical_classes: Vec<GraphJson>,
    pub matched_family: Vec<FamilyMatch>,
    pub family_members: Vec<FamilyMember>,
    pub property_violations: Vec<String>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.property_violations.is_empty()
    }
}

/// Finds every critical class and matches each one against the family.
///
/// Violations: a critical class for odd `q` or even `n`, a critical class
/// with no family match, or a family member that is not critical.
pub fn find_critical(q: u32, n: usize, jobs: usize, budget: u128) -> Result<CensusReport> {
    let start = Instant::now();
    let space = RepSpace::new(q, n, budget)?;
    let hits = space.par_map(jobs, |_, g| is_critical(g).then(|| g.canonical_rep()));
    let critical: Vec<WeightedGraph> = hits.into_iter().map(|(_, g)| g).collect();
    let mut violations = Vec::new();
    let family: Vec<(u32, WeightedGraph)> = match FamilyParams::new(n, q, 0) {
        Ok(_) => (0..q).map(|gamma| (gamma, make_family(FamilyParams { n, q, gamma }).expect("valid"))).collect(),
        Err(_) => Vec::new(),
    };
    let matches: Vec<Option<FamilyMatch>> = with_jobs(jobs, || {
        critical
            .par_iter()
            .enumerate()
            .map(|(class, rep)| {
                family.iter().find_map(|(gamma, fam)| {
                    switching_isomorphic(fam, rep).expect("same shape").map(|w| FamilyMatch {
                        class,
                        gamma: *gamma,
                        permutation: w.permutation,
                        labeling: w.labeling.labels().iter().map(|&x| x as u32).collect(),
                    })
                })
            })
            .collect()
    });
    let mut matched_family = Vec::new();
    for (class, m) in matches.into_iter().enumerate() {
        match m {
            Some(m) => matched_family.push(m),
            None => violations.push(format!("critical class {class} matches no family member")),
        }
    }
    let mut family_members = Vec::new();
    for (gamma, fam) in &family {
        if !is_critical(fam) {
            violations.push(format!("family member gamma={gamma} is not critical"));
        }
        let isomorphic_to = family
            .iter()
            .filter(|(other, h)| other != gamma && switching_isomorphic(fam, h).expect("same shape").is_some())
            .map(|(other, _)| *other)
            .collect();
        let matched_classes = matched_family.iter().filter(|m| m.gamma == *gamma).count();
        family_members.push(FamilyMember { gamma: *gamma, matched_classes, isomorphic_to });
    }
    Ok(CensusReport {
        q,
        n,
        classes_scanned: space.len(),
        expected_classes: class_count(q, n) as u64,
        critical_classes: critical.iter().map(GraphJson::from).collect(),
        matched_family,
        family_members,
        property_violations: violations,
        wall_time: start.elapsed(),
    })
}

/// Structural properties checked over a census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// a separable graph on at least 5 vertices has 0 or 2 nonseparable
    /// vertex-deleted subgraphs
    Nss,
    /// all subgraphs of orders n-1 and n-2 separable implies separable
    C2rs,
    /// all subgraphs of orders 4 and 5 separable implies separable
    Allsep,
    /// a nonseparable kernel of order 4..=n-3 whose one- and two-vertex
    /// extensions are all separable forces the graph to be separable
    T2rs,
    /// with an isolated vertex, exchanging two weights keeps separability
    Czm,
}

impl Check {
    pub const ALL: [Check; 5] = [Check::Nss, Check::C2rs, Check::Allsep, Check::T2rs, Check::Czm];

    pub fn name(self) -> &'static str {
        match self {
            Check::Nss => "nss",
            Check::C2rs => "c2rs",
            Check::Allsep => "allsep",
            Check::T2rs => "t2rs",
            Check::Czm => "czm",
        }
    }

    pub fn parse(name: &str) -> Result<Self> {
        Self::ALL.into_iter().find(|c| c.name() == name).ok_or_else(|| Error::UnknownCheck(name.to_string()))
    }

    /// `(premise holds, property violated)` for one graph.
    pub fn evaluate(self, g: &WeightedGraph) -> (bool, bool) {
        let n = g.n();
        let sub_sep = |size: usize| all_subsets_separable(g, size);
        match self {
            Check::Nss => {
                if n >= 5 && separable(g) {
                    (true, !matches!(nonseparable_subgraph_count(g), 0 | 2))
                } else {
                    (false, false)
                }
            }
            Check::C2rs => {
                let premise = n >= 3 && sub_sep(n - 1) && sub_sep(n - 2);
                (premise, premise && !separable(g))
            }
            Check::Allsep => {
                let premise = n >= 5 && sub_sep(4) && sub_sep(5);
                (premise, premise && !separable(g))
            }
            Check::T2rs => {
                let premise = n >= 7 && (4..=n - 3).any(|chi| has_kernel(g, chi));
                (premise, premise && !separable(g))
            }
            Check::Czm => {
                if !(g.has_isolated_vertex() && separable(g)) {
                    return (false, false);
                }
                let q = g.q();
                let broken = (0..q).any(|i| (i + 1..q).any(|j| !separable(&g.swap_weights(i, j).expect("in range"))));
                (true, broken)
            }
        }
    }
}

fn all_subsets_separable(g: &WeightedGraph, size: usize) -> bool {
    let mut c = Combinations::new(g.n(), size);
    while let Some(s) = c.advance() {
        if !separable(&g.induced_ordered(s)) {
            return false;
        }
    }
    true
}

/// A nonseparable induced subgraph on `chi` vertices whose every induced
/// supergraph with one or two more vertices is separable.
fn has_kernel(g: &WeightedGraph, chi: usize) -> bool {
    let n = g.n();
    let mut c = Combinations::new(n, chi);
    while let Some(k) = c.advance() {
        if separable(&g.induced_ordered(k)) {
            continue;
        }
        let outside: Vec<usize> = (0..n).filter(|v| !k.contains(v)).collect();
        let grown_ok = |extra: usize| {
            let mut e = Combinations::new(outside.len(), extra);
            while let Some(add) = e.advance() {
                let mut s: Vec<usize> = k.to_vec();
                s.extend(add.iter().map(|&i| outside[i]));
                s.sort_unstable();
                if !separable(&g.induced_ordered(&s)) {
                    return false;
                }
            }
            true
        };
        if grown_ok(1) && grown_ok(2) {
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub q: u32,
    pub n: usize,
    pub mode: ScanMode,
    pub seed: Option<u64>,
    pub graphs_scanned: u64,
    pub premise_instances: u64,
    pub violation_count: u64,
    /// the first few violating graphs
    pub violations: Vec<GraphJson>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

/// Sampling request; `None` runs exhaustively when the budget allows and
/// otherwise falls back to `DEFAULT_SAMPLES` samples with seed 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sampling {
    pub seed: u64,
    pub samples: u64,
}

/// A uniformly random class representative: vertex 0 isolated, every other
/// weight drawn independently.
pub fn random_rep(q: u32, n: usize, rng: &mut SampleRng) -> WeightedGraph {
    let pairs = n * n.saturating_sub(1) / 2;
    let mut upper = vec![0u8; pairs];
    for d in upper.iter_mut().skip(n.saturating_sub(1)) {
        *d = rng.below(q) as u8;
    }
    WeightedGraph::from_upper(q as u8, n, &upper)
}

pub fn run_check(
    check: Check,
    q: u32,
    n: usize,
    sampling: Option<Sampling>,
    jobs: usize,
    budget: u128,
) -> Result<CheckReport> {
    let exhaustive = match sampling {
        Some(_) => None,
        None => match RepSpace::new(q, n, budget) {
            Ok(space) => Some(space),
            Err(Error::Budget { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    let tally = |hits: Vec<(u64, (bool, bool, WeightedGraph))>, scanned: u64, mode, seed| {
        let premise_instances = hits.iter().filter(|h| h.1 .0).count() as u64;
        let bad: Vec<&WeightedGraph> = hits.iter().filter(|h| h.1 .1).map(|h| &h.1 .2).collect();
        CheckReport {
            check: check.name().to_string(),
            q,
            n,
            mode,
            seed,
            graphs_scanned: scanned,
            premise_instances,
            violation_count: bad.len() as u64,
            violations: bad.into_iter().take(MAX_REPORTED).map(GraphJson::from).collect(),
        }
    };
    let eval = |g: &WeightedGraph| {
        let (premise, violated) = check.evaluate(g);
        premise.then(|| (premise, violated, g.clone()))
    };
    if let Some(space) = exhaustive {
        let hits = space.par_map(jobs, |_, g| eval(g));
        return Ok(tally(hits, space.len(), ScanMode::Exhaustive, None));
    }
    let Sampling { seed, samples } = sampling.unwrap_or(Sampling { seed: 0, samples: DEFAULT_SAMPLES });
    if !(2..=crate::graph::MAX_MODULUS).contains(&q) {
        return Err(Error::Modulus(q));
    }
    let mut rng = SampleRng::new(seed);
    let graphs: Vec<WeightedGraph> = (0..samples).map(|_| random_rep(q, n, &mut rng)).collect();
    let hits: Vec<(u64, (bool, bool, WeightedGraph))> = with_jobs(jobs, || {
        graphs.par_iter().enumerate().filter_map(|(i, g)| eval(g).map(|t| (i as u64, t))).collect()
    });
    Ok(tally(hits, samples, ScanMode::Sampled, Some(seed)))
}
