//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;

use common::{all_graphs, brute_separated_masks};
use switchsep::census::{
    class_count, count_classes_by_scan, find_critical, run_check, Check, CensusReport, Sampling, DEFAULT_BUDGET,
};
use switchsep::function::{
    candidate_sets_all, extension_of, is_w_separable_quadratic, oracle_is_w_separable, random_quadratic,
    reduce_mod_constraint, PolynomialZq,
};
use switchsep::manifest::PINNED;
use switchsep::quasigroup::{verify_correspondence, verify_retract_implication};
use switchsep::rng::SampleRng;
use switchsep::{is_separable_set, json, verify_family_critical, FamilyParams};

const SEED: u64 = 20240517;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

type Censuses = BTreeMap<(u32, usize), CensusReport>;

fn census(cache: &mut Censuses, q: u32, n: usize) -> &CensusReport {
    cache.entry((q, n)).or_insert_with(|| find_critical(q, n, 0, DEFAULT_BUDGET).expect("census"))
}

fn odd_moduli(cache: &mut Censuses) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for (q, n) in [(3, 5), (3, 6), (5, 5)] {
        let r = census(cache, q, n);
        pass &= r.critical_classes.is_empty() && r.passed() && r.classes_scanned as u128 == class_count(q, n);
        parts.push(format!("q={q} n={n}: {} critical of {}", r.critical_classes.len(), r.classes_scanned));
    }
    outcome(pass, parts.join(", "))
}

fn even_moduli(cache: &mut Censuses) -> Outcome {
    let mut parts = Vec::new();
    let mut pass = true;
    for (q, n) in [(2, 5), (2, 7), (4, 5)] {
        let r = census(cache, q, n);
        let found = r.critical_classes.len();
        pass &= found >= 1 && r.matched_family.len() == found && r.passed();
        parts.push(format!("q={q} n={n}: {found} critical, {} matched", r.matched_family.len()));
    }
    outcome(pass, parts.join(", "))
}

fn family_direct() -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for n in [5, 7, 9] {
        for q in [2, 4, 6] {
            for gamma in [0, 1] {
                total += 1;
                let r = verify_family_critical(FamilyParams::new(n, q, gamma).expect("params")).expect("verify");
                if !r.passed() {
                    failures.push(format!("(n={n} q={q} gamma={gamma})"));
                }
            }
        }
    }
    let mut detail = format!("{} of {total} members critical", total - failures.len());
    if !failures.is_empty() {
        detail += &format!(", failing {}", failures.join(" "));
    }
    outcome(failures.is_empty(), detail)
}

fn check_line(check: Check, cases: &[(u32, usize, Option<Sampling>)]) -> (bool, Vec<String>) {
    let mut pass = true;
    let mut parts = Vec::new();
    for &(q, n, sampling) in cases {
        let r = run_check(check, q, n, sampling, 0, DEFAULT_BUDGET).expect("check");
        pass &= r.violation_count == 0;
        parts.push(format!(
            "{} q={q} n={n} {:?}: {} premise, {} violations",
            check.name(),
            r.mode,
            r.premise_instances,
            r.violation_count
        ));
    }
    (pass, parts)
}

fn deleted_subgraphs() -> Outcome {
    let (pass, parts) = check_line(Check::Nss, &[(2, 5, None), (2, 6, None), (3, 5, None)]);
    outcome(pass, parts.join(", "))
}

fn small_subgraphs() -> Outcome {
    let sampled = Some(Sampling { seed: SEED, samples: 10_000 });
    let cases = [(2, 6, None), (3, 5, None), (3, 7, sampled)];
    let (p1, mut parts) = check_line(Check::C2rs, &cases);
    let (p2, more) = check_line(Check::Allsep, &cases);
    parts.extend(more);
    outcome(p1 && p2, parts.join(", "))
}

fn propagation_vs_brute() -> Outcome {
    let mut compared = 0u64;
    let mut disagreements = 0u64;
    for q in 2..=3 {
        for n in 2..=5 {
            for g in all_graphs(q, n) {
                let brute = brute_separated_masks(&g);
                for (mask, &expected) in brute.iter().enumerate().take((1 << n) - 1).skip(1) {
                    let set: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                    let got = is_separable_set(&g, &set).expect("set").is_some();
                    compared += 1;
                    disagreements += (got != expected) as u64;
                }
            }
        }
    }
    outcome(disagreements == 0, format!("{compared} (graph, W) pairs, {disagreements} disagreements"))
}

/// Graph verdict against the functional oracle for every admissible set and constant.
fn compare_quadratic(p: &PolynomialZq, n: usize) -> (u64, u64) {
    let (mut compared, mut bad) = (0, 0);
    for a in 0..p.q() {
        let e = extension_of(&reduce_mod_constraint(p, a).expect("reduce"), a).expect("extension");
        for w in candidate_sets_all(n) {
            let graph = is_w_separable_quadratic(p, &w).expect("graph side");
            let oracle = oracle_is_w_separable(&e, &w).expect("oracle").is_some();
            compared += 1;
            bad += (graph != oracle) as u64;
        }
    }
    (compared, bad)
}

fn quadratic_bridge() -> Outcome {
    let q = 3u32;
    let mut rng = SampleRng::new(SEED);
    let (mut compared, mut bad) = (0, 0);
    // every cross-coefficient pattern on 4 variables, with seeded affine and square terms
    let pairs: Vec<(usize, usize)> = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).collect();
    for mut code in 0..3u32.pow(6) {
        let mut p = PolynomialZq::zero(q, 4).expect("poly");
        for &(i, j) in &pairs {
            let mut e = vec![0u32; 4];
            e[i] = 1;
            e[j] = 1;
            p.add_term(&e, (code % 3) as i64).expect("term");
            code /= 3;
        }
        for i in 0..4 {
            let mut e = vec![0u32; 4];
            e[i] = 1;
            p.add_term(&e, rng.below(q) as i64).expect("term");
            e[i] = 2;
            p.add_term(&e, rng.below(q) as i64).expect("term");
        }
        let (c, b) = compare_quadratic(&p, 3);
        compared += c;
        bad += b;
    }
    let exhaustive = format!("729 patterns: {compared} comparisons, {bad} disagreements");
    let (mut compared2, mut bad2) = (0, 0);
    for _ in 0..1000 {
        let p = random_quadratic(q, 5, &mut rng).expect("poly");
        let (c, b) = compare_quadratic(&p, 4);
        compared2 += c;
        bad2 += b;
    }
    outcome(
        bad == 0 && bad2 == 0,
        format!("{exhaustive}; 1000 random: {compared2} comparisons, {bad2} disagreements"),
    )
}

fn quasigroup_bridge() -> Outcome {
    let c = verify_correspondence(3, 3, 100, SEED).expect("correspondence");
    let i3 = verify_retract_implication(3, 3, 100, SEED).expect("implication");
    let i4 = verify_retract_implication(3, 4, 20, SEED).expect("implication");
    outcome(
        c.passed() && i3.passed() && i4.passed(),
        format!(
            "{} comparisons, {} disagreements, retract failures {}, inverse failures {}; \
             retract implication n=3: {} premise / {} violations, n=4: {} premise / {} violations",
            c.comparisons,
            c.disagreements,
            c.retract_identity_failures,
            c.inverse_identity_failures,
            i3.premise_instances,
            i3.violations,
            i4.premise_instances,
            i4.violations
        ),
    )
}

fn regression_pins(cache: &mut Censuses) -> Outcome {
    let mut problems = Vec::new();
    for pin in PINNED {
        if class_count(pin.q, pin.n) != pin.classes as u128 {
            problems.push(format!("closed form q={} n={}", pin.q, pin.n));
        }
        if pin.classes <= 4096 {
            let scanned = count_classes_by_scan(pin.q, pin.n, DEFAULT_BUDGET).expect("scan");
            if scanned != pin.classes {
                problems.push(format!("scan q={} n={}: {scanned}", pin.q, pin.n));
            }
        }
        let r = census(cache, pin.q, pin.n);
        if r.critical_classes.len() != pin.critical_classes || r.classes_scanned != pin.classes {
            problems.push(format!("census q={} n={}", pin.q, pin.n));
        }
    }
    // byte-identical reports across thread counts and repeated runs
    for (q, n) in [(2, 5), (2, 7), (4, 5)] {
        let base = json::to_string(census(cache, q, n));
        for jobs in [1, 3, 8] {
            let again = json::to_string(&find_critical(q, n, jobs, DEFAULT_BUDGET).expect("census"));
            if again != base {
                problems.push(format!("report drift q={q} n={n} jobs={jobs}"));
            }
        }
    }
    let sampled = Sampling { seed: SEED, samples: 2000 };
    let a = json::to_string(&run_check(Check::C2rs, 3, 7, Some(sampled), 1, DEFAULT_BUDGET).expect("check"));
    let b = json::to_string(&run_check(Check::C2rs, 3, 7, Some(sampled), 4, DEFAULT_BUDGET).expect("check"));
    if a != b {
        problems.push("sampled check drift".into());
    }
    outcome(problems.is_empty(), format!("{} pins; {}", PINNED.len(), if problems.is_empty() { "all reproduce".into() } else { problems.join(", ") }))
}

fn main() -> ExitCode {
    let mut cache = Censuses::new();
    let results = [
        odd_moduli(&mut cache),
        even_moduli(&mut cache),
        family_direct(),
        deleted_subgraphs(),
        small_subgraphs(),
        propagation_vs_brute(),
        quadratic_bridge(),
        quasigroup_bridge(),
        regression_pins(&mut cache),
    ];
    let mut ok = true;
    for (k, r) in results.iter().enumerate() {
        println!("criterion {}: {} {}", k + 1, if r.pass { "PASS" } else { "FAIL" }, r.detail);
        ok &= r.pass;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
