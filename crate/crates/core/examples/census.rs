//! Critical-class census and structural checks over all switching classes.
//!
//! Usage: `cargo run --example census -- [q] [n]` (defaults: q = 2, n = 5).

use switchsep::census::{class_count, find_critical, run_check, Check, DEFAULT_BUDGET};

fn main() -> switchsep::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let q: u32 = args.first().and_then(|s| s.parse().ok()).unwrap_or(2);
    let n: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(5);

    println!("q={q} n={n}: {} switching classes", class_count(q, n));
    let report = find_critical(q, n, 0, DEFAULT_BUDGET)?;
    println!("critical classes: {} ({:.2?})", report.critical_classes.len(), report.wall_time);
    for m in &report.matched_family {
        println!("  class {} ~ family gamma={} via permutation {:?}", m.class, m.gamma, m.permutation);
    }
    for member in &report.family_members {
        println!("  gamma={} matched {} classes, isomorphic to {:?}", member.gamma, member.matched_classes, member.isomorphic_to);
    }
    for check in Check::ALL {
        let r = run_check(check, q, n, None, 0, DEFAULT_BUDGET)?;
        println!(
            "{:>6}: {:?}, {} graphs, {} premise instances, {} violations",
            r.check, r.mode, r.graphs_scanned, r.premise_instances, r.violation_count
        );
    }
    Ok(())
}
