//! Separable vertex sets with certificates.
//!
//! Usage: `cargo run --example separable_sets -- [graph.json]`.

use switchsep::json::{self, GraphJson};
use switchsep::{is_separable, nontrivial_separable_sets, verify_certificate, WeightedGraph};

fn main() -> switchsep::Result<()> {
    let g = match std::env::args().nth(1) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| switchsep::Error::Invalid(format!("{path}: {e}")))?;
            json::parse::<GraphJson>(&text)?.to_graph()?
        }
        // two triangles joined by a constant bundle: {0,1,2} splits off
        None => WeightedGraph::new(
            4,
            6,
            &[(0, 1, 1), (1, 2, 3), (3, 4, 2), (4, 5, 1), (0, 3, 2), (0, 4, 2), (0, 5, 2), (1, 3, 1), (1, 4, 1), (1, 5, 1)],
        )?,
    };
    println!("graph: q={} n={} edges={:?}", g.q(), g.n(), g.edges());

    let sets = nontrivial_separable_sets(&g);
    println!("{} nontrivial separable sets containing 0", sets.len());
    for cert in &sets {
        let classes: Vec<u8> = (0..g.n()).map(|v| cert.class_of(v)).collect();
        println!("  W={:?} labels={:?} classes={classes:?} ok={}", cert.set, cert.labels.labels(), verify_certificate(&g, cert));
    }
    match is_separable(&g) {
        Some(c) => println!("separable, first witness {}", json::to_string(&c.to_json())),
        None => println!("not separable"),
    }
    Ok(())
}
