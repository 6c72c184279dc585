//! The exceptional critical graphs for even q and odd n.

use switchsep::{is_critical, make_family, switching_isomorphic, verify_family_critical, FamilyParams};

fn main() -> switchsep::Result<()> {
    for (n, q) in [(5, 2), (7, 4), (9, 6)] {
        for gamma in 0..2 {
            let p = FamilyParams::new(n, q, gamma)?;
            let r = verify_family_critical(p)?;
            println!("n={n} q={q} gamma={gamma}: critical={} separable={}", r.critical, r.separable);
            if let Some(w) = r.witnesses.first() {
                println!("  without {}: {{{}, {}}} separates", w.deleted, w.pair[0], w.pair[1]);
            }
        }
    }

    let g0 = make_family(FamilyParams::new(5, 2, 0)?)?;
    let g1 = make_family(FamilyParams::new(5, 2, 1)?)?;
    println!("G(5,0) critical: {}", is_critical(&g0));
    match switching_isomorphic(&g0, &g1)? {
        Some(w) => println!("G(5,0) ~ G(5,1) via {:?}, labels {:?}", w.permutation, w.labeling.labels()),
        None => println!("G(5,0) and G(5,1) are not switching isomorphic"),
    }
    // odd q has no such family
    println!("q=3 rejected: {}", FamilyParams::new(5, 3, 0).is_err());
    Ok(())
}
