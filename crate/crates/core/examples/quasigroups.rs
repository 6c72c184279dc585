//! n-ary quasigroups of order q^2 built from functions over Z_q.

use switchsep::function::FunctionTable;
use switchsep::quasigroup::{
    build_qfa, invert, is_quasigroup, is_separable_qg, retract, verify_correspondence, verify_retract_corollary,
};

fn main() -> switchsep::Result<()> {
    // f(x) = x_1 x_2 + x_3
    let f = FunctionTable::from_fn(3, 3, |x| (x[0] * x[1] + x[2]) % 3)?;
    let t = build_qfa(&f, 0)?;
    println!("order {} arity {}: latin={}", t.m(), t.n(), is_quasigroup(&t));
    // elements are pairs [x, y] coded as 3x + y
    println!("Q([0,1],[2,2],[1,0]) = {}", t.get(&[1, 8, 3]));

    match is_separable_qg(&t, false)? {
        Some(d) => println!("separable: W={:?} (inverted at {:?})", d.w, d.inverted_at),
        None => println!("not separable"),
    }
    let r = retract(&t, 3, 4)?;
    println!("retract at position 3 by [1,1]: arity {} latin={}", r.n(), is_quasigroup(&r));
    let inv = invert(&t, 2)?;
    println!("inverse in position 2 is latin: {}", is_quasigroup(&inv));

    let rep = verify_retract_corollary(&f, 0)?;
    println!("all retracts separable: {}, implication holds: {}", rep.all_retracts_separable, rep.implication_holds());

    let c = verify_correspondence(3, 3, 10, 1)?;
    println!(
        "10 random quadratics: {} comparisons, {} disagreements, passed={}",
        c.comparisons,
        c.disagreements,
        c.passed()
    );
    Ok(())
}
