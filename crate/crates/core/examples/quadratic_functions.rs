//! Quadratic partial functions: reduction, graph, and separability both ways.

use switchsep::function::{
    extension_of, graph_of_quadratic, is_separable_extension, oracle_is_w_separable, random_quadratic,
    reduce_mod_constraint, separable_set_quadratic, PolynomialZq,
};
use switchsep::rng::SampleRng;

fn main() -> switchsep::Result<()> {
    // x_1 x_2 + 2 x_3 x_0 over Z_3, hidden variable last
    let p = PolynomialZq::from_terms(3, 4, &[(vec![1, 1, 0, 0], 1), (vec![0, 0, 1, 1], 2)])?;
    let a = 1;
    let tau = reduce_mod_constraint(&p, a)?;
    println!("reduced (a={a}): {}", serde_json::to_string(&tau.to_json()).expect("json"));
    println!("graph: {:?}", graph_of_quadratic(&p)?.edges());
    println!("graph says: {:?}", separable_set_quadratic(&p)?);

    let e = extension_of(&tau, a)?;
    match is_separable_extension(&e)? {
        Some(d) => println!("oracle: W={:?} U={:?}, f_W={:?}", d.w, d.u, d.f_w.values()),
        None => println!("oracle: not separable"),
    }

    let mut rng = SampleRng::new(7);
    let mut agree = 0;
    for _ in 0..200 {
        let p = random_quadratic(3, 5, &mut rng)?;
        let e = extension_of(&reduce_mod_constraint(&p, 0)?, 0)?;
        let graph = separable_set_quadratic(&p)?;
        let oracle = match &graph {
            Some(w) => oracle_is_w_separable(&e, w)?.is_some(),
            None => is_separable_extension(&e)?.is_some(),
        };
        agree += (graph.is_some() == oracle) as usize;
    }
    println!("random quadratics in 4 visible variables: {agree}/200 verdicts agree");
    Ok(())
}
