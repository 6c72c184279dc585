use proptest::prelude::*;
use switchsep::function::{
    extension_of, graph_of_quadratic, poly_from_table, reduce_mod_constraint, table_from_poly, FunctionTable,
    PartialExtension, PolynomialZq,
};
use switchsep::json::GraphJson;
use switchsep::quasigroup::{build_qfa, invert, is_quasigroup, retract};
use switchsep::{
    is_separable, is_separable_set, nontrivial_separable_sets, separable, verify_certificate, VertexLabeling,
    WeightedGraph,
};

fn graph(max_q: u32, max_n: usize) -> impl Strategy<Value = WeightedGraph> {
    (2..=max_q, 1..=max_n).prop_flat_map(|(q, n)| {
        proptest::collection::vec(0..q, n * (n - 1) / 2).prop_map(move |upper| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v, upper[k]));
                    k += 1;
                }
            }
            WeightedGraph::new(q, n, &edges).unwrap()
        })
    })
}

fn labeling_for(g: &WeightedGraph) -> impl Strategy<Value = VertexLabeling> {
    let q = g.q();
    proptest::collection::vec(0..q, g.n()).prop_map(move |l| VertexLabeling::new(q, l).unwrap())
}

fn graph_and_labelings(max_q: u32, max_n: usize) -> impl Strategy<Value = (WeightedGraph, VertexLabeling, VertexLabeling)> {
    graph(max_q, max_n).prop_flat_map(|g| {
        let (a, b) = (labeling_for(&g), labeling_for(&g));
        (Just(g), a, b)
    })
}

fn table(q: u32, n: usize) -> impl Strategy<Value = FunctionTable> {
    proptest::collection::vec(0..q, q.pow(n as u32) as usize).prop_map(move |v| FunctionTable::new(q, n, v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn switching_composes((g, a, b) in graph_and_labelings(6, 7)) {
        let twice = g.switch(&a).unwrap().switch(&b).unwrap();
        prop_assert_eq!(twice, g.switch(&a.add(&b).unwrap()).unwrap());
        prop_assert_eq!(g.switch(&a).unwrap().switch(&a.negate()).unwrap(), g.clone());
        let additive = WeightedGraph::additive(&a);
        prop_assert!(additive.is_additive().is_some());
        prop_assert_eq!(WeightedGraph::additive(&additive.is_additive().unwrap()), additive);
    }

    #[test]
    fn canonical_form_is_a_class_invariant((g, a, _b) in graph_and_labelings(5, 7)) {
        let c = g.canonical_rep();
        prop_assert_eq!(g.switch(&a).unwrap().canonical_rep(), c.clone());
        prop_assert_eq!(c.canonical_rep(), c.clone());
        let lab = g.switching_equivalent(&c).unwrap();
        prop_assert!(lab.is_some());
        prop_assert_eq!(g.switch(&lab.unwrap()).unwrap(), c);
    }

    #[test]
    fn induced_subgraphs_commute_with_switching((g, a, _b) in graph_and_labelings(4, 7), mask in 0u32..128) {
        let subset: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        let lhs = g.switch(&a).unwrap().induced_subgraph(&subset).unwrap();
        let rhs = g.induced_subgraph(&subset).unwrap().switch(&a.restrict(&subset)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn separability_survives_switching((g, a, _b) in graph_and_labelings(4, 7)) {
        let h = g.switch(&a).unwrap();
        prop_assert_eq!(separable(&g), separable(&h));
        prop_assert_eq!(
            nontrivial_separable_sets(&g).into_iter().map(|c| c.set).collect::<Vec<_>>(),
            nontrivial_separable_sets(&h).into_iter().map(|c| c.set).collect::<Vec<_>>()
        );
    }

    #[test]
    fn certificates_verify(g in graph(4, 8), mask in 1u32..255) {
        let subset: Vec<usize> = (0..g.n()).filter(|v| mask >> v & 1 == 1).collect();
        if let Some(cert) = is_separable_set(&g, &subset).unwrap() {
            prop_assert!(verify_certificate(&g, &cert));
            let wire = cert.to_json().into_certificate(g.q()).unwrap();
            prop_assert_eq!(wire, cert);
        }
        if let Some(cert) = is_separable(&g) {
            prop_assert!(verify_certificate(&g, &cert));
        }
    }

    #[test]
    fn graph_json_round_trips(g in graph(7, 8)) {
        let text = switchsep::json::to_string(&GraphJson::from(&g));
        let back: GraphJson = switchsep::json::parse(&text).unwrap();
        prop_assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn swapping_weights_twice_is_identity(g in graph(5, 6), i in 0u32..5, j in 0u32..5) {
        let (i, j) = (i % g.q(), j % g.q());
        prop_assert_eq!(g.swap_weights(i, j).unwrap().swap_weights(i, j).unwrap(), g);
    }

    #[test]
    fn interpolation_round_trips(t in table(3, 3)) {
        let p = poly_from_table(&t);
        prop_assert_eq!(table_from_poly(&p).unwrap(), t);
    }

    #[test]
    fn reduction_preserves_hyperplane_values(t in table(5, 2), a in 0u32..5) {
        // any polynomial agreeing with the table on the hyperplane reduces to it
        let p = poly_from_table(&t).widen(1);
        let reduced = reduce_mod_constraint(&p, a).unwrap();
        prop_assert_eq!(table_from_poly(&reduced).unwrap(), t);
    }

    #[test]
    fn swap_with_hidden_is_an_involution(t in table(3, 3), a in 0u32..3, i in 1usize..=3) {
        let e = PartialExtension::new(t, a);
        prop_assert_eq!(e.swap_with_x0(i).unwrap().swap_with_x0(i).unwrap(), e);
    }

    #[test]
    fn quadratic_graphs_have_n_plus_one_vertices(t in table(3, 2), a in 0u32..3) {
        let e = extension_of(&poly_from_table(&t), a).unwrap();
        prop_assert_eq!(e.f, t.clone());
        let p = poly_from_table(&t).widen(1);
        if p.degree() <= 2 {
            prop_assert_eq!(graph_of_quadratic(&p).unwrap().n(), 3);
        } else {
            prop_assert!(graph_of_quadratic(&p).is_err());
        }
    }

    #[test]
    fn constructed_quasigroups_stay_latin(t in table(3, 2), a in 0u32..3, pos in 1usize..=2, c in 0u32..9) {
        let qg = build_qfa(&t, a).unwrap();
        prop_assert!(is_quasigroup(&qg));
        prop_assert!(is_quasigroup(&retract(&qg, pos, c).unwrap()));
        let inv = invert(&qg, pos).unwrap();
        prop_assert!(is_quasigroup(&inv));
        prop_assert_eq!(invert(&inv, pos).unwrap(), qg);
    }

    #[test]
    fn polynomial_arithmetic_matches_evaluation(
        c1 in proptest::collection::vec(0i64..7, 4),
        c2 in proptest::collection::vec(0i64..7, 4),
        x in proptest::collection::vec(0u8..7, 2),
    ) {
        let build = |c: &[i64]| {
            PolynomialZq::from_terms(7, 2, &[(vec![0, 0], c[0]), (vec![1, 0], c[1]), (vec![0, 1], c[2]), (vec![1, 1], c[3])]).unwrap()
        };
        let (p, r) = (build(&c1), build(&c2));
        let (pv, rv) = (p.eval(&x).unwrap() as u32, r.eval(&x).unwrap() as u32);
        prop_assert_eq!(p.add(&r).unwrap().eval(&x).unwrap() as u32, (pv + rv) % 7);
        prop_assert_eq!(p.mul(&r).unwrap().eval(&x).unwrap() as u32, pv * rv % 7);
        prop_assert_eq!(p.scale(3).eval(&x).unwrap() as u32, pv * 3 % 7);
    }
}
