//! Property tests: the clique enumerator against an all-subsets filter,
//! document round trips, incidence-graph counting identities, the
//! verifier against a definition-level check, and cotree evaluation.

use proptest::prelude::*;

use uct::gen;
use uct::oracle::Verification;
use uct::{
    build_cotree, maximal_cliques, uct_oracle, verify_minimal_ct, Caps, Graph, IncidenceGraph,
};

fn caps() -> Caps {
    Caps::default()
}

/// Arbitrary small graph: `n` from the mask length, edges from the bits.
fn small_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(proptest::bool::ANY, pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// All-subsets maximality filter; the independent oracle for enumeration.
fn naive_maximal_cliques(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let is_clique = |mask: u32| {
        (0..n as u32).filter(|&v| mask >> v & 1 == 1).all(|u| {
            (u + 1..n as u32)
                .filter(|&v| mask >> v & 1 == 1)
                .all(|v| g.has_edge(u, v))
        })
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if is_clique(mask)
            && (0..n as u32)
                .filter(|&v| mask >> v & 1 == 0)
                .all(|v| !is_clique(mask | 1 << v))
        {
            out.push((0..n as u32).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

proptest! {
    #[test]
    fn enumerator_matches_all_subsets_filter(g in small_graph(9)) {
        let cl = maximal_cliques(&g, &caps()).unwrap();
        prop_assert_eq!(cl.cliques.clone(), naive_maximal_cliques(&g));
    }

    #[test]
    fn edge_list_document_round_trips(g in small_graph(10)) {
        let back = Graph::parse(&g.to_document()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn incidence_counts_agree(g in small_graph(9)) {
        let cl = maximal_cliques(&g, &caps()).unwrap();
        let b = IncidenceGraph::build(&g, &cl).unwrap();
        let from_y: usize = (0..b.y_count() as u32).map(|y| b.members(y).len()).sum();
        let from_x: usize = (0..b.x_count() as u32).map(|x| b.cliques_of(x).len()).sum();
        prop_assert_eq!(from_y, b.edge_count());
        prop_assert_eq!(from_x, b.edge_count());
        // every vertex covered, every clique nonempty, comes from build()
        prop_assert!((0..b.x_count() as u32).all(|x| !b.cliques_of(x).is_empty()));
    }

    #[test]
    fn verifier_matches_definition(g in small_graph(7), mask in 0u32..128) {
        let s: Vec<u32> = (0..g.n() as u32).filter(|&v| mask >> v & 1 == 1).collect();
        let cliques = naive_maximal_cliques(&g);
        let hits = |set: &[u32]| {
            cliques.iter().all(|c| c.iter().any(|v| set.contains(v)))
        };
        let is_ct = hits(&s);
        let minimal = is_ct
            && s.iter().all(|&u| {
                let without: Vec<u32> = s.iter().copied().filter(|&v| v != u).collect();
                !hits(&without)
            });
        let got = verify_minimal_ct(&g, &s, &caps()).unwrap();
        prop_assert_eq!(got.is_verified(), minimal);
        if let Verification::Verified(w) = got {
            for (&u, c) in &w.certificates {
                prop_assert!(cliques.contains(c));
                let inter: Vec<u32> = c.iter().copied().filter(|v| s.contains(v)).collect();
                prop_assert_eq!(inter, vec![u]);
            }
        }
    }

    #[test]
    fn oracle_witness_always_verifies(g in small_graph(8)) {
        let (value, w) = uct_oracle(&g, &caps()).unwrap();
        prop_assert_eq!(w.vertices.len(), value);
        prop_assert!(verify_minimal_ct(&g, &w.vertices, &caps()).unwrap().is_verified());
    }

    #[test]
    fn cotree_evaluation_reproduces_cographs(seed in 0u64..500, n in 1usize..=12) {
        let g = gen::random_cograph(n, &mut gen::rng(seed));
        let t = build_cotree(&g).unwrap();
        prop_assert_eq!(t.leaf_count(), n);
        prop_assert_eq!(t.evaluate(n).unwrap(), g);
    }
}
