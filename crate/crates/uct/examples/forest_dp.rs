//! Triangle-free graphs: minimal clique transversals are minimal vertex
//! covers, so the answer is `n - i(G)` with `i` the independent
//! domination number. Forests get a three-state tree DP; other
//! triangle-free inputs fall back to the oracle with an explicit tag.
//!
//! ```bash
//! cargo run -p uct --example forest_dp
//! ```

use uct::{gen, min_ids_oracle, uct_triangle_free, Caps, Graph};

fn main() {
    let caps = Caps::default();

    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    let r = uct_triangle_free(&star, &caps).unwrap();
    println!(
        "K1,4: value = {} via {:?}, witness = {:?}",
        r.value, r.method, r.witness.vertices
    );

    let mut rng = gen::rng(11);
    for _ in 0..3 {
        let g = gen::random_forest(12, 0.85, &mut rng);
        let r = uct_triangle_free(&g, &caps).unwrap();
        let iso = g.isolated_vertices().len();
        println!(
            "random forest (n = {}, m = {}, {} isolated): value = {} via {:?}",
            g.n(),
            g.m(),
            iso,
            r.value,
            r.method
        );
        if iso == 0 {
            let i = min_ids_oracle(&g, &caps).unwrap();
            assert_eq!(r.value, g.n() - i);
            println!(
                "  identity check: n - i(G) = {} - {} = {}",
                g.n(),
                i,
                g.n() - i
            );
        }
    }

    // non-forest triangle-free input: honest delegation
    let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
    let r = uct_triangle_free(&c6, &caps).unwrap();
    println!("C6: value = {} via {:?}", r.value, r.method);
}
