//! Cross-validate every specialized solver against the exhaustive oracle
//! on seeded random suites, the same way the acceptance tests do (but
//! smaller and chattier).
//!
//! ```bash
//! cargo run -p uct --example oracle_cross_check
//! ```

use uct::{
    build_cotree, gen, split_partition, uct_cograph, uct_oracle, uct_proper_interval, uct_split,
    uct_triangle_free, verify_minimal_ct, Caps, Graph, UctResult,
};

fn main() {
    let caps = Caps::default();
    let per_class = 200;
    let mut rng = gen::rng(2024);

    let check = |name: &str, instances: Vec<Graph>, solve: &dyn Fn(&Graph) -> UctResult| {
        let mut max_value = 0;
        for g in &instances {
            let r = solve(g);
            let (expect, _) = uct_oracle(g, &caps).unwrap();
            assert_eq!(r.value, expect, "mismatch on {}", g.to_document());
            assert!(verify_minimal_ct(g, &r.witness.vertices, &caps)
                .unwrap()
                .is_verified());
            max_value = max_value.max(r.value);
        }
        println!(
            "{name:15} {} instances ok (largest value {max_value})",
            instances.len()
        );
    };

    use rand::RngCore;
    let splits: Vec<Graph> = (0..per_class)
        .map(|_| {
            let n = 2 + (rng.next_u32() as usize % 9);
            gen::random_split_graph(n, 1 + n / 3, 0.5, &mut rng)
        })
        .collect();
    check("split", splits, &|g| {
        uct_split(g, &split_partition(g).unwrap()).unwrap()
    });

    let pigs: Vec<Graph> = (0..per_class)
        .map(|_| {
            let n = 1 + (rng.next_u32() as usize % 10);
            gen::random_proper_interval_graph(n, 3.0, &mut rng)
        })
        .collect();
    check("proper interval", pigs, &|g| {
        uct_proper_interval(g).unwrap()
    });

    let cographs: Vec<Graph> = (0..per_class)
        .map(|_| gen::random_cograph(1 + (rng.next_u32() as usize % 10), &mut rng))
        .collect();
    check("cograph", cographs, &|g| {
        uct_cograph(g, &build_cotree(g).unwrap()).unwrap()
    });

    let forests: Vec<Graph> = (0..per_class)
        .map(|_| gen::random_forest(1 + (rng.next_u32() as usize % 10), 0.7, &mut rng))
        .collect();
    check("forest", forests, &|g| uct_triangle_free(g, &caps).unwrap());

    println!("all solvers agree with the oracle");
}
