//! The split-graph route: normalize a partition so the independent side
//! is maximal, then either return it whole (clique side not maximal) or
//! trade the cheapest clique vertex in.
//!
//! ```bash
//! cargo run -p uct --example split_formula
//! ```

use uct::{gen, split_partition, uct_oracle, uct_split, Caps, Graph};

fn show(name: &str, g: &Graph) {
    let p = split_partition(g).expect("split instance");
    println!("{name}: n = {}, m = {}", g.n(), g.m());
    println!(
        "  K = {:?} (maximal clique: {})",
        p.k_set, p.k_is_maximal_clique
    );
    println!("  I = {:?}  -> alpha = {}", p.i_set, p.i_set.len());
    if p.k_is_maximal_clique {
        let delta = p
            .k_set
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| p.i_set.binary_search(&w).is_ok())
                    .count()
            })
            .min()
            .unwrap();
        println!("  delta = min |N(v) ∩ I| over K = {delta}");
    }
    let r = uct_split(g, &p).unwrap();
    println!("  value = {}, witness = {:?}", r.value, r.witness.vertices);
    if g.n() <= 16 {
        let (expect, _) = uct_oracle(g, &Caps::default()).unwrap();
        assert_eq!(r.value, expect);
        println!("  oracle agrees: {expect}");
    }
    println!();
}

fn main() {
    // the clique side is a maximal clique here
    let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
    show("hand-built", &g);

    // a star: every leaf sees all of K, so K is not maximal
    let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
    show("star", &star);

    let mut r = gen::rng(42);
    let random = gen::random_split_graph(12, 4, 0.5, &mut r);
    show("random", &random);

    // the same machinery is linear-time at scale
    let n = 200_000;
    let k = (n as f64).sqrt() as usize;
    let big = gen::random_split_graph(n, k, 3.0 / k as f64, &mut r);
    let started = std::time::Instant::now();
    let p = split_partition(&big).unwrap();
    let res = uct_split(&big, &p).unwrap();
    println!(
        "random split graph with n = {n}, m = {}: value {} in {:?}",
        big.m(),
        res.value,
        started.elapsed()
    );
}
