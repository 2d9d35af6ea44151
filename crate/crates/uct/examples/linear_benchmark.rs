//! Timing demonstration for the two linear-time solvers on instances
//! with hundreds of thousands of vertices.
//!
//! ```bash
//! cargo run --release -p uct --example linear_benchmark
//! ```

use std::time::Instant;

use uct::{gen, split_partition, uct_proper_interval, uct_split};

fn main() {
    for &n in &[50_000usize, 100_000, 200_000] {
        let k = (n as f64).sqrt() as usize;
        let split = gen::random_split_graph(n, k, 3.0 / k as f64, &mut gen::rng(1));
        let started = Instant::now();
        let p = split_partition(&split).unwrap();
        let r = uct_split(&split, &p).unwrap();
        println!(
            "split          n = {n:>7}, m = {:>8}: value {:>7} in {:>10.2?}",
            split.m(),
            r.value,
            started.elapsed()
        );

        let pig = gen::random_proper_interval_graph(n, n as f64 / 4.0, &mut gen::rng(2));
        let started = Instant::now();
        let r = uct_proper_interval(&pig).unwrap();
        println!(
            "proper interval n = {n:>7}, m = {:>8}: value {:>7} in {:>10.2?}",
            pig.m(),
            r.value,
            started.elapsed()
        );
    }
}
