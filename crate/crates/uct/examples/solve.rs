//! Parse an edge-list file and solve it with the class dispatcher.
//!
//! ```bash
//! cargo run -p uct --example solve -- path/to/graph.txt
//! ```
//!
//! Without an argument a small built-in instance is solved.

use uct::{uct_dispatch, verify_minimal_ct, Caps, Graph};

const SAMPLE: &str = "\
# a proper interval graph: P5 plus a triangle
8 7
0 1
1 2
2 3
3 4
5 6
6 7
5 7
";

fn main() {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path).expect("readable input file"),
        None => SAMPLE.to_string(),
    };
    let g = Graph::parse(&text).expect("valid edge-list document");
    println!("n = {}, m = {}", g.n(), g.m());

    let caps = Caps::default();
    let result = uct_dispatch(&g, None, &caps).expect("solvable instance");
    print!("{}", result.to_document(true));

    // every witness round-trips through the independent verifier
    let verdict = verify_minimal_ct(&g, &result.witness.vertices, &caps).unwrap();
    println!("verifier agrees: {}", verdict.is_verified());
}
