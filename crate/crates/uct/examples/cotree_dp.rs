//! Cographs: decompose into a cotree, then fold values bottom-up —
//! leaves are 1, disjoint unions add, joins take the larger side. The
//! witness that falls out is a maximum independent set.
//!
//! ```bash
//! cargo run -p uct --example cotree_dp
//! ```

use uct::{build_cotree, gen, uct_cograph, Graph};

fn show(name: &str, g: &Graph) {
    match build_cotree(g) {
        Ok(t) => {
            let r = uct_cograph(g, &t).unwrap();
            println!("{name}: {}", t.to_expression());
            println!("  value = {}, witness = {:?}", r.value, r.witness.vertices);
        }
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() {
    show("2K2", &Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
    show(
        "C4",
        &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
    );
    show(
        "K4",
        &Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap(),
    );
    show(
        "P4",
        &Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
    );

    let mut r = gen::rng(3);
    let g = gen::random_cograph(10, &mut r);
    show("random cograph", &g);
}
