//! Recognize the graph classes of a small gallery, with certificates.
//!
//! ```bash
//! cargo run -p uct --example recognize_classes
//! ```

use uct::{build_cotree, proper_interval_order, recognize, split_partition, Graph};

fn main() {
    let gallery: Vec<(&str, Graph)> = vec![
        (
            "K3",
            Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
        ),
        (
            "P4",
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
        ),
        (
            "C4",
            Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap(),
        ),
        (
            "C5",
            Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        ),
        (
            "claw",
            Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap(),
        ),
        ("2K2", Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap()),
    ];

    for (name, g) in &gallery {
        let tags: Vec<String> = recognize(g).iter().map(|t| t.to_string()).collect();
        println!(
            "{name:5} -> {}",
            if tags.is_empty() {
                "(none)".into()
            } else {
                tags.join(", ")
            }
        );
    }

    println!();
    let p4 = &gallery[1].1;
    let p = split_partition(p4).unwrap();
    println!(
        "split partition of P4: K = {:?}, I = {:?}",
        p.k_set, p.i_set
    );

    let pio = proper_interval_order(p4).unwrap();
    println!("umbrella order of P4: {:?}", pio.order);

    let c4 = &gallery[2].1;
    println!(
        "cotree of C4: {}",
        build_cotree(c4).unwrap().to_expression()
    );

    match build_cotree(p4) {
        Err(e) => println!("cotree of P4: {e}"),
        Ok(_) => unreachable!("P4 is the forbidden induced subgraph"),
    }
}
