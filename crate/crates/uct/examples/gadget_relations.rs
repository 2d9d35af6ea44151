//! Generate every gadget family and evaluate its declared relation with
//! the oracles: the chordal construction tied to spanning star forests,
//! the two-star family separating the answer from the incidence matching
//! number, line graphs, and subdivisions.
//!
//! ```bash
//! cargo run -p uct --example gadget_relations
//! ```

use uct::{
    check_relation, gen_chordal_gadget, gen_line_graph, gen_subdivision, gen_two_star, Caps, Graph,
};

fn main() {
    let caps = Caps::default();
    let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
    let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();

    let instances = vec![
        gen_chordal_gadget(&p3).unwrap(),
        gen_chordal_gadget(&c4).unwrap(),
        gen_two_star(2).unwrap(),
        gen_two_star(4).unwrap(),
        gen_line_graph(&c4).unwrap(),
        gen_line_graph(&k23).unwrap(),
        gen_subdivision(&c4).unwrap(),
    ];

    for inst in &instances {
        let report = check_relation(inst, &caps);
        print!("{}", report.to_document());
        println!();
    }

    // gadget documents are self-describing and round-trip
    let doc = gen_two_star(3).unwrap().to_document();
    println!("serialized two-star gadget:\n{doc}");
    let back = uct::GadgetInstance::parse_document(&doc).unwrap();
    println!(
        "parsed back: {} on {} vertices",
        back.kind.name(),
        back.graph.n()
    );
}
