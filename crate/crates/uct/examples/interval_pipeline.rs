//! The proper-interval pipeline, stage by stage: umbrella ordering,
//! maximal cliques as consecutive blocks, the vertex-clique incidence
//! graph with its strong biconvex orderings, and the three-branch
//! matching walk whose saturated side is the answer.
//!
//! ```bash
//! cargo run -p uct --example interval_pipeline
//! ```

use uct::{
    chang_induced_matching, maximal_cliques, proper_interval_order, uct_proper_interval, Caps,
    Graph, IncidenceGraph,
};

fn main() {
    // a connected proper interval graph on 7 vertices
    let g = Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
    .unwrap();

    let pio = proper_interval_order(&g).unwrap();
    println!("umbrella order: {:?}", pio.order);

    let cliques = maximal_cliques(&g, &Caps::default()).unwrap();
    println!("maximal cliques:");
    for c in cliques.iter() {
        println!("  {c:?}");
    }

    // order the clique side by first vertex in the umbrella order
    let pos = pio.positions();
    let b = IncidenceGraph::build(&g, &cliques).unwrap();
    let mut order_y: Vec<u32> = (0..b.y_count() as u32).collect();
    order_y.sort_by_key(|&y| b.members(y).iter().map(|&v| pos[v as usize]).min());
    let b = b
        .with_orderings(pio.order.clone(), order_y, true)
        .expect("orderings from the umbrella order are strong biconvex");

    let m = chang_induced_matching(&b).unwrap();
    println!("matching (vertex, clique):");
    for &(x, y) in &m.edges {
        println!("  {x} -> {:?}", b.members(y));
    }
    m.verify(&b).expect("matching is induced and crossing-free");
    println!("saturated vertices: {:?}", m.saturated_x);

    let r = uct_proper_interval(&g).unwrap();
    assert_eq!(r.witness.vertices, m.saturated_x);
    print!("{}", r.to_document(true));
}
