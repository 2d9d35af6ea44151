//! Upper clique transversals.
//!
//! A *clique transversal* of a graph is a vertex set meeting every maximal
//! clique; it is *minimal* when no proper subset still is one. This crate
//! computes the largest size of a minimal clique transversal, with a
//! certified witness:
//!
//! * exact brute-force oracles for small graphs ([`oracle`]),
//! * linear-time solvers for split graphs, proper interval graphs,
//!   cographs, and forests ([`solvers`]),
//! * class recognizers producing structural certificates ([`mod@recognize`]),
//! * gadget generators whose declared value identities cross-validate the
//!   solvers ([`reductions`]).
//!
//! The `examples/` directory has one runnable program per capability; a
//! thin `uct` binary exposes the same workflows as subcommands.
//!
//! ```
//! use uct::{uct_dispatch, Caps, Graph};
//!
//! let g = Graph::parse("4 4\n0 1\n1 2\n2 3\n3 0").unwrap();
//! let r = uct_dispatch(&g, None, &Caps::default()).unwrap();
//! assert_eq!(r.value, 2);
//! ```

pub mod cliques;
pub mod error;
pub mod gen;
pub mod graph;
pub mod incidence;
pub mod oracle;
pub mod recognize;
pub mod reductions;
pub mod solvers;

pub use cliques::{maximal_cliques, CliqueList};
pub use error::{Error, Result};
pub use graph::Graph;
pub use incidence::IncidenceGraph;
pub use oracle::{
    induced_matching_oracle, min_ids_oracle, star_forest_oracle, uct_oracle, verify_minimal_ct,
    Refutation, TransversalWitness, Verification,
};
pub use recognize::{
    build_cotree, proper_interval_order, recognize, split_partition, ClassTag, Cotree,
    ProperIntervalOrder, SplitPartition,
};
pub use reductions::{
    check_relation, gen_chordal_gadget, gen_line_graph, gen_subdivision, gen_two_star,
    GadgetInstance, GadgetKind, RelationOutcome, RelationReport,
};
pub use solvers::{
    chang_induced_matching, uct_cograph, uct_dispatch, uct_proper_interval, uct_split,
    uct_triangle_free, ForcedClass, InducedMatching, Method, UctResult,
};

/// Resource caps for clique enumeration and the exact oracles. Exceeding
/// a cap is an error, never a silent approximation; all caps are surfaced
/// on the command line.
#[derive(Debug, Clone)]
pub struct Caps {
    /// Maximum number of maximal cliques the enumerator may emit.
    pub max_cliques: usize,
    /// Vertex cap for the subset-search oracles (`uct`, independent
    /// domination).
    pub max_oracle_vertices: usize,
    /// Edge cap for the exact induced-matching search.
    pub max_matching_edges: usize,
    /// Vertex cap for the dominating-set search behind star forests.
    pub max_domination_vertices: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_cliques: 1_000_000,
            max_oracle_vertices: 20,
            max_matching_edges: 64,
            max_domination_vertices: 16,
        }
    }
}
