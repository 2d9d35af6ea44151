//! Seeded random instance generators for the class-specific suites, the
//! CLI, and the runnable examples. Everything is deterministic in the
//! seed; structured instances are relabeled with a random permutation so
//! nothing downstream can lean on a convenient vertex numbering.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn relabel(g: &Graph, rng: &mut impl Rng) -> Graph {
    let n = g.n();
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(rng);
    let edges: Vec<(u32, u32)> = g
        .edge_list()
        .into_iter()
        .map(|(u, v)| (perm[u as usize], perm[v as usize]))
        .collect();
    Graph::from_edges(n, &edges).expect("relabeling preserves validity")
}

/// Erdos-Renyi G(n, p).
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Split graph: a clique on `k` vertices, the rest independent, each
/// independent vertex attached to every clique vertex with probability
/// `attach`. Labels shuffled.
pub fn random_split_graph(n: usize, k: usize, attach: f64, rng: &mut impl Rng) -> Graph {
    assert!(k <= n);
    let mut edges = Vec::new();
    for u in 0..k as u32 {
        for v in u + 1..k as u32 {
            edges.push((u, v));
        }
    }
    for i in k as u32..n as u32 {
        for u in 0..k as u32 {
            if rng.gen_bool(attach) {
                edges.push((u, i));
            }
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    relabel(&g, rng)
}

/// Unit-interval model: `n` unit intervals with left endpoints uniform in
/// `[0, span]`; vertices are adjacent when the intervals overlap. Labels
/// shuffled. `O(n log n + m)`.
pub fn random_proper_interval_graph(n: usize, span: f64, rng: &mut impl Rng) -> Graph {
    let mut left: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..span.max(1e-9))).collect();
    left.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if left[j] - left[i] > 1.0 {
                break;
            }
            edges.push((i as u32, j as u32));
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    relabel(&g, rng)
}

/// Random cograph on `n` vertices: a random full binary union/join tree.
/// Labels shuffled.
pub fn random_cograph(n: usize, rng: &mut impl Rng) -> Graph {
    assert!(n >= 1);
    fn build(lo: u32, hi: u32, rng: &mut impl Rng, edges: &mut Vec<(u32, u32)>) {
        if hi - lo <= 1 {
            return;
        }
        let split = rng.gen_range(lo + 1..hi);
        build(lo, split, rng, edges);
        build(split, hi, rng, edges);
        if rng.gen_bool(0.5) {
            for u in lo..split {
                for v in split..hi {
                    edges.push((u, v));
                }
            }
        }
    }
    let mut edges = Vec::new();
    build(0, n as u32, rng, &mut edges);
    let g = Graph::from_edges(n, &edges).unwrap();
    relabel(&g, rng)
}

/// Random forest: vertex `v > 0` attaches to a random earlier vertex with
/// probability `attach`, otherwise starts a new component. Labels
/// shuffled. Isolated vertices are possible and intended.
pub fn random_forest(n: usize, attach: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n as u32 {
        if rng.gen_bool(attach) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    relabel(&g, rng)
}

/// Random bipartite graph with minimum degree 2 (both parts of size at
/// least 2): G(a, b, p) edges, then deficient vertices get extra random
/// edges to the other side. Labels shuffled; stays triangle-free.
pub fn random_bipartite_min_deg2(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    assert!(n >= 4);
    let a = rng.gen_range(2..=(n - 2));
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut adj = vec![Vec::new(); n];
    let add = |edges: &mut Vec<(u32, u32)>, adj: &mut Vec<Vec<u32>>, u: u32, v: u32| {
        if !adj[u as usize].contains(&v) {
            adj[u as usize].push(v);
            adj[v as usize].push(u);
            edges.push((u, v));
        }
    };
    for u in 0..a as u32 {
        for v in a as u32..n as u32 {
            if rng.gen_bool(p) {
                add(&mut edges, &mut adj, u, v);
            }
        }
    }
    for u in 0..n as u32 {
        let (lo, hi) = if (u as usize) < a {
            (a as u32, n as u32)
        } else {
            (0, a as u32)
        };
        while adj[u as usize].len() < 2 {
            let v = rng.gen_range(lo..hi);
            add(&mut edges, &mut adj, u, v);
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    relabel(&g, rng)
}

/// Sparse random source for the chordal gadget: `2..=n_max` vertices and
/// at most `m_max` distinct edges, at least one edge.
pub fn random_sparse_source(n_max: usize, m_max: usize, rng: &mut impl Rng) -> Graph {
    let n = rng.gen_range(2..=n_max);
    let max_possible = n * (n - 1) / 2;
    let m_target = rng.gen_range(1..=m_max.min(max_possible));
    let mut edges = std::collections::BTreeSet::new();
    while edges.len() < m_target {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u != v {
            edges.insert((u.min(v), u.max(v)));
        }
    }
    let edges: Vec<(u32, u32)> = edges.into_iter().collect();
    Graph::from_edges(n, &edges).unwrap()
}
