//! Exact brute-force oracles: minimal-clique-transversal verification with
//! certificates, the upper clique transversal number by descending subset
//! search, maximum induced matchings, spanning star forests, and the
//! independent domination number. Everything here is desk-scale by design
//! and guarded by explicit caps; exceeding a cap is an error, never a
//! silent approximation.

use std::collections::BTreeMap;

use crate::cliques::{maximal_cliques, CliqueList};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Caps;

/// A vertex set certified to be a minimal clique transversal: for each
/// member `u` a private maximal clique `C_u` with `C_u ∩ S = {u}`.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct TransversalWitness {
    pub vertices: Vec<u32>,
    pub certificates: BTreeMap<u32, Vec<u32>>,
}

impl TransversalWitness {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }
}

/// Why a candidate set is not a minimal clique transversal.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Refutation {
    /// A maximal clique disjoint from the candidate set.
    MissedClique(Vec<u32>),
    /// A member no maximal clique meets privately; dropping it keeps the
    /// set a transversal.
    NoPrivateClique { vertex: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verification {
    Verified(TransversalWitness),
    Refuted(Refutation),
}

impl Verification {
    pub fn is_verified(&self) -> bool {
        matches!(self, Verification::Verified(_))
    }
}

/// Decide whether `s` is a minimal clique transversal of `g`, returning
/// either per-vertex private-clique certificates or a refutation.
pub fn verify_minimal_ct(g: &Graph, s: &[u32], caps: &Caps) -> Result<Verification> {
    let mut s = s.to_vec();
    s.sort_unstable();
    s.dedup();
    if let Some(&v) = s.iter().find(|&&v| v as usize >= g.n()) {
        return Err(Error::Invalid(format!("vertex {v} out of range")));
    }
    let cliques = maximal_cliques(g, caps)?;
    Ok(verify_with_cliques(&cliques, &s))
}

/// Single pass over the clique list: count members of `s` per clique,
/// record the private ones. `O(n + Σ|C|)`.
pub(crate) fn verify_with_cliques(cliques: &CliqueList, s: &[u32]) -> Verification {
    let mut in_s = vec![false; cliques.n];
    for &v in s {
        in_s[v as usize] = true;
    }
    let mut cert: Vec<Option<u32>> = vec![None; cliques.n];
    for (j, c) in cliques.iter().enumerate() {
        let mut hit = None;
        let mut count = 0;
        for &v in c {
            if in_s[v as usize] {
                count += 1;
                hit = Some(v);
            }
        }
        match (count, hit) {
            (0, _) => return Verification::Refuted(Refutation::MissedClique(c.clone())),
            (1, Some(v)) if cert[v as usize].is_none() => cert[v as usize] = Some(j as u32),
            _ => {}
        }
    }
    let mut certificates = BTreeMap::new();
    for &u in s {
        match cert[u as usize] {
            Some(j) => {
                certificates.insert(u, cliques.cliques[j as usize].clone());
            }
            None => return Verification::Refuted(Refutation::NoPrivateClique { vertex: u }),
        }
    }
    Verification::Verified(TransversalWitness {
        vertices: s.to_vec(),
        certificates,
    })
}

/// The upper clique transversal number with a certified witness, by
/// enumerating vertex subsets in decreasing size. The first verified
/// minimal clique transversal is optimal; within a size class subsets are
/// visited in lexicographic order, so ties resolve to the lexicographically
/// smallest witness.
pub fn uct_oracle(g: &Graph, caps: &Caps) -> Result<(usize, TransversalWitness)> {
    let n = g.n();
    if n > caps.max_oracle_vertices {
        return Err(Error::CapExceeded {
            what: "oracle vertex count",
            needed: n,
            cap: caps.max_oracle_vertices,
        });
    }
    if n > 63 {
        return Err(Error::Invalid(
            "subset search supports at most 63 vertices".into(),
        ));
    }
    let cliques = maximal_cliques(g, caps)?;
    if n == 0 {
        return Ok((
            0,
            TransversalWitness {
                vertices: Vec::new(),
                certificates: BTreeMap::new(),
            },
        ));
    }
    let masks: Vec<u64> = cliques
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();

    for k in (1..=n).rev() {
        let mut found = None;
        for_each_combination(n, k, |set| {
            let s_mask = set.iter().fold(0u64, |m, &i| m | 1 << i);
            if is_minimal_ct_mask(s_mask, &masks) {
                found = Some(set.iter().map(|&i| i as u32).collect::<Vec<u32>>());
                true
            } else {
                false
            }
        });
        if let Some(s) = found {
            match verify_with_cliques(&cliques, &s) {
                Verification::Verified(w) => return Ok((k, w)),
                Verification::Refuted(r) => {
                    return Err(Error::Internal(format!(
                        "mask test accepted a set the verifier refutes: {r:?}"
                    )))
                }
            }
        }
    }
    Err(Error::Internal(
        "no minimal clique transversal found".into(),
    ))
}

fn is_minimal_ct_mask(s: u64, clique_masks: &[u64]) -> bool {
    let mut private = 0u64;
    for &c in clique_masks {
        let hit = c & s;
        if hit == 0 {
            return false;
        }
        if hit.count_ones() == 1 {
            private |= hit;
        }
    }
    private == s
}

/// Visit all size-`k` subsets of `0..n` in lexicographic order until the
/// callback returns `true`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if f(&c) {
            return;
        }
        // advance the rightmost index that still has room
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if c[i] != i + n - k {
                break;
            }
            if i == 0 {
                return;
            }
        }
        c[i] += 1;
        for j in i + 1..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

/// 256-bit set for the induced-matching search over edges.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct EdgeSet([u64; 4]);

impl EdgeSet {
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }

    fn clear(&mut self, i: usize) {
        self.0[i >> 6] &= !(1 << (i & 63));
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        for (b, &w) in self.0.iter().enumerate() {
            if w != 0 {
                return Some((b << 6) + w.trailing_zeros() as usize);
            }
        }
        None
    }

    fn minus(&self, other: &EdgeSet) -> EdgeSet {
        let mut out = *self;
        for b in 0..4 {
            out.0[b] &= !other.0[b];
        }
        out
    }
}

/// Exact maximum induced matching size: a branch-and-bound search over
/// edge subsets, phrased as maximum independent set in the edge-conflict
/// graph (two edges conflict when they share an endpoint or are joined by
/// a host edge).
pub fn induced_matching_oracle(g: &Graph, caps: &Caps) -> Result<usize> {
    let edges = g.edge_list();
    let m = edges.len();
    if m > caps.max_matching_edges {
        return Err(Error::CapExceeded {
            what: "induced matching edge count",
            needed: m,
            cap: caps.max_matching_edges,
        });
    }
    if m > 256 {
        return Err(Error::Invalid(
            "edge-subset search supports at most 256 edges".into(),
        ));
    }
    if m == 0 {
        return Ok(0);
    }

    let mut conflict = vec![EdgeSet::default(); m];
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let clash = a == c
                || a == d
                || b == c
                || b == d
                || g.has_edge(a, c)
                || g.has_edge(a, d)
                || g.has_edge(b, c)
                || g.has_edge(b, d);
            if clash {
                conflict[i].set(j);
                conflict[j].set(i);
            }
        }
    }

    // greedy seed gives the bound an early anchor
    let mut avail = EdgeSet::default();
    for i in 0..m {
        avail.set(i);
    }
    let mut best = 0;
    {
        let mut rest = avail;
        while let Some(v) = rest.first() {
            best += 1;
            rest = rest.minus(&conflict[v]);
            rest.clear(v);
        }
    }

    fn search(mut avail: EdgeSet, current: usize, best: &mut usize, conflict: &[EdgeSet]) {
        loop {
            if avail.is_empty() {
                *best = (*best).max(current);
                return;
            }
            if current + avail.count() <= *best {
                return;
            }
            let v = avail.first().unwrap();
            let mut with_v = avail.minus(&conflict[v]);
            with_v.clear(v);
            search(with_v, current + 1, best, conflict);
            avail.clear(v);
        }
    }
    search(avail, 0, &mut best, &conflict);
    Ok(best)
}

/// Maximum number of edges in a spanning star forest, computed as
/// `n - γ(G)` with the domination number found by exhaustive search.
pub fn star_forest_oracle(g: &Graph, caps: &Caps) -> Result<usize> {
    let n = g.n();
    if n > caps.max_domination_vertices {
        return Err(Error::CapExceeded {
            what: "star forest vertex count",
            needed: n,
            cap: caps.max_domination_vertices,
        });
    }
    if n > 63 {
        return Err(Error::Invalid(
            "subset search supports at most 63 vertices".into(),
        ));
    }
    if n == 0 {
        return Ok(0);
    }
    let closed = closed_masks(g);
    let full = if n == 63 {
        u64::MAX >> 1
    } else {
        (1u64 << n) - 1
    };
    for k in 0..=n {
        let mut dominating = false;
        for_each_combination(n, k, |set| {
            let covered = set.iter().fold(0u64, |m, &v| m | closed[v]);
            dominating = covered == full;
            dominating
        });
        if dominating {
            return Ok(n - k);
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Independent domination number: the minimum size of a maximal
/// independent set, by exhaustive ascending search.
pub fn min_ids_oracle(g: &Graph, caps: &Caps) -> Result<usize> {
    let n = g.n();
    if n > caps.max_oracle_vertices {
        return Err(Error::CapExceeded {
            what: "independent domination vertex count",
            needed: n,
            cap: caps.max_oracle_vertices,
        });
    }
    if n > 63 {
        return Err(Error::Invalid(
            "subset search supports at most 63 vertices".into(),
        ));
    }
    if n == 0 {
        return Ok(0);
    }
    let closed = closed_masks(g);
    let open: Vec<u64> = g
        .vertices()
        .map(|v| closed[v as usize] & !(1 << v))
        .collect();
    let full = if n == 63 {
        u64::MAX >> 1
    } else {
        (1u64 << n) - 1
    };
    for k in 1..=n {
        let mut found = false;
        for_each_combination(n, k, |set| {
            let mask = set.iter().fold(0u64, |m, &v| m | 1 << v);
            let independent = set.iter().all(|&v| open[v] & mask == 0);
            let covered = set.iter().fold(0u64, |m, &v| m | closed[v]);
            found = independent && covered == full;
            found
        });
        if found {
            return Ok(k);
        }
    }
    unreachable!("every graph has a maximal independent set")
}

fn closed_masks(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(1u64 << v, |m, &w| m | 1 << w))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn p3() -> Graph {
        Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn middle_vertex_hits_both_edges() {
        match verify_minimal_ct(&p3(), &[1], &caps()).unwrap() {
            Verification::Verified(w) => {
                assert_eq!(w.vertices, vec![1]);
                assert_eq!(w.certificates[&1], vec![0, 1]);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn non_minimal_set_is_refuted() {
        match verify_minimal_ct(&p3(), &[0, 1], &caps()).unwrap() {
            Verification::Refuted(Refutation::NoPrivateClique { vertex }) => {
                assert_eq!(vertex, 0)
            }
            other => panic!("expected refutation at vertex 0, got {other:?}"),
        }
    }

    #[test]
    fn missed_clique_is_reported() {
        match verify_minimal_ct(&p3(), &[0], &caps()).unwrap() {
            Verification::Refuted(Refutation::MissedClique(c)) => assert_eq!(c, vec![1, 2]),
            other => panic!("expected missed clique, got {other:?}"),
        }
    }

    #[test]
    fn opposite_corners_of_square() {
        match verify_minimal_ct(&c4(), &[0, 2], &caps()).unwrap() {
            Verification::Verified(w) => {
                assert_eq!(w.certificates[&0], vec![0, 1]);
                // first private clique in list order
                assert_eq!(w.certificates[&2], vec![1, 2]);
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn uct_of_complete_graph_is_one() {
        for n in 1..6 {
            let mut edges = Vec::new();
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    edges.push((u, v));
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            assert_eq!(uct_oracle(&g, &caps()).unwrap().0, 1);
        }
    }

    #[test]
    fn uct_of_edgeless_graph_is_n() {
        let g = Graph::empty(5);
        let (v, w) = uct_oracle(&g, &caps()).unwrap();
        assert_eq!(v, 5);
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn uct_of_square_is_two() {
        let (v, w) = uct_oracle(&c4(), &caps()).unwrap();
        assert_eq!(v, 2);
        // lexicographically smallest maximum witness
        assert_eq!(w.vertices, vec![0, 2]);
    }

    #[test]
    fn oracle_witness_verifies() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2)])
            .unwrap();
        let (v, w) = uct_oracle(&g, &caps()).unwrap();
        assert_eq!(w.size(), v);
        assert!(verify_minimal_ct(&g, &w.vertices, &caps())
            .unwrap()
            .is_verified());
    }

    #[test]
    fn induced_matching_of_path_incidence() {
        use crate::incidence::IncidenceGraph;
        let g = p3();
        let cl = maximal_cliques(&g, &caps()).unwrap();
        let b = IncidenceGraph::build(&g, &cl).unwrap();
        assert_eq!(induced_matching_oracle(&b.to_graph(), &caps()).unwrap(), 2);
    }

    #[test]
    fn induced_matching_of_single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(induced_matching_oracle(&g, &caps()).unwrap(), 1);
    }

    #[test]
    fn induced_matching_of_long_path() {
        // P7 has an induced matching of size 2 but not 3
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(induced_matching_oracle(&g, &caps()).unwrap(), 2);
    }

    #[test]
    fn star_forest_values() {
        assert_eq!(star_forest_oracle(&p3(), &caps()).unwrap(), 2);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(star_forest_oracle(&k2, &caps()).unwrap(), 1);
        assert_eq!(star_forest_oracle(&c4(), &caps()).unwrap(), 2);
    }

    #[test]
    fn independent_domination_values() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(min_ids_oracle(&k4, &caps()).unwrap(), 1);
        assert_eq!(min_ids_oracle(&c4(), &caps()).unwrap(), 2);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(min_ids_oracle(&p4, &caps()).unwrap(), 2);
    }

    #[test]
    fn caps_are_enforced() {
        let tight = Caps {
            max_oracle_vertices: 3,
            ..Caps::default()
        };
        assert!(matches!(
            uct_oracle(&c4(), &tight),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn combination_order_is_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
