//! Specialized solvers for the upper clique transversal number: an
//! `O(n + m)` formula for split graphs, the induced-matching route for
//! proper interval graphs, bottom-up dynamic programming over cotrees,
//! a three-state tree DP for forests, and a dispatcher that picks the
//! first applicable class.

use std::collections::BTreeMap;

use crate::cliques::maximal_cliques;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::{positions, IncidenceGraph};
use crate::oracle::{uct_oracle, verify_with_cliques, TransversalWitness, Verification};
use crate::recognize::{
    build_cotree, proper_interval_order, split_partition, Cotree, CotreeNode, SplitPartition,
};
use crate::Caps;

/// Which algorithm produced a result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Cograph,
    Split,
    ProperInterval,
    Forest,
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Cograph => "cograph",
            Method::Split => "split",
            Method::ProperInterval => "proper_interval",
            Method::Forest => "forest",
            Method::Oracle => "oracle",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UctResult {
    pub value: usize,
    pub witness: TransversalWitness,
    pub method: Method,
}

impl UctResult {
    /// Text form: a `value .. method ..` line, the witness line, and
    /// optionally one `cert u: ...` line per witness vertex.
    pub fn to_document(&self, with_certificates: bool) -> String {
        let mut out = format!("value {} method {}\n", self.value, self.method);
        let ids: Vec<String> = self
            .witness
            .vertices
            .iter()
            .map(|v| v.to_string())
            .collect();
        out.push_str(&ids.join(" "));
        out.push('\n');
        if with_certificates {
            for (u, clique) in &self.witness.certificates {
                let ids: Vec<String> = clique.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!("cert {u}: {}\n", ids.join(" ")));
            }
        }
        out
    }
}

fn closed_neighborhood(g: &Graph, v: u32) -> Vec<u32> {
    let mut c = g.neighbors(v).to_vec();
    let at = c.binary_search(&v).unwrap_err();
    c.insert(at, v);
    c
}

/// Maximum minimal clique transversal of a split graph.
///
/// With `I` a maximal independent set: if `K` is not a maximal clique the
/// answer is `I` itself; otherwise pick `v ∈ K` with the fewest neighbors
/// in `I` and answer `{v} ∪ (I \ N(v))`. Runs in `O(n + m)`.
pub fn uct_split(g: &Graph, p: &SplitPartition) -> Result<UctResult> {
    p.validate(g)
        .map_err(|e| Error::InvalidPartition(format!("{e}")))?;
    let n = g.n();
    let mut in_i = vec![false; n];
    for &v in &p.i_set {
        in_i[v as usize] = true;
    }

    let mut vertices;
    let mut certificates = BTreeMap::new();
    if !p.k_is_maximal_clique {
        // every maximal clique is a closed neighborhood N[u], u in I
        vertices = p.i_set.clone();
        for &u in &vertices {
            certificates.insert(u, closed_neighborhood(g, u));
        }
    } else {
        let pick = p
            .k_set
            .iter()
            .copied()
            .min_by_key(|&v| {
                let deg_i = g.neighbors(v).iter().filter(|&&w| in_i[w as usize]).count();
                (deg_i, v)
            })
            .expect("K is nonempty when it is a maximal clique");
        vertices = vec![pick];
        for &u in &p.i_set {
            if !g.has_edge(pick, u) {
                vertices.push(u);
                certificates.insert(u, closed_neighborhood(g, u));
            }
        }
        vertices.sort_unstable();
        // any I-neighbor of the picked vertex lies in no other witness
        // member's closed neighborhood
        let private = g
            .neighbors(pick)
            .iter()
            .copied()
            .find(|&w| in_i[w as usize])
            .expect("I is maximal, so every K-vertex has a neighbor in I");
        certificates.insert(pick, closed_neighborhood(g, private));
    }

    let value = vertices.len();
    Ok(UctResult {
        value,
        witness: TransversalWitness {
            vertices,
            certificates,
        },
        method: Method::Split,
    })
}

/// An induced matching in an incidence graph: matched pairs are
/// `(vertex id, clique index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedMatching {
    pub edges: Vec<(u32, u32)>,
    pub saturated_x: Vec<u32>,
}

impl InducedMatching {
    /// Re-check the defining properties: the pairs form a matching, the
    /// matching is induced, and under the host orderings no two edges
    /// cross. Linear in the size of the host plus `|M| log |M|`.
    pub fn verify(&self, b: &IncidenceGraph) -> Result<()> {
        let fail = |msg: String| Err(Error::Internal(msg));
        let mut partner_of_x = vec![u32::MAX; b.x_count()];
        let mut partner_of_y = vec![u32::MAX; b.y_count()];
        for &(x, y) in &self.edges {
            if !b.has_edge(x, y) {
                return fail(format!("pair ({x}, {y}) is not an incidence edge"));
            }
            if partner_of_x[x as usize] != u32::MAX || partner_of_y[y as usize] != u32::MAX {
                return fail("matched endpoints repeat".into());
            }
            partner_of_x[x as usize] = y;
            partner_of_y[y as usize] = x;
        }
        for &(x, y) in &self.edges {
            for &c in b.cliques_of(x) {
                if c != y && partner_of_y[c as usize] != u32::MAX {
                    return fail(format!(
                        "vertex {x} is adjacent to foreign matched clique {c}"
                    ));
                }
            }
            for &v in b.members(y) {
                if v != x && partner_of_x[v as usize] != u32::MAX {
                    return fail(format!("clique {y} contains foreign matched vertex {v}"));
                }
            }
        }
        if let (Some(ox), Some(oy)) = (b.order_x(), b.order_y()) {
            let px = positions(ox);
            let py = positions(oy);
            let mut by_x: Vec<(u32, u32)> = self
                .edges
                .iter()
                .map(|&(x, y)| (px[x as usize], py[y as usize]))
                .collect();
            by_x.sort_unstable();
            if by_x.windows(2).any(|w| w[1].1 <= w[0].1) {
                return fail("two matching edges cross under the orderings".into());
            }
        }
        let saturated: Vec<u32> = {
            let mut s: Vec<u32> = self.edges.iter().map(|&(x, _)| x).collect();
            s.sort_unstable();
            s
        };
        if saturated != self.saturated_x {
            return fail("saturated_x does not match the edge list".into());
        }
        Ok(())
    }
}

pub(crate) struct ChangStats {
    pub branch_counts: [usize; 3],
}

/// Maximum induced matching of a connected incidence graph equipped with
/// a strong biconvex ordering pair.
pub fn chang_induced_matching(b: &IncidenceGraph) -> Result<InducedMatching> {
    chang_with_stats(b).map(|(m, _)| m)
}

/// The three-branch greedy walk from the top of both orders down to the
/// first position. On connected inputs exactly one branch applies per
/// iteration; this is asserted.
pub(crate) fn chang_with_stats(b: &IncidenceGraph) -> Result<(InducedMatching, ChangStats)> {
    let (Some(ox), Some(oy)) = (b.order_x(), b.order_y()) else {
        return Err(Error::Invalid("orderings are required".into()));
    };
    if !b.is_strong_biconvex() {
        return Err(Error::Invalid(
            "a strong biconvex ordering pair is required".into(),
        ));
    }
    if b.edge_count() == 0 {
        return Err(Error::Invalid("edge set must be nonempty".into()));
    }
    if !b.is_connected() {
        return Err(Error::Invalid("input must be connected".into()));
    }

    let s = b.x_count();
    let t = b.y_count();
    let px = positions(ox);
    let py = positions(oy);

    // 1-based position arrays, as in the loop invariants below
    let mut min_x = vec![usize::MAX; s + 1];
    let mut max_x = vec![0usize; s + 1];
    let mut min_y = vec![usize::MAX; t + 1];
    let mut max_y = vec![0usize; t + 1];
    for v in 0..s as u32 {
        let i = px[v as usize] as usize + 1;
        for &c in b.cliques_of(v) {
            let j = py[c as usize] as usize + 1;
            min_x[i] = min_x[i].min(j);
            max_x[i] = max_x[i].max(j);
            min_y[j] = min_y[j].min(i);
            max_y[j] = max_y[j].max(i);
        }
    }

    assert!(
        b.has_edge(ox[s - 1], oy[t - 1]),
        "top of both orders must be adjacent on connected strong-ordered inputs"
    );
    let mut pairs = vec![(s, t)];
    let mut stats = ChangStats {
        branch_counts: [0; 3],
    };
    let (mut i, mut j) = (s, t);
    while min_x[i] != 1 && min_y[j] != 1 {
        let p = min_y[j];
        let q = min_x[i];
        let c1 = min_x[p] < q && min_y[q] < p;
        let c2 = min_x[p] == q && min_y[q] < p;
        let c3 = min_x[p] < q && min_y[q] == p;
        assert!(
            usize::from(c1) + usize::from(c2) + usize::from(c3) == 1,
            "exactly one branch must apply per iteration"
        );
        if c1 {
            stats.branch_counts[0] += 1;
            i = p - 1;
            j = q - 1;
        } else if c2 {
            stats.branch_counts[1] += 1;
            i = max_y[q - 1];
            j = q - 1;
        } else {
            stats.branch_counts[2] += 1;
            j = max_x[p - 1];
            i = p - 1;
        }
        assert!(
            b.has_edge(ox[i - 1], oy[j - 1]),
            "selected pair must be adjacent"
        );
        pairs.push((i, j));
    }

    let mut edges: Vec<(u32, u32)> = pairs
        .into_iter()
        .map(|(pi, pj)| (ox[pi - 1], oy[pj - 1]))
        .collect();
    edges.reverse();
    let mut saturated_x: Vec<u32> = edges.iter().map(|&(x, _)| x).collect();
    saturated_x.sort_unstable();
    let matching = InducedMatching { edges, saturated_x };
    matching
        .verify(b)
        .map_err(|e| Error::Internal(format!("matching failed self-check: {e}")))?;
    Ok((matching, stats))
}

/// Maximum minimal clique transversal of a proper interval graph: per
/// component, order the vertices by the umbrella ordering, read the
/// maximal cliques off as consecutive blocks, and take the saturated
/// X-side of a maximum induced matching of the incidence graph.
/// `O(n + m)` overall.
pub fn uct_proper_interval(g: &Graph) -> Result<UctResult> {
    let pio = proper_interval_order(g)?;
    let pos = pio.positions();

    let mut value = 0;
    let mut vertices = Vec::new();
    let mut certificates = BTreeMap::new();
    // shared scratch: local position of each vertex within its component
    let mut local = vec![u32::MAX; g.n()];
    for comp in g.components() {
        // local id = rank in the umbrella order, so the component order
        // is the identity and clique blocks come out sorted
        let mut ordered = comp;
        ordered.sort_by_key(|&v| pos[v as usize]);
        let nh = ordered.len();
        for (i, &v) in ordered.iter().enumerate() {
            local[v as usize] = i as u32;
        }

        // rightmost closed-neighborhood position; non-decreasing in an
        // umbrella order
        let mut reach = vec![0usize; nh];
        for (idx, &v) in ordered.iter().enumerate() {
            let r = g
                .neighbors(v)
                .iter()
                .map(|&w| local[w as usize] as usize)
                .max()
                .unwrap_or(idx)
                .max(idx);
            reach[idx] = r;
            debug_assert!(idx == 0 || reach[idx - 1] <= r);
        }
        let mut y_members = Vec::new();
        for idx in 0..nh {
            if idx == 0 || reach[idx - 1] < reach[idx] {
                y_members.push((idx as u32..=reach[idx] as u32).collect());
            }
        }
        let y_count = y_members.len();
        let b = IncidenceGraph::from_parts(nh, y_members).with_orderings(
            (0..nh as u32).collect(),
            (0..y_count as u32).collect(),
            true,
        )?;

        let (matching, _) = chang_with_stats(&b)?;

        // the saturated set must dominate the clique side
        let mut saturated = vec![false; nh];
        for &x in &matching.saturated_x {
            saturated[x as usize] = true;
        }
        for y in 0..y_count as u32 {
            assert!(
                b.members(y).iter().any(|&v| saturated[v as usize]),
                "saturated vertices must dominate every maximal clique"
            );
        }

        value += matching.edges.len();
        for &(x, y) in &matching.edges {
            let gv = ordered[x as usize];
            let mut clique: Vec<u32> = b.members(y).iter().map(|&v| ordered[v as usize]).collect();
            clique.sort_unstable();
            vertices.push(gv);
            certificates.insert(gv, clique);
        }
        for &v in &ordered {
            local[v as usize] = u32::MAX;
        }
    }
    vertices.sort_unstable();
    Ok(UctResult {
        value,
        witness: TransversalWitness {
            vertices,
            certificates,
        },
        method: Method::ProperInterval,
    })
}

/// Smallest-id-first greedy completion of `{u}` to a maximal clique.
fn maximal_clique_containing(g: &Graph, u: u32) -> Vec<u32> {
    let mut clique = vec![u];
    let mut candidates = g.neighbors(u).to_vec();
    while let Some(&c) = candidates.first() {
        clique.push(c);
        let nb = g.neighbors(c);
        candidates = candidates
            .iter()
            .copied()
            .filter(|&w| w != c && nb.binary_search(&w).is_ok())
            .collect();
    }
    clique.sort_unstable();
    clique
}

/// Maximum minimal clique transversal of a cograph by bottom-up DP over
/// its cotree: 1 at leaves, sum across disjoint unions, max across joins
/// (ties to the left child). The witness is a maximum independent set.
pub fn uct_cograph(g: &Graph, t: &Cotree) -> Result<UctResult> {
    let evaluated = t
        .evaluate(g.n())
        .map_err(|e| Error::Invalid(format!("cotree does not describe the graph: {e}")))?;
    if evaluated != *g {
        return Err(Error::Invalid(
            "cotree does not evaluate to the input graph".into(),
        ));
    }

    let nodes = t.nodes();
    let mut val = vec![0usize; nodes.len()];
    for (idx, node) in nodes.iter().enumerate() {
        val[idx] = match *node {
            CotreeNode::Leaf(_) => 1,
            CotreeNode::Union(a, b) => val[a as usize] + val[b as usize],
            CotreeNode::Join(a, b) => val[a as usize].max(val[b as usize]),
        };
    }
    let mut vertices = Vec::new();
    let mut stack = vec![t.root()];
    while let Some(node) = stack.pop() {
        match nodes[node as usize] {
            CotreeNode::Leaf(v) => vertices.push(v),
            CotreeNode::Union(a, b) => {
                stack.push(a);
                stack.push(b);
            }
            CotreeNode::Join(a, b) => {
                stack.push(if val[a as usize] >= val[b as usize] {
                    a
                } else {
                    b
                });
            }
        }
    }
    vertices.sort_unstable();
    let value = val[t.root() as usize];
    debug_assert_eq!(vertices.len(), value);

    // the witness is a maximal independent set, so any maximal clique
    // through u meets it exactly in u
    let mut certificates = BTreeMap::new();
    for &u in &vertices {
        certificates.insert(u, maximal_clique_containing(g, u));
    }
    Ok(UctResult {
        value,
        witness: TransversalWitness {
            vertices,
            certificates,
        },
        method: Method::Cograph,
    })
}

/// Minimum maximal independent set of a forest: three states per vertex
/// (in the set; out and dominated from below; out and waiting for the
/// parent), processed in reverse BFS order.
fn min_maximal_independent_set(g: &Graph) -> Vec<u32> {
    const INF: usize = usize::MAX / 4;
    let n = g.n();
    let mut parent = vec![u32::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut roots = Vec::new();
    for start in 0..n as u32 {
        if seen[start as usize] {
            continue;
        }
        roots.push(start);
        seen[start as usize] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    parent[w as usize] = v;
                    queue.push_back(w);
                }
            }
        }
    }

    let mut in_set = vec![0usize; n]; // vertex in the independent set
    let mut covered = vec![0usize; n]; // out, dominated by a child
    let mut waiting = vec![0usize; n]; // out, dominated by the parent
    for &v in order.iter().rev() {
        let vi = v as usize;
        let mut a = 1usize;
        let mut b_base = 0usize;
        let mut b_extra = INF;
        let mut c = 0usize;
        let mut has_child = false;
        for &w in g.neighbors(v) {
            if w == parent[vi] {
                continue;
            }
            has_child = true;
            let wi = w as usize;
            a += covered[wi].min(waiting[wi]);
            let best = in_set[wi].min(covered[wi]);
            b_base += best;
            b_extra = b_extra.min(in_set[wi] - best);
            c = c.saturating_add(covered[wi]);
        }
        in_set[vi] = a;
        covered[vi] = if has_child { b_base + b_extra } else { INF };
        waiting[vi] = c;
    }

    #[derive(Clone, Copy, PartialEq)]
    enum State {
        In,
        Covered,
        Waiting,
    }
    let mut chosen = Vec::new();
    let mut stack: Vec<(u32, State)> = roots
        .iter()
        .map(|&r| {
            let ri = r as usize;
            let st = if in_set[ri] <= covered[ri] {
                State::In
            } else {
                State::Covered
            };
            (r, st)
        })
        .collect();
    while let Some((v, st)) = stack.pop() {
        let vi = v as usize;
        let children: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| w != parent[vi])
            .collect();
        match st {
            State::In => {
                chosen.push(v);
                for &w in &children {
                    let wi = w as usize;
                    let st = if covered[wi] <= waiting[wi] {
                        State::Covered
                    } else {
                        State::Waiting
                    };
                    stack.push((w, st));
                }
            }
            State::Covered => {
                let designated = children
                    .iter()
                    .copied()
                    .min_by_key(|&w| {
                        let wi = w as usize;
                        (in_set[wi] - in_set[wi].min(covered[wi]), w)
                    })
                    .expect("covered state requires a child");
                for &w in &children {
                    let wi = w as usize;
                    let st = if w == designated || in_set[wi] <= covered[wi] {
                        State::In
                    } else {
                        State::Covered
                    };
                    stack.push((w, st));
                }
            }
            State::Waiting => {
                for &w in &children {
                    stack.push((w, State::Covered));
                }
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// Upper clique transversal of a triangle-free graph. Isolated vertices
/// are forced into every minimal transversal and peeled first. Forests get
/// the tree DP (`τ⁺ = n - i(G)`); anything else is delegated to the oracle
/// and tagged as such.
pub fn uct_triangle_free(g: &Graph, caps: &Caps) -> Result<UctResult> {
    if let Some(t) = g.find_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    let isolated = g.isolated_vertices();
    let rest: Vec<u32> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let (h, back) = g.induced(&rest);

    let mut vertices = Vec::new();
    let mut certificates = BTreeMap::new();
    let method;
    if h.is_forest() {
        let independent = min_maximal_independent_set(&h);
        let mut in_i = vec![false; h.n()];
        for &v in &independent {
            in_i[v as usize] = true;
        }
        for v in h.vertices().filter(|&v| !in_i[v as usize]) {
            // maximality of the independent set guarantees a neighbor in it,
            // and in a triangle-free graph every edge is a maximal clique
            let w = h
                .neighbors(v)
                .iter()
                .copied()
                .find(|&w| in_i[w as usize])
                .expect("complement vertex must have a neighbor in the maximal independent set");
            let (gv, gw) = (back[v as usize], back[w as usize]);
            vertices.push(gv);
            let mut edge = vec![gv, gw];
            edge.sort_unstable();
            certificates.insert(gv, edge);
        }
        method = Method::Forest;
    } else {
        let (_, w) = uct_oracle(&h, caps)?;
        for &v in &w.vertices {
            let gv = back[v as usize];
            vertices.push(gv);
            let mut clique: Vec<u32> = w.certificates[&v]
                .iter()
                .map(|&x| back[x as usize])
                .collect();
            clique.sort_unstable();
            certificates.insert(gv, clique);
        }
        method = Method::Oracle;
    }
    for &v in &isolated {
        vertices.push(v);
        certificates.insert(v, vec![v]);
    }
    vertices.sort_unstable();
    let value = vertices.len();
    Ok(UctResult {
        value,
        witness: TransversalWitness {
            vertices,
            certificates,
        },
        method,
    })
}

fn solve_by_oracle(g: &Graph, caps: &Caps) -> Result<UctResult> {
    let isolated = g.isolated_vertices();
    let rest: Vec<u32> = g.vertices().filter(|&v| g.degree(v) > 0).collect();
    let (h, back) = g.induced(&rest);
    let (_, w) = uct_oracle(&h, caps)?;
    let mut vertices = Vec::new();
    let mut certificates = BTreeMap::new();
    for &v in &w.vertices {
        let gv = back[v as usize];
        vertices.push(gv);
        let mut clique: Vec<u32> = w.certificates[&v]
            .iter()
            .map(|&x| back[x as usize])
            .collect();
        clique.sort_unstable();
        certificates.insert(gv, clique);
    }
    for &v in &isolated {
        vertices.push(v);
        certificates.insert(v, vec![v]);
    }
    vertices.sort_unstable();
    let value = vertices.len();
    Ok(UctResult {
        value,
        witness: TransversalWitness {
            vertices,
            certificates,
        },
        method: Method::Oracle,
    })
}

/// A class the dispatcher can be forced to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ForcedClass {
    Cograph,
    Split,
    ProperInterval,
    Forest,
    TriangleFree,
    Oracle,
}

impl std::str::FromStr for ForcedClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cograph" => Ok(ForcedClass::Cograph),
            "split" => Ok(ForcedClass::Split),
            "proper-interval" | "proper_interval" => Ok(ForcedClass::ProperInterval),
            "forest" | "tree" => Ok(ForcedClass::Forest),
            "triangle-free" | "triangle_free" => Ok(ForcedClass::TriangleFree),
            "oracle" => Ok(ForcedClass::Oracle),
            other => Err(Error::Invalid(format!("unknown class {other:?}"))),
        }
    }
}

/// Solve with the first applicable specialized algorithm, in the fixed
/// precedence cograph, split, proper interval, forest, oracle. A forced
/// class skips the probing but still validates its certificate. The
/// witness is re-verified against the full clique list whenever the
/// enumeration cap allows.
pub fn uct_dispatch(g: &Graph, forced: Option<ForcedClass>, caps: &Caps) -> Result<UctResult> {
    let result = match forced {
        Some(ForcedClass::Cograph) => uct_cograph(g, &build_cotree(g)?)?,
        Some(ForcedClass::Split) => uct_split(g, &split_partition(g)?)?,
        Some(ForcedClass::ProperInterval) => uct_proper_interval(g)?,
        Some(ForcedClass::Forest) => {
            if !g.is_forest() {
                return Err(Error::Invalid("graph is not a forest".into()));
            }
            uct_triangle_free(g, caps)?
        }
        Some(ForcedClass::TriangleFree) => uct_triangle_free(g, caps)?,
        Some(ForcedClass::Oracle) => solve_by_oracle(g, caps)?,
        None => {
            if let Ok(t) = build_cotree(g) {
                uct_cograph(g, &t)?
            } else if let Ok(p) = split_partition(g) {
                uct_split(g, &p)?
            } else if proper_interval_order(g).is_ok() {
                uct_proper_interval(g)?
            } else if g.is_forest() {
                uct_triangle_free(g, caps)?
            } else {
                solve_by_oracle(g, caps)?
            }
        }
    };

    if result.witness.size() != result.value {
        return Err(Error::Internal(
            "witness size disagrees with the value".into(),
        ));
    }
    match maximal_cliques(g, caps) {
        Ok(cl) => match verify_with_cliques(&cl, &result.witness.vertices) {
            Verification::Verified(_) => {}
            Verification::Refuted(r) => {
                return Err(Error::Internal(format!(
                    "solver witness failed verification: {r:?}"
                )))
            }
        },
        Err(Error::CapExceeded { .. }) => {} // verification skipped
        Err(e) => return Err(e),
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::verify_minimal_ct;

    fn caps() -> Caps {
        Caps::default()
    }

    fn solve(g: &Graph) -> UctResult {
        uct_dispatch(g, None, &caps()).unwrap()
    }

    #[test]
    fn split_with_maximal_k() {
        // K = {0, 1}, I = {2, 3, 4}; edges 0-2, 0-3, 1-4
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 4)]).unwrap();
        let p = split_partition(&g).unwrap();
        assert!(p.k_is_maximal_clique);
        let r = uct_split(&g, &p).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.vertices, vec![1, 2, 3]);
        assert!(verify_minimal_ct(&g, &r.witness.vertices, &caps())
            .unwrap()
            .is_verified());
    }

    #[test]
    fn split_star() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let r = uct_split(&g, &split_partition(&g).unwrap()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.witness.vertices, vec![1, 2, 3]);
    }

    #[test]
    fn split_single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let r = uct_split(&g, &split_partition(&g).unwrap()).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn invalid_partition_is_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let bogus = SplitPartition {
            k_set: vec![0, 1, 2],
            i_set: vec![],
            k_is_maximal_clique: true,
        };
        assert!(matches!(
            uct_split(&g, &bogus),
            Err(Error::InvalidPartition(_))
        ));
    }

    fn incidence_with_orders(g: &Graph) -> IncidenceGraph {
        // orderings straight from the umbrella order, cliques by first vertex
        let pio = proper_interval_order(g).unwrap();
        let pos = pio.positions();
        let cl = maximal_cliques(g, &caps()).unwrap();
        let b = IncidenceGraph::build(g, &cl).unwrap();
        let mut order_y: Vec<u32> = (0..b.y_count() as u32).collect();
        order_y.sort_by_key(|&y| b.members(y).iter().map(|&v| pos[v as usize]).min());
        b.with_orderings(pio.order.clone(), order_y, true).unwrap()
    }

    #[test]
    fn chang_on_path_incidence() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = incidence_with_orders(&g);
        let (m, stats) = chang_with_stats(&b).unwrap();
        assert_eq!(m.edges.len(), 2);
        // only the third branch fires, once
        assert_eq!(stats.branch_counts, [0, 0, 1]);
        assert_eq!(m.saturated_x, vec![0, 2]);
    }

    #[test]
    fn chang_on_triangle_incidence() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = incidence_with_orders(&g);
        let m = chang_induced_matching(&b).unwrap();
        assert_eq!(m.edges.len(), 1);
    }

    #[test]
    fn chang_on_p5_incidence() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = incidence_with_orders(&g);
        let m = chang_induced_matching(&b).unwrap();
        assert_eq!(m.edges.len(), 3);
    }

    #[test]
    fn proper_interval_path() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = uct_proper_interval(&g).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.witness.vertices, vec![0, 2]);
    }

    #[test]
    fn proper_interval_triangle() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(uct_proper_interval(&g).unwrap().value, 1);
    }

    #[test]
    fn proper_interval_disconnected() {
        // P5 plus a triangle: 3 + 1
        let g = Graph::from_edges(8, &[(0, 1), (1, 2), (2, 3), (3, 4), (5, 6), (6, 7), (5, 7)])
            .unwrap();
        let r = uct_proper_interval(&g).unwrap();
        assert_eq!(r.value, 4);
        assert!(verify_minimal_ct(&g, &r.witness.vertices, &caps())
            .unwrap()
            .is_verified());
    }

    #[test]
    fn cograph_two_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let r = uct_cograph(&g, &build_cotree(&g).unwrap()).unwrap();
        assert_eq!(r.value, 2);
    }

    #[test]
    fn cograph_square() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = uct_cograph(&g, &build_cotree(&g).unwrap()).unwrap();
        assert_eq!(r.value, 2);
        assert!(verify_minimal_ct(&g, &r.witness.vertices, &caps())
            .unwrap()
            .is_verified());
    }

    #[test]
    fn cograph_complete() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let r = uct_cograph(&g, &build_cotree(&g).unwrap()).unwrap();
        assert_eq!(r.value, 1);
    }

    #[test]
    fn cograph_mismatch_is_rejected() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let other = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = build_cotree(&other).unwrap();
        assert!(uct_cograph(&g, &t).is_err());
    }

    #[test]
    fn triangle_free_path() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let r = uct_triangle_free(&g, &caps()).unwrap();
        assert_eq!(r.value, 2);
        assert_eq!(r.method, Method::Forest);
    }

    #[test]
    fn triangle_free_star() {
        for q in 2..6 {
            let edges: Vec<(u32, u32)> = (1..=q).map(|leaf| (0, leaf)).collect();
            let g = Graph::from_edges(q as usize + 1, &edges).unwrap();
            let r = uct_triangle_free(&g, &caps()).unwrap();
            assert_eq!(r.value, q as usize);
            assert_eq!(r.witness.vertices, (1..=q).collect::<Vec<u32>>());
        }
    }

    #[test]
    fn triangle_free_six_cycle_delegates() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        let r = uct_triangle_free(&g, &caps()).unwrap();
        // {0, 3} is a maximal independent set, so the complement
        // {1, 2, 4, 5} is a minimal transversal of maximum size
        assert_eq!(r.value, 4);
        assert_eq!(r.method, Method::Oracle);
        assert!(verify_minimal_ct(&g, &r.witness.vertices, &caps())
            .unwrap()
            .is_verified());
    }

    #[test]
    fn triangle_is_rejected_by_triangle_free_solver() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            uct_triangle_free(&g, &caps()),
            Err(Error::NotTriangleFree(_))
        ));
    }

    #[test]
    fn forest_dp_handles_isolated_vertices() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2)]).unwrap();
        let r = uct_triangle_free(&g, &caps()).unwrap();
        // P3 contributes 2, the two isolated vertices are forced in
        assert_eq!(r.value, 4);
        assert_eq!(r.witness.certificates[&3], vec![3]);
    }

    #[test]
    fn dispatch_square_uses_cograph() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let r = solve(&g);
        assert_eq!((r.value, r.method), (2, Method::Cograph));
    }

    #[test]
    fn dispatch_single_vertex() {
        let r = solve(&Graph::empty(1));
        assert_eq!(r.value, 1);
    }

    #[test]
    fn dispatch_split_fixture() {
        // 12-vertex split graph containing an induced P4, so the cograph
        // branch passes on it
        let mut edges = vec![];
        for u in 0..4u32 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        edges.extend([
            (0, 4),
            (0, 5),
            (1, 6),
            (2, 7),
            (2, 8),
            (3, 9),
            (3, 10),
            (1, 11),
        ]);
        let g = Graph::from_edges(12, &edges).unwrap();
        let r = solve(&g);
        assert_eq!(r.method, Method::Split);
        let (oracle_value, _) = uct_oracle(&g, &caps()).unwrap();
        assert_eq!(r.value, oracle_value);
    }

    #[test]
    fn dispatch_forced_class_validates() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(uct_dispatch(&g, Some(ForcedClass::Split), &caps()).is_err());
        assert!(uct_dispatch(&g, Some(ForcedClass::Cograph), &caps()).is_ok());
    }

    #[test]
    fn dispatch_empty_graph() {
        let r = solve(&Graph::empty(0));
        assert_eq!(r.value, 0);
        assert!(r.witness.vertices.is_empty());
    }

    #[test]
    fn dispatch_oracle_fallback_peels_isolated_vertices() {
        // C5 plus an isolated vertex: none of the special classes apply
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = solve(&g);
        assert_eq!(r.method, Method::Oracle);
        assert_eq!(r.value, 4); // tau(C5) = 3 plus the forced vertex 5
        assert!(r.witness.vertices.contains(&5));
        assert_eq!(r.witness.certificates[&5], vec![5]);
    }

    #[test]
    fn dispatch_two_star_uses_split_formula() {
        // the two-star gadget is split: K = the centers, I = the leaves;
        // delta = q, so the formula gives 2q - q + 1
        for q in 2..=4 {
            let inst = crate::reductions::gen_two_star(q).unwrap();
            let r = solve(&inst.graph);
            assert_eq!(r.method, Method::Split);
            assert_eq!(r.value, q as usize + 1);
        }
    }

    #[test]
    fn result_document_shape() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let r = uct_proper_interval(&g).unwrap();
        let doc = r.to_document(true);
        let mut lines = doc.lines();
        assert_eq!(lines.next(), Some("value 2 method proper_interval"));
        assert_eq!(lines.next(), Some("0 2"));
        assert_eq!(lines.next(), Some("cert 0: 0 1"));
        assert_eq!(lines.next(), Some("cert 2: 1 2"));
    }

    #[test]
    fn forest_dp_matches_independent_domination_oracle() {
        use crate::oracle::min_ids_oracle;
        // a caterpillar
        let g = Graph::from_edges(
            9,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (1, 5),
                (2, 6),
                (3, 7),
                (3, 8),
            ],
        )
        .unwrap();
        let i = min_maximal_independent_set(&g);
        assert_eq!(i.len(), min_ids_oracle(&g, &caps()).unwrap());
    }
}
