//! Graph-class recognition with structural certificates: split partitions,
//! proper interval (umbrella) orderings, and cotrees. Every positive answer
//! is backed by a certificate that is re-validated, so recognition bugs
//! cannot silently misclassify.

use crate::cliques::{identity_preference, is_chordal, lex_bfs};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::positions;

/// Partition of a split graph into a clique `K` and an independent set `I`,
/// normalized so that `I` is a maximal independent set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub k_set: Vec<u32>,
    pub i_set: Vec<u32>,
    /// Whether `K` is a maximal clique, i.e. every vertex of `I` has a
    /// non-neighbor in `K`.
    pub k_is_maximal_clique: bool,
}

impl SplitPartition {
    /// Re-validate every invariant against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        if self.k_set.len() + self.i_set.len() != n {
            return Err(Error::InvalidPartition("K and I must cover V".into()));
        }
        let mut side = vec![0u8; n];
        for &v in &self.k_set {
            if v as usize >= n || side[v as usize] != 0 {
                return Err(Error::InvalidPartition(
                    "K is not a valid vertex set".into(),
                ));
            }
            side[v as usize] = 1;
        }
        for &v in &self.i_set {
            if v as usize >= n || side[v as usize] != 0 {
                return Err(Error::InvalidPartition("K and I overlap".into()));
            }
            side[v as usize] = 2;
        }
        for &v in &self.k_set {
            let in_k = g
                .neighbors(v)
                .iter()
                .filter(|&&w| side[w as usize] == 1)
                .count();
            if in_k + 1 != self.k_set.len() {
                return Err(Error::InvalidPartition("K is not a clique".into()));
            }
            if !g.neighbors(v).iter().any(|&w| side[w as usize] == 2) {
                return Err(Error::InvalidPartition(
                    "I is not maximal: a K-vertex has no neighbor in I".into(),
                ));
            }
        }
        for &v in &self.i_set {
            if g.neighbors(v).iter().any(|&w| side[w as usize] == 2) {
                return Err(Error::InvalidPartition("I is not independent".into()));
            }
        }
        let k_max = !self.k_set.is_empty()
            && self.i_set.iter().all(|&v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| side[w as usize] == 1)
                    .count()
                    < self.k_set.len()
            });
        if k_max != self.k_is_maximal_clique {
            return Err(Error::InvalidPartition(
                "k_is_maximal_clique flag is inconsistent".into(),
            ));
        }
        Ok(())
    }
}

/// Split partition via the degree-sequence characterization, in `O(n + m)`
/// plus the sort. Ties at the degree threshold go to the smallest vertex
/// id. After the threshold split, a `K`-vertex without neighbors in `I`
/// (if any) is moved to `I`, which makes `I` a maximal independent set.
pub fn split_partition(g: &Graph) -> Result<SplitPartition> {
    let n = g.n();
    let mut by_degree: Vec<u32> = (0..n as u32).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut h = 0;
    for (i, &v) in by_degree.iter().enumerate() {
        if g.degree(v) >= i {
            h = i + 1;
        } else {
            break;
        }
    }
    let top: usize = by_degree[..h].iter().map(|&v| g.degree(v)).sum();
    let rest: usize = by_degree[h..].iter().map(|&v| g.degree(v)).sum();
    if top != h * h.saturating_sub(1) + rest {
        return Err(Error::NotSplit);
    }

    let mut k_set: Vec<u32> = by_degree[..h].to_vec();
    let mut i_set: Vec<u32> = by_degree[h..].to_vec();
    k_set.sort_unstable();
    i_set.sort_unstable();

    let mut side = vec![0u8; n];
    for &v in &k_set {
        side[v as usize] = 1;
    }
    let moved = k_set
        .iter()
        .copied()
        .find(|&v| !g.neighbors(v).iter().any(|&w| side[w as usize] == 0));
    if let Some(v) = moved {
        k_set.retain(|&u| u != v);
        side[v as usize] = 0;
        let at = i_set.binary_search(&v).unwrap_err();
        i_set.insert(at, v);
    }

    let k_is_maximal_clique = !k_set.is_empty()
        && i_set.iter().all(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&&w| side[w as usize] == 1)
                .count()
                < k_set.len()
        });

    let p = SplitPartition {
        k_set,
        i_set,
        k_is_maximal_clique,
    };
    p.validate(g).map_err(|e| {
        Error::Internal(format!("degree-sequence partition failed validation: {e}"))
    })?;
    Ok(p)
}

/// A vertex order in which every closed neighborhood (and hence every
/// maximal clique) occupies consecutive positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperIntervalOrder {
    pub order: Vec<u32>,
}

impl ProperIntervalOrder {
    pub fn positions(&self) -> Vec<u32> {
        positions(&self.order)
    }

    /// Check the umbrella property: for each `v`, the positions of `N[v]`
    /// form a contiguous range.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.n() {
            return Err(Error::Invalid("order length mismatch".into()));
        }
        let pos = self.positions();
        for v in g.vertices() {
            let mut lo = pos[v as usize];
            let mut hi = lo;
            for &w in g.neighbors(v) {
                lo = lo.min(pos[w as usize]);
                hi = hi.max(pos[w as usize]);
            }
            if (hi - lo) as usize != g.degree(v) {
                return Err(Error::NotProperInterval);
            }
        }
        Ok(())
    }
}

/// Proper interval recognition: three Lex-BFS sweeps (the second and third
/// with the "+" tie-breaking rule), then an umbrella-property check that
/// certifies the result regardless of how the candidate was produced.
pub fn proper_interval_order(g: &Graph) -> Result<ProperIntervalOrder> {
    let s1 = lex_bfs(g, &identity_preference(g.n()));
    let s2 = lex_bfs(g, &positions(&s1));
    let s3 = lex_bfs(g, &positions(&s2));
    let pio = ProperIntervalOrder { order: s3 };
    pio.validate(g)?;
    Ok(pio)
}

/// Node of a binary cotree. Children are indices into the node arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(u32),
    Union(u32, u32),
    Join(u32, u32),
}

/// Full binary decomposition tree of a cograph. Children always precede
/// their parent in the arena, so a single forward pass is a bottom-up
/// traversal.
#[derive(Debug, Clone)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    root: u32,
}

impl Cotree {
    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> u32 {
        self.root
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, CotreeNode::Leaf(_)))
            .count()
    }

    /// Materialize the graph the cotree describes. Quadratic; meant for
    /// validation on small instances.
    pub fn evaluate(&self, n: usize) -> Result<Graph> {
        let mut leaves: Vec<Vec<u32>> = vec![Vec::new(); self.nodes.len()];
        let mut edges = Vec::new();
        for (i, node) in self.nodes.iter().enumerate() {
            match *node {
                CotreeNode::Leaf(v) => leaves[i].push(v),
                CotreeNode::Union(a, b) => {
                    let mut all = leaves[a as usize].clone();
                    all.extend_from_slice(&leaves[b as usize]);
                    leaves[i] = all;
                }
                CotreeNode::Join(a, b) => {
                    for &u in &leaves[a as usize] {
                        for &v in &leaves[b as usize] {
                            edges.push((u, v));
                        }
                    }
                    let mut all = leaves[a as usize].clone();
                    all.extend_from_slice(&leaves[b as usize]);
                    leaves[i] = all;
                }
            }
        }
        Graph::from_edges(n, &edges)
    }

    /// Nested expression form, e.g. `(U (J 0 1) (J 2 3))`.
    pub fn to_expression(&self) -> String {
        fn write(t: &Cotree, i: u32, out: &mut String) {
            match t.nodes[i as usize] {
                CotreeNode::Leaf(v) => out.push_str(&v.to_string()),
                CotreeNode::Union(a, b) => {
                    out.push_str("(U ");
                    write(t, a, out);
                    out.push(' ');
                    write(t, b, out);
                    out.push(')');
                }
                CotreeNode::Join(a, b) => {
                    out.push_str("(J ");
                    write(t, a, out);
                    out.push(' ');
                    write(t, b, out);
                    out.push(')');
                }
            }
        }
        let mut out = String::new();
        write(self, self.root, &mut out);
        out
    }
}

/// Cotree construction by recursive complement-connectivity decomposition.
/// Fails with a witness `P_4` when the graph is not a cograph.
pub fn build_cotree(g: &Graph) -> Result<Cotree> {
    if g.n() == 0 {
        return Err(Error::Invalid(
            "cotree of the empty graph is undefined".into(),
        ));
    }
    let mut nodes = Vec::with_capacity(2 * g.n());
    let all: Vec<u32> = g.vertices().collect();
    let root = decompose(g, &all, &mut nodes)?;
    Ok(Cotree { nodes, root })
}

fn decompose(g: &Graph, verts: &[u32], nodes: &mut Vec<CotreeNode>) -> Result<u32> {
    if verts.len() == 1 {
        nodes.push(CotreeNode::Leaf(verts[0]));
        return Ok(nodes.len() as u32 - 1);
    }
    let (h, back) = g.induced(verts);
    let comps = h.components();
    if comps.len() > 1 {
        return fold(g, &back, comps, nodes, false);
    }
    let co_comps = co_components(&h);
    if co_comps.len() > 1 {
        return fold(g, &back, co_comps, nodes, true);
    }
    // connected and co-connected on >= 2 vertices: a P4 must exist
    let p4 = find_p4(&h)
        .ok_or_else(|| Error::Internal("connected co-connected subgraph without a P4".into()))?;
    Err(Error::NotCograph(p4.map(|v| back[v as usize])))
}

fn fold(
    g: &Graph,
    back: &[u32],
    parts: Vec<Vec<u32>>,
    nodes: &mut Vec<CotreeNode>,
    join: bool,
) -> Result<u32> {
    let mut ids = Vec::with_capacity(parts.len());
    for part in parts {
        let global: Vec<u32> = part.iter().map(|&v| back[v as usize]).collect();
        ids.push(decompose(g, &global, nodes)?);
    }
    let mut acc = ids[0];
    for &child in &ids[1..] {
        nodes.push(if join {
            CotreeNode::Join(acc, child)
        } else {
            CotreeNode::Union(acc, child)
        });
        acc = nodes.len() as u32 - 1;
    }
    Ok(acc)
}

/// Connected components of the complement, without materializing it.
/// Vertices kept in the pool during a BFS step are charged to the edge
/// that kept them, so the whole thing is `O(n + m)`.
fn co_components(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut pool: Vec<u32> = (0..n as u32).rev().collect();
    let mut comps = Vec::new();
    let mut queue = std::collections::VecDeque::new();
    while let Some(start) = pool.pop() {
        let mut comp = vec![start];
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            let nb = g.neighbors(v);
            let mut keep = Vec::with_capacity(nb.len().min(pool.len()));
            for &w in pool.iter() {
                if nb.binary_search(&w).is_ok() {
                    keep.push(w);
                } else {
                    comp.push(w);
                    queue.push_back(w);
                }
            }
            pool = keep;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort_by_key(|c| c[0]);
    comps
}

/// An induced path on four vertices `(a, b, c, d)`, if one exists.
fn find_p4(g: &Graph) -> Option<[u32; 4]> {
    for b in g.vertices() {
        for &c in g.neighbors(b) {
            for &a in g.neighbors(b) {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != a && d != b && !g.has_edge(d, b) && !g.has_edge(d, a) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassTag {
    Split,
    Chordal,
    ProperInterval,
    Cograph,
    Tree,
    Bipartite,
    TriangleFree,
}

impl std::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassTag::Split => "split",
            ClassTag::Chordal => "chordal",
            ClassTag::ProperInterval => "proper_interval",
            ClassTag::Cograph => "cograph",
            ClassTag::Tree => "tree",
            ClassTag::Bipartite => "bipartite",
            ClassTag::TriangleFree => "triangle_free",
        };
        f.write_str(s)
    }
}

/// All class tags that hold for `g`. Each tag is certified by running the
/// corresponding certificate constructor (or direct definitional check).
pub fn recognize(g: &Graph) -> Vec<ClassTag> {
    let mut tags = Vec::new();
    if split_partition(g).is_ok() {
        tags.push(ClassTag::Split);
    }
    if is_chordal(g) {
        tags.push(ClassTag::Chordal);
    }
    if proper_interval_order(g).is_ok() {
        tags.push(ClassTag::ProperInterval);
    }
    if build_cotree(g).is_ok() {
        tags.push(ClassTag::Cograph);
    }
    if g.n() >= 1 && g.m() + 1 == g.n() && g.is_connected() {
        tags.push(ClassTag::Tree);
    }
    if g.bipartition().is_some() {
        tags.push(ClassTag::Bipartite);
    }
    if g.is_triangle_free() {
        tags.push(ClassTag::TriangleFree);
    }
    tags
}
