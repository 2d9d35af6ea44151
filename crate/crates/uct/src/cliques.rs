//! Maximal clique enumeration.
//!
//! Chordal inputs are detected with Lex-BFS and swept along the resulting
//! elimination ordering, which yields at most `n` maximal cliques in
//! `O(n + m)`. Everything else goes through pivoted Bron-Kerbosch, guarded
//! by a configurable output cap.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Caps;

/// The set of maximal cliques of a graph, each strictly sorted, the list
/// in lexicographic order. Carries the source fingerprint `(n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueList {
    pub cliques: Vec<Vec<u32>>,
    pub n: usize,
    pub m: usize,
}

impl CliqueList {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Vec<u32>> {
        self.cliques.iter()
    }

    /// One clique per line, space-separated sorted vertex ids.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        for c in &self.cliques {
            let words: Vec<String> = c.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Exact maximal-clique list of `g`.
pub fn maximal_cliques(g: &Graph, caps: &Caps) -> Result<CliqueList> {
    let mut cliques = if g.n() == 0 {
        Vec::new()
    } else {
        let order = lex_bfs(g, &identity_preference(g.n()));
        if reverse_is_peo(g, &order) {
            chordal_cliques(g, &order)
        } else {
            bron_kerbosch(g, caps.max_cliques)?
        }
    };
    if cliques.len() > caps.max_cliques {
        return Err(Error::CapExceeded {
            what: "maximal clique enumeration",
            needed: cliques.len(),
            cap: caps.max_cliques,
        });
    }
    cliques.sort_unstable();
    Ok(CliqueList {
        cliques,
        n: g.n(),
        m: g.m(),
    })
}

/// Preference for the first Lex-BFS sweep: ties favor the smallest id.
pub(crate) fn identity_preference(n: usize) -> Vec<u32> {
    (0..n as u32).rev().collect()
}

/// Lexicographic breadth-first search. `prefer[v]` breaks ties: among
/// vertices with equal labels, the one with the largest `prefer` value is
/// visited first. Passing the positions of a previous sweep yields LBFS+.
/// Runs in `O(n + m)`; components come out contiguous.
pub(crate) fn lex_bfs(g: &Graph, prefer: &[u32]) -> Vec<u32> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    const NONE: u32 = u32::MAX;

    // Neighbor lists sorted by preference descending, in one flat CSR
    // buffer filled by a counting pass.
    let mut by_pref = vec![0u32; n];
    for v in 0..n {
        by_pref[prefer[v] as usize] = v as u32;
    }
    let mut offsets = vec![0usize; n + 1];
    for v in 0..n as u32 {
        offsets[v as usize + 1] = offsets[v as usize] + g.degree(v);
    }
    let mut cursor = offsets.clone();
    let mut sorted_adj = vec![0u32; offsets[n]];
    for p in (0..n).rev() {
        let u = by_pref[p];
        for &w in g.neighbors(u) {
            sorted_adj[cursor[w as usize]] = u;
            cursor[w as usize] += 1;
        }
    }

    // Buckets form a doubly linked list; each bucket holds a doubly
    // linked list of vertices kept in preference-descending order.
    // Emptied buckets return to a free list.
    struct Bucket {
        head: u32,
        tail: u32,
        prev: u32,
        next: u32,
        twin: u32,
        stamp: u32,
    }
    let mut buckets: Vec<Bucket> = Vec::with_capacity(n + 1);
    let mut free: Vec<u32> = Vec::new();
    buckets.push(Bucket {
        head: NONE,
        tail: NONE,
        prev: NONE,
        next: NONE,
        twin: NONE,
        stamp: u32::MAX,
    });
    let mut first: u32 = 0;

    let mut vprev = vec![NONE; n];
    let mut vnext = vec![NONE; n];
    let mut vbucket = vec![0u32; n];
    for p in (0..n).rev() {
        let v = by_pref[p];
        let b = &mut buckets[0];
        if b.head == NONE {
            b.head = v;
        } else {
            vnext[b.tail as usize] = v;
            vprev[v as usize] = b.tail;
        }
        b.tail = v;
    }

    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);

    macro_rules! detach {
        ($w:expr) => {{
            let w = $w as usize;
            let b = vbucket[w] as usize;
            let (pw, nw) = (vprev[w], vnext[w]);
            if pw == NONE {
                buckets[b].head = nw;
            } else {
                vnext[pw as usize] = nw;
            }
            if nw == NONE {
                buckets[b].tail = pw;
            } else {
                vprev[nw as usize] = pw;
            }
            vprev[w] = NONE;
            vnext[w] = NONE;
            if buckets[b].head == NONE {
                let (bp, bn) = (buckets[b].prev, buckets[b].next);
                if bp == NONE {
                    first = bn;
                } else {
                    buckets[bp as usize].next = bn;
                }
                if bn != NONE {
                    buckets[bn as usize].prev = bp;
                }
                buckets[b].stamp = u32::MAX;
                free.push(b as u32);
            }
        }};
    }

    for step in 0..n as u32 {
        let v = buckets[first as usize].head;
        debug_assert_ne!(v, NONE);
        detach!(v);
        visited[v as usize] = true;
        order.push(v);

        for &w in &sorted_adj[offsets[v as usize]..offsets[v as usize + 1]] {
            if visited[w as usize] {
                continue;
            }
            let b = vbucket[w as usize];
            if buckets[b as usize].stamp != step {
                // split: promoted vertices go to a fresh bucket just before b
                let bp = buckets[b as usize].prev;
                let fresh = Bucket {
                    head: NONE,
                    tail: NONE,
                    prev: bp,
                    next: b,
                    twin: NONE,
                    stamp: u32::MAX,
                };
                let nb = match free.pop() {
                    Some(slot) => {
                        buckets[slot as usize] = fresh;
                        slot
                    }
                    None => {
                        buckets.push(fresh);
                        buckets.len() as u32 - 1
                    }
                };
                if bp == NONE {
                    first = nb;
                } else {
                    buckets[bp as usize].next = nb;
                }
                buckets[b as usize].prev = nb;
                buckets[b as usize].twin = nb;
                buckets[b as usize].stamp = step;
            }
            let t = buckets[b as usize].twin;
            detach!(w);
            let tb = &mut buckets[t as usize];
            if tb.head == NONE {
                tb.head = w;
            } else {
                vnext[tb.tail as usize] = w;
                vprev[w as usize] = tb.tail;
            }
            tb.tail = w;
            vbucket[w as usize] = t;
        }
    }
    order
}

/// Check that the reverse of `order` is a perfect elimination ordering,
/// i.e. that the earlier-visited neighborhood of every vertex is a clique.
pub(crate) fn reverse_is_peo(g: &Graph, order: &[u32]) -> bool {
    let n = g.n();
    let mut pos = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    // deferred subset checks: A(parent) accumulates E(v) \ {parent}
    let mut deferred: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &v in order {
        let pv = pos[v as usize];
        let mut parent = NONE_VERT;
        let mut best = 0;
        for &w in g.neighbors(v) {
            let pw = pos[w as usize];
            if pw < pv && (parent == NONE_VERT || pw > best) {
                parent = w;
                best = pw;
            }
        }
        if parent == NONE_VERT {
            continue;
        }
        for &w in g.neighbors(v) {
            if pos[w as usize] < pv && w != parent {
                deferred[parent as usize].push(w);
            }
        }
    }
    let mut mark = vec![false; n];
    for (u, queued) in deferred.iter().enumerate() {
        if queued.is_empty() {
            continue;
        }
        for &w in g.neighbors(u as u32) {
            mark[w as usize] = true;
        }
        let ok = queued.iter().all(|&w| mark[w as usize]);
        for &w in g.neighbors(u as u32) {
            mark[w as usize] = false;
        }
        if !ok {
            return false;
        }
    }
    true
}

const NONE_VERT: u32 = u32::MAX;

/// Maximal cliques of a chordal graph from a Lex-BFS order whose reverse
/// is a PEO. Candidate `{v} ∪ E(v)` is a maximal clique unless the parent
/// candidate absorbs it.
fn chordal_cliques(g: &Graph, order: &[u32]) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut pos = vec![0u32; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    let mut earlier_deg = vec![0usize; n];
    let mut parent = vec![NONE_VERT; n];
    for &v in order {
        let pv = pos[v as usize];
        let mut best = 0;
        for &w in g.neighbors(v) {
            let pw = pos[w as usize];
            if pw < pv {
                earlier_deg[v as usize] += 1;
                if parent[v as usize] == NONE_VERT || pw > best {
                    parent[v as usize] = w;
                    best = pw;
                }
            }
        }
    }
    let mut absorbed = vec![false; n];
    for v in 0..n {
        let u = parent[v];
        if u != NONE_VERT && earlier_deg[v] == earlier_deg[u as usize] + 1 {
            absorbed[u as usize] = true;
        }
    }
    let mut out = Vec::new();
    for &v in order {
        if absorbed[v as usize] {
            continue;
        }
        let pv = pos[v as usize];
        let mut c: Vec<u32> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w as usize] < pv)
            .collect();
        c.push(v);
        c.sort_unstable();
        out.push(c);
    }
    out
}

/// Pivoted Bron-Kerbosch for the general case. Deterministic: candidates
/// are processed in ascending id order.
fn bron_kerbosch(g: &Graph, cap: usize) -> Result<Vec<Vec<u32>>> {
    fn intersect(a: &[u32], b: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    fn recurse(
        g: &Graph,
        r: &mut Vec<u32>,
        p: Vec<u32>,
        mut x: Vec<u32>,
        out: &mut Vec<Vec<u32>>,
        cap: usize,
    ) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            if out.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "maximal clique enumeration",
                    needed: cap + 1,
                    cap,
                });
            }
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return Ok(());
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .copied()
            .max_by_key(|&u| intersect(&p, g.neighbors(u)).len())
            .unwrap();
        let candidates: Vec<u32> = p
            .iter()
            .copied()
            .filter(|&v| !g.has_edge(pivot, v))
            .collect();
        let mut p = p;
        for v in candidates {
            r.push(v);
            recurse(
                g,
                r,
                intersect(&p, g.neighbors(v)),
                intersect(&x, g.neighbors(v)),
                out,
                cap,
            )?;
            r.pop();
            p.retain(|&u| u != v);
            let at = x.binary_search(&v).unwrap_err();
            x.insert(at, v);
        }
        Ok(())
    }

    let mut out = Vec::new();
    let p: Vec<u32> = g.vertices().collect();
    recurse(g, &mut Vec::new(), p, Vec::new(), &mut out, cap)?;
    Ok(out)
}

pub(crate) fn is_chordal(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let order = lex_bfs(g, &identity_preference(g.n()));
    reverse_is_peo(g, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cliques_of(g: &Graph) -> Vec<Vec<u32>> {
        maximal_cliques(g, &Caps::default()).unwrap().cliques
    }

    /// All-subsets maximality filter; the independent oracle for small n.
    pub(crate) fn naive_maximal_cliques(g: &Graph) -> Vec<Vec<u32>> {
        let n = g.n();
        assert!(n <= 16);
        let is_clique = |mask: u32| -> bool {
            let mut vs = Vec::new();
            for v in 0..n as u32 {
                if mask >> v & 1 == 1 {
                    vs.push(v);
                }
            }
            vs.iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
        };
        let mut cliques = Vec::new();
        for mask in 1u32..1 << n {
            if !is_clique(mask) {
                continue;
            }
            let maximal = (0..n as u32)
                .filter(|&v| mask >> v & 1 == 0)
                .all(|v| !is_clique(mask | 1 << v));
            if maximal {
                let set: Vec<u32> = (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect();
                cliques.push(set);
            }
        }
        cliques.sort_unstable();
        cliques
    }

    #[test]
    fn single_vertex() {
        let g = Graph::empty(1);
        assert_eq!(cliques_of(&g), vec![vec![0]]);
    }

    #[test]
    fn path_cliques_are_edges() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(cliques_of(&g), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn empty_graph_has_no_cliques() {
        let g = Graph::empty(0);
        assert!(cliques_of(&g).is_empty());
    }

    #[test]
    fn chordality() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!is_chordal(&c4));
        let paw = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (0, 3)]).unwrap();
        assert!(is_chordal(&paw));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!is_chordal(&c5));
    }

    #[test]
    fn chordal_sweep_matches_naive_on_interval_like_graphs() {
        // overlapping-interval graphs, chordal by construction
        let g = Graph::from_edges(
            7,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (2, 3),
                (3, 4),
                (2, 4),
                (4, 5),
                (5, 6),
            ],
        )
        .unwrap();
        assert!(is_chordal(&g));
        assert_eq!(cliques_of(&g), naive_maximal_cliques(&g));
        assert!(cliques_of(&g).len() <= g.n());
    }

    #[test]
    fn bron_kerbosch_matches_naive() {
        // C4 plus a chord-free pendant forces the general enumerator
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        assert_eq!(cliques_of(&g), naive_maximal_cliques(&g));
    }

    #[test]
    fn moon_moser_count() {
        // complete tripartite with parts of size 2: 8 maximal cliques
        let mut edges = Vec::new();
        let parts = [[0u32, 1], [2, 3], [4, 5]];
        for (i, a) in parts.iter().enumerate() {
            for b in parts.iter().skip(i + 1) {
                for &u in a {
                    for &v in b {
                        edges.push((u, v));
                    }
                }
            }
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        assert_eq!(cliques_of(&g).len(), 8);
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps {
            max_cliques: 4,
            ..Caps::default()
        };
        let mut edges = Vec::new();
        let parts = [[0u32, 1], [2, 3], [4, 5]];
        for (i, a) in parts.iter().enumerate() {
            for b in parts.iter().skip(i + 1) {
                for &u in a {
                    for &v in b {
                        edges.push((u, v));
                    }
                }
            }
        }
        let g = Graph::from_edges(6, &edges).unwrap();
        assert!(matches!(
            maximal_cliques(&g, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn lexbfs_visits_all_components() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let order = lex_bfs(&g, &identity_preference(5));
        let mut sorted = order.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3, 4]);
    }
}
