//! Simple undirected graphs with sorted adjacency lists.
//!
//! Vertices are `0..n`. Adjacency lists are strictly sorted, which makes
//! membership tests `O(log deg)` and set operations on neighborhoods
//! merge-based.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Build from an edge list. Duplicate edges are merged; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::Invalid(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at vertex {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        let mut m = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            m += list.len();
        }
        Ok(Graph { adj, m: m / 2 })
    }

    /// Parse an edge-list document: a header line `n m` followed by `m`
    /// lines `u v`. Lines starting with `#` and blank lines are skipped;
    /// CRLF input is tolerated.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim_end_matches('\r').trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            msg: "missing header line \"n m\"".into(),
        })?;
        let mut it = header.split_whitespace();
        let n: usize = parse_field(it.next(), header_line, "vertex count")?;
        let m: usize = parse_field(it.next(), header_line, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: header_line,
                msg: "header must be exactly \"n m\"".into(),
            });
        }

        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, body) = lines.next().ok_or_else(|| Error::Parse {
                line: header_line,
                msg: format!("expected {m} edge lines, found {}", edges.len()),
            })?;
            let mut it = body.split_whitespace();
            let u: u32 = parse_field(it.next(), line, "endpoint")?;
            let v: u32 = parse_field(it.next(), line, "endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "edge line must be exactly \"u v\"".into(),
                });
            }
            if u as usize >= n || v as usize >= n {
                return Err(Error::Parse {
                    line,
                    msg: format!("vertex id out of range (n = {n})"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    msg: format!("self-loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if let Some((line, _)) = lines.next() {
            return Err(Error::Parse {
                line,
                msg: "trailing content after the declared edge list".into(),
            });
        }
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        0..self.n() as u32
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(u32, u32)> {
        let mut edges = Vec::with_capacity(self.m);
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    /// Connected components, each a sorted vertex list; components ordered
    /// by smallest member.
    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut queue = Vec::new();
        for s in 0..n as u32 {
            if seen[s as usize] {
                continue;
            }
            seen[s as usize] = true;
            queue.push(s);
            let mut comp = Vec::new();
            while let Some(v) = queue.pop() {
                comp.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced by `verts` (must be sorted). Returns the subgraph
    /// together with the map from new ids back to the originals.
    pub fn induced(&self, verts: &[u32]) -> (Graph, Vec<u32>) {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut index = vec![u32::MAX; self.n()];
        for (i, &v) in verts.iter().enumerate() {
            index[v as usize] = i as u32;
        }
        let mut adj = vec![Vec::new(); verts.len()];
        let mut m = 0;
        for (i, &v) in verts.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w as usize];
                if j != u32::MAX {
                    adj[i].push(j);
                }
            }
            m += adj[i].len();
        }
        (Graph { adj, m: m / 2 }, verts.to_vec())
    }

    /// Complement graph. Quadratic; intended for small instances.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for u in 0..n as u32 {
            let nb = self.neighbors(u);
            let mut k = 0;
            for v in 0..n as u32 {
                while k < nb.len() && nb[k] < v {
                    k += 1;
                }
                if v != u && (k >= nb.len() || nb[k] != v) {
                    adj[u as usize].push(v);
                }
            }
            m += adj[u as usize].len();
        }
        Graph { adj, m: m / 2 }
    }

    pub fn isolated_vertices(&self) -> Vec<u32> {
        self.vertices().filter(|&v| self.degree(v) == 0).collect()
    }

    /// Some triangle, if one exists.
    pub fn find_triangle(&self) -> Option<[u32; 3]> {
        for u in self.vertices() {
            for &v in self.neighbors(u) {
                if v <= u {
                    continue;
                }
                // common neighbor above v keeps each triangle checked once
                for &w in self.neighbors(v) {
                    if w > v && self.has_edge(u, w) {
                        return Some([u, v, w]);
                    }
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Two-coloring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut color = vec![u8::MAX; n];
        let mut queue = std::collections::VecDeque::new();
        for s in 0..n as u32 {
            if color[s as usize] != u8::MAX {
                continue;
            }
            color[s as usize] = 0;
            queue.push_back(s);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if color[w as usize] == u8::MAX {
                        color[w as usize] = 1 - color[v as usize];
                        queue.push_back(w);
                    } else if color[w as usize] == color[v as usize] {
                        return None;
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c == 1).collect())
    }

    /// Every component is a tree.
    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n()
    }

    /// Edge-list document in the format accepted by [`Graph::parse`].
    pub fn to_document(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m);
        for (u, v) in self.edge_list() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

fn parse_field<T: std::str::FromStr>(field: Option<&str>, line: usize, what: &str) -> Result<T> {
    field
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?
        .parse()
        .map_err(|_| Error::Parse {
            line,
            msg: format!("invalid {what}"),
        })
}
