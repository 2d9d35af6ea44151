//! The vertex-clique incidence graph: a bipartite graph between the
//! vertices of a graph (side X) and its maximal cliques (side Y), with an
//! edge whenever the vertex belongs to the clique.

use crate::cliques::CliqueList;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct IncidenceGraph {
    x_count: usize,
    /// For each clique, its sorted member list.
    y_members: Vec<Vec<u32>>,
    /// For each vertex, the sorted list of cliques containing it.
    x_cliques: Vec<Vec<u32>>,
    /// `order_x[k]` = vertex at position `k`, when an ordering is set.
    order_x: Option<Vec<u32>>,
    order_y: Option<Vec<u32>>,
    strong_biconvex: bool,
}

impl IncidenceGraph {
    /// Build from a graph and its maximal-clique list. Orderings are unset.
    ///
    /// Validates the structural invariants: matching fingerprint, no
    /// isolated vertex on either side, and pairwise inclusion-incomparable
    /// cliques.
    pub fn build(g: &Graph, cliques: &CliqueList) -> Result<Self> {
        if cliques.n != g.n() || cliques.m != g.m() {
            return Err(Error::Invalid(
                "clique list fingerprint does not match the graph".into(),
            ));
        }
        let mut x_cliques: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
        for (j, c) in cliques.iter().enumerate() {
            if c.is_empty() {
                return Err(Error::Invalid("empty clique".into()));
            }
            for &v in c {
                if v as usize >= g.n() {
                    return Err(Error::Invalid(format!("clique member {v} out of range")));
                }
                x_cliques[v as usize].push(j as u32);
            }
        }
        if let Some(v) = x_cliques.iter().position(|c| c.is_empty()) {
            return Err(Error::Invalid(format!(
                "vertex {v} belongs to no maximal clique"
            )));
        }
        let b = IncidenceGraph {
            x_count: g.n(),
            y_members: cliques.cliques.clone(),
            x_cliques,
            order_x: None,
            order_y: None,
            strong_biconvex: false,
        };
        if let Some((a, c)) = b.find_comparable_pair() {
            return Err(Error::Invalid(format!(
                "cliques {a} and {c} have comparable member sets"
            )));
        }
        Ok(b)
    }

    /// Trusted constructor for cliques produced internally with the
    /// incomparability and coverage guarantees already established.
    pub(crate) fn from_parts(x_count: usize, y_members: Vec<Vec<u32>>) -> Self {
        let mut x_cliques: Vec<Vec<u32>> = vec![Vec::new(); x_count];
        for (j, c) in y_members.iter().enumerate() {
            for &v in c {
                x_cliques[v as usize].push(j as u32);
            }
        }
        debug_assert!(x_cliques.iter().all(|c| !c.is_empty()));
        IncidenceGraph {
            x_count,
            y_members,
            x_cliques,
            order_x: None,
            order_y: None,
            strong_biconvex: false,
        }
    }

    /// A pair of cliques whose member sets are comparable, if any.
    /// Containment `A ⊆ B` forces both to contain the first member of `A`,
    /// so only cliques sharing that vertex are candidates.
    fn find_comparable_pair(&self) -> Option<(u32, u32)> {
        for (j, c) in self.y_members.iter().enumerate() {
            let j = j as u32;
            for &k in &self.x_cliques[c[0] as usize] {
                if k == j || self.y_members[k as usize].len() < c.len() {
                    continue;
                }
                if k < j && self.y_members[k as usize].len() == c.len() {
                    continue; // already checked as (k, j)
                }
                if is_subset(c, &self.y_members[k as usize]) {
                    return Some((j, k));
                }
            }
        }
        None
    }

    /// Attach linear orderings of X and Y. The pair must be biconvex:
    /// every neighborhood on either side occupies consecutive positions.
    /// `strong` records that crossing edges always have both straightening
    /// edges present; that property is spot-checked in debug builds.
    pub fn with_orderings(
        mut self,
        order_x: Vec<u32>,
        order_y: Vec<u32>,
        strong: bool,
    ) -> Result<Self> {
        if !is_permutation(&order_x, self.x_count) || !is_permutation(&order_y, self.y_count()) {
            return Err(Error::Invalid("orderings must be permutations".into()));
        }
        self.order_x = Some(order_x);
        self.order_y = Some(order_y);
        self.strong_biconvex = strong;
        if !self.is_biconvex() {
            return Err(Error::Invalid("ordering pair is not biconvex".into()));
        }
        #[cfg(debug_assertions)]
        if strong && self.edge_count() <= 2_000 {
            debug_assert!(self.check_strong_ordering(), "ordering is not strong");
        }
        Ok(self)
    }

    pub fn x_count(&self) -> usize {
        self.x_count
    }

    pub fn y_count(&self) -> usize {
        self.y_members.len()
    }

    pub fn edge_count(&self) -> usize {
        self.y_members.iter().map(|c| c.len()).sum()
    }

    pub fn members(&self, y: u32) -> &[u32] {
        &self.y_members[y as usize]
    }

    pub fn cliques_of(&self, x: u32) -> &[u32] {
        &self.x_cliques[x as usize]
    }

    pub fn has_edge(&self, x: u32, y: u32) -> bool {
        self.y_members[y as usize].binary_search(&x).is_ok()
    }

    pub fn order_x(&self) -> Option<&[u32]> {
        self.order_x.as_deref()
    }

    pub fn order_y(&self) -> Option<&[u32]> {
        self.order_y.as_deref()
    }

    pub fn is_strong_biconvex(&self) -> bool {
        self.strong_biconvex
    }

    /// Connectivity of the bipartite structure, by BFS over members and
    /// incident cliques.
    pub fn is_connected(&self) -> bool {
        if self.x_count == 0 {
            return true;
        }
        let mut seen_x = vec![false; self.x_count];
        let mut seen_y = vec![false; self.y_count()];
        let mut queue = vec![0u32];
        seen_x[0] = true;
        let mut reached = 1;
        while let Some(x) = queue.pop() {
            for &y in self.cliques_of(x) {
                if seen_y[y as usize] {
                    continue;
                }
                seen_y[y as usize] = true;
                reached += 1;
                for &v in self.members(y) {
                    if !seen_x[v as usize] {
                        seen_x[v as usize] = true;
                        reached += 1;
                        queue.push(v);
                    }
                }
            }
        }
        reached == self.x_count + self.y_count()
    }

    /// Both sides' neighborhoods consecutive under the attached orderings.
    pub fn is_biconvex(&self) -> bool {
        let (Some(ox), Some(oy)) = (&self.order_x, &self.order_y) else {
            return false;
        };
        let px = positions(ox);
        let py = positions(oy);
        let consecutive = |items: &[u32], pos: &[u32]| -> bool {
            let (mut lo, mut hi) = (u32::MAX, 0);
            for &i in items {
                lo = lo.min(pos[i as usize]);
                hi = hi.max(pos[i as usize]);
            }
            (hi - lo) as usize == items.len() - 1
        };
        self.y_members.iter().all(|c| consecutive(c, &px))
            && self
                .x_cliques
                .iter()
                .all(|c| !c.is_empty() && consecutive(c, &py))
    }

    /// Quadratic check of the strong-ordering property; debug use only.
    #[cfg(debug_assertions)]
    fn check_strong_ordering(&self) -> bool {
        let px = positions(self.order_x.as_ref().unwrap());
        let py = positions(self.order_y.as_ref().unwrap());
        let mut edges = Vec::new();
        for (j, c) in self.y_members.iter().enumerate() {
            for &v in c {
                edges.push((v, j as u32));
            }
        }
        for (i, &(x1, y1)) in edges.iter().enumerate() {
            for &(x2, y2) in &edges[i + 1..] {
                let (a, b) = if px[x1 as usize] < px[x2 as usize] {
                    ((x1, y1), (x2, y2))
                } else {
                    ((x2, y2), (x1, y1))
                };
                // a.x before b.x; crossing means b's clique is before a's
                if py[b.1 as usize] < py[a.1 as usize]
                    && !(self.has_edge(a.0, b.1) && self.has_edge(b.0, a.1))
                {
                    return false;
                }
            }
        }
        true
    }

    /// The incidence graph as a plain bipartite graph: X keeps ids
    /// `0..x_count`, clique `j` becomes vertex `x_count + j`.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::with_capacity(self.edge_count());
        for (j, c) in self.y_members.iter().enumerate() {
            for &v in c {
                edges.push((v, (self.x_count + j) as u32));
            }
        }
        Graph::from_edges(self.x_count + self.y_count(), &edges)
            .expect("incidence edges are valid by construction")
    }
}

fn is_subset(a: &[u32], b: &[u32]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j >= b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

fn is_permutation(order: &[u32], n: usize) -> bool {
    if order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v as usize >= n || seen[v as usize] {
            return false;
        }
        seen[v as usize] = true;
    }
    true
}

pub(crate) fn positions(order: &[u32]) -> Vec<u32> {
    let mut pos = vec![0u32; order.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    pos
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliques::maximal_cliques;
    use crate::Caps;

    fn incidence(g: &Graph) -> IncidenceGraph {
        let cl = maximal_cliques(g, &Caps::default()).unwrap();
        IncidenceGraph::build(g, &cl).unwrap()
    }

    #[test]
    fn path_incidence() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = incidence(&g);
        assert_eq!(b.x_count(), 3);
        assert_eq!(b.y_count(), 2);
        assert_eq!(b.members(0), &[0, 1]);
        assert_eq!(b.members(1), &[1, 2]);
        assert_eq!(b.cliques_of(1), &[0, 1]);
        assert_eq!(b.edge_count(), 4);
    }

    #[test]
    fn triangle_incidence() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let b = incidence(&g);
        assert_eq!(b.y_count(), 1);
        assert_eq!(b.edge_count(), 3);
    }

    #[test]
    fn edge_count_consistency() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)]).unwrap();
        let b = incidence(&g);
        let from_x: usize = (0..b.x_count() as u32).map(|v| b.cliques_of(v).len()).sum();
        assert_eq!(from_x, b.edge_count());
    }

    #[test]
    fn comparable_cliques_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let bogus = CliqueList {
            cliques: vec![vec![0, 1], vec![0, 1, 2]],
            n: 3,
            m: 3,
        };
        assert!(IncidenceGraph::build(&g, &bogus).is_err());
    }

    #[test]
    fn uncovered_vertex_rejected() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let bogus = CliqueList {
            cliques: vec![vec![0, 1]],
            n: 3,
            m: 2,
        };
        assert!(IncidenceGraph::build(&g, &bogus).is_err());
    }

    #[test]
    fn biconvex_orderings_accepted() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = incidence(&g)
            .with_orderings(vec![0, 1, 2], vec![0, 1], true)
            .unwrap();
        assert!(b.is_strong_biconvex());
    }

    #[test]
    fn non_biconvex_orderings_rejected() {
        // claw: center 0, leaves 1..3; any X order splits some neighborhood
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let b = incidence(&g);
        assert!(b
            .with_orderings(vec![1, 2, 0, 3], vec![0, 1, 2], false)
            .is_err());
    }
}
