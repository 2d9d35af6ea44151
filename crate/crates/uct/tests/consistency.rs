//! Consistency sweeps: the recognizers against definition-level brute
//! force on ten thousand small graphs, the triangle-free identity, the
//! forest DP against the independent domination oracle, and chordal
//! clique counts.

use rand::RngCore;

use uct::gen;
use uct::recognize::ClassTag;
use uct::{maximal_cliques, min_ids_oracle, recognize, uct_oracle, uct_triangle_free, Caps};

fn caps() -> Caps {
    Caps::default()
}

mod definitional {
    use uct::Graph;

    fn vertices_of(mask: u32, n: usize) -> Vec<u32> {
        (0..n as u32).filter(|&v| mask >> v & 1 == 1).collect()
    }

    fn is_clique(g: &Graph, vs: &[u32]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }

    fn is_independent(g: &Graph, vs: &[u32]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
    }

    pub fn split(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let k = vertices_of(mask, n);
            let i = vertices_of(!mask & ((1 << n) - 1), n);
            is_clique(g, &k) && is_independent(g, &i)
        })
    }

    pub fn chordal(g: &Graph) -> bool {
        let n = g.n();
        // no subset induces a cycle of length >= 4
        for mask in 0u32..1 << n {
            let vs = vertices_of(mask, n);
            if vs.len() < 4 {
                continue;
            }
            let degrees_two = vs
                .iter()
                .all(|&u| vs.iter().filter(|&&v| v != u && g.has_edge(u, v)).count() == 2);
            if !degrees_two {
                continue;
            }
            // connected and 2-regular means an induced cycle
            let mut seen = vec![vs[0]];
            let mut frontier = vec![vs[0]];
            while let Some(u) = frontier.pop() {
                for &v in &vs {
                    if v != u && g.has_edge(u, v) && !seen.contains(&v) {
                        seen.push(v);
                        frontier.push(v);
                    }
                }
            }
            if seen.len() == vs.len() {
                return false;
            }
        }
        true
    }

    pub fn proper_interval(g: &Graph) -> bool {
        let n = g.n();
        let mut order: Vec<u32> = (0..n as u32).collect();
        permute(&mut order, 0, g)
    }

    fn permute(order: &mut Vec<u32>, k: usize, g: &Graph) -> bool {
        if k == order.len() {
            return umbrella(order, g);
        }
        for i in k..order.len() {
            order.swap(k, i);
            if permute(order, k + 1, g) {
                order.swap(k, i);
                return true;
            }
            order.swap(k, i);
        }
        false
    }

    fn umbrella(order: &[u32], g: &Graph) -> bool {
        let mut pos = vec![0usize; order.len()];
        for (i, &v) in order.iter().enumerate() {
            pos[v as usize] = i;
        }
        for &v in order {
            let mut lo = pos[v as usize];
            let mut hi = lo;
            for &w in g.neighbors(v) {
                lo = lo.min(pos[w as usize]);
                hi = hi.max(pos[w as usize]);
            }
            if hi - lo != g.degree(v) {
                return false;
            }
        }
        true
    }

    pub fn cograph(g: &Graph) -> bool {
        let n = g.n() as u32;
        // a connected induced 4-vertex subgraph with 3 edges and degree
        // sequence (1,1,2,2) is exactly P4
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    for d in c + 1..n {
                        let vs = [a, b, c, d];
                        let mut degs: Vec<usize> = vs
                            .iter()
                            .map(|&u| vs.iter().filter(|&&v| v != u && g.has_edge(u, v)).count())
                            .collect();
                        degs.sort_unstable();
                        if degs == [1, 1, 2, 2] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn bipartite(g: &Graph) -> bool {
        let n = g.n();
        (0u32..1 << n).any(|mask| {
            let a = vertices_of(mask, n);
            let b = vertices_of(!mask & ((1 << n) - 1), n);
            is_independent(g, &a) && is_independent(g, &b)
        })
    }

    pub fn triangle_free(g: &Graph) -> bool {
        let n = g.n() as u32;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[test]
fn recognize_agrees_with_definitions_on_ten_thousand_graphs() {
    let mut r = gen::rng(0x5EED);
    for _ in 0..10_000 {
        let n = 1 + (r.next_u32() as usize % 7);
        let p = 0.05 + (r.next_u32() % 90) as f64 / 100.0;
        let g = gen::random_graph(n, p, &mut r);
        let tags = recognize(&g);
        let has = |t: ClassTag| tags.contains(&t);
        assert_eq!(
            has(ClassTag::Split),
            definitional::split(&g),
            "{}",
            g.to_document()
        );
        assert_eq!(
            has(ClassTag::Chordal),
            definitional::chordal(&g),
            "{}",
            g.to_document()
        );
        assert_eq!(
            has(ClassTag::ProperInterval),
            definitional::proper_interval(&g),
            "{}",
            g.to_document()
        );
        assert_eq!(
            has(ClassTag::Cograph),
            definitional::cograph(&g),
            "{}",
            g.to_document()
        );
        assert_eq!(
            has(ClassTag::Tree),
            g.is_connected() && g.m() + 1 == g.n(),
            "{}",
            g.to_document()
        );
        assert_eq!(
            has(ClassTag::Bipartite),
            definitional::bipartite(&g),
            "{}",
            g.to_document()
        );
        assert_eq!(
            has(ClassTag::TriangleFree),
            definitional::triangle_free(&g),
            "{}",
            g.to_document()
        );
    }
}

#[test]
fn triangle_free_identity_with_independent_domination() {
    // for triangle-free graphs without isolated vertices the answer is
    // n minus the independent domination number
    let mut r = gen::rng(0xFACE);
    let mut checked = 0;
    while checked < 1000 {
        let n = 4 + (r.next_u32() as usize % 7); // 4..=10
        let p = 0.2 + (r.next_u32() % 50) as f64 / 100.0;
        let g = gen::random_bipartite_min_deg2(n, p, &mut r);
        let (tau, _) = uct_oracle(&g, &caps()).unwrap();
        let i = min_ids_oracle(&g, &caps()).unwrap();
        assert_eq!(tau, g.n() - i, "{}", g.to_document());
        checked += 1;
    }
}

#[test]
fn forest_solver_matches_oracle_identity() {
    let mut r = gen::rng(0xBEEF);
    for _ in 0..1000 {
        let n = 1 + (r.next_u32() as usize % 16);
        let attach = 0.5 + (r.next_u32() % 50) as f64 / 100.0;
        let g = gen::random_forest(n, attach, &mut r);
        let isolated = g.isolated_vertices().len();
        let value = uct_triangle_free(&g, &caps()).unwrap().value;
        if isolated == 0 && g.n() > 0 {
            let i = min_ids_oracle(&g, &caps()).unwrap();
            assert_eq!(value, g.n() - i, "{}", g.to_document());
        }
    }
}

#[test]
fn cograph_solver_matches_brute_force_independence_number() {
    fn brute_alpha(g: &uct::Graph) -> usize {
        let n = g.n();
        let adj: Vec<u32> = (0..n as u32)
            .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
            .collect();
        (0u32..1 << n)
            .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 0 || adj[v] & mask == 0))
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }
    let mut r = gen::rng(0xA1FA);
    for _ in 0..500 {
        let n = 1 + (r.next_u32() as usize % 12); // 1..=12
        let g = gen::random_cograph(n, &mut r);
        let t = uct::build_cotree(&g).unwrap();
        let res = uct::uct_cograph(&g, &t).unwrap();
        assert_eq!(res.value, brute_alpha(&g), "{}", g.to_document());
    }
}

#[test]
fn recognizers_accept_generated_members_beyond_brute_force_range() {
    // positive instances too large for definitional checks: the model
    // guarantees the class, so recognition must succeed
    let mut r = gen::rng(0x90D);
    for _ in 0..500 {
        let n = 2 + (r.next_u32() as usize % 39); // 2..=40
        let g = gen::random_proper_interval_graph(n, 1.0 + n as f64 / 5.0, &mut r);
        uct::proper_interval_order(&g).unwrap_or_else(|e| {
            panic!(
                "rejected a unit-interval instance: {e} on {}",
                g.to_document()
            )
        });
        let g = gen::random_cograph(n, &mut r);
        uct::build_cotree(&g)
            .unwrap_or_else(|e| panic!("rejected a cograph: {e} on {}", g.to_document()));
        let k = 1 + (r.next_u32() as usize % (n / 2 + 1));
        let g = gen::random_split_graph(n, k, 0.4, &mut r);
        uct::split_partition(&g)
            .unwrap_or_else(|e| panic!("rejected a split graph: {e} on {}", g.to_document()));
    }
}

#[test]
fn chordal_inputs_have_at_most_n_cliques() {
    let mut r = gen::rng(0xC0DE);
    for _ in 0..500 {
        let n = 1 + (r.next_u32() as usize % 10);
        let span = 1.0 + (r.next_u32() % 30) as f64 / 10.0;
        let g = gen::random_proper_interval_graph(n, span, &mut r);
        let cl = maximal_cliques(&g, &caps()).unwrap();
        assert!(cl.len() <= g.n());
    }
    let mut r = gen::rng(0xC0DF);
    for _ in 0..200 {
        let src = gen::random_sparse_source(6, 5, &mut r);
        let inst = uct::gen_chordal_gadget(&src).unwrap();
        let cl = maximal_cliques(&inst.graph, &caps()).unwrap();
        assert!(cl.len() <= inst.graph.n());
        if src.n() >= 3 {
            // the whole source vertex set, one triangle per edge, one
            // pendant pair per edge; on two vertices the first family
            // is swallowed by the triangle
            assert_eq!(cl.len(), 1 + 2 * src.m());
        }
    }
}
