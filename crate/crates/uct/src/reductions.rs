//! Gadget generators used as cross-validation fixtures. Each generator
//! emits the constructed graph together with a declared relation tying a
//! quantity of the source graph to the upper clique transversal number of
//! the gadget, so [`check_relation`] can evaluate it with the oracles and
//! no further knowledge.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::incidence::IncidenceGraph;
use crate::oracle::{induced_matching_oracle, star_forest_oracle, uct_oracle};
use crate::Caps;

/// How a gadget was constructed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    /// Complete graph on the source vertices plus a pendant path gadget
    /// per edge; ties the answer to spanning star forests.
    ChordalSsf,
    /// Two stars `K_{1,q}` with joined centers; separates the answer from
    /// the induced matching number of the incidence graph.
    TwoStar { q: u32 },
    /// Line graph of a triangle-free source with minimum degree 2.
    LineGraph,
    /// Each source edge replaced by a degree-2 vertex; equals the
    /// incidence graph of a triangle-free source.
    Subdivision,
}

impl GadgetKind {
    pub fn name(&self) -> &'static str {
        match self {
            GadgetKind::ChordalSsf => "chordal-ssf",
            GadgetKind::TwoStar { .. } => "two-star",
            GadgetKind::LineGraph => "line-graph",
            GadgetKind::Subdivision => "subdivision",
        }
    }
}

/// A generated gadget: the graph, its provenance, the source it was built
/// from (when there is one), and the declared relation.
#[derive(Debug, Clone)]
pub struct GadgetInstance {
    pub graph: Graph,
    pub kind: GadgetKind,
    pub source: Option<Graph>,
    pub relation: String,
}

/// Chordal gadget: complete graph on `V(g)`, plus per edge `e = {u, v}` a
/// vertex adjacent to `u`, `v` and to a private pendant vertex. Original
/// vertices keep ids `0..n`; edge vertices follow in edge-list order, then
/// the pendants. Satisfies `uct(gadget) = star_forest(source) + m` when
/// the source has a spanning star forest with at least two edges.
pub fn gen_chordal_gadget(g: &Graph) -> Result<GadgetInstance> {
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let n = g.n();
    let m = g.m();
    let mut edges = Vec::with_capacity(n * (n - 1) / 2 + 3 * m);
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    for (j, (u, v)) in g.edge_list().into_iter().enumerate() {
        let x = (n + j) as u32;
        let y = (n + m + j) as u32;
        edges.push((x, u));
        edges.push((x, v));
        edges.push((x, y));
    }
    let graph = Graph::from_edges(n + 2 * m, &edges)?;
    Ok(GadgetInstance {
        graph,
        kind: GadgetKind::ChordalSsf,
        source: Some(g.clone()),
        relation: "uct(gadget) = star_forest(source) + m(source), for star_forest(source) >= 2"
            .into(),
    })
}

/// Two disjoint stars `K_{1,q}` with an edge between the centers.
/// Vertices: centers 0 and 1, then the leaves of 0, then the leaves of 1.
pub fn gen_two_star(q: u32) -> Result<GadgetInstance> {
    if q < 2 {
        return Err(Error::Invalid("two-star gadget requires q >= 2".into()));
    }
    let mut edges = vec![(0u32, 1u32)];
    for leaf in 0..q {
        edges.push((0, 2 + leaf));
        edges.push((1, 2 + q + leaf));
    }
    let graph = Graph::from_edges(2 * q as usize + 2, &edges)?;
    Ok(GadgetInstance {
        graph,
        kind: GadgetKind::TwoStar { q },
        source: None,
        relation: format!(
            "uct(gadget) <= {} and induced_matching(incidence(gadget)) >= {}",
            q + 1,
            2 * q
        ),
    })
}

/// Line graph of `g`. Vertex `j` of the result is the `j`-th edge of
/// `g.edge_list()`. The source must be triangle-free with minimum degree
/// at least 2, so that the maximal cliques of the line graph are exactly
/// the edge stars of the source.
pub fn gen_line_graph(g: &Graph) -> Result<GadgetInstance> {
    if let Some(t) = g.find_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    if let Some(v) = g.vertices().find(|&v| g.degree(v) < 2) {
        return Err(Error::DegreeTooSmall(v));
    }
    let source_edges = g.edge_list();
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); g.n()];
    for (j, &(u, v)) in source_edges.iter().enumerate() {
        incident[u as usize].push(j as u32);
        incident[v as usize].push(j as u32);
    }
    let mut edges = Vec::new();
    for ids in &incident {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_edges(source_edges.len(), &edges)?;
    Ok(GadgetInstance {
        graph,
        kind: GadgetKind::LineGraph,
        source: Some(g.clone()),
        relation: "uct(gadget) = star_forest(source)".into(),
    })
}

/// Subdivision of `g`: original vertices keep their ids, the `j`-th edge
/// becomes vertex `n + j` adjacent to both endpoints. For a triangle-free
/// source without isolated vertices this is exactly the incidence graph
/// under its canonical labeling.
pub fn gen_subdivision(g: &Graph) -> Result<GadgetInstance> {
    if let Some(t) = g.find_triangle() {
        return Err(Error::NotTriangleFree(t));
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::Invalid(format!("vertex {v} is isolated")));
    }
    if g.m() == 0 {
        return Err(Error::Edgeless);
    }
    let graph = subdivide(g);
    Ok(GadgetInstance {
        graph,
        kind: GadgetKind::Subdivision,
        source: Some(g.clone()),
        relation: "gadget = incidence(source) under canonical labels".into(),
    })
}

fn subdivide(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    for (j, (u, v)) in g.edge_list().into_iter().enumerate() {
        let mid = (n + j) as u32;
        edges.push((u, mid));
        edges.push((v, mid));
    }
    Graph::from_edges(n + g.m(), &edges).expect("subdivision edges are valid")
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationOutcome {
    Pass,
    Fail,
    Skipped { reason: String, cap_exceeded: bool },
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct Comparison {
    pub description: String,
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct RelationReport {
    pub gadget: &'static str,
    pub relation: String,
    pub outcome: RelationOutcome,
    pub comparisons: Vec<Comparison>,
}

impl RelationReport {
    pub fn to_document(&self) -> String {
        let mut out = format!("gadget {}\nrelation: {}\n", self.gadget, self.relation);
        for c in &self.comparisons {
            out.push_str(&format!(
                "  {}: {} vs {} -> {}\n",
                c.description,
                c.lhs,
                c.rhs,
                if c.holds { "ok" } else { "VIOLATED" }
            ));
        }
        match &self.outcome {
            RelationOutcome::Pass => out.push_str("outcome: pass\n"),
            RelationOutcome::Fail => out.push_str("outcome: FAIL\n"),
            RelationOutcome::Skipped { reason, .. } => {
                out.push_str(&format!("outcome: skipped ({reason})\n"))
            }
        }
        out
    }
}

/// Evaluate the declared relation of a gadget with the exact oracles.
/// A cap overrun is reported as a skip with the reason, not an error.
pub fn check_relation(inst: &GadgetInstance, caps: &Caps) -> RelationReport {
    let mut report = RelationReport {
        gadget: inst.kind.name(),
        relation: inst.relation.clone(),
        outcome: RelationOutcome::Pass,
        comparisons: Vec::new(),
    };
    let skipped = |report: &mut RelationReport, reason: String| {
        report.outcome = RelationOutcome::Skipped {
            reason,
            cap_exceeded: false,
        };
    };

    match inst.kind {
        GadgetKind::ChordalSsf => {
            let source = inst.source.as_ref().expect("chordal gadget has a source");
            let ssf = match star_forest_oracle(source, caps) {
                Ok(v) => v,
                Err(e) => return skipped_report(report, e),
            };
            if ssf < 2 {
                skipped(&mut report, format!("star_forest(source) = {ssf} < 2"));
                return report;
            }
            let uct = match uct_oracle(&inst.graph, caps) {
                Ok((v, _)) => v,
                Err(e) => return skipped_report(report, e),
            };
            push(
                &mut report,
                "uct(gadget) = star_forest + m",
                uct,
                ssf + source.m(),
                |a, b| a == b,
            );
        }
        GadgetKind::TwoStar { q } => {
            let uct = match uct_oracle(&inst.graph, caps) {
                Ok((v, _)) => v,
                Err(e) => return skipped_report(report, e),
            };
            push(
                &mut report,
                "uct(gadget) <= q + 1",
                uct,
                q as usize + 1,
                |a, b| a <= b,
            );
            let im = match incidence_matching_number(&inst.graph, caps) {
                Ok(v) => v,
                Err(e) => return skipped_report(report, e),
            };
            push(
                &mut report,
                "induced_matching(incidence) >= 2q",
                im,
                2 * q as usize,
                |a, b| a >= b,
            );
        }
        GadgetKind::LineGraph => {
            let source = inst.source.as_ref().expect("line graph has a source");
            let uct = match uct_oracle(&inst.graph, caps) {
                Ok((v, _)) => v,
                Err(e) => return skipped_report(report, e),
            };
            let ssf = match star_forest_oracle(source, caps) {
                Ok(v) => v,
                Err(e) => return skipped_report(report, e),
            };
            push(
                &mut report,
                "uct(line graph) = star_forest(source)",
                uct,
                ssf,
                |a, b| a == b,
            );
        }
        GadgetKind::Subdivision => {
            let source = inst.source.as_ref().expect("subdivision has a source");
            let b = match incidence_of(source, caps) {
                Ok(b) => b,
                Err(e) => return skipped_report(report, e),
            };
            let same = b.to_graph() == inst.graph;
            push(
                &mut report,
                "incidence(source) = gadget (graph equality)",
                usize::from(same),
                1,
                |a, b| a == b,
            );
        }
    }
    if report.comparisons.iter().any(|c| !c.holds) {
        report.outcome = RelationOutcome::Fail;
    }
    report
}

fn push(
    report: &mut RelationReport,
    what: &str,
    lhs: usize,
    rhs: usize,
    ok: impl Fn(usize, usize) -> bool,
) {
    report.comparisons.push(Comparison {
        description: what.into(),
        lhs,
        rhs,
        holds: ok(lhs, rhs),
    });
}

fn skipped_report(mut report: RelationReport, e: Error) -> RelationReport {
    report.outcome = RelationOutcome::Skipped {
        reason: format!("{e}"),
        cap_exceeded: matches!(e, Error::CapExceeded { .. }),
    };
    report
}

fn incidence_of(g: &Graph, caps: &Caps) -> Result<IncidenceGraph> {
    let cl = crate::cliques::maximal_cliques(g, caps)?;
    IncidenceGraph::build(g, &cl)
}

fn incidence_matching_number(g: &Graph, caps: &Caps) -> Result<usize> {
    let b = incidence_of(g, caps)?;
    induced_matching_oracle(&b.to_graph(), caps)
}

impl GadgetInstance {
    /// Serialize as an edge list with a `# relation:` comment header. The
    /// source graph, when present, rides along in comments so the document
    /// is self-describing.
    pub fn to_document(&self) -> String {
        let mut out = String::new();
        match self.kind {
            GadgetKind::TwoStar { q } => out.push_str(&format!("# relation: two-star q={q}\n")),
            k => out.push_str(&format!("# relation: {}\n", k.name())),
        }
        out.push_str(&format!("# {}\n", self.relation));
        if let Some(src) = &self.source {
            out.push_str(&format!("# source: {} {}\n", src.n(), src.m()));
            for (u, v) in src.edge_list() {
                out.push_str(&format!("# source-edge: {u} {v}\n"));
            }
        }
        out.push_str(&self.graph.to_document());
        out
    }

    /// Parse a document produced by [`GadgetInstance::to_document`].
    pub fn parse_document(text: &str) -> Result<GadgetInstance> {
        let mut kind = None;
        let mut source_header = None;
        let mut source_edges = Vec::new();
        for line in text.lines() {
            let line = line.trim_end_matches('\r').trim();
            if let Some(rest) = line.strip_prefix("# relation:") {
                let rest = rest.trim();
                kind = Some(if let Some(qs) = rest.strip_prefix("two-star q=") {
                    let q = qs
                        .trim()
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad two-star parameter {qs:?}")))?;
                    GadgetKind::TwoStar { q }
                } else {
                    match rest {
                        "chordal-ssf" => GadgetKind::ChordalSsf,
                        "line-graph" => GadgetKind::LineGraph,
                        "subdivision" => GadgetKind::Subdivision,
                        other => return Err(Error::Invalid(format!("unknown relation {other:?}"))),
                    }
                });
            } else if let Some(rest) = line.strip_prefix("# source:") {
                let nums: Vec<&str> = rest.split_whitespace().collect();
                if nums.len() != 2 {
                    return Err(Error::Invalid("bad source header".into()));
                }
                let n: usize = nums[0]
                    .parse()
                    .map_err(|_| Error::Invalid("bad source vertex count".into()))?;
                source_header = Some(n);
            } else if let Some(rest) = line.strip_prefix("# source-edge:") {
                let nums: Vec<&str> = rest.split_whitespace().collect();
                if nums.len() != 2 {
                    return Err(Error::Invalid("bad source edge".into()));
                }
                let u: u32 = nums[0]
                    .parse()
                    .map_err(|_| Error::Invalid("bad source edge".into()))?;
                let v: u32 = nums[1]
                    .parse()
                    .map_err(|_| Error::Invalid("bad source edge".into()))?;
                source_edges.push((u, v));
            }
        }
        let kind = kind.ok_or_else(|| Error::Invalid("missing # relation: header".into()))?;
        let graph = Graph::parse(text)?;
        let source = match source_header {
            Some(n) => Some(Graph::from_edges(n, &source_edges)?),
            None => None,
        };
        // regenerate through the constructor so invariants are re-checked
        let rebuilt = match kind {
            GadgetKind::ChordalSsf => {
                gen_chordal_gadget(source.as_ref().ok_or_else(missing_source)?)?
            }
            GadgetKind::TwoStar { q } => gen_two_star(q)?,
            GadgetKind::LineGraph => gen_line_graph(source.as_ref().ok_or_else(missing_source)?)?,
            GadgetKind::Subdivision => {
                gen_subdivision(source.as_ref().ok_or_else(missing_source)?)?
            }
        };
        if rebuilt.graph != graph {
            return Err(Error::Invalid(
                "gadget edge list does not match its declared construction".into(),
            ));
        }
        Ok(rebuilt)
    }
}

fn missing_source() -> Error {
    Error::Invalid("gadget document must carry its source graph".into())
}
