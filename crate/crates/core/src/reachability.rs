//! Closed alternating trails and walks through an edge, and alternating trails
//! between two vertices, decided by perfect matching.
//!
//! Every edge `f = {u, v}` contributes two port nodes, one at each end. A
//! slack aux edge joins the two ports of `f`, and at each vertex every port of
//! a red edge is joined to every port of a blue edge. In a perfect matching,
//! an edge whose slack edge is unmatched has both ports matched to ports of
//! the other color, so the edges with unmatched slack form a {0,1} balanced
//! vector. Leaving out the slack edge of `e` forces `e` into that vector.

use crate::error::{Error, Result};
use crate::graph::{
    classify_walk, duplicate_edges, extract_cat, is_balanced, Color, ColoredGraph, EdgeId,
    EdgeVector, VertexId, Walk,
};
use crate::matching::{max_matching, AuxGraph};

/// The matching instance for "a {0,1} balanced vector containing `forced`".
#[derive(Debug, Clone)]
pub struct PortGraph {
    aux: AuxGraph,
    port_of: Vec<(EdgeId, VertexId)>,
    slack_edge_of: Vec<Option<usize>>,
    forced: EdgeId,
}

impl PortGraph {
    /// Ports of edge `f` are nodes `2f` (at `f.u`) and `2f + 1` (at `f.v`).
    pub fn build(g: &ColoredGraph, forced: EdgeId) -> Result<PortGraph> {
        g.check_edge(forced)?;
        let m = g.edge_count();
        let mut aux = AuxGraph::new(2 * m);
        let mut port_of = Vec::with_capacity(2 * m);
        for (f, edge) in g.edges().iter().enumerate() {
            port_of.push((f, edge.u));
            port_of.push((f, edge.v));
        }
        let mut slack_edge_of = vec![None; m];
        for (f, slack) in slack_edge_of.iter_mut().enumerate() {
            if f != forced {
                *slack = Some(aux.add_edge(2 * f, 2 * f + 1)?);
            }
        }
        let port = |f: EdgeId, w: VertexId| if g.edge(f).u == w { 2 * f } else { 2 * f + 1 };
        for w in 0..g.vertex_count() {
            let inc = g.incident(w);
            for (i, &f) in inc.iter().enumerate() {
                for &h in &inc[i + 1..] {
                    if g.color(f) != g.color(h) {
                        aux.add_edge(port(f, w), port(h, w))?;
                    }
                }
            }
        }
        Ok(PortGraph {
            aux,
            port_of,
            slack_edge_of,
            forced,
        })
    }

    pub fn aux(&self) -> &AuxGraph {
        &self.aux
    }

    /// The original edge and vertex a port node stands for.
    pub fn port_of(&self, node: usize) -> (EdgeId, VertexId) {
        self.port_of[node]
    }

    pub fn slack_edge_of(&self, e: EdgeId) -> Option<usize> {
        self.slack_edge_of[e]
    }

    pub fn forced(&self) -> EdgeId {
        self.forced
    }

    /// Solves the matching problem and reads off the selected edges.
    pub fn solve(&self) -> Option<EdgeVector> {
        let matching = max_matching(&self.aux);
        if !matching.is_perfect() {
            return None;
        }
        let selected = self
            .slack_edge_of
            .iter()
            .map(|slack| match slack {
                Some(s) if matching.contains_edge(*s) => 0,
                _ => 1,
            });
        Some(EdgeVector::from_integers(selected))
    }
}

/// A {0,1} balanced vector with value 1 on `e`, if one exists.
pub fn balanced_through_edge(g: &ColoredGraph, e: EdgeId) -> Result<Option<EdgeVector>> {
    let ports = PortGraph::build(g, e)?;
    let selection = ports.solve();
    if let Some(f) = &selection {
        assert!(
            is_balanced(g, f) && f.is_binary() && num_traits::One::is_one(&f.values()[e]),
            "perfect matching must select a balanced {{0,1}} vector through the forced edge"
        );
    }
    Ok(selection)
}

/// A closed alternating trail through `e`, if one exists.
pub fn cat_through_edge(g: &ColoredGraph, e: EdgeId) -> Result<Option<Walk>> {
    match balanced_through_edge(g, e)? {
        None => Ok(None),
        Some(f) => extract_cat(g, &f, e).map(Some),
    }
}

/// A closed alternating walk through `e`, if one exists.
///
/// Some closed alternating walk through `e` traverses every edge at most
/// twice, so it is enough to look for a closed alternating trail through a
/// copy of `e` in the graph with every edge doubled. The returned walk maps
/// that trail back onto `g`.
pub fn caw_through_edge_witness(g: &ColoredGraph, e: EdgeId) -> Result<Option<Walk>> {
    g.check_edge(e)?;
    let (doubled, origin) = duplicate_edges(g, 2)?;
    for copy in [2 * e, 2 * e + 1] {
        if let Some(cat) = cat_through_edge(&doubled, copy)? {
            let edges: Vec<EdgeId> = cat.edges().map(|c| origin[c]).collect();
            let walk = Walk::from_edges(g, cat.start(), &edges)?;
            debug_assert!(classify_walk(g, &walk)?.is_caw);
            return Ok(Some(walk));
        }
    }
    Ok(None)
}

pub fn caw_through_edge(g: &ColoredGraph, e: EdgeId) -> Result<bool> {
    Ok(caw_through_edge_witness(g, e)?.is_some())
}

/// An alternating trail from `s` to `t`, if one exists.
///
/// Each possible pair of end colors is encoded as a gadget closing the trail
/// into a closed alternating trail: a red or blue edge `{s, t}` when both ends
/// have the other color, or a new vertex `w` with edges `{s, w}`, `{w, t}` of
/// colors opposite to the two (different) end colors.
pub fn alternating_st_trail(g: &ColoredGraph, s: VertexId, t: VertexId) -> Result<Option<Walk>> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return Err(Error::Precondition("trail endpoints must be distinct".into()));
    }
    let n = g.vertex_count();
    let m = g.edge_count();
    for color in [Color::Red, Color::Blue] {
        let closed = g.extended(0, [(s, t, color)])?;
        if let Some(cat) = cat_through_edge(&closed, m)? {
            let k = cat.edges().position(|e| e == m).unwrap();
            let rotated = cat.rotated(k);
            return Ok(Some(orient(strip(&rotated, 1, 0), s)));
        }
    }
    for (s_end, t_end) in [(Color::Red, Color::Blue), (Color::Blue, Color::Red)] {
        let w = n;
        let closed = g.extended(1, [(s, w, s_end.opposite()), (w, t, t_end.opposite())])?;
        if let Some(cat) = cat_through_edge(&closed, m)? {
            let k = cat.steps().iter().position(|st| st.from == w).unwrap();
            let rotated = cat.rotated(k);
            return Ok(Some(orient(strip(&rotated, 1, 1), s)));
        }
    }
    Ok(None)
}

fn strip(w: &Walk, front: usize, back: usize) -> Walk {
    w.slice(front..w.len() - back)
}

fn orient(w: Walk, s: VertexId) -> Walk {
    if w.start() == s {
        w
    } else {
        w.reversed()
    }
}

/// A reachability instance equivalent to "is there a closed alternating trail
/// through `edge`".
#[derive(Debug, Clone)]
pub struct ReachabilityInstance {
    pub graph: ColoredGraph,
    pub source: VertexId,
    pub sink: VertexId,
    /// For each edge of `graph`, the edge of the original graph it came from;
    /// `None` for the two pendant edges.
    pub origin: Vec<Option<EdgeId>>,
}

/// Removes `e = {s, t}` and hangs new pendant vertices `s'` on `s` and `t'` on
/// `t` by edges of the color of `e`. The new graph has an alternating
/// `s'`-`t'` trail exactly when the old one has a closed alternating trail
/// through `e`.
pub fn reduce_cat_to_reachability(g: &ColoredGraph, e: EdgeId) -> Result<ReachabilityInstance> {
    g.check_edge(e)?;
    let removed = *g.edge(e);
    let n = g.vertex_count();
    let (source, sink) = (n, n + 1);
    let mut triples = Vec::with_capacity(g.edge_count() + 1);
    let mut origin = Vec::with_capacity(g.edge_count() + 1);
    for (id, edge) in g.edges().iter().enumerate() {
        if id != e {
            triples.push((edge.u, edge.v, edge.color));
            origin.push(Some(id));
        }
    }
    triples.push((source, removed.u, removed.color));
    triples.push((sink, removed.v, removed.color));
    origin.extend([None, None]);
    Ok(ReachabilityInstance {
        graph: ColoredGraph::new(n + 2, triples)?,
        source,
        sink,
        origin,
    })
}
