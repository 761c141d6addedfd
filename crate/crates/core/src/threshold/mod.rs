//! Simple graphs, their hat graphs, threshold recognition and the dimension
//! map on degree sequences.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::cone::dimension;
use crate::error::{precondition, Error, Result};
use crate::graph::{Color, ColoredGraph, Rational, VertexId};

mod majorization;

pub use majorization::{majorizes, muirhead_sequence, unit_transformation, Majorization};

/// A loopless graph without parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    vertex_count: usize,
    edges: BTreeSet<(VertexId, VertexId)>,
}

impl SimpleGraph {
    /// Builds a graph from unordered pairs. Loops, out-of-range endpoints and
    /// repeated pairs are rejected.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut set = BTreeSet::new();
        for (id, (u, v)) in edges.into_iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        count: vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { edge: id, vertex: u });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return precondition(format!("edge {id} repeats the pair {{{u}, {v}}}"));
            }
        }
        Ok(SimpleGraph {
            vertex_count,
            edges: set,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let edges = (0..vertex_count)
            .flat_map(|i| (i + 1..vertex_count).map(move |j| (i, j)))
            .collect();
        SimpleGraph {
            vertex_count,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabeled(&self, perm: &[VertexId]) -> Result<SimpleGraph> {
        if perm.len() != self.vertex_count {
            return Err(Error::LengthMismatch {
                expected: self.vertex_count,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; perm.len()];
        for &p in perm {
            if p >= perm.len() || std::mem::replace(&mut seen[p], true) {
                return precondition("relabeling is not a permutation");
            }
        }
        SimpleGraph::new(
            self.vertex_count,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            })
        }
    }
}

/// The complete graph on the vertices of `g`, with the edges of `g` red and
/// the non-edges blue. Pairs appear in lexicographic order, so the pair
/// `{i, j}` with `i < j` has a fixed id.
pub fn hat(g: &SimpleGraph) -> ColoredGraph {
    let n = g.vertex_count();
    let triples = (0..n).flat_map(|i| {
        (i + 1..n).map(move |j| {
            let color = if g.has_edge(i, j) { Color::Red } else { Color::Blue };
            (i, j, color)
        })
    });
    ColoredGraph::new(n, triples).expect("pairs of distinct in-range vertices")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Elimination {
    Isolated,
    Dominating,
}

/// Repeatedly removes an isolated or dominating entry; returns the removal
/// order as original indices, or `None` when the process stalls.
fn elimination_order(d: &[usize]) -> Option<Vec<(usize, Elimination)>> {
    let mut rest: Vec<(usize, usize)> = d.iter().copied().enumerate().collect();
    let mut order = Vec::with_capacity(d.len());
    while !rest.is_empty() {
        let k = rest.len();
        if let Some(pos) = rest.iter().position(|&(_, x)| x == 0) {
            order.push((rest.remove(pos).0, Elimination::Isolated));
        } else {
            let pos = rest.iter().position(|&(_, x)| x == k - 1)?;
            order.push((rest.remove(pos).0, Elimination::Dominating));
            for entry in &mut rest {
                entry.1 -= 1;
            }
        }
    }
    Some(order)
}

/// Degree-sequence test: delete a zero, or delete an entry equal to the
/// number of remaining entries minus one and decrement the others; the
/// sequence is threshold iff it empties.
pub fn is_threshold_degrees(d: &[usize]) -> bool {
    elimination_order(d).is_some()
}

/// Threshold test through the cone: the hat graph has a zero-dimensional
/// alternating cone.
pub fn is_threshold_via_cone(g: &SimpleGraph) -> bool {
    dimension(&hat(g)).expect("hat graphs are valid input") == 0
}

/// Vertex weights `c` with `c(u) + c(v) > 0` exactly on the edges, or `None`
/// if `g` is not threshold.
///
/// The graph is rebuilt in reverse elimination order. A vertex added as
/// dominating gets `2 * max|negative| + 1`, one added as isolated gets
/// `-(2 * max positive + 1)`; the first vertex takes the type of the second.
pub fn threshold_weights(g: &SimpleGraph) -> Option<Vec<Rational>> {
    let n = g.vertex_count();
    let mut order = elimination_order(&g.degrees())?;
    order.reverse();
    if order.len() >= 2 {
        order[0].1 = order[1].1;
    }
    let mut weights = vec![Rational::from_integer(BigInt::from(0)); n];
    let (mut max_pos, mut max_neg) = (BigInt::from(0), BigInt::from(0));
    for &(v, kind) in &order {
        let w = match kind {
            Elimination::Dominating => {
                let w: BigInt = BigInt::from(2) * &max_neg + 1;
                max_pos = max_pos.max(w.clone());
                w
            }
            Elimination::Isolated => {
                let w: BigInt = BigInt::from(2) * &max_pos + 1;
                max_neg = max_neg.max(w.clone());
                -w
            }
        };
        weights[v] = Rational::from_integer(w);
    }
    let zero = Rational::from_integer(BigInt::from(0));
    let valid = (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let s = &weights[i] + &weights[j];
            if g.has_edge(i, j) {
                s > zero
            } else {
                s < zero
            }
        })
    });
    valid.then_some(weights)
}

/// Four vertices `i, j, k, l` with `{i,j}` and `{k,l}` red and `{j,k}` and
/// `{l,i}` blue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlternatingC4 {
    pub vertices: [VertexId; 4],
}

/// Exhaustive search for an alternating 4-cycle in a hat graph.
///
/// Errors if `ghat` does not have exactly one edge per vertex pair.
pub fn find_alternating_c4(ghat: &ColoredGraph) -> Result<Option<AlternatingC4>> {
    let n = ghat.vertex_count();
    let mut color: Vec<Vec<Option<Color>>> = vec![vec![None; n]; n];
    for e in ghat.edges() {
        if color[e.u][e.v].is_some() {
            return precondition(format!("pair {{{}, {}}} has parallel edges", e.u, e.v));
        }
        color[e.u][e.v] = Some(e.color);
        color[e.v][e.u] = Some(e.color);
    }
    if ghat.edge_count() != n * n.saturating_sub(1) / 2 {
        return precondition("not a hat graph: some vertex pair has no edge");
    }
    let red = |a: usize, b: usize| color[a][b] == Some(Color::Red);
    // The cycle i-j-k-l uses the red matching {ij, kl} and the blue matching
    // {jk, li}. Each 4-subset has three perfect matchings to try as the red one.
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    for [i, j, k, l] in [[a, b, c, d], [a, c, b, d], [a, d, b, c]] {
                        for [i, j, k, l] in [[i, j, k, l], [i, j, l, k]] {
                            if red(i, j) && red(k, l) && !red(j, k) && !red(l, i) {
                                return Ok(Some(AlternatingC4 {
                                    vertices: [i, j, k, l],
                                }));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// A graph with degree sequence `d`, or `None` if `d` is not graphical.
///
/// Havel-Hakimi: the vertex with the largest remaining demand is joined to
/// the vertices with the next largest demands; ties go to lower indices.
pub fn realize_degree_sequence(d: &[usize]) -> Option<SimpleGraph> {
    let n = d.len();
    let mut rest = d.to_vec();
    let mut edges = Vec::new();
    while let Some(v) = (0..n).max_by_key(|&v| (rest[v], std::cmp::Reverse(v))) {
        if rest[v] == 0 {
            break;
        }
        let mut others: Vec<usize> = (0..n).filter(|&w| w != v && rest[w] > 0).collect();
        others.sort_by_key(|&w| (std::cmp::Reverse(rest[w]), w));
        if others.len() < rest[v] {
            return None;
        }
        for &w in &others[..rest[v]] {
            rest[w] -= 1;
            edges.push((v, w));
        }
        rest[v] = 0;
    }
    let g = SimpleGraph::new(n, edges).expect("each pair is joined at most once");
    debug_assert_eq!(g.degrees(), d);
    Some(g)
}

/// The dimension of the alternating cone of the hat of any realization of
/// `d`, or `None` if `d` is not graphical.
pub fn cone_dim_of_degrees(d: &[usize]) -> Option<usize> {
    let g = realize_degree_sequence(d)?;
    Some(dimension(&hat(&g)).expect("hat graphs are valid input"))
}

/// Moves one edge end from `i` to `j`: picks the lexicographically least pair
/// `k < l` outside `{i, j}` with `k, l` adjacent to `i` but not to `j`, then
/// returns `G - {i,k} + {j,k}`.
pub fn graph_unit_transformation(g: &SimpleGraph, i: VertexId, j: VertexId) -> Result<SimpleGraph> {
    g.check_vertex(i)?;
    g.check_vertex(j)?;
    let (di, dj) = (g.degree(i), g.degree(j));
    if di < dj + 2 {
        return precondition(format!(
            "degree of {i} ({di}) must exceed degree of {j} ({dj}) by at least 2"
        ));
    }
    let candidates: Vec<VertexId> = (0..g.vertex_count())
        .filter(|&k| k != i && k != j && g.has_edge(i, k) && !g.has_edge(j, k))
        .collect();
    // N(i) \ N[j] has at least di - 1 - (dj - 1) >= 2 members once the
    // possible edge {i, j} is discounted on both sides.
    assert!(candidates.len() >= 2, "degree gap guarantees two candidates");
    let k = candidates[0];
    let mut out = g.clone();
    out.edges.remove(&(i.min(k), i.max(k)));
    out.edges.insert((j.min(k), j.max(k)));
    Ok(out)
}
