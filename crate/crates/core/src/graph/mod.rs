//! 2-colored multigraphs, edge vectors and walks.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub(crate) mod vector;
pub(crate) mod walk;

pub use vector::{is_balanced, EdgeVector, Rational};
pub use walk::{char_vector, classify_walk, extract_cat, reduce_caw, Step, Walk, WalkClass};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    #[serde(rename = "R")]
    Red,
    #[serde(rename = "B")]
    Blue,
}

impl Color {
    pub fn opposite(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }

    /// `+1` for red and `-1` for blue; the sign used in the balance condition.
    pub fn sign(self) -> i64 {
        match self {
            Color::Red => 1,
            Color::Blue => -1,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "R",
            Color::Blue => "B",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: Color,
}

impl Edge {
    /// The endpoint of the edge that is not `w`.
    ///
    /// `w` must be an endpoint.
    pub fn other(&self, w: VertexId) -> VertexId {
        debug_assert!(self.has_endpoint(w));
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn has_endpoint(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

/// An undirected multigraph whose edges are colored red or blue.
///
/// Parallel edges are allowed, loops are not. Edge ids are dense and follow
/// insertion order. The graph is immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
    incident: Vec<Vec<EdgeId>>,
}

impl ColoredGraph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Color)>,
    {
        let mut out = Vec::new();
        let mut incident = vec![Vec::new(); vertex_count];
        for (id, (u, v, color)) in edges.into_iter().enumerate() {
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
            incident[u].push(id);
            incident[v].push(id);
            out.push(Edge { u, v, color });
        }
        Ok(ColoredGraph {
            vertex_count,
            edges: out,
            incident,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Panics if `e` is out of range; use [`ColoredGraph::check_edge`] first on
    /// untrusted ids.
    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn color(&self, e: EdgeId) -> Color {
        self.edges[e].color
    }

    /// Edges incident with `v`, in increasing id order.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v]
    }

    pub fn red_degree(&self, v: VertexId) -> usize {
        self.degree_of_color(v, Color::Red)
    }

    pub fn blue_degree(&self, v: VertexId) -> usize {
        self.degree_of_color(v, Color::Blue)
    }

    fn degree_of_color(&self, v: VertexId, color: Color) -> usize {
        self.incident[v]
            .iter()
            .filter(|&&e| self.edges[e].color == color)
            .count()
    }

    /// The red degree of every vertex.
    pub fn red_degrees(&self) -> Vec<usize> {
        (0..self.vertex_count).map(|v| self.red_degree(v)).collect()
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<()> {
        if e < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange {
                edge: e,
                count: self.edges.len(),
            })
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count,
            })
        }
    }

    /// The edge list as `(u, v, color)` triples, suitable for [`ColoredGraph::new`].
    pub fn edge_triples(&self) -> impl Iterator<Item = (VertexId, VertexId, Color)> + '_ {
        self.edges.iter().map(|e| (e.u, e.v, e.color))
    }

    /// A copy of the graph with `extra` isolated vertices and `more` edges appended.
    pub(crate) fn extended<I>(&self, extra: usize, more: I) -> Result<ColoredGraph>
    where
        I: IntoIterator<Item = (VertexId, VertexId, Color)>,
    {
        ColoredGraph::new(
            self.vertex_count + extra,
            self.edge_triples().chain(more),
        )
    }
}

/// Replaces every edge by `k` parallel copies of the same color.
///
/// Copies of edge `e` get ids `k*e .. k*e + k`; the returned map sends each new
/// edge id to its original.
pub fn duplicate_edges(g: &ColoredGraph, k: usize) -> Result<(ColoredGraph, Vec<EdgeId>)> {
    if k == 0 {
        return Err(Error::Precondition("duplication factor must be at least 1".into()));
    }
    let mut triples = Vec::with_capacity(g.edge_count() * k);
    let mut origin = Vec::with_capacity(g.edge_count() * k);
    for (id, e) in g.edges().iter().enumerate() {
        for _ in 0..k {
            triples.push((e.u, e.v, e.color));
            origin.push(id);
        }
    }
    Ok((ColoredGraph::new(g.vertex_count(), triples)?, origin))
}
