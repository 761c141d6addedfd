//! Decompositions of vectors in the alternating cone, essential edges and the
//! dimension of the cone.

use std::collections::{BTreeSet, VecDeque};

use crate::error::Result;
use crate::graph::{ColoredGraph, EdgeId, VertexId};
use crate::reachability::caw_through_edge;

mod integral;
mod rays;

pub use integral::{decompose_binary, decompose_integral};
pub use rays::{decompose_extreme, find_ray_in_support, Decomposition, Ray, RayKind, RayTerm};

/// Edges through which some closed alternating walk passes. Every other edge
/// is zero on the whole cone.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EssentialEdgeSet(BTreeSet<EdgeId>);

impl EssentialEdgeSet {
    pub fn contains(&self, e: EdgeId) -> bool {
        self.0.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.0.iter().copied()
    }
}

impl FromIterator<EdgeId> for EssentialEdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EssentialEdgeSet(iter.into_iter().collect())
    }
}

pub fn essential_edges(g: &ColoredGraph) -> Result<EssentialEdgeSet> {
    let mut out = BTreeSet::new();
    for e in 0..g.edge_count() {
        if caw_through_edge(g, e)? {
            out.insert(e);
        }
    }
    Ok(EssentialEdgeSet(out))
}

/// The pieces of the dimension formula `#E_d - #V + b(V, E_d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub essential: EssentialEdgeSet,
    pub vertex_count: usize,
    /// Bipartite components of the spanning subgraph on the essential edges,
    /// isolated vertices included.
    pub bipartite_components: usize,
    pub dimension: usize,
}

pub fn dimension_report(g: &ColoredGraph) -> Result<DimensionReport> {
    let essential = essential_edges(g)?;
    let pairs: Vec<(VertexId, VertexId)> = essential
        .iter()
        .map(|e| (g.edge(e).u, g.edge(e).v))
        .collect();
    let components = components(g.vertex_count(), &pairs);
    let bipartite = components.iter().filter(|c| c.bipartite).count();
    let dimension = essential.len() + bipartite - g.vertex_count();
    Ok(DimensionReport {
        essential,
        vertex_count: g.vertex_count(),
        bipartite_components: bipartite,
        dimension,
    })
}

/// Dimension of the alternating cone of `g`.
pub fn dimension(g: &ColoredGraph) -> Result<usize> {
    Ok(dimension_report(g)?.dimension)
}

#[derive(Debug, Clone, Copy)]
struct Component {
    vertices: usize,
    edges: usize,
    bipartite: bool,
}

/// Connected components of the graph on `n` vertices with edge list `pairs`,
/// found by BFS 2-coloring.
fn components(n: usize, pairs: &[(VertexId, VertexId)]) -> Vec<Component> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in pairs {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut out = Vec::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut comp = Component {
            vertices: 0,
            edges: 0,
            bipartite: true,
        };
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            comp.vertices += 1;
            let sv = side[v].unwrap();
            for &w in &adj[v] {
                comp.edges += 1;
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        queue.push_back(w);
                    }
                    Some(sw) if sw == sv => comp.bipartite = false,
                    Some(_) => {}
                }
            }
        }
        comp.edges /= 2;
        out.push(comp);
    }
    out
}

fn underlying_pairs(g: &ColoredGraph) -> Vec<(VertexId, VertexId)> {
    g.edges().iter().map(|e| (e.u, e.v)).collect()
}

/// Every component is a tree or has exactly one cycle, of odd length.
///
/// Exactly the edge sets whose incidence vectors are linearly independent.
pub fn is_pseudo_forest(g: &ColoredGraph) -> bool {
    components(g.vertex_count(), &underlying_pairs(g))
        .iter()
        .all(|c| c.edges + 1 == c.vertices || (c.edges == c.vertices && !c.bipartite))
}

/// Rank of the vertex-edge incidence matrix: `#V` minus the number of
/// bipartite components.
pub fn incidence_rank(g: &ColoredGraph) -> usize {
    let comps = components(g.vertex_count(), &underlying_pairs(g));
    g.vertex_count() - comps.iter().filter(|c| c.bipartite).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{self, Blue, Red};

    fn hat(n: usize, red: &[(usize, usize)]) -> ColoredGraph {
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let c = if red.contains(&(i, j)) { Red } else { Blue };
                triples.push((i, j, c));
            }
        }
        ColoredGraph::new(n, triples).unwrap()
    }

    fn uncolored(n: usize, pairs: &[(usize, usize)]) -> ColoredGraph {
        ColoredGraph::new(n, pairs.iter().map(|&(u, v)| (u, v, Color::Red))).unwrap()
    }

    #[test]
    fn essential_edges_examples() {
        let lone = ColoredGraph::new(2, [(0, 1, Red)]).unwrap();
        assert!(essential_edges(&lone).unwrap().is_empty());

        let two_k2 = hat(4, &[(0, 1), (2, 3)]);
        assert_eq!(essential_edges(&two_k2).unwrap().len(), 6);

        // Pairs: ab=0 ac=1 ad=2 bc=3 bd=4 cd=5; bc and ad are inessential.
        let p4 = hat(4, &[(0, 1), (1, 2), (2, 3)]);
        let ess: Vec<_> = essential_edges(&p4).unwrap().iter().collect();
        assert_eq!(ess, vec![0, 1, 4, 5]);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&ColoredGraph::new(1, []).unwrap()).unwrap(), 0);
        assert_eq!(dimension(&hat(4, &[(0, 1), (2, 3)])).unwrap(), 2);
        let report = dimension_report(&hat(4, &[(0, 1), (1, 2), (2, 3)])).unwrap();
        assert_eq!(report.essential.len(), 4);
        assert_eq!(report.bipartite_components, 1);
        assert_eq!(report.dimension, 1);
        let pair = ColoredGraph::new(2, [(0, 1, Red), (0, 1, Blue)]).unwrap();
        assert_eq!(dimension(&pair).unwrap(), 1);
    }

    #[test]
    fn pseudo_forests() {
        let tree = uncolored(5, &[(0, 1), (0, 2), (2, 3), (2, 4)]);
        assert!(is_pseudo_forest(&tree));
        assert_eq!(incidence_rank(&tree), 4);

        let triangle = uncolored(3, &[(0, 1), (1, 2), (2, 0)]);
        assert!(is_pseudo_forest(&triangle));
        assert_eq!(incidence_rank(&triangle), 3);

        let square = uncolored(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(!is_pseudo_forest(&square));
        assert_eq!(incidence_rank(&square), 3);

        let parallel = uncolored(2, &[(0, 1), (0, 1)]);
        assert!(!is_pseudo_forest(&parallel));

        let bowtie = uncolored(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert!(!is_pseudo_forest(&bowtie));
        assert_eq!(incidence_rank(&uncolored(3, &[])), 0);
    }
}
