//! Brute-force reference implementations.
//!
//! These enumerate exhaustively and share no code with the solvers: they use
//! only the graph types. Each one refuses instances past a hard size guard
//! instead of running for hours.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, EdgeId, EdgeVector, VertexId, Walk};

/// Largest search space any oracle will enumerate.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// Largest edge count accepted by [`brute_rays`].
pub const RAY_EDGE_LIMIT: usize = 20;

/// Largest node count accepted by [`brute_matching`].
pub const MATCHING_NODE_LIMIT: usize = 24;

fn guard(space: Option<u64>, what: &str) -> Result<()> {
    match space {
        Some(s) if s <= ENUMERATION_LIMIT => Ok(()),
        _ => Err(Error::GuardExceeded(format!(
            "{what} needs more than {ENUMERATION_LIMIT} candidates"
        ))),
    }
}

fn space_of(mut ranges: impl Iterator<Item = i64>) -> Option<u64> {
    ranges.try_fold(1u64, |acc, r| acc.checked_mul(u64::try_from(r).ok()?))
}

/// Depth-first search over integral vectors with `lo[e] <= x[e] <= hi[e]`,
/// checking the balance condition at a vertex as soon as its last incident
/// edge is assigned. `visit` returns `false` to stop.
struct BalancedSearch<'a> {
    g: &'a ColoredGraph,
    lo: &'a [i64],
    hi: &'a [i64],
    closes_at: Vec<Vec<VertexId>>,
    x: Vec<i64>,
}

impl<'a> BalancedSearch<'a> {
    fn new(g: &'a ColoredGraph, lo: &'a [i64], hi: &'a [i64]) -> Self {
        let mut closes_at = vec![Vec::new(); g.edge_count()];
        for v in 0..g.vertex_count() {
            if let Some(&last) = g.incident(v).iter().max() {
                closes_at[last].push(v);
            }
        }
        BalancedSearch {
            g,
            lo,
            hi,
            closes_at,
            x: vec![0; g.edge_count()],
        }
    }

    fn balanced_at(&self, v: VertexId) -> bool {
        let net: i64 = self
            .g
            .incident(v)
            .iter()
            .map(|&e| self.g.color(e).sign() * self.x[e])
            .sum();
        net == 0
    }

    fn run(&mut self, e: EdgeId, visit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
        if e == self.x.len() {
            return visit(&self.x);
        }
        for value in self.lo[e]..=self.hi[e] {
            self.x[e] = value;
            if self.closes_at[e].iter().all(|&v| self.balanced_at(v)) && !self.run(e + 1, visit) {
                return false;
            }
        }
        true
    }
}

fn first_balanced(g: &ColoredGraph, lo: &[i64], hi: &[i64]) -> Option<Vec<i64>> {
    if lo.iter().zip(hi).any(|(l, h)| l > h) {
        return None;
    }
    let mut found = None;
    BalancedSearch::new(g, lo, hi).run(0, &mut |x| {
        found = Some(x.to_vec());
        false
    });
    found
}

/// Every balanced vector with entries in `0..=cap`, in lexicographic order.
pub fn enum_balanced(g: &ColoredGraph, cap: i64) -> Result<Vec<EdgeVector>> {
    let m = g.edge_count();
    guard(space_of(std::iter::repeat_n(cap + 1, m)), "enum_balanced")?;
    let (lo, hi) = (vec![0; m], vec![cap; m]);
    let mut out = Vec::new();
    BalancedSearch::new(g, &lo, &hi).run(0, &mut |x| {
        out.push(EdgeVector::from_integers(x.iter().copied()));
        true
    });
    Ok(out)
}

fn through(g: &ColoredGraph, e: EdgeId, cap: i64, what: &str) -> Result<bool> {
    g.check_edge(e)?;
    let m = g.edge_count();
    guard(space_of(std::iter::repeat_n(cap + 1, m)), what)?;
    let mut lo = vec![0; m];
    lo[e] = 1;
    Ok(first_balanced(g, &lo, &vec![cap; m]).is_some())
}

/// Is there a balanced {0,1} vector that is 1 on `e`?
pub fn brute_cat_through(g: &ColoredGraph, e: EdgeId) -> Result<bool> {
    through(g, e, 1, "brute_cat_through")
}

/// Is there a balanced {0,1,2} vector positive on `e`?
///
/// Cap 2 suffices: irreducible closed alternating walks are {0,1,2}-valued,
/// so a walk through `e` exists iff such a vector does.
pub fn brute_caw_through(g: &ColoredGraph, e: EdgeId) -> Result<bool> {
    through(g, e, 2, "brute_caw_through")
}

/// An integral balanced vector within `[lower, upper]`, if any.
pub fn brute_box(g: &ColoredGraph, lower: &[i64], upper: &[i64]) -> Result<Option<Vec<i64>>> {
    for len in [lower.len(), upper.len()] {
        if len != g.edge_count() {
            return Err(Error::LengthMismatch {
                expected: g.edge_count(),
                found: len,
            });
        }
    }
    let ranges = lower.iter().zip(upper).map(|(l, u)| (u - l + 1).max(1));
    guard(space_of(ranges), "brute_box")?;
    Ok(first_balanced(g, lower, upper))
}

/// Maximum matching size by exhaustive search.
pub fn brute_matching(node_count: usize, edges: &[(usize, usize)]) -> Result<usize> {
    if node_count > MATCHING_NODE_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "brute_matching accepts at most {MATCHING_NODE_LIMIT} nodes"
        )));
    }
    let mut adj = vec![Vec::new(); node_count];
    for &(a, b) in edges {
        for w in [a, b] {
            if w >= node_count {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    count: node_count,
                });
            }
        }
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    fn best(v: usize, adj: &[Vec<usize>], used: &mut [bool]) -> usize {
        let Some(v) = (v..adj.len()).find(|&w| !used[w]) else {
            return 0;
        };
        used[v] = true;
        let mut top = best(v + 1, adj, used);
        for &w in &adj[v] {
            if !used[w] {
                used[w] = true;
                top = top.max(1 + best(v + 1, adj, used));
                used[w] = false;
            }
        }
        used[v] = false;
        top
    }
    Ok(best(0, &adj, &mut vec![false; node_count]))
}

/// Vertex-edge incidence matrix: entry 1 iff the vertex is an endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: Vec<Vec<i64>>,
}

impl IncidenceMatrix {
    pub fn of(g: &ColoredGraph) -> IncidenceMatrix {
        IncidenceMatrix::of_edges(g, 0..g.edge_count())
    }

    /// Columns for the listed edges only; all vertices stay as rows.
    pub fn of_edges(g: &ColoredGraph, edges: impl IntoIterator<Item = EdgeId>) -> IncidenceMatrix {
        let columns: Vec<EdgeId> = edges.into_iter().collect();
        let mut rows = vec![vec![0; columns.len()]; g.vertex_count()];
        for (c, &e) in columns.iter().enumerate() {
            rows[g.edge(e).u][c] = 1;
            rows[g.edge(e).v][c] = 1;
        }
        IncidenceMatrix { rows }
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination.
pub fn rank_exact(m: &IncidenceMatrix) -> usize {
    let mut a: Vec<Vec<i128>> = m
        .rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let num = a[rank][c] * a[r][k] - a[r][c] * a[rank][k];
                debug_assert_eq!(num % prev, 0);
                a[r][k] = num / prev;
            }
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank += 1;
    }
    rank
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum BruteRayKind {
    EvenCycle,
    Bicycle,
}

/// An extreme ray found by enumeration, with a walk realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruteRay {
    pub kind: BruteRayKind,
    pub walk: Walk,
    pub vector: Vec<i64>,
}

/// A simple cycle: a start vertex and its edges in order.
#[derive(Debug, Clone)]
struct Cycle {
    start: VertexId,
    edges: Vec<EdgeId>,
}

impl Cycle {
    fn vertices(&self, g: &ColoredGraph) -> Vec<VertexId> {
        let mut out = vec![self.start];
        for &e in &self.edges {
            let at = *out.last().unwrap();
            out.push(g.edge(e).other(at));
        }
        out.pop();
        out
    }
}

fn simple_cycles(g: &ColoredGraph) -> Vec<Cycle> {
    fn extend(
        g: &ColoredGraph,
        s: VertexId,
        v: VertexId,
        path: &mut Vec<EdgeId>,
        on_path: &mut [bool],
        seen: &mut BTreeMap<Vec<EdgeId>, Cycle>,
    ) {
        for &e in g.incident(v) {
            let w = g.edge(e).other(v);
            if w == s && !path.is_empty() && !(path.len() == 1 && path[0] == e) {
                let mut edges = path.clone();
                edges.push(e);
                let mut key = edges.clone();
                key.sort_unstable();
                seen.entry(key).or_insert(Cycle { start: s, edges });
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                path.push(e);
                extend(g, s, w, path, on_path, seen);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut seen = BTreeMap::new();
    let mut on_path = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on_path[s] = true;
        extend(g, s, s, &mut Vec::new(), &mut on_path, &mut seen);
        on_path[s] = false;
    }
    seen.into_values().collect()
}

/// Positions `i` where edges `i` and `i + 1` (cyclically) share a color.
fn color_repeats(g: &ColoredGraph, edges: &[EdgeId]) -> Vec<usize> {
    let k = edges.len();
    (0..k)
        .filter(|&i| g.color(edges[i]) == g.color(edges[(i + 1) % k]))
        .collect()
}

/// An odd cycle that alternates everywhere except at its base.
struct OddCycle {
    base: VertexId,
    /// Edges in order from the base back to the base.
    edges: Vec<EdgeId>,
    vertices: BTreeSet<VertexId>,
    /// Color of the two edges at the base.
    base_color: Color,
}

fn odd_cycle(g: &ColoredGraph, c: &Cycle) -> Option<OddCycle> {
    let k = c.edges.len();
    let repeats = color_repeats(g, &c.edges);
    if k.is_multiple_of(2) || repeats.len() != 1 {
        return None;
    }
    let verts = c.vertices(g);
    let cut = (repeats[0] + 1) % k;
    let edges: Vec<EdgeId> = c.edges[cut..].iter().chain(&c.edges[..cut]).copied().collect();
    Some(OddCycle {
        base: verts[cut],
        base_color: g.color(edges[0]),
        edges,
        vertices: verts.into_iter().collect(),
    })
}

/// Alternating paths from `from` to `to` whose first edge avoids `first_not`,
/// last edge avoids `last_not`, and interior avoids `blocked`.
fn alternating_paths(
    g: &ColoredGraph,
    from: VertexId,
    to: VertexId,
    first_not: Color,
    last_not: Color,
    blocked: &BTreeSet<VertexId>,
) -> Vec<Vec<EdgeId>> {
    #[allow(clippy::too_many_arguments)]
    fn extend(
        g: &ColoredGraph,
        v: VertexId,
        to: VertexId,
        need_not: Color,
        last_not: Color,
        blocked: &BTreeSet<VertexId>,
        on_path: &mut BTreeSet<VertexId>,
        path: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        for &e in g.incident(v) {
            let c = g.color(e);
            if c == need_not {
                continue;
            }
            let w = g.edge(e).other(v);
            if w == to {
                if c != last_not {
                    let mut p = path.clone();
                    p.push(e);
                    out.push(p);
                }
            } else if !blocked.contains(&w) && !on_path.contains(&w) {
                on_path.insert(w);
                path.push(e);
                extend(g, w, to, c, last_not, blocked, on_path, path, out);
                path.pop();
                on_path.remove(&w);
            }
        }
    }
    let mut out = Vec::new();
    let mut on_path = BTreeSet::from([from]);
    extend(
        g,
        from,
        to,
        first_not,
        last_not,
        blocked,
        &mut on_path,
        &mut Vec::new(),
        &mut out,
    );
    out
}

fn vector_of(g: &ColoredGraph, walk_edges: &[EdgeId]) -> Vec<i64> {
    let mut v = vec![0; g.edge_count()];
    for &e in walk_edges {
        v[e] += 1;
    }
    v
}

/// Every even alternating cycle and alternating bicycle, one per
/// characteristic vector, sorted by kind and then vector.
pub fn brute_rays(g: &ColoredGraph) -> Result<Vec<BruteRay>> {
    if g.edge_count() > RAY_EDGE_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "brute_rays accepts at most {RAY_EDGE_LIMIT} edges"
        )));
    }
    let cycles = simple_cycles(g);
    let mut found: BTreeMap<(BruteRayKind, Vec<i64>), Walk> = BTreeMap::new();
    let mut record = |kind, start, edges: Vec<EdgeId>| {
        let walk = Walk::from_edges(g, start, &edges).expect("edges were followed in order");
        found.entry((kind, vector_of(g, &edges))).or_insert(walk);
    };

    for c in &cycles {
        if c.edges.len() % 2 == 0 && color_repeats(g, &c.edges).is_empty() {
            record(BruteRayKind::EvenCycle, c.start, c.edges.clone());
        }
    }

    let odd: Vec<OddCycle> = cycles.iter().filter_map(|c| odd_cycle(g, c)).collect();
    for (i, w1) in odd.iter().enumerate() {
        for w2 in &odd[i + 1..] {
            let shared: Vec<_> = w1.vertices.intersection(&w2.vertices).collect();
            let edges_of = |path: &[EdgeId]| {
                let mut edges = w1.edges.clone();
                edges.extend_from_slice(path);
                edges.extend_from_slice(&w2.edges);
                edges.extend(path.iter().rev());
                edges
            };
            if shared.is_empty() {
                let blocked: BTreeSet<VertexId> = w1.vertices.union(&w2.vertices).copied().collect();
                for path in alternating_paths(g, w1.base, w2.base, w1.base_color, w2.base_color, &blocked) {
                    record(BruteRayKind::Bicycle, w1.base, edges_of(&path));
                }
            } else if shared == [&w1.base] && w1.base == w2.base && w1.base_color != w2.base_color {
                record(BruteRayKind::Bicycle, w1.base, edges_of(&[]));
            }
        }
    }
    Ok(found
        .into_iter()
        .map(|((kind, vector), walk)| BruteRay { kind, walk, vector })
        .collect())
}
