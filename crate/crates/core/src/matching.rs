//! Maximum-cardinality matching in general graphs (Edmonds' blossom shrinking).

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// A simple undirected graph on dense node ids. Adding an edge twice returns the
/// id of the existing edge.
#[derive(Debug, Clone, Default)]
pub struct AuxGraph {
    node_count: usize,
    edges: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
    adj: Vec<Vec<usize>>,
}

impl AuxGraph {
    pub fn new(node_count: usize) -> Self {
        AuxGraph {
            node_count,
            edges: Vec::new(),
            index: HashMap::new(),
            adj: vec![Vec::new(); node_count],
        }
    }

    pub fn from_edges(node_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut h = AuxGraph::new(node_count);
        for &(a, b) in edges {
            h.add_edge(a, b)?;
        }
        Ok(h)
    }

    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<usize> {
        for x in [a, b] {
            if x >= self.node_count {
                return Err(Error::VertexOutOfRange {
                    vertex: x,
                    count: self.node_count,
                });
            }
        }
        if a == b {
            return Err(Error::LoopEdge {
                edge: self.edges.len(),
                vertex: a,
            });
        }
        let key = (a.min(b), a.max(b));
        if let Some(&id) = self.index.get(&key) {
            return Ok(id);
        }
        let id = self.edges.len();
        self.edges.push(key);
        self.index.insert(key, id);
        self.adj[a].push(b);
        self.adj[b].push(a);
        Ok(id)
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(smaller, larger)` node pairs in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_id(&self, a: usize, b: usize) -> Option<usize> {
        self.index.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn neighbors(&self, a: usize) -> &[usize] {
        &self.adj[a]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
    edges: Vec<usize>,
}

impl Matching {
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Matched aux-edge ids, ascending.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn mate(&self, node: usize) -> Option<usize> {
        self.mate[node]
    }

    pub fn contains_edge(&self, edge: usize) -> bool {
        self.edges.binary_search(&edge).is_ok()
    }

    pub fn is_perfect(&self) -> bool {
        self.mate.iter().all(Option::is_some)
    }
}

/// Search state for one alternating tree; reset per root.
struct Search<'a> {
    h: &'a AuxGraph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Search<'a> {
    fn new(h: &'a AuxGraph) -> Self {
        let n = h.node_count();
        Search {
            h,
            mate: vec![None; n],
            parent: vec![None; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.h.node_count()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("outer node has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("inner path reaches the root");
            b = self.parent[m].expect("outer node has a parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, stop: usize, mut child: usize) {
        while self.base[v] != stop {
            let m = self.mate[v].expect("blossom path is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path continues");
        }
    }

    /// Grows an alternating tree from `root`; returns the free node ending an
    /// augmenting path, if one is found.
    fn grow(&mut self, root: usize) -> Option<usize> {
        let n = self.h.node_count();
        self.in_tree.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);

        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.h.neighbors(v).len() {
                let to = self.h.neighbors(v)[idx];
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root
                    || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let new_base = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, new_base, to);
                    self.mark_path(to, new_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = new_base;
                            if !self.in_tree[i] {
                                self.in_tree[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.in_tree[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while let Some(pv) = self.parent[v] {
            let next = self.mate[pv];
            self.mate[v] = Some(pv);
            self.mate[pv] = Some(v);
            match next {
                Some(n) => v = n,
                None => break,
            }
        }
    }
}

/// A maximum-cardinality matching of `h`.
///
/// Roots are tried in increasing node order and neighbors scanned in insertion
/// order, so the result is a deterministic function of the input. Runs in
/// `O(n^3)`.
pub fn max_matching(h: &AuxGraph) -> Matching {
    let mut search = Search::new(h);
    for root in 0..h.node_count() {
        if search.mate[root].is_none() {
            if let Some(end) = search.grow(root) {
                search.augment(end);
            }
        }
    }
    let mut edges: Vec<usize> = (0..h.node_count())
        .filter_map(|a| {
            let b = search.mate[a]?;
            (a < b).then(|| h.edge_id(a, b).expect("matched pair is an edge"))
        })
        .collect();
    edges.sort_unstable();
    Matching {
        mate: search.mate,
        edges,
    }
}

pub fn has_perfect_matching(h: &AuxGraph) -> bool {
    h.node_count().is_multiple_of(2) && max_matching(h).size() * 2 == h.node_count()
}
