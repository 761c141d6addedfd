#![allow(dead_code)]

use altcone::graph::{Color, ColoredGraph};
use altcone::threshold::SimpleGraph;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_color(rng: &mut impl Rng) -> Color {
    if rng.random_bool(0.5) {
        Color::Red
    } else {
        Color::Blue
    }
}

/// A random 2-colored multigraph with `n` vertices (at least 2) and `m` edges.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> ColoredGraph {
    assert!(n >= 2);
    let triples: Vec<_> = (0..m)
        .map(|_| {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v, random_color(rng))
        })
        .collect();
    ColoredGraph::new(n, triples).unwrap()
}

/// A random graph with vertex and edge counts drawn from the given ranges.
pub fn random_graph_in(
    rng: &mut impl Rng,
    vertices: std::ops::RangeInclusive<usize>,
    edges: std::ops::RangeInclusive<usize>,
) -> ColoredGraph {
    let n = rng.random_range(vertices);
    let m = rng.random_range(edges);
    random_graph(rng, n, m)
}

pub fn random_simple_graph(rng: &mut impl Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

pub fn random_permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

pub fn bicycle_graph() -> ColoredGraph {
    use Color::{Blue, Red};
    ColoredGraph::new(
        6,
        [
            (2, 0, Blue),
            (0, 1, Red),
            (1, 2, Blue),
            (3, 4, Blue),
            (4, 5, Red),
            (5, 3, Blue),
            (2, 3, Red),
        ],
    )
    .unwrap()
}

pub fn petersen_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    edges
}

/// All simple graphs on `n` labeled vertices.
pub fn all_simple_graphs(n: usize) -> impl Iterator<Item = SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        SimpleGraph::new(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p),
        )
        .unwrap()
    })
}

/// A random threshold graph: vertices arrive one at a time, isolated or dominating.
pub fn random_threshold_graph(rng: &mut impl Rng, n: usize) -> SimpleGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.random_bool(0.5) {
            edges.extend((0..v).map(|u| (u, v)));
        }
    }
    SimpleGraph::new(n, edges).unwrap()
}

/// Two random-colored odd cycles joined at a vertex or by a short path, plus
/// `extra` random edges. Such graphs often carry walks that repeat an edge.
pub fn random_bicycle_like(rng: &mut impl Rng, extra: usize) -> ColoredGraph {
    let a = if rng.random_bool(0.5) { 3 } else { 5 };
    let b = 3;
    let path = rng.random_range(0..=2);
    let n = a + path + b - 1;
    let mut triples = Vec::new();
    for i in 0..a {
        triples.push((i, (i + 1) % a, random_color(rng)));
    }
    // The second cycle starts at the path's far end, which is vertex a - 1 when path == 0.
    let mut prev = a - 1;
    for k in 0..path {
        let next = a + k;
        triples.push((prev, next, random_color(rng)));
        prev = next;
    }
    let base = prev;
    let first = a + path;
    let cycle: Vec<usize> = std::iter::once(base).chain(first..first + b - 1).collect();
    for i in 0..b {
        triples.push((cycle[i], cycle[(i + 1) % b], random_color(rng)));
    }
    for _ in 0..extra {
        let u = rng.random_range(0..n);
        let mut v = rng.random_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        triples.push((u, v, random_color(rng)));
    }
    triples.shuffle(rng);
    ColoredGraph::new(n, triples).unwrap()
}
