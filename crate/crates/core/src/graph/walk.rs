use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::{One, Zero};

use super::vector::check_balanced;
use super::{Color, ColoredGraph, EdgeId, EdgeVector, VertexId};
use crate::error::{precondition, Error, Result};

/// One traversal of an edge, with its direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub from: VertexId,
    pub to: VertexId,
}

impl Step {
    fn reversed(self) -> Step {
        Step {
            edge: self.edge,
            from: self.to,
            to: self.from,
        }
    }
}

/// A walk `(v0, e1, v1, ..., em, vm)`.
///
/// Steps record edge ids together with the direction of traversal, so walks
/// through parallel edges are unambiguous. A walk of length 0 is just its start
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    start: VertexId,
    steps: Vec<Step>,
}

impl Walk {
    pub fn empty(start: VertexId) -> Walk {
        Walk {
            start,
            steps: Vec::new(),
        }
    }

    /// Follows `edges` starting at `start`; every edge must be incident with the
    /// vertex reached so far.
    pub fn from_edges(g: &ColoredGraph, start: VertexId, edges: &[EdgeId]) -> Result<Walk> {
        g.check_vertex(start)?;
        let mut walk = Walk::empty(start);
        for &e in edges {
            walk.push(g, e)?;
        }
        Ok(walk)
    }

    /// Builds a walk from explicit steps, checking consecutive incidence and that
    /// every step's endpoints are those of its edge.
    pub fn from_steps(g: &ColoredGraph, start: VertexId, steps: Vec<Step>) -> Result<Walk> {
        let walk = Walk { start, steps };
        walk.validate(g)?;
        Ok(walk)
    }

    pub(crate) fn from_steps_unchecked(start: VertexId, steps: Vec<Step>) -> Walk {
        Walk { start, steps }
    }

    pub(crate) fn push(&mut self, g: &ColoredGraph, e: EdgeId) -> Result<()> {
        g.check_edge(e)?;
        let at = self.end();
        let edge = g.edge(e);
        if !edge.has_endpoint(at) {
            return Err(Error::InvalidWalk(format!(
                "edge {e} is not incident with vertex {at}"
            )));
        }
        self.steps.push(Step {
            edge: e,
            from: at,
            to: edge.other(at),
        });
        Ok(())
    }

    pub fn validate(&self, g: &ColoredGraph) -> Result<()> {
        g.check_vertex(self.start)?;
        let mut at = self.start;
        for (i, s) in self.steps.iter().enumerate() {
            g.check_edge(s.edge)?;
            let edge = g.edge(s.edge);
            if s.from != at {
                return Err(Error::InvalidWalk(format!(
                    "step {i} leaves {} but the walk is at {at}",
                    s.from
                )));
            }
            let matches = (edge.u == s.from && edge.v == s.to) || (edge.v == s.from && edge.u == s.to);
            if !matches {
                return Err(Error::InvalidWalk(format!(
                    "step {i} goes {} -> {} but edge {} joins {} and {}",
                    s.from, s.to, s.edge, edge.u, edge.v
                )));
            }
            at = s.to;
        }
        Ok(())
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.steps.iter().map(|s| s.edge)
    }

    /// `v0, v1, ..., vm`.
    pub fn vertices(&self) -> Vec<VertexId> {
        std::iter::once(self.start)
            .chain(self.steps.iter().map(|s| s.to))
            .collect()
    }

    /// `W1 * W2`: walk along `self`, then continue along `other`.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.end() != other.start {
            return Err(Error::JunctionMismatch {
                end: self.end(),
                start: other.start,
            });
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(Walk {
            start: self.start,
            steps,
        })
    }

    /// `W^R`, the same walk traversed backwards.
    pub fn reversed(&self) -> Walk {
        Walk {
            start: self.end(),
            steps: self.steps.iter().rev().map(|s| s.reversed()).collect(),
        }
    }

    /// A closed walk restarted at step `k`.
    pub(crate) fn rotated(&self, k: usize) -> Walk {
        debug_assert!(self.is_closed());
        if self.steps.is_empty() {
            return self.clone();
        }
        let k = k % self.steps.len();
        let mut steps = self.steps[k..].to_vec();
        steps.extend_from_slice(&self.steps[..k]);
        Walk {
            start: steps[0].from,
            steps,
        }
    }

    /// The sub-walk made of steps `range`.
    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Walk {
        let start = if range.start < self.steps.len() {
            self.steps[range.start].from
        } else {
            self.end()
        };
        Walk {
            start,
            steps: self.steps[range].to_vec(),
        }
    }

    /// How often each edge of an `m`-edge graph is traversed.
    pub(crate) fn edge_counts(&self, m: usize) -> Vec<i64> {
        let mut counts = vec![0; m];
        for s in &self.steps {
            counts[s.edge] += 1;
        }
        counts
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.start)?;
        for s in &self.steps {
            write!(f, " -[e{}]- {}", s.edge, s.to)?;
        }
        Ok(())
    }
}

/// Every walk-level property of the taxonomy, computed at once.
///
/// A closed walk of length 0 counts as closed (and as a trail and a path) but
/// never as alternating, so it is neither a CAW nor a cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct WalkClass {
    pub is_closed: bool,
    pub is_trail: bool,
    pub is_path: bool,
    pub is_cycle: bool,
    pub is_internally_alternating: bool,
    pub is_alternating: bool,
    pub is_caw: bool,
    pub is_cat: bool,
    pub is_even_alternating_cycle: bool,
    pub is_odd_internally_alternating_cycle: bool,
    pub is_alternating_bicycle: bool,
}

fn distinct<T: Eq + std::hash::Hash>(items: impl IntoIterator<Item = T>) -> bool {
    let mut seen = HashSet::new();
    items.into_iter().all(|x| seen.insert(x))
}

fn internally_alternating(g: &ColoredGraph, steps: &[Step]) -> bool {
    steps
        .windows(2)
        .all(|w| g.color(w[0].edge) != g.color(w[1].edge))
}

fn is_cycle_steps(start: VertexId, steps: &[Step]) -> bool {
    !steps.is_empty()
        && steps.last().unwrap().to == start
        && distinct(steps.iter().map(|s| s.edge))
        && distinct(steps.iter().map(|s| s.from))
}

fn is_odd_cycle_from(g: &ColoredGraph, steps: &[Step]) -> bool {
    !steps.is_empty()
        && steps.len() % 2 == 1
        && is_cycle_steps(steps[0].from, steps)
        && internally_alternating(g, steps)
}

fn vertex_set(start: VertexId, steps: &[Step]) -> HashSet<VertexId> {
    std::iter::once(start).chain(steps.iter().map(|s| s.to)).collect()
}

/// Splits an alternating closed walk as `W1 * P * W2 * P^R`, returning the
/// lengths of `W1` and `P`.
///
/// The two odd cycles and the path must meet only where they are glued: `W1`
/// and `P` share just the first base, `P` and `W2` just the second base, and
/// the cycles are disjoint unless `P` is empty, in which case they share the
/// common base.
pub(crate) fn bicycle_split(g: &ColoredGraph, w: &Walk) -> Option<(usize, usize)> {
    let steps = w.steps();
    let m = steps.len();
    let first_return = steps.iter().position(|s| s.to == w.start())? + 1;
    let cycle1 = &steps[..first_return];
    if !is_odd_cycle_from(g, cycle1) {
        return None;
    }
    let c1_vertices = vertex_set(w.start(), cycle1);
    let rest = m - first_return;
    for p in 0..=rest / 2 {
        let q = rest - 2 * p;
        if q == 0 {
            break;
        }
        let path = &steps[first_return..first_return + p];
        let cycle2 = &steps[first_return + p..first_return + p + q];
        let back = &steps[first_return + p + q..];
        let reversal_ok = path
            .iter()
            .rev()
            .zip(back)
            .all(|(a, b)| a.edge == b.edge && a.from == b.to && a.to == b.from);
        if !reversal_ok || !is_odd_cycle_from(g, cycle2) {
            continue;
        }
        let base2 = cycle2[0].from;
        let path_vertices: Vec<VertexId> = std::iter::once(w.start())
            .chain(path.iter().map(|s| s.to))
            .collect();
        if !distinct(path_vertices.iter().copied()) {
            continue;
        }
        let c2_vertices = vertex_set(base2, cycle2);
        let path_ok = path_vertices[1..].iter().all(|v| !c1_vertices.contains(v))
            && path_vertices[..p].iter().all(|v| !c2_vertices.contains(v));
        let shared: Vec<_> = c1_vertices.intersection(&c2_vertices).collect();
        let cycles_ok = if p == 0 {
            shared == [&w.start()]
        } else {
            shared.is_empty()
        };
        if path_ok && cycles_ok {
            return Some((first_return, p));
        }
    }
    None
}

/// Classifies a walk of `g`.
pub fn classify_walk(g: &ColoredGraph, w: &Walk) -> Result<WalkClass> {
    w.validate(g)?;
    let steps = w.steps();
    let m = steps.len();
    let is_closed = w.is_closed();
    let is_trail = distinct(w.edges());
    let is_path = is_trail && distinct(w.vertices());
    let is_cycle = is_closed && is_cycle_steps(w.start(), steps);
    let is_internally_alternating = internally_alternating(g, steps);
    let wraps = !is_closed || (m > 0 && g.color(steps[0].edge) != g.color(steps[m - 1].edge));
    let is_alternating = m > 0 && is_internally_alternating && wraps;
    let is_caw = is_closed && is_alternating;
    let is_cat = is_caw && is_trail;
    let is_even_alternating_cycle = is_cycle && m.is_multiple_of(2) && is_alternating;
    let is_odd_internally_alternating_cycle =
        is_cycle && m % 2 == 1 && is_internally_alternating;
    let is_alternating_bicycle = is_caw && bicycle_split(g, w).is_some();
    Ok(WalkClass {
        is_closed,
        is_trail,
        is_path,
        is_cycle,
        is_internally_alternating,
        is_alternating,
        is_caw,
        is_cat,
        is_even_alternating_cycle,
        is_odd_internally_alternating_cycle,
        is_alternating_bicycle,
    })
}

/// The characteristic vector of `w`: how many times each edge is traversed.
///
/// Panics if `w` uses an edge id that `g` does not have.
pub fn char_vector(g: &ColoredGraph, w: &Walk) -> EdgeVector {
    EdgeVector::from_integers(w.edge_counts(g.edge_count()))
}

/// Splits a closed alternating walk until no edge is traversed twice in the
/// same direction.
///
/// Whenever `W = A * e * B * e * C` with both traversals of `e` in the same
/// direction, `W` is replaced by the closed alternating walks `e * B` and
/// `A * e * C`. The characteristic vectors of the parts sum to that of `W`,
/// and each part traverses every edge at most twice.
pub fn reduce_caw(g: &ColoredGraph, w: &Walk) -> Result<Vec<Walk>> {
    if !classify_walk(g, w)?.is_caw {
        return Err(Error::NotClosedAlternating);
    }
    let mut pending = vec![w.clone()];
    let mut done = Vec::new();
    while let Some(walk) = pending.pop() {
        match first_repeated_traversal(&walk) {
            None => done.push(walk),
            Some((i, j)) => {
                let loop_part = walk.slice(i..j);
                let mut steps = walk.steps()[..i].to_vec();
                steps.extend_from_slice(&walk.steps()[j..]);
                let outer = Walk::from_steps_unchecked(walk.start(), steps);
                debug_assert!(classify_walk(g, &loop_part).unwrap().is_caw);
                debug_assert!(classify_walk(g, &outer).unwrap().is_caw);
                pending.push(outer);
                pending.push(loop_part);
            }
        }
    }
    Ok(done)
}

/// Earliest pair of steps `(i, j)`, `i < j`, traversing the same edge in the
/// same direction; minimal in `j`.
fn first_repeated_traversal(w: &Walk) -> Option<(usize, usize)> {
    let mut first_seen: HashMap<(EdgeId, VertexId), usize> = HashMap::new();
    for (j, s) in w.steps().iter().enumerate() {
        if let Some(&i) = first_seen.get(&(s.edge, s.from)) {
            return Some((i, j));
        }
        first_seen.insert((s.edge, s.from), j);
    }
    None
}

/// Grows a closed alternating walk through `seed` that uses each edge `e` at
/// most `budget[e]` times.
///
/// Starting from the single step along `seed`, the walk is extended at its end
/// with the lowest-id edge of the other color that still has budget, until it
/// returns to its start with a color change. If `budget` is balanced and
/// integral this always succeeds; `None` means the budget was not balanced.
pub(crate) fn grow_caw(g: &ColoredGraph, budget: &[i64], seed: EdgeId) -> Option<Walk> {
    debug_assert!(budget[seed] > 0);
    let start = g.edge(seed).u;
    let mut used = vec![0i64; g.edge_count()];
    let mut walk = Walk::empty(start);
    walk.push(g, seed).ok()?;
    used[seed] += 1;
    let first_color = g.color(seed);
    let limit = budget.iter().map(|&b| b.max(0)).sum::<i64>();
    loop {
        let last = *walk.steps().last().unwrap();
        let last_color = g.color(last.edge);
        if last.to == start && last_color != first_color {
            return Some(walk);
        }
        if walk.len() as i64 >= limit {
            return None;
        }
        let wanted: Color = last_color.opposite();
        let next = g
            .incident(last.to)
            .iter()
            .copied()
            .find(|&e| g.color(e) == wanted && used[e] < budget[e])?;
        walk.push(g, next).ok()?;
        used[next] += 1;
    }
}

/// A closed alternating trail through `e` inside the support of the {0,1}
/// balanced vector `f`.
pub fn extract_cat(g: &ColoredGraph, f: &EdgeVector, e: EdgeId) -> Result<Walk> {
    g.check_edge(e)?;
    f.check_len(g)?;
    if !f.is_binary() {
        return precondition("vector must be {0,1}-valued");
    }
    check_balanced(g, f)?;
    if !f[e].is_one() {
        return precondition(format!("vector must be 1 on edge {e}"));
    }
    let budget: Vec<i64> = f
        .values()
        .iter()
        .map(|v| if v.is_zero() { 0 } else { 1 })
        .collect();
    let walk = grow_caw(g, &budget, e).expect("balanced {0,1} budget always closes");
    debug_assert!(classify_walk(g, &walk).unwrap().is_cat);
    Ok(walk)
}
