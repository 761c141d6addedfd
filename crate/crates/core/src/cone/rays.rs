use num_traits::{Signed, Zero};

use crate::error::{precondition, Error, Result};
use crate::graph::vector::check_balanced;
use crate::graph::{
    char_vector, classify_walk, Color, ColoredGraph, EdgeId, EdgeVector, Rational, Step, VertexId,
    Walk,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RayKind {
    EvenAlternatingCycle,
    AlternatingBicycle,
}

/// An extreme ray of the alternating cone, given by the walk whose
/// characteristic vector spans it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ray {
    walk: Walk,
    kind: RayKind,
}

impl Ray {
    /// Classifies `walk`; fails unless it is an even alternating cycle or an
    /// alternating bicycle.
    pub fn new(g: &ColoredGraph, walk: Walk) -> Result<Ray> {
        let class = classify_walk(g, &walk)?;
        let kind = if class.is_even_alternating_cycle {
            RayKind::EvenAlternatingCycle
        } else if class.is_alternating_bicycle {
            RayKind::AlternatingBicycle
        } else {
            return precondition(format!(
                "walk {walk} is neither an alternating cycle nor an alternating bicycle"
            ));
        };
        Ok(Ray { walk, kind })
    }

    pub fn walk(&self) -> &Walk {
        &self.walk
    }

    pub fn kind(&self) -> RayKind {
        self.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RayTerm {
    pub coefficient: Rational,
    pub ray: Ray,
}

/// A nonnegative combination of extreme rays.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    pub terms: Vec<RayTerm>,
}

impl Decomposition {
    /// `sum coefficient * chi(ray)`.
    pub fn reconstruct(&self, g: &ColoredGraph) -> EdgeVector {
        self.terms
            .iter()
            .fold(EdgeVector::zeros(g.edge_count()), |acc, t| {
                &acc + &char_vector(g, t.ray.walk()).scaled(&t.coefficient)
            })
    }
}

fn check_cone_vector(g: &ColoredGraph, x: &EdgeVector) -> Result<()> {
    x.check_len(g)?;
    if !x.is_nonnegative() {
        return precondition("vector has a negative entry");
    }
    check_balanced(g, x)
}

/// Lowest-id edge at `at` of color `color` with positive weight.
fn next_edge(g: &ColoredGraph, x: &EdgeVector, at: VertexId, color: Color) -> EdgeId {
    g.incident(at)
        .iter()
        .copied()
        .find(|&e| g.color(e) == color && x[e].is_positive())
        .expect("balance guarantees an edge of the other color")
}

fn step(g: &ColoredGraph, e: EdgeId, from: VertexId) -> Step {
    Step {
        edge: e,
        from,
        to: g.edge(e).other(from),
    }
}

fn closed(steps: Vec<Step>) -> Walk {
    Walk::from_steps_unchecked(steps[0].from, steps)
}

/// An alternating cycle or bicycle inside the support of a nonzero vector of
/// the cone.
///
/// Grows an alternating trail from the lowest-id support edge until it
/// revisits a vertex. An even cycle closes an alternating cycle. An odd cycle
/// `C` is internally alternating with both edges at its base `u0` of one
/// color; a second trail then grows from `u0` with the other color until it
/// either closes on itself (an alternating cycle, or a second odd cycle giving
/// a bicycle) or lands back on `C` (an alternating cycle through part of `C`).
/// Ties always go to the lowest edge id.
pub fn find_ray_in_support(g: &ColoredGraph, x: &EdgeVector) -> Result<Ray> {
    check_cone_vector(g, x)?;
    let seed = *x
        .support()
        .first()
        .ok_or_else(|| Error::Precondition("vector is zero".into()))?;
    let n = g.vertex_count();

    let start = g.edge(seed).u;
    let mut position: Vec<Option<usize>> = vec![None; n];
    position[start] = Some(0);
    let mut path = vec![step(g, seed, start)];
    position[path[0].to] = Some(1);
    let odd_cycle = loop {
        let last = *path.last().unwrap();
        let next = next_edge(g, x, last.to, g.color(last.edge).opposite());
        let closing = step(g, next, last.to);
        match position[closing.to] {
            Some(i) => {
                let mut cycle = path[i..].to_vec();
                cycle.push(closing);
                if cycle.len() % 2 == 0 {
                    return Ray::new(g, closed(cycle));
                }
                break cycle;
            }
            None => {
                path.push(closing);
                position[closing.to] = Some(path.len());
            }
        }
    };

    let base = odd_cycle[0].from;
    let base_color = g.color(odd_cycle[0].edge);
    let mut on_cycle = vec![None; n];
    for (i, s) in odd_cycle.iter().enumerate() {
        on_cycle[s.from] = Some(i);
    }
    let mut tail_position: Vec<Option<usize>> = vec![None; n];
    tail_position[base] = Some(0);
    let mut tail: Vec<Step> = Vec::new();
    let mut at = base;
    let mut want = base_color.opposite();
    loop {
        let next = next_edge(g, x, at, want);
        let s = step(g, next, at);
        if let Some(j) = tail_position[s.to] {
            let mut second = tail[j..].to_vec();
            second.push(s);
            if second.len().is_multiple_of(2) {
                return Ray::new(g, closed(second));
            }
            let stem = &tail[..j];
            let mut steps = odd_cycle.clone();
            steps.extend_from_slice(stem);
            steps.extend_from_slice(&second);
            let back = Walk::from_steps_unchecked(base, stem.to_vec()).reversed();
            steps.extend_from_slice(back.steps());
            return Ray::new(g, closed(steps));
        }
        if let Some(r) = on_cycle[s.to] {
            // s.to lies on the odd cycle away from its base: return to the base
            // along whichever arc leaves s.to with a color change.
            let mut steps = tail.clone();
            steps.push(s);
            let forward = &odd_cycle[r..];
            if g.color(forward[0].edge) != g.color(s.edge) {
                steps.extend_from_slice(forward);
            } else {
                let backward =
                    Walk::from_steps_unchecked(base, odd_cycle[..r].to_vec()).reversed();
                steps.extend_from_slice(backward.steps());
            }
            return Ray::new(g, closed(steps));
        }
        tail_position[s.to] = Some(tail.len() + 1);
        tail.push(s);
        at = s.to;
        want = g.color(next).opposite();
    }
}

/// Writes a nonnegative balanced rational vector as a nonnegative combination
/// of alternating cycles and bicycles.
///
/// Each round finds a ray in the support and subtracts the largest multiple
/// that keeps the vector nonnegative, which zeroes at least one support edge.
pub fn decompose_extreme(g: &ColoredGraph, x: &EdgeVector) -> Result<Decomposition> {
    check_cone_vector(g, x)?;
    let mut rest = x.clone();
    let mut terms = Vec::new();
    let rounds = x.support().len();
    while !rest.is_zero() {
        let ray = find_ray_in_support(g, &rest)?;
        let chi = char_vector(g, ray.walk());
        let coefficient = chi
            .support()
            .into_iter()
            .map(|e| &rest[e] / &chi[e])
            .min()
            .expect("rays are nonempty");
        debug_assert!(coefficient.is_positive());
        rest = &rest - &chi.scaled(&coefficient);
        debug_assert!(rest.is_nonnegative());
        terms.push(RayTerm { coefficient, ray });
        debug_assert!(terms.len() <= rounds);
    }
    debug_assert!(rest.values().iter().all(Zero::is_zero));
    Ok(Decomposition { terms })
}
