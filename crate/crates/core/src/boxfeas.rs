//! Integral and half-integral points of the alternating cone inside a box
//! `l <= x <= u`, found by augmenting along closed alternating trails in a
//! residual graph.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{precondition, Error, Result};
use crate::graph::vector::check_balanced;
use crate::graph::{classify_walk, Color, ColoredGraph, EdgeId, EdgeVector, Rational, Walk};
use crate::reachability::cat_through_edge;

/// Nonnegative integral lower and upper bounds, one pair per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl Bounds {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Bounds> {
        if lower.len() != upper.len() {
            return Err(Error::LengthMismatch {
                expected: lower.len(),
                found: upper.len(),
            });
        }
        for (e, (&l, &u)) in lower.iter().zip(&upper).enumerate() {
            if l < 0 || l > u {
                return precondition(format!("edge {e}: bounds must satisfy 0 <= l <= u, got [{l}, {u}]"));
            }
        }
        Ok(Bounds { lower, upper })
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    /// Bounds `(2l, 2u)`.
    pub fn doubled(&self) -> Bounds {
        Bounds {
            lower: self.lower.iter().map(|x| 2 * x).collect(),
            upper: self.upper.iter().map(|x| 2 * x).collect(),
        }
    }

    pub fn contains(&self, f: &[i64]) -> bool {
        f.len() == self.len()
            && f.iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (l, u))| l <= x && x <= u)
    }

    fn check_len(&self, g: &ColoredGraph) -> Result<()> {
        if self.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.edge_count(),
                found: self.len(),
            })
        }
    }
}

/// Which of the four residual copies of an edge a residual edge is.
///
/// Copies 1 and 2 keep the edge's color and raise `f` by one unit each;
/// copies 3 and 4 take the opposite color and lower it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResidualCopy {
    pub edge: EdgeId,
    pub copy: u8,
}

impl ResidualCopy {
    fn delta(self) -> i64 {
        if self.copy <= 2 {
            1
        } else {
            -1
        }
    }
}

#[derive(Debug, Clone)]
pub struct ResidualGraph {
    graph: ColoredGraph,
    copy_of: Vec<ResidualCopy>,
}

impl ResidualGraph {
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn copy_of(&self, r: EdgeId) -> ResidualCopy {
        self.copy_of[r]
    }

    /// The residual edge standing for copy `copy` of `e`, if present.
    pub fn find_copy(&self, e: EdgeId, copy: u8) -> Option<EdgeId> {
        self.copy_of
            .iter()
            .position(|c| c.edge == e && c.copy == copy)
    }
}

fn integral_balanced(g: &ColoredGraph, f: &EdgeVector) -> Result<Vec<i64>> {
    f.check_len(g)?;
    let Some(values) = f.to_integers() else {
        return precondition("vector is not integral");
    };
    if values.iter().any(|&x| x < 0) {
        return precondition("vector has a negative entry");
    }
    check_balanced(g, f)?;
    Ok(values)
}

/// Residual graph of an integral balanced `f`. Residual edges are listed by
/// original edge, then copy index.
pub fn residual_graph(g: &ColoredGraph, bounds: &Bounds, f: &EdgeVector) -> Result<ResidualGraph> {
    bounds.check_len(g)?;
    let values = integral_balanced(g, f)?;
    Ok(build_residual(g, bounds, &values))
}

fn build_residual(g: &ColoredGraph, bounds: &Bounds, f: &[i64]) -> ResidualGraph {
    let mut triples = Vec::new();
    let mut copy_of = Vec::new();
    for (e, edge) in g.edges().iter().enumerate() {
        let (l, u, x) = (bounds.lower[e], bounds.upper[e], f[e]);
        let rules: [(bool, Color); 4] = [
            (x < u, edge.color),
            (x + 1 < u, edge.color),
            (x > l, edge.color.opposite()),
            (x > l + 1, edge.color.opposite()),
        ];
        for (i, &(present, color)) in rules.iter().enumerate() {
            if present {
                triples.push((edge.u, edge.v, color));
                copy_of.push(ResidualCopy {
                    edge: e,
                    copy: i as u8 + 1,
                });
            }
        }
    }
    ResidualGraph {
        graph: ColoredGraph::new(g.vertex_count(), triples).expect("copies of valid edges"),
        copy_of,
    }
}

/// Augments `f` along a closed alternating trail `t` of the residual graph.
pub fn augment(residual: &ResidualGraph, f: &EdgeVector, t: &Walk) -> Result<EdgeVector> {
    let class = classify_walk(&residual.graph, t)?;
    if !class.is_cat {
        return precondition("augmenting walk is not a closed alternating trail of the residual graph");
    }
    let Some(mut values) = f.to_integers() else {
        return precondition("vector is not integral");
    };
    apply(residual, &mut values, t);
    Ok(EdgeVector::from_integers(values))
}

fn apply(residual: &ResidualGraph, f: &mut [i64], t: &Walk) {
    for r in t.edges() {
        let c = residual.copy_of[r];
        f[c.edge] += c.delta();
    }
}

fn edge_infeasibility(x: i64, l: i64, u: i64) -> i64 {
    (l - x).max(x - u).max(0)
}

/// `sum_e max(l(e) - f(e), f(e) - u(e), 0)`.
pub fn total_infeasibility(f: &[i64], bounds: &Bounds) -> i64 {
    f.iter()
        .zip(bounds.lower.iter().zip(&bounds.upper))
        .map(|(&x, (&l, &u))| edge_infeasibility(x, l, u))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    BelowLower,
    AboveUpper,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FeasibilityOutcome {
    Feasible { witness: EdgeVector },
    /// No integral point exists: the residual graph has no closed alternating
    /// trail through the raising (or lowering) copy of `edge`.
    Infeasible { edge: EdgeId, side: Side },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub outcome: FeasibilityOutcome,
    pub augmentations: usize,
    pub initial_infeasibility: i64,
}

/// Searches for an integral balanced vector within `bounds`, starting from
/// `start` (zero by default).
///
/// Each round takes the lowest-id infeasible edge and looks for a closed
/// alternating trail through its first (raising) or third (lowering) residual
/// copy. Every augmentation lowers the total infeasibility by at least one.
pub fn find_feasible(
    g: &ColoredGraph,
    bounds: &Bounds,
    start: Option<&EdgeVector>,
) -> Result<FeasibilityReport> {
    bounds.check_len(g)?;
    let mut f = match start {
        Some(s) => integral_balanced(g, s)?,
        None => vec![0; g.edge_count()],
    };
    let initial_infeasibility = total_infeasibility(&f, bounds);
    let mut augmentations = 0;
    loop {
        let pick = (0..g.edge_count()).find_map(|e| {
            let (l, u) = (bounds.lower[e], bounds.upper[e]);
            if f[e] < l {
                Some((e, Side::BelowLower))
            } else if f[e] > u {
                Some((e, Side::AboveUpper))
            } else {
                None
            }
        });
        let Some((e, side)) = pick else {
            let witness = EdgeVector::from_integers(f.iter().copied());
            assert!(
                bounds.contains(&f) && crate::graph::is_balanced(g, &witness),
                "feasible witness must be balanced and within bounds"
            );
            return Ok(FeasibilityReport {
                outcome: FeasibilityOutcome::Feasible { witness },
                augmentations,
                initial_infeasibility,
            });
        };
        let residual = build_residual(g, bounds, &f);
        let copy = match side {
            Side::BelowLower => 1,
            Side::AboveUpper => 3,
        };
        let target = residual
            .find_copy(e, copy)
            .expect("an infeasible edge always has its first or third copy");
        let Some(trail) = cat_through_edge(&residual.graph, target)? else {
            return Ok(FeasibilityReport {
                outcome: FeasibilityOutcome::Infeasible { edge: e, side },
                augmentations,
                initial_infeasibility,
            });
        };
        let before = f.clone();
        apply(&residual, &mut f, &trail);
        augmentations += 1;
        if cfg!(debug_assertions) {
            check_step(g, bounds, &before, &f);
        }
    }
}

fn check_step(g: &ColoredGraph, bounds: &Bounds, before: &[i64], after: &[i64]) {
    assert!(after.iter().all(|&x| x >= 0), "augmentation produced a negative entry");
    assert!(
        crate::graph::is_balanced(g, &EdgeVector::from_integers(after.iter().copied())),
        "augmentation broke the balance condition"
    );
    assert!(
        total_infeasibility(after, bounds) < total_infeasibility(before, bounds),
        "augmentation did not reduce total infeasibility"
    );
    for e in 0..before.len() {
        let (l, u) = (bounds.lower[e], bounds.upper[e]);
        assert!(
            edge_infeasibility(after[e], l, u) <= edge_infeasibility(before[e], l, u),
            "augmentation increased the infeasibility of edge {e}"
        );
    }
}

/// A rational balanced vector within `bounds`, or `None` if there is none.
///
/// Solves the integral problem with bounds `(2l, 2u)` and halves the result;
/// the returned point is half-integral.
pub fn rational_feasible(g: &ColoredGraph, bounds: &Bounds) -> Result<Option<EdgeVector>> {
    let report = find_feasible(g, &bounds.doubled(), None)?;
    let FeasibilityOutcome::Feasible { witness } = report.outcome else {
        return Ok(None);
    };
    let half = witness.scaled(&Rational::new(BigInt::from(1), BigInt::from(2)));
    assert!(half.is_half_integral() && crate::graph::is_balanced(g, &half));
    assert!(half.values().iter().enumerate().all(|(e, x)| {
        *x >= Rational::from_integer(bounds.lower[e].into())
            && *x <= Rational::from_integer(bounds.upper[e].into())
    }));
    Ok(Some(half))
}
