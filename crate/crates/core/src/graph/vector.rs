use std::fmt;
use std::ops::{Add, Index, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Color, ColoredGraph, EdgeId};
use crate::error::{Error, Result};

/// Exact rational number; all edge weights are stored this way.
pub type Rational = num_rational::BigRational;

/// A weight per edge of a graph, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeVector {
    values: Vec<Rational>,
}

impl EdgeVector {
    pub fn zeros(len: usize) -> Self {
        EdgeVector {
            values: vec![Rational::zero(); len],
        }
    }

    pub fn from_rationals(values: Vec<Rational>) -> Self {
        EdgeVector { values }
    }

    pub fn from_integers<I>(values: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        EdgeVector {
            values: values
                .into_iter()
                .map(|v| Rational::from_integer(v.into()))
                .collect(),
        }
    }

    /// Checks that the vector has one entry per edge of `g`.
    pub fn check_len(&self, g: &ColoredGraph) -> Result<()> {
        if self.values.len() == g.edge_count() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: g.edge_count(),
                found: self.values.len(),
            })
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn set(&mut self, e: EdgeId, value: Rational) {
        self.values[e] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }

    pub fn is_half_integral(&self) -> bool {
        let two = Rational::from_integer(2.into());
        self.values.iter().all(|v| (v * &two).is_integer())
    }

    /// Every entry is 0 or 1.
    pub fn is_binary(&self) -> bool {
        self.values.iter().all(|v| v.is_zero() || v.is_one())
    }

    /// Edges with a nonzero value, in increasing id order.
    pub fn support(&self) -> Vec<EdgeId> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(e, _)| e)
            .collect()
    }

    /// The entries as machine integers, if every entry is an integer that fits.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.values
            .iter()
            .map(|v| if v.is_integer() { v.to_integer().to_i64() } else { None })
            .collect()
    }

    pub fn scaled(&self, factor: &Rational) -> EdgeVector {
        EdgeVector {
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }
}

impl Index<EdgeId> for EdgeVector {
    type Output = Rational;

    fn index(&self, e: EdgeId) -> &Rational {
        &self.values[e]
    }
}

impl Add for &EdgeVector {
    type Output = EdgeVector;

    fn add(self, rhs: &EdgeVector) -> EdgeVector {
        assert_eq!(self.len(), rhs.len(), "edge vectors of different lengths");
        EdgeVector {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &EdgeVector {
    type Output = EdgeVector;

    fn sub(self, rhs: &EdgeVector) -> EdgeVector {
        assert_eq!(self.len(), rhs.len(), "edge vectors of different lengths");
        EdgeVector {
            values: self.values.iter().zip(&rhs.values).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for EdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}

/// Red weight minus blue weight at every vertex.
pub(crate) fn imbalance(g: &ColoredGraph, x: &EdgeVector) -> Vec<Rational> {
    let mut net = vec![Rational::zero(); g.vertex_count()];
    for (e, edge) in g.edges().iter().enumerate() {
        let w = &x[e];
        if w.is_zero() {
            continue;
        }
        for end in [edge.u, edge.v] {
            match edge.color {
                Color::Red => net[end] += w,
                Color::Blue => net[end] -= w,
            }
        }
    }
    net
}

/// Whether `x` satisfies the balance condition at every vertex of `g`.
///
/// Nonnegativity is not checked. A vector of the wrong length is never balanced.
pub fn is_balanced(g: &ColoredGraph, x: &EdgeVector) -> bool {
    x.len() == g.edge_count() && imbalance(g, x).iter().all(Zero::is_zero)
}

/// Like [`is_balanced`] but names the first offending vertex.
pub(crate) fn check_balanced(g: &ColoredGraph, x: &EdgeVector) -> Result<()> {
    x.check_len(g)?;
    match imbalance(g, x).iter().position(|v| !v.is_zero()) {
        None => Ok(()),
        Some(vertex) => Err(Error::Unbalanced { vertex }),
    }
}
