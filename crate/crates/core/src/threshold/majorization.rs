use serde::Serialize;

use crate::error::{precondition, Error, Result};

/// How two integer sequences compare under majorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Majorization {
    /// `a` majorizes `b` and is not a rearrangement of it.
    Strict,
    Permutation,
    No,
    IncomparableSums,
}

fn sorted_desc(a: &[i64]) -> Vec<i64> {
    let mut s = a.to_vec();
    s.sort_unstable_by(|x, y| y.cmp(x));
    s
}

fn prefix_dominates(a: &[i64], b: &[i64]) -> bool {
    let (mut sa, mut sb) = (0i64, 0i64);
    a.iter().zip(b).all(|(x, y)| {
        sa += x;
        sb += y;
        sa >= sb
    })
}

/// Compares the sorted-descending prefix sums of `a` and `b`.
pub fn majorizes(a: &[i64], b: &[i64]) -> Result<Majorization> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            expected: a.len(),
            found: b.len(),
        });
    }
    if a.iter().sum::<i64>() != b.iter().sum::<i64>() {
        return Ok(Majorization::IncomparableSums);
    }
    let (sa, sb) = (sorted_desc(a), sorted_desc(b));
    Ok(if sa == sb {
        Majorization::Permutation
    } else if prefix_dominates(&sa, &sb) {
        Majorization::Strict
    } else {
        Majorization::No
    })
}

/// Moves one unit from position `i` to position `j` (0-based). Requires
/// `a[i] >= a[j] + 2`.
pub fn unit_transformation(a: &[i64], i: usize, j: usize) -> Result<Vec<i64>> {
    for k in [i, j] {
        if k >= a.len() {
            return precondition(format!("index {k} out of range for length {}", a.len()));
        }
    }
    if a[i] < a[j] + 2 {
        return precondition(format!(
            "entry {i} ({}) must exceed entry {j} ({}) by at least 2",
            a[i], a[j]
        ));
    }
    let mut out = a.to_vec();
    out[i] -= 1;
    out[j] += 1;
    Ok(out)
}

/// Unit transformations (0-based index pairs) taking sorted-descending `a` to
/// sorted-descending `b`.
///
/// Each step takes `i` as the first index with `a[i] > b[i]` and `j` as the
/// first later index with `a[j] < b[j]`.
pub fn muirhead_sequence(a: &[i64], b: &[i64]) -> Result<Vec<(usize, usize)>> {
    match majorizes(a, b)? {
        Majorization::Strict | Majorization::Permutation => {}
        other => return precondition(format!("first sequence does not majorize the second ({other:?})")),
    }
    let target = sorted_desc(b);
    let mut cur = sorted_desc(a);
    let mut steps = Vec::new();
    while cur != target {
        let i = (0..cur.len())
            .find(|&k| cur[k] > target[k])
            .expect("unequal sequences with equal sums differ upward somewhere");
        let j = (i + 1..cur.len())
            .find(|&k| cur[k] < target[k])
            .expect("prefix dominance puts a deficit after the first surplus");
        cur = unit_transformation(&cur, i, j)?;
        steps.push((i, j));
    }
    Ok(steps)
}
