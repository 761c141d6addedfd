use crate::error::{precondition, Result};
use crate::graph::vector::check_balanced;
use crate::graph::walk::grow_caw;
use crate::graph::{classify_walk, reduce_caw, ColoredGraph, EdgeVector, Walk};

/// Writes a nonnegative balanced integral vector as a sum of characteristic
/// vectors of closed alternating walks, each traversing every edge at most
/// twice.
///
/// Walks are grown from the lowest-id edge still carrying weight, never
/// exceeding the remaining weight, then split by [`reduce_caw`].
pub fn decompose_integral(g: &ColoredGraph, x: &EdgeVector) -> Result<Vec<Walk>> {
    x.check_len(g)?;
    if !x.is_nonnegative() {
        return precondition("vector has a negative entry");
    }
    let Some(mut rest) = x.to_integers() else {
        return precondition("vector is not integral");
    };
    check_balanced(g, x)?;
    let mut parts = Vec::new();
    while let Some(seed) = rest.iter().position(|&v| v > 0) {
        let walk = grow_caw(g, &rest, seed).expect("balanced integral budget always closes");
        for s in walk.steps() {
            rest[s.edge] -= 1;
        }
        parts.extend(reduce_caw(g, &walk)?);
    }
    Ok(parts)
}

/// Writes a balanced {0,1} vector as a sum of edge-disjoint closed alternating
/// trails.
pub fn decompose_binary(g: &ColoredGraph, x: &EdgeVector) -> Result<Vec<Walk>> {
    x.check_len(g)?;
    if !x.is_binary() {
        return precondition("vector is not {0,1}-valued");
    }
    let parts = decompose_integral(g, x)?;
    debug_assert!(parts.iter().all(|w| classify_walk(g, w).unwrap().is_cat));
    Ok(parts)
}
