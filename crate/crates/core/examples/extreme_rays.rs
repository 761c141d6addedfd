// Writes a cone vector as a nonnegative combination of extreme rays.
//
// Two triangles joined by a path form an alternating bicycle; together with
// a parallel red/blue pair, the vector below mixes both kinds of ray.

use altcone::cone::decompose_extreme;
use altcone::graph::{Color::Blue, Color::Red, ColoredGraph, EdgeVector, Rational};

pub fn run_example() -> altcone::Result<()> {
    let g = ColoredGraph::new(
        6,
        [
            (2, 0, Blue),
            (0, 1, Red),
            (1, 2, Blue),
            (3, 4, Blue),
            (4, 5, Red),
            (5, 3, Blue),
            (2, 3, Red),
            (0, 1, Blue),
        ],
    )?;
    let half = Rational::new(1.into(), 2.into());
    let bicycle = EdgeVector::from_integers([1, 1, 1, 1, 1, 1, 2, 0]).scaled(&half);
    let digon = EdgeVector::from_integers([0, 3, 0, 0, 0, 0, 0, 3]);
    let x = &bicycle + &digon;
    println!("input  x = {x}");

    let d = decompose_extreme(&g, &x)?;
    for term in &d.terms {
        println!("  {} x {:?}: {}", term.coefficient, term.ray.kind(), term.ray.walk());
    }
    assert_eq!(d.reconstruct(&g), x);
    println!("sum of terms reproduces x");
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
