// Integral cone vectors split into closed alternating walks that use each
// edge at most twice; {0,1} vectors split into edge-disjoint trails.

use altcone::cone::{decompose_binary, decompose_integral};
use altcone::graph::{char_vector, Color::Blue, Color::Red, ColoredGraph, EdgeVector};

pub fn run_example() -> altcone::Result<()> {
    // A wheel-like graph: hub 0, rim vertices 1..7.
    let g = ColoredGraph::new(
        8,
        [
            (0, 2, Red),
            (0, 3, Red),
            (4, 5, Red),
            (6, 7, Red),
            (7, 1, Red),
            (0, 4, Blue),
            (0, 7, Blue),
            (1, 2, Blue),
            (2, 3, Blue),
            (3, 4, Blue),
            (5, 6, Blue),
        ],
    )?;
    let x = EdgeVector::from_integers([2, 2, 2, 2, 1, 1, 3, 1, 1, 1, 2]);
    println!("x = {x}");
    let parts = decompose_integral(&g, &x)?;
    for w in &parts {
        println!("  walk {w}  chi = {}", char_vector(&g, w));
    }

    let bowtie = ColoredGraph::new(
        3,
        [(0, 1, Red), (1, 2, Blue), (2, 0, Red), (0, 1, Blue), (1, 2, Red), (2, 0, Blue)],
    )?;
    let ones = EdgeVector::from_integers([1; 6]);
    println!("{{0,1}} vector on a doubled triangle:");
    for t in decompose_binary(&bowtie, &ones)? {
        println!("  trail {t}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
