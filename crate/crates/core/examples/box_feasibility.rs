// Integral and rational points of the cone inside a box.
//
// On the bicycle graph every cone vector is a multiple of the bicycle, whose
// path edge carries twice the weight of a triangle edge. Forcing the path
// edge to exactly 1 leaves only the half-integral point.

use altcone::boxfeas::{find_feasible, rational_feasible, Bounds, FeasibilityOutcome, FeasibilityReport};
use altcone::graph::{Color::Blue, Color::Red, ColoredGraph};

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
        ],
    )?;
    let bounds = Bounds::new(vec![0, 0, 0, 0, 0, 0, 1], vec![1; 7])?;
    describe("integral", &find_feasible(&g, &bounds, None)?);
    match rational_feasible(&g, &bounds)? {
        Some(y) => println!("rational: {y}"),
        None => println!("rational: none"),
    }

    let roomy = Bounds::new(vec![1, 0, 0, 0, 0, 0, 0], vec![2; 7])?;
    describe("with room", &find_feasible(&g, &roomy, None)?);
    Ok(())
}

fn describe(label: &str, report: &FeasibilityReport) {
    match &report.outcome {
        FeasibilityOutcome::Feasible { witness } => println!("{label}: feasible {witness}"),
        FeasibilityOutcome::Infeasible { edge, side } => println!("{label}: infeasible at edge {edge} ({side:?})"),
    }
    println!("  {} augmentations", report.augmentations);
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
