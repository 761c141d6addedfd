// Closed alternating trails through an edge and alternating trails between
// two vertices, both answered by a perfect matching computation.

use altcone::graph::{Color::Blue, Color::Red, ColoredGraph};
use altcone::reachability::{alternating_st_trail, cat_through_edge, caw_through_edge};

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
    // The path edge lies on a closed alternating walk but on no trail.
    println!("trail through edge 6: {:?}", cat_through_edge(&g, 6)?);
    println!("walk through edge 6: {}", caw_through_edge(&g, 6)?);

    let hexagon = ColoredGraph::new(
        6,
        [(0, 1, Red), (1, 2, Blue), (2, 3, Red), (3, 4, Blue), (4, 5, Red), (5, 0, Blue)],
    )?;
    if let Some(t) = cat_through_edge(&hexagon, 2)? {
        println!("trail through edge 2 of the hexagon: {t}");
    }
    if let Some(t) = alternating_st_trail(&hexagon, 0, 3)? {
        println!("alternating trail 0 -> 3: {t}");
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
