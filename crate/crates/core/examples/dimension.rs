// Essential edges and the dimension of the alternating cone.

use altcone::cone::{dimension_report, is_pseudo_forest};
use altcone::graph::{Color::Blue, Color::Red, ColoredGraph};
use altcone::threshold::{hat, SimpleGraph};

pub fn run_example() -> altcone::Result<()> {
    let pair = ColoredGraph::new(2, [(0, 1, Red), (0, 1, Blue)])?;
    let r = dimension_report(&pair)?;
    println!(
        "parallel pair: {} essential - {} vertices + {} bipartite = {}",
        r.essential.len(),
        r.vertex_count,
        r.bipartite_components,
        r.dimension
    );

    for (name, g) in [
        ("2K2", SimpleGraph::new(4, [(0, 1), (2, 3)])?),
        ("P4", SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)])?),
        ("K1,3", SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3)])?),
    ] {
        let r = dimension_report(&hat(&g))?;
        let ess: Vec<_> = r.essential.iter().collect();
        println!("hat({name}): essential edges {ess:?}, dimension {}", r.dimension);
    }

    let triangle = ColoredGraph::new(3, [(0, 1, Red), (1, 2, Red), (2, 0, Red)])?;
    println!("a triangle is a pseudo forest: {}", is_pseudo_forest(&triangle));
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
