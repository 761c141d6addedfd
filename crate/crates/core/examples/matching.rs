// Maximum matchings in general graphs.

use altcone::matching::{max_matching, AuxGraph};

pub fn run_example() -> altcone::Result<()> {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let petersen = AuxGraph::from_edges(10, &edges)?;
    let m = max_matching(&petersen);
    println!("Petersen graph: matching of size {}, perfect: {}", m.size(), m.is_perfect());
    for &e in m.edges() {
        println!("  {:?}", petersen.edges()[e]);
    }

    // A triangle with a pendant path needs a blossom to find the augmenting path.
    let h = AuxGraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5)])?;
    println!("blossom instance: size {}", max_matching(&h).size());
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
