// Majorization of degree sequences, Muirhead's unit transformations, and
// the monotone dimension map along them.

use altcone::threshold::{
    cone_dim_of_degrees, graph_unit_transformation, majorizes, muirhead_sequence, SimpleGraph,
};

pub fn run_example() -> altcone::Result<()> {
    let (a, b) = ([4, 2, 1, 1, 0], [2, 2, 2, 1, 1]);
    println!("{a:?} vs {b:?}: {:?}", majorizes(&a, &b)?);
    println!("unit transformations: {:?}", muirhead_sequence(&a, &b)?);

    // Walk down the dominance order from a star and watch the dimension grow.
    let mut g = SimpleGraph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)])?;
    loop {
        let d = g.degrees();
        let dim = cone_dim_of_degrees(&d).expect("degrees of a graph are graphical");
        println!("degrees {d:?} -> dimension {dim}");
        let n = g.vertex_count();
        let step = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| d[i] >= d[j] + 2);
        match step {
            Some((i, j)) => g = graph_unit_transformation(&g, i, j)?,
            None => break,
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
