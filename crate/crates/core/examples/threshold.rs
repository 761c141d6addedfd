// Three equivalent threshold tests, plus weights for threshold graphs.

use altcone::threshold::{
    find_alternating_c4, hat, is_threshold_degrees, is_threshold_via_cone, threshold_weights, SimpleGraph,
};

pub fn run_example() -> altcone::Result<()> {
    for (name, g) in [
        ("star K1,3", SimpleGraph::new(4, [(0, 1), (0, 2), (0, 3)])?),
        ("2K2", SimpleGraph::new(4, [(0, 1), (2, 3)])?),
        ("P4", SimpleGraph::new(4, [(0, 1), (1, 2), (2, 3)])?),
        ("K4", SimpleGraph::complete(4)),
    ] {
        let by_degrees = is_threshold_degrees(&g.degrees());
        let by_cone = is_threshold_via_cone(&g);
        let c4 = find_alternating_c4(&hat(&g))?;
        println!("{name}: degrees {by_degrees}, cone {by_cone}, alternating C4 {c4:?}");
        if let Some(w) = threshold_weights(&g) {
            let w: Vec<String> = w.iter().map(ToString::to_string).collect();
            println!("  weights {}", w.join(" "));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> altcone::Result<()> {
    run_example()
}
