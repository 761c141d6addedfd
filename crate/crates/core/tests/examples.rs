//! Every cargo example doubles as a smoke test.

mod extreme_rays {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/extreme_rays.rs"));
}

#[test]
fn extreme_rays_example_runs() {
    extreme_rays::run_example().expect("extreme_rays example should run");
}

mod integral_decomposition {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/integral_decomposition.rs"));
}

#[test]
fn integral_decomposition_example_runs() {
    integral_decomposition::run_example().expect("integral_decomposition example should run");
}

mod dimension {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/dimension.rs"));
}

#[test]
fn dimension_example_runs() {
    dimension::run_example().expect("dimension example should run");
}

mod threshold {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/threshold.rs"));
}

#[test]
fn threshold_example_runs() {
    threshold::run_example().expect("threshold example should run");
}

mod majorization {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/majorization.rs"));
}

#[test]
fn majorization_example_runs() {
    majorization::run_example().expect("majorization example should run");
}

mod box_feasibility {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/box_feasibility.rs"));
}

#[test]
fn box_feasibility_example_runs() {
    box_feasibility::run_example().expect("box_feasibility example should run");
}

mod reachability {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/reachability.rs"));
}

#[test]
fn reachability_example_runs() {
    reachability::run_example().expect("reachability example should run");
}

mod matching {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/matching.rs"));
}

#[test]
fn matching_example_runs() {
    matching::run_example().expect("matching example should run");
}
