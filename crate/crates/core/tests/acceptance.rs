//! Acceptance suite: nine oracle-anchored criteria, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report lines always reach stdout.
//! Exits nonzero if any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use altcone::boxfeas::{find_feasible, rational_feasible, total_infeasibility, Bounds, FeasibilityOutcome};
use altcone::cone::{decompose_binary, decompose_extreme, decompose_integral, dimension, essential_edges, RayKind};
use altcone::graph::{char_vector, classify_walk, is_balanced, ColoredGraph, EdgeVector, Rational};
use altcone::matching::{max_matching, AuxGraph};
use altcone::oracles::{
    brute_box, brute_cat_through, brute_caw_through, brute_matching, brute_rays, enum_balanced, rank_exact,
    IncidenceMatrix,
};
use altcone::reachability::{cat_through_edge, caw_through_edge};
use altcone::threshold::{
    cone_dim_of_degrees, find_alternating_c4, graph_unit_transformation, hat, is_threshold_degrees,
    is_threshold_via_cone, SimpleGraph,
};
use common::*;
use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rand::Rng;

/// Time budgets stated by the criteria.
const RAY_BUDGET: Duration = Duration::from_secs(10);
const THRESHOLD_BUDGET: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ints(x: &EdgeVector) -> Vec<i64> {
    x.to_integers().expect("integral vector")
}

/// A graph with at least one extreme ray, drawn from the given size ranges.
fn graph_with_rays(
    rng: &mut impl Rng,
    vertices: std::ops::RangeInclusive<usize>,
    edges: std::ops::RangeInclusive<usize>,
) -> (ColoredGraph, Vec<altcone::oracles::BruteRay>) {
    loop {
        let g = random_graph_in(rng, vertices.clone(), edges.clone());
        let rays = brute_rays(&g).unwrap();
        if !rays.is_empty() {
            return (g, rays);
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = rng(1);
    let mut terms = 0;
    for case in 0..200 {
        let (g, rays) = graph_with_rays(&mut rng, 2..=8, 2..=14);
        let mut x = EdgeVector::zeros(g.edge_count());
        for r in &rays {
            if rng.random_bool(0.5) {
                let c = Rational::new(
                    BigInt::from(rng.random_range(1..=6)),
                    BigInt::from(rng.random_range(1..=4)),
                );
                x = &x + &EdgeVector::from_integers(r.vector.iter().copied()).scaled(&c);
            }
        }
        let ray_vectors: BTreeSet<&Vec<i64>> = rays.iter().map(|r| &r.vector).collect();
        let d = decompose_extreme(&g, &x).map_err(|e| format!("case {case}: {e}"))?;
        check(d.reconstruct(&g) == x, || format!("case {case}: reconstruction differs from input"))?;
        for t in &d.terms {
            let class = classify_walk(&g, t.ray.walk()).unwrap();
            let ok = match t.ray.kind() {
                RayKind::EvenAlternatingCycle => class.is_even_alternating_cycle,
                RayKind::AlternatingBicycle => class.is_alternating_bicycle,
            };
            check(ok, || format!("case {case}: term {} misclassified", t.ray.walk()))?;
            let chi = ints(&char_vector(&g, t.ray.walk()));
            check(ray_vectors.contains(&chi), || {
                format!("case {case}: term {chi:?} is not among the enumerated rays")
            })?;
            terms += 1;
        }
    }
    let elapsed = start.elapsed();
    check(elapsed <= RAY_BUDGET, || format!("took {elapsed:?}, budget {RAY_BUDGET:?}"))?;
    Ok(format!("200 cases, {terms} ray terms verified, exact reconstruction, {elapsed:.2?}"))
}

/// Essential edges by the oracle: union of supports of {0,1,2} balanced vectors.
fn oracle_dimension(g: &ColoredGraph) -> (BTreeSet<usize>, usize) {
    let mut ess = BTreeSet::new();
    for x in enum_balanced(g, 2).unwrap() {
        ess.extend(x.support());
    }
    let rank = rank_exact(&IncidenceMatrix::of_edges(g, ess.iter().copied()));
    let dim = ess.len() - rank;
    (ess, dim)
}

fn multisets(pairs: usize, max_len: usize) -> Vec<Vec<usize>> {
    fn go(from: usize, pairs: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for p in from..pairs {
            cur.push(p);
            go(p, pairs, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, pairs, max_len, &mut Vec::new(), &mut out);
    out
}

fn criterion_2() -> Outcome {
    let mut exhaustive = 0;
    let compare = |g: &ColoredGraph, label: &str| -> Result<(), String> {
        let (ess, expected) = oracle_dimension(g);
        let got_ess: BTreeSet<usize> = essential_edges(g).unwrap().iter().collect();
        check(got_ess == ess, || format!("{label}: essential {got_ess:?} vs oracle {ess:?}"))?;
        let got = dimension(g).unwrap();
        check(got == expected, || format!("{label}: dimension {got} vs oracle {expected}"))
    };
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for ms in multisets(pairs.len(), 6) {
            for coloring in 0u32..(1 << ms.len()) {
                let triples = ms.iter().enumerate().map(|(k, &p)| {
                    let color = if coloring >> k & 1 == 1 { altcone::Color::Red } else { altcone::Color::Blue };
                    (pairs[p].0, pairs[p].1, color)
                });
                let g = ColoredGraph::new(n, triples).unwrap();
                compare(&g, &format!("n={n} pairs={ms:?} coloring={coloring:b}"))?;
                exhaustive += 1;
            }
        }
    }
    let mut rng = rng(2);
    for case in 0..300 {
        let g = random_graph_in(&mut rng, 5..=7, 7..=12);
        compare(&g, &format!("random case {case}"))?;
    }
    Ok(format!("{exhaustive} exhaustive colored multigraphs + 300 random, zero mismatches"))
}

fn threshold_agreement(g: &SimpleGraph) -> Result<(), String> {
    let a = is_threshold_degrees(&g.degrees());
    let b = is_threshold_via_cone(g);
    let c = find_alternating_c4(&hat(g)).unwrap().is_none();
    check(a == b && b == c, || {
        format!("{:?}: degrees {a}, cone {b}, no-C4 {c}", g.edges().collect::<Vec<_>>())
    })
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=5 {
        for g in all_simple_graphs(n) {
            threshold_agreement(&g)?;
            count += 1;
        }
    }
    let mut rng = rng(3);
    for _ in 0..300 {
        let n = rng.random_range(6..=7);
        let p = rng.random_range(0.1..0.9);
        threshold_agreement(&random_simple_graph(&mut rng, n, p))?;
    }
    let elapsed = start.elapsed();
    check(elapsed <= THRESHOLD_BUDGET, || format!("took {elapsed:?}, budget {THRESHOLD_BUDGET:?}"))?;
    Ok(format!("{count} exhaustive + 300 random graphs agree, {elapsed:.2?}"))
}

fn criterion_4() -> Outcome {
    for (d, want) in [(vec![3, 1, 1, 1], 0), (vec![2, 2, 1, 1], 1), (vec![1, 1, 1, 1], 2)] {
        let got = cone_dim_of_degrees(&d);
        check(got == Some(want), || format!("A({d:?}) = {got:?}, expected {want}"))?;
    }
    let mut rng = rng(4);
    let mut steps = 0;
    for chain in 0..500 {
        let n = rng.random_range(3..=7);
        let mut g = if chain % 2 == 0 {
            random_threshold_graph(&mut rng, n)
        } else {
            let p = rng.random_range(0.2..0.8);
            random_simple_graph(&mut rng, n, p)
        };
        let mut a = cone_dim_of_degrees(&g.degrees()).unwrap();
        loop {
            let d = g.degrees();
            let moves: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| d[i] >= d[j] + 2)
                .collect();
            let Some(&(i, j)) = moves.choose(&mut rng) else { break };
            g = graph_unit_transformation(&g, i, j).map_err(|e| format!("chain {chain}: {e}"))?;
            let next = cone_dim_of_degrees(&g.degrees()).unwrap();
            check(next >= a, || format!("chain {chain}: A dropped from {a} to {next} at {:?}", g.degrees()))?;
            let direct = dimension(&hat(&g)).unwrap();
            check(direct == next, || format!("chain {chain}: realization gives {next}, graph gives {direct}"))?;
            a = next;
            steps += 1;
        }
    }
    Ok(format!("spot values ok, 500 chains / {steps} steps, zero violations"))
}

fn criterion_5() -> Outcome {
    let mut rng = rng(5);
    let (mut cats, mut caws) = (0, 0);
    for case in 0..1000 {
        let g = if case % 4 == 0 {
            let extra = rng.random_range(0..=2);
            random_bicycle_like(&mut rng, extra)
        } else {
            random_graph_in(&mut rng, 2..=7, 1..=12)
        };
        let e = rng.random_range(0..g.edge_count());
        let cat = cat_through_edge(&g, e).unwrap().is_some();
        let caw = caw_through_edge(&g, e).unwrap();
        let (bcat, bcaw) = (brute_cat_through(&g, e).unwrap(), brute_caw_through(&g, e).unwrap());
        check(cat == bcat, || format!("case {case}: trail verdict {cat}, oracle {bcat}"))?;
        check(caw == bcaw, || format!("case {case}: walk verdict {caw}, oracle {bcaw}"))?;
        cats += cat as usize;
        caws += caw as usize;
    }
    Ok(format!("1000 pairs, {cats} with a trail, {caws} with a walk, zero mismatches"))
}

struct BoxInstance {
    g: ColoredGraph,
    bounds: Bounds,
}

fn box_instances() -> Vec<BoxInstance> {
    let mut rng = rng(6);
    (0..500)
        .map(|_| {
            let g = if rng.random_bool(0.2) {
                // Two triangles sharing a vertex: the only bicycles that fit in six edges.
                loop {
                    let g = random_bicycle_like(&mut rng, 0);
                    if g.edge_count() <= 6 {
                        break g;
                    }
                }
            } else {
                random_graph_in(&mut rng, 2..=5, 1..=6)
            };
            let m = g.edge_count();
            let upper: Vec<i64> = (0..m).map(|_| rng.random_range(0..=3)).collect();
            let lower: Vec<i64> = upper
                .iter()
                .map(|&u| if rng.random_bool(0.5) { 0 } else { rng.random_range(0..=u) })
                .collect();
            BoxInstance {
                g,
                bounds: Bounds::new(lower, upper).unwrap(),
            }
        })
        .collect()
}

fn criterion_6(instances: &[BoxInstance]) -> Outcome {
    let mut feasible = 0;
    let mut warm = 0;
    let mut rng = rng(66);
    for (case, inst) in instances.iter().enumerate() {
        let (g, b) = (&inst.g, &inst.bounds);
        let oracle = brute_box(g, b.lower(), b.upper()).unwrap();
        let mut starts = vec![None];
        let balanced = enum_balanced(g, 3).unwrap();
        starts.push(balanced.choose(&mut rng).cloned());
        for start in starts.iter() {
            let report = find_feasible(g, b, start.as_ref()).unwrap();
            let initial = total_infeasibility(&start.as_ref().map_or(vec![0; g.edge_count()], ints), b);
            check(report.initial_infeasibility == initial, || format!("case {case}: wrong initial infeasibility"))?;
            check(report.augmentations as i64 <= initial, || {
                format!("case {case}: {} augmentations, initial infeasibility {initial}", report.augmentations)
            })?;
            match &report.outcome {
                FeasibilityOutcome::Feasible { witness } => {
                    check(oracle.is_some(), || format!("case {case}: solver feasible, oracle infeasible"))?;
                    check(is_balanced(g, witness) && b.contains(&ints(witness)), || {
                        format!("case {case}: witness {witness} fails verification")
                    })?;
                }
                FeasibilityOutcome::Infeasible { .. } => {
                    check(oracle.is_none(), || format!("case {case}: solver infeasible, oracle found {oracle:?}"))?;
                }
            }
            if start.is_some() {
                warm += 1;
            }
        }
        feasible += oracle.is_some() as usize;
    }
    Ok(format!(
        "500 instances ({feasible} feasible) plus {warm} warm starts agree with brute force, augmentation bound holds"
    ))
}

fn criterion_7(instances: &[BoxInstance]) -> Outcome {
    let mut rational_only = 0;
    for (case, inst) in instances.iter().enumerate() {
        let (g, b) = (&inst.g, &inst.bounds);
        let doubled = b.doubled();
        let oracle = brute_box(g, doubled.lower(), doubled.upper()).unwrap().is_some();
        let got = rational_feasible(g, b).unwrap();
        check(got.is_some() == oracle, || format!("case {case}: doubling solver {}, oracle {oracle}", got.is_some()))?;
        if let Some(y) = &got {
            check(y.is_half_integral() && is_balanced(g, y), || format!("case {case}: bad witness {y}"))?;
            if brute_box(g, b.lower(), b.upper()).unwrap().is_none() {
                rational_only += 1;
            }
        }
    }
    let g = bicycle_graph();
    let b = Bounds::new(vec![0, 0, 0, 0, 0, 0, 1], vec![1; 7]).unwrap();
    let y = rational_feasible(&g, &b).unwrap().ok_or("bicycle instance: no rational point")?;
    let half = Rational::new(1.into(), 2.into());
    let expected = EdgeVector::from_integers([1, 1, 1, 1, 1, 1, 2]).scaled(&half);
    check(y == expected, || format!("bicycle instance: witness {y}, expected {expected}"))?;
    let integral = find_feasible(&g, &b, None).unwrap().outcome;
    check(matches!(integral, FeasibilityOutcome::Infeasible { .. }), || {
        format!("bicycle instance: integral solver returned {integral:?}")
    })?;
    Ok(format!(
        "500 instances agree ({rational_only} rational-only), bicycle instance rational-feasible and integral-infeasible"
    ))
}

fn criterion_8() -> Outcome {
    let mut rng = rng(8);
    let mut binary_cases = 0;
    for case in 0..500 {
        let (g, rays) = graph_with_rays(&mut rng, 2..=6, 2..=10);
        let mut x = vec![0i64; g.edge_count()];
        while x.iter().all(|&v| v == 0) {
            for r in &rays {
                let c = rng.random_range(0..=3);
                for (xe, re) in x.iter_mut().zip(&r.vector) {
                    *xe += c * re;
                }
            }
        }
        let xv = EdgeVector::from_integers(x.iter().copied());
        let parts = decompose_integral(&g, &xv).map_err(|e| format!("case {case}: {e}"))?;
        let mut sum = vec![0i64; g.edge_count()];
        for w in &parts {
            check(classify_walk(&g, w).unwrap().is_caw, || format!("case {case}: part {w} is not a CAW"))?;
            let chi = ints(&char_vector(&g, w));
            check(chi.iter().all(|&c| c <= 2), || format!("case {case}: part {chi:?} exceeds 2"))?;
            for (s, c) in sum.iter_mut().zip(&chi) {
                *s += c;
            }
        }
        check(sum == x, || format!("case {case}: parts sum to {sum:?}, input {x:?}"))?;

        let binary: Vec<EdgeVector> = enum_balanced(&g, 1).unwrap().into_iter().filter(|v| !v.is_zero()).collect();
        if let Some(y) = binary.choose(&mut rng) {
            let parts = decompose_binary(&g, y).map_err(|e| format!("case {case}: {e}"))?;
            let mut used = BTreeSet::new();
            for t in &parts {
                check(classify_walk(&g, t).unwrap().is_cat, || format!("case {case}: part {t} is not a CAT"))?;
                for e in t.edges() {
                    check(used.insert(e), || format!("case {case}: edge {e} in two trails"))?;
                }
            }
            let support: BTreeSet<usize> = y.support().into_iter().collect();
            check(used == support, || format!("case {case}: trails cover {used:?}, support {support:?}"))?;
            binary_cases += 1;
        }
    }
    Ok(format!("500 integral vectors and {binary_cases} binary vectors decomposed correctly"))
}

fn criterion_9() -> Outcome {
    let petersen = petersen_edges();
    let size = max_matching(&AuxGraph::from_edges(10, &petersen).unwrap()).size();
    check(size == 5, || format!("Petersen matching {size}, expected 5"))?;
    let mut rng = rng(9);
    for case in 0..500 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.05..0.7);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let h = AuxGraph::from_edges(n, &edges).unwrap();
        let m = max_matching(&h);
        let mut covered = BTreeSet::new();
        for &e in m.edges() {
            let (a, b) = h.edges()[e];
            check(covered.insert(a) && covered.insert(b), || format!("case {case}: not a matching"))?;
        }
        let oracle = brute_matching(n, &edges).unwrap();
        check(m.size() == oracle, || format!("case {case}: size {} vs oracle {oracle}", m.size()))?;
    }
    Ok("Petersen = 5, 500 random graphs match brute force".into())
}

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn main() {
    let instances = box_instances();
    let criteria: Vec<Criterion> = vec![
        ("extreme-ray decomposition soundness", Box::new(criterion_1)),
        ("dimension formula vs rank oracle", Box::new(criterion_2)),
        ("threshold triple agreement", Box::new(criterion_3)),
        ("majorization monotonicity", Box::new(criterion_4)),
        ("reachability vs oracle", Box::new(criterion_5)),
        ("box feasibility vs oracle", Box::new(|| criterion_6(&instances))),
        ("half-integrality by doubling", Box::new(|| criterion_7(&instances))),
        ("normal form decompositions", Box::new(criterion_8)),
        ("matching engine", Box::new(criterion_9)),
    ];
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail} [{elapsed:.2?}]", k + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL criterion {}: {name}: {detail} [{elapsed:.2?}]", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failures} failed", criteria.len() - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
