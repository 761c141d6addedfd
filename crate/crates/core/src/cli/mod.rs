//! The command-line surface: argument parsing, dispatch and JSON reports.
//!
//! Every witness (vector, walk, transformation list) is checked again with
//! the library predicates before it is printed. Walks are printed as
//! alternating vertex and edge ids `[v0, e1, v1, ...]`; rationals as strings.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::boxfeas::{find_feasible, rational_feasible, FeasibilityOutcome};
use crate::cone::{decompose_binary, decompose_extreme, decompose_integral, dimension_report, essential_edges, RayKind};
use crate::error::{Error, Result};
use crate::graph::{char_vector, classify_walk, is_balanced, ColoredGraph, EdgeVector, Rational, Walk};
use crate::reachability::{alternating_st_trail, cat_through_edge};
use crate::threshold::{
    cone_dim_of_degrees, find_alternating_c4, hat, is_threshold_degrees, is_threshold_via_cone, majorizes,
    muirhead_sequence, threshold_weights, unit_transformation, Majorization,
};

mod document;

pub use document::{
    parse_graph, parse_rational, parse_simple_graph, print_graph, EdgeRecord, GraphDocument, ParsedGraph,
    RationalText,
};

/// Exit status for a completed computation, whatever its verdict.
pub const EXIT_OK: i32 = 0;
/// Exit status for usage, input and parse errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "altcone", version, about = "Alternating cones of 2-colored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    /// Extreme rays: even alternating cycles and bicycles.
    Rays,
    /// Closed alternating walks (integral input).
    Caw,
    /// Edge-disjoint closed alternating trails ({0,1} input).
    Cat,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension of the alternating cone.
    Dim { file: String },
    /// Edges lying on some closed alternating walk.
    Essential { file: String },
    /// Threshold tests on a simple graph (edge colors ignored).
    Threshold { file: String },
    /// Decompose the document's weights.
    Decompose {
        #[arg(long, value_enum)]
        mode: Mode,
        file: String,
    },
    /// Find a balanced vector within the document's lower/upper bounds.
    Feasible {
        file: String,
        /// Allow half-integral (hence any rational) solutions.
        #[arg(long)]
        rational: bool,
    },
    /// Alternating trail between two vertices.
    Reach { file: String, s: usize, t: usize },
    /// Closed alternating trail through an edge.
    CatThrough { file: String, edge: usize },
    /// Compare two sequences under majorization.
    Majorize { a: String, b: String },
    /// Unit transformations taking the first sequence to the second.
    Muirhead { a: String, b: String },
    /// Cone dimension of the hat graph of a degree sequence.
    Degdim { d: String },
}

/// Runs one command line (including the program name) and returns the exit
/// status together with the text to print.
pub fn run_command<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    match dispatch(cli.command) {
        Ok(report) => (
            EXIT_OK,
            serde_json::to_string_pretty(&report).expect("reports always serialize") + "\n",
        ),
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn read(file: &str) -> Result<String> {
    std::fs::read_to_string(file).map_err(|e| Error::Parse {
        location: file.to_string(),
        message: e.to_string(),
    })
}

fn load(file: &str) -> Result<ParsedGraph> {
    parse_graph(&read(file)?)
}

fn parse_sequence(arg: &str) -> Result<Vec<i64>> {
    arg.split(',')
        .map(|s| {
            s.trim().parse::<i64>().map_err(|_| Error::Parse {
                location: arg.to_string(),
                message: format!("{s:?} is not an integer"),
            })
        })
        .collect()
}

fn parse_degrees(arg: &str) -> Result<Vec<usize>> {
    parse_sequence(arg)?
        .into_iter()
        .map(|x| {
            usize::try_from(x).map_err(|_| Error::Parse {
                location: arg.to_string(),
                message: "degrees must be nonnegative".into(),
            })
        })
        .collect()
}

fn rational_json(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn vector_json(x: &EdgeVector) -> Value {
    Value::Array(x.values().iter().map(rational_json).collect())
}

/// `[v0, e1, v1, e2, ...]`.
pub fn walk_json(w: &Walk) -> Value {
    let mut out = vec![json!(w.start())];
    for s in w.steps() {
        out.push(json!(s.edge));
        out.push(json!(s.to));
    }
    Value::Array(out)
}

fn verified(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Precondition(format!("internal check failed: {what}")))
    }
}

fn dispatch(command: Command) -> Result<Value> {
    match command {
        Command::Dim { file } => {
            let g = load(&file)?.graph;
            let r = dimension_report(&g)?;
            Ok(json!({
                "dimension": r.dimension,
                "essential_edges": r.essential.iter().collect::<Vec<_>>(),
                "vertices": r.vertex_count,
                "bipartite_components": r.bipartite_components,
            }))
        }
        Command::Essential { file } => {
            let g = load(&file)?.graph;
            let ess = essential_edges(&g)?;
            Ok(json!({ "essential_edges": ess.iter().collect::<Vec<_>>() }))
        }
        Command::Threshold { file } => {
            let g = parse_simple_graph(&read(&file)?)?;
            let degrees = g.degrees();
            let by_degrees = is_threshold_degrees(&degrees);
            let by_cone = is_threshold_via_cone(&g);
            let c4 = find_alternating_c4(&hat(&g))?;
            if let Some(c) = &c4 {
                let [i, j, k, l] = c.vertices;
                verified(
                    g.has_edge(i, j) && g.has_edge(k, l) && !g.has_edge(j, k) && !g.has_edge(l, i),
                    "alternating 4-cycle",
                )?;
            }
            let weights = threshold_weights(&g);
            Ok(json!({
                "degrees": degrees,
                "degree_test": by_degrees,
                "cone_test": by_cone,
                "alternating_c4": c4.map(|c| c.vertices.to_vec()),
                "agree": by_degrees == by_cone && by_cone == c4.is_none(),
                "weights": weights.map(|w| w.iter().map(rational_json).collect::<Vec<_>>()),
            }))
        }
        Command::Decompose { mode, file } => {
            let parsed = load(&file)?;
            let (g, x) = (&parsed.graph, parsed.weights()?);
            decompose(g, x, mode)
        }
        Command::Feasible { file, rational } => {
            let parsed = load(&file)?;
            let (g, bounds) = (&parsed.graph, parsed.bounds()?);
            let within = |y: &EdgeVector| {
                y.values().iter().enumerate().all(|(e, v)| {
                    *v >= Rational::from_integer(bounds.lower()[e].into())
                        && *v <= Rational::from_integer(bounds.upper()[e].into())
                })
            };
            if rational {
                return Ok(match rational_feasible(g, &bounds)? {
                    Some(y) => {
                        verified(is_balanced(g, &y) && y.is_half_integral() && within(&y), "rational witness")?;
                        json!({ "verdict": "feasible", "witness": vector_json(&y) })
                    }
                    None => json!({ "verdict": "infeasible" }),
                });
            }
            let report = find_feasible(g, &bounds, None)?;
            Ok(match report.outcome {
                FeasibilityOutcome::Feasible { witness } => {
                    verified(
                        is_balanced(g, &witness) && witness.is_integral() && within(&witness),
                        "integral witness",
                    )?;
                    json!({
                        "verdict": "feasible",
                        "witness": vector_json(&witness),
                        "augmentations": report.augmentations,
                    })
                }
                FeasibilityOutcome::Infeasible { edge, side } => json!({
                    "verdict": "infeasible",
                    "edge": edge,
                    "side": side,
                    "augmentations": report.augmentations,
                }),
            })
        }
        Command::Reach { file, s, t } => {
            let g = load(&file)?.graph;
            let trail = alternating_st_trail(&g, s, t)?;
            if let Some(w) = &trail {
                let c = classify_walk(&g, w)?;
                verified(
                    c.is_trail && c.is_internally_alternating && w.start() == s && w.end() == t,
                    "alternating trail",
                )?;
            }
            Ok(json!({ "trail": trail.as_ref().map(walk_json) }))
        }
        Command::CatThrough { file, edge } => {
            let g = load(&file)?.graph;
            let cat = cat_through_edge(&g, edge)?;
            if let Some(w) = &cat {
                verified(
                    classify_walk(&g, w)?.is_cat && w.edges().any(|e| e == edge),
                    "closed alternating trail",
                )?;
            }
            Ok(json!({ "cat": cat.as_ref().map(walk_json) }))
        }
        Command::Majorize { a, b } => {
            let verdict = majorizes(&parse_sequence(&a)?, &parse_sequence(&b)?)?;
            Ok(json!({ "result": verdict }))
        }
        Command::Muirhead { a, b } => {
            let (a, b) = (parse_sequence(&a)?, parse_sequence(&b)?);
            let steps = muirhead_sequence(&a, &b)?;
            let mut cur = a.clone();
            cur.sort_unstable_by(|x, y| y.cmp(x));
            for &(i, j) in &steps {
                cur = unit_transformation(&cur, i, j)?;
            }
            verified(majorizes(&cur, &b)? == Majorization::Permutation, "transformation sequence")?;
            Ok(json!({
                "steps": steps.iter().map(|&(i, j)| [i, j]).collect::<Vec<_>>(),
                "result": cur,
            }))
        }
        Command::Degdim { d } => {
            let d = parse_degrees(&d)?;
            let dim = cone_dim_of_degrees(&d);
            Ok(json!({ "graphical": dim.is_some(), "dimension": dim }))
        }
    }
}

fn decompose(g: &ColoredGraph, x: &EdgeVector, mode: Mode) -> Result<Value> {
    match mode {
        Mode::Rays => {
            let d = decompose_extreme(g, x)?;
            verified(&d.reconstruct(g) == x, "decomposition sums to the input")?;
            let mut terms = Vec::new();
            for t in &d.terms {
                let c = classify_walk(g, t.ray.walk())?;
                let kind = match t.ray.kind() {
                    RayKind::EvenAlternatingCycle => {
                        verified(c.is_even_alternating_cycle, "even alternating cycle")?;
                        "even-alternating-cycle"
                    }
                    RayKind::AlternatingBicycle => {
                        verified(c.is_alternating_bicycle, "alternating bicycle")?;
                        "alternating-bicycle"
                    }
                };
                terms.push(json!({
                    "coefficient": rational_json(&t.coefficient),
                    "kind": kind,
                    "walk": walk_json(t.ray.walk()),
                }));
            }
            Ok(json!({ "mode": "rays", "terms": terms }))
        }
        Mode::Caw | Mode::Cat => {
            let (parts, name) = match mode {
                Mode::Caw => (decompose_integral(g, x)?, "caw"),
                _ => (decompose_binary(g, x)?, "cat"),
            };
            let mut sum = EdgeVector::zeros(g.edge_count());
            for w in &parts {
                let c = classify_walk(g, w)?;
                verified(if name == "cat" { c.is_cat } else { c.is_caw }, "closed alternating part")?;
                sum = &sum + &char_vector(g, w);
            }
            verified(&sum == x, "parts sum to the input")?;
            Ok(json!({ "mode": name, "walks": parts.iter().map(walk_json).collect::<Vec<_>>() }))
        }
    }
}
