//! The JSON graph document read and written by the command-line tool.
//!
//! ```json
//! {"vertices": 2,
//!  "edges": [{"u": 0, "v": 1, "color": "R"}, {"u": 0, "v": 1, "color": "B"}],
//!  "weights": ["1/2", 1], "lower": [0, 0], "upper": [1, 1]}
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::boxfeas::Bounds;
use crate::error::{Error, Result};
use crate::graph::{Color, ColoredGraph, EdgeVector, Rational};
use crate::threshold::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub u: usize,
    pub v: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<Color>,
}

/// A rational written either as a JSON integer or as a string `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RationalText {
    Integer(i64),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub vertices: usize,
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<RationalText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<Vec<i64>>,
}

/// A parsed document: the graph plus whatever optional data it carried.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: ColoredGraph,
    pub weights: Option<EdgeVector>,
    pub lower: Option<Vec<i64>>,
    pub upper: Option<Vec<i64>>,
}

impl ParsedGraph {
    /// The bounds of the document; a missing `lower` defaults to zero.
    pub fn bounds(&self) -> Result<Bounds> {
        let m = self.graph.edge_count();
        let Some(upper) = &self.upper else {
            return Err(parse_error("upper", "field is required for this command"));
        };
        let lower = self.lower.clone().unwrap_or_else(|| vec![0; m]);
        Bounds::new(lower, upper.clone())
    }

    pub fn weights(&self) -> Result<&EdgeVector> {
        self.weights
            .as_ref()
            .ok_or_else(|| parse_error("weights", "field is required for this command"))
    }
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn read_document(text: &str) -> Result<GraphDocument> {
    serde_json::from_str(text).map_err(|e| {
        parse_error(
            format!("line {}, column {}", e.line(), e.column()),
            e.to_string(),
        )
    })
}

/// Parses `"p/q"`, `"p"` or an integer into an exact rational.
pub fn parse_rational(text: &RationalText) -> std::result::Result<Rational, String> {
    match text {
        RationalText::Integer(i) => Ok(Rational::from_integer(BigInt::from(*i))),
        RationalText::Text(s) => {
            let s = s.trim();
            let (num, den) = match s.split_once('/') {
                Some((n, d)) => (n.trim(), d.trim()),
                None => (s, "1"),
            };
            let num: BigInt = num.parse().map_err(|_| format!("bad numerator in {s:?}"))?;
            let den: BigInt = den.parse().map_err(|_| format!("bad denominator in {s:?}"))?;
            if den == BigInt::from(0) {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

fn check_aligned<T>(field: &str, values: &Option<Vec<T>>, m: usize) -> Result<()> {
    match values {
        Some(v) if v.len() != m => Err(parse_error(
            field,
            format!("has {} entries but the graph has {m} edges", v.len()),
        )),
        _ => Ok(()),
    }
}

fn check_edges(doc: &GraphDocument) -> Result<()> {
    for (i, e) in doc.edges.iter().enumerate() {
        for (name, w) in [("u", e.u), ("v", e.v)] {
            if w >= doc.vertices {
                return Err(parse_error(
                    format!("edges[{i}].{name}"),
                    format!("vertex {w} out of range (document has {} vertices)", doc.vertices),
                ));
            }
        }
        if e.u == e.v {
            return Err(parse_error(format!("edges[{i}]"), format!("loop at vertex {}", e.u)));
        }
    }
    Ok(())
}

/// Reads a 2-colored graph with optional weights and bounds. Edge ids follow
/// document order.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let doc = read_document(text)?;
    check_edges(&doc)?;
    let mut triples = Vec::with_capacity(doc.edges.len());
    for (i, e) in doc.edges.iter().enumerate() {
        let color = e
            .color
            .ok_or_else(|| parse_error(format!("edges[{i}].color"), "missing color"))?;
        triples.push((e.u, e.v, color));
    }
    let graph = ColoredGraph::new(doc.vertices, triples)?;
    let m = graph.edge_count();
    check_aligned("weights", &doc.weights, m)?;
    check_aligned("lower", &doc.lower, m)?;
    check_aligned("upper", &doc.upper, m)?;
    let weights = match &doc.weights {
        None => None,
        Some(ws) => {
            let mut values = Vec::with_capacity(ws.len());
            for (i, w) in ws.iter().enumerate() {
                values.push(parse_rational(w).map_err(|m| parse_error(format!("weights[{i}]"), m))?);
            }
            Some(EdgeVector::from_rationals(values))
        }
    };
    Ok(ParsedGraph {
        graph,
        weights,
        lower: doc.lower,
        upper: doc.upper,
    })
}

/// Reads a simple graph from the same document format; colors are ignored.
pub fn parse_simple_graph(text: &str) -> Result<SimpleGraph> {
    let doc = read_document(text)?;
    check_edges(&doc)?;
    SimpleGraph::new(doc.vertices, doc.edges.iter().map(|e| (e.u, e.v)))
        .map_err(|e| parse_error("edges", e.to_string()))
}

pub fn rational_text(x: &Rational) -> RationalText {
    if x.is_integer() {
        if let Ok(i) = i64::try_from(x.to_integer()) {
            return RationalText::Integer(i);
        }
    }
    RationalText::Text(x.to_string())
}

/// Writes a graph (and optional data) in the document format.
pub fn print_graph(
    g: &ColoredGraph,
    weights: Option<&EdgeVector>,
    lower: Option<&[i64]>,
    upper: Option<&[i64]>,
) -> String {
    let doc = GraphDocument {
        vertices: g.vertex_count(),
        edges: g
            .edges()
            .iter()
            .map(|e| EdgeRecord {
                u: e.u,
                v: e.v,
                color: Some(e.color),
            })
            .collect(),
        weights: weights.map(|w| w.values().iter().map(rational_text).collect()),
        lower: lower.map(<[i64]>::to_vec),
        upper: upper.map(<[i64]>::to_vec),
    };
    serde_json::to_string_pretty(&doc).expect("documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Color::{Blue, Red};

    const PAIR: &str = r#"{"vertices":2,"edges":[{"u":0,"v":1,"color":"R"},{"u":0,"v":1,"color":"B"}]}"#;

    #[test]
    fn parses_pair() {
        let p = parse_graph(PAIR).unwrap();
        assert_eq!(p.graph, ColoredGraph::new(2, [(0, 1, Red), (0, 1, Blue)]).unwrap());
        assert!(p.weights.is_none());
    }

    #[test]
    fn parses_weights() {
        let text = r#"{"vertices":2,"edges":[{"u":0,"v":1,"color":"R"},{"u":0,"v":1,"color":"B"}],"weights":["1/2","1"]}"#;
        let p = parse_graph(text).unwrap();
        let w = p.weights.unwrap();
        assert_eq!(w.values()[0], Rational::new(1.into(), 2.into()));
        assert_eq!(w.values()[1], Rational::from_integer(1.into()));
    }

    #[test]
    fn diagnostics() {
        let lp = r#"{"vertices":2,"edges":[{"u":1,"v":1,"color":"R"}]}"#;
        let err = parse_graph(lp).unwrap_err();
        assert!(matches!(&err, Error::Parse { location, .. } if location == "edges[0]"));

        let short = r#"{"vertices":2,"edges":[{"u":0,"v":1,"color":"R"}],"upper":[1,2]}"#;
        assert!(matches!(parse_graph(short), Err(Error::Parse { location, .. }) if location == "upper"));

        let bad = "{\"vertices\":2,\n\"edges\":[{\"u\":0,\"v\":1,\"color\":\"G\"}]}";
        match parse_graph(bad) {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line 2")),
            other => panic!("unexpected {other:?}"),
        }

        let weight = r#"{"vertices":2,"edges":[{"u":0,"v":1,"color":"R"}],"weights":["1/0"]}"#;
        assert!(matches!(parse_graph(weight), Err(Error::Parse { location, .. }) if location == "weights[0]"));
        let nocolor = r#"{"vertices":2,"edges":[{"u":0,"v":1}]}"#;
        assert!(parse_graph(nocolor).is_err());
        assert_eq!(parse_simple_graph(nocolor).unwrap().edge_count(), 1);
    }

    #[test]
    fn round_trip() {
        let p = parse_graph(PAIR).unwrap();
        let w = EdgeVector::from_rationals(vec![Rational::new(3.into(), 4.into()), Rational::from_integer(2.into())]);
        let text = print_graph(&p.graph, Some(&w), Some(&[0, 1]), Some(&[2, 3]));
        let back = parse_graph(&text).unwrap();
        assert_eq!(back.graph, p.graph);
        assert_eq!(back.weights, Some(w));
        assert_eq!(back.lower, Some(vec![0, 1]));
        assert_eq!(back.bounds().unwrap().upper(), &[2, 3]);
    }
}
