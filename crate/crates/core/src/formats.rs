//! Line-oriented text formats for shapes, topologies, preorders, graphs,
//! derivation traces, relation matrices, and point maps.
//!
//! All formats share one lexical layer: `#` starts a comment running to
//! the end of the line, blank lines are skipped, and tokens are separated
//! by whitespace. The literal `0` stands for the empty part in topology
//! files, which is why `0` is never a legal point label. Serialization is
//! canonical — parts in canonical order, relation pairs sorted by label —
//! so equal values always serialize to identical bytes.

use std::error::Error;
use std::fmt;

use crate::build::{DerivationStep, DerivationTrace, RelationMatrix};
use crate::continuity::PointMap;
use crate::part::Part;
use crate::preorder::Preorder;
use crate::shape::Shape;
use crate::topology::Topology;

/// A parse failure, carrying the 1-based source line when one line is at
/// fault and `None` for whole-input problems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line: Some(line),
            message: message.into(),
        }
    }

    fn whole_input(message: impl Into<String>) -> Self {
        ParseError {
            line: None,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl Error for ParseError {}

/// Content lines with their 1-based numbers: comments stripped, blank
/// lines dropped, tokens split on whitespace.
fn content_lines(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let code = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = code.split_whitespace().collect();
            (!tokens.is_empty()).then_some((i + 1, tokens))
        })
        .collect()
}

fn shape_from_header(line: usize, keyword: &str, labels: &[&str]) -> Result<Shape, ParseError> {
    Shape::new(labels.iter().copied())
        .map_err(|e| ParseError::at(line, format!("bad `{keyword}` header: {e}")))
}

/// A part as it appears on its own line: `0` for the empty part,
/// otherwise the member labels in index order.
fn part_line(shape: &Shape, part: Part) -> String {
    if part.is_empty() {
        "0".to_owned()
    } else {
        shape.part_labels(part).join(" ")
    }
}

pub fn parse_shape(text: &str) -> Result<Shape, ParseError> {
    let lines = content_lines(text);
    match lines.as_slice() {
        [] => Err(ParseError::whole_input("expected a `points:` line")),
        [(n, tokens)] if tokens[0] == "points:" => shape_from_header(*n, "points:", &tokens[1..]),
        [(n, _)] => Err(ParseError::at(*n, "expected a `points:` line")),
        [_, (n, _), ..] => Err(ParseError::at(*n, "shape files hold a single line")),
    }
}

pub fn serialize_shape(shape: &Shape) -> String {
    format!("points: {}\n", shape.labels().join(" "))
}

/// Parses a topology file down to its raw part family, without checking
/// the topology axioms. [`parse_topology`] layers the axiom check on top;
/// the split lets a validator report axiom failures as findings rather
/// than parse errors.
pub fn parse_part_family(text: &str) -> Result<(Shape, Vec<Part>), ParseError> {
    let lines = content_lines(text);
    let Some(((n, header), rest)) = lines.split_first() else {
        return Err(ParseError::whole_input(
            "expected a `topology over:` header",
        ));
    };
    if header.len() < 2 || header[0] != "topology" || header[1] != "over:" {
        return Err(ParseError::at(*n, "expected a `topology over:` header"));
    }
    let shape = shape_from_header(*n, "topology over:", &header[2..])?;
    let mut parts = Vec::with_capacity(rest.len());
    for (n, tokens) in rest {
        let part = if tokens.as_slice() == ["0"] {
            Part::EMPTY
        } else {
            shape
                .part_from_labels(tokens.iter().copied())
                .map_err(|e| ParseError::at(*n, e.to_string()))?
        };
        parts.push(part);
    }
    Ok((shape, parts))
}

pub fn parse_topology(text: &str) -> Result<Topology, ParseError> {
    let (shape, parts) = parse_part_family(text)?;
    Topology::from_parts(&shape, parts).map_err(|e| ParseError::whole_input(e.to_string()))
}

pub fn serialize_topology(topology: &Topology) -> String {
    let shape = topology.shape();
    let mut out = format!("topology over: {}\n", shape.labels().join(" "));
    for &open in topology.opens() {
        out.push_str(&part_line(shape, open));
        out.push('\n');
    }
    out
}

/// Parses a preorder file. The `points:` header fixes the point set and
/// label order; the pair lines need not be closed unless `strict`, in
/// which case the file must list the complete reflexive-transitive
/// relation.
pub fn parse_preorder(text: &str, strict: bool) -> Result<Preorder, ParseError> {
    let lines = content_lines(text);
    let Some(((n, header), rest)) = lines.split_first() else {
        return Err(ParseError::whole_input("expected a `points:` header"));
    };
    if header[0] != "points:" {
        return Err(ParseError::at(*n, "expected a `points:` header"));
    }
    let shape = shape_from_header(*n, "points:", &header[1..])?;
    let mut pairs = Vec::with_capacity(rest.len());
    for (n, tokens) in rest {
        let [q, "<=", p] = tokens.as_slice() else {
            return Err(ParseError::at(*n, "expected `<q> <= <p>`"));
        };
        for label in [q, p] {
            shape
                .resolve(label)
                .map_err(|e| ParseError::at(*n, e.to_string()))?;
        }
        pairs.push((*q, *p));
    }
    let result = if strict {
        Preorder::strict_from_pairs(&shape, &pairs)
    } else {
        Preorder::closure_from_pairs(&shape, &pairs)
    };
    result.map_err(|e| ParseError::whole_input(e.to_string()))
}

/// Emits the complete closed relation, one `q <= p` line per related
/// pair, sorted by the two labels. Output parses back identically in
/// both strict and closing modes.
pub fn serialize_preorder(order: &Preorder) -> String {
    let shape = order.shape();
    let mut pairs: Vec<(&str, &str)> = order
        .related_pairs()
        .into_iter()
        .map(|(q, p)| (shape.label(q), shape.label(p)))
        .collect();
    pairs.sort_unstable();
    let mut out = format!("points: {}\n", shape.labels().join(" "));
    for (q, p) in pairs {
        out.push_str(q);
        out.push_str(" <= ");
        out.push_str(p);
        out.push('\n');
    }
    out
}

/// Parses a graph file into its shape and raw edge list. Edges keep file
/// direction: `p -> q` yields `(p, q)`.
pub fn parse_graph(text: &str) -> Result<(Shape, Vec<(String, String)>), ParseError> {
    let lines = content_lines(text);
    let Some(((n, header), rest)) = lines.split_first() else {
        return Err(ParseError::whole_input("expected a `points:` header"));
    };
    if header[0] != "points:" {
        return Err(ParseError::at(*n, "expected a `points:` header"));
    }
    let shape = shape_from_header(*n, "points:", &header[1..])?;
    let mut edges = Vec::with_capacity(rest.len());
    for (n, tokens) in rest {
        let [p, "->", q] = tokens.as_slice() else {
            return Err(ParseError::at(*n, "expected `<p> -> <q>`"));
        };
        for label in [p, q] {
            shape
                .resolve(label)
                .map_err(|e| ParseError::at(*n, e.to_string()))?;
        }
        edges.push(((*p).to_owned(), (*q).to_owned()));
    }
    Ok((shape, edges))
}

pub fn parse_derivation(text: &str) -> Result<(Shape, DerivationTrace), ParseError> {
    let lines = content_lines(text);
    let Some(((n, header), rest)) = lines.split_first() else {
        return Err(ParseError::whole_input("expected a `points:` header"));
    };
    if header[0] != "points:" {
        return Err(ParseError::at(*n, "expected a `points:` header"));
    }
    let shape = shape_from_header(*n, "points:", &header[1..])?;
    let mut steps = Vec::with_capacity(rest.len());
    for (n, tokens) in rest {
        let bad = || ParseError::at(*n, "expected `step <n>: <rule> <parent> -> <child> ...`");
        let ["step", index, rule, parent, "->", children @ ..] = tokens.as_slice() else {
            return Err(bad());
        };
        let index: usize = index
            .strip_suffix(':')
            .and_then(|digits| digits.parse().ok())
            .ok_or_else(bad)?;
        if children.is_empty() {
            return Err(bad());
        }
        for label in std::iter::once(parent).chain(children) {
            shape
                .resolve(label)
                .map_err(|e| ParseError::at(*n, e.to_string()))?;
        }
        steps.push(DerivationStep {
            index,
            rule: (*rule).to_owned(),
            parent: (*parent).to_owned(),
            children: children.iter().map(|&c| c.to_owned()).collect(),
        });
    }
    let trace = DerivationTrace::new(steps).map_err(|e| ParseError::whole_input(e.to_string()))?;
    Ok((shape, trace))
}

pub fn serialize_derivation(shape: &Shape, trace: &DerivationTrace) -> String {
    let mut out = format!("points: {}\n", shape.labels().join(" "));
    for step in trace.steps() {
        out.push_str(&format!(
            "step {}: {} {} -> {}\n",
            step.index,
            step.rule,
            step.parent,
            step.children.join(" ")
        ));
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<RelationMatrix, ParseError> {
    let lines = content_lines(text);
    let Some(((n, header), rest)) = lines.split_first() else {
        return Err(ParseError::whole_input("expected a `basis:` header"));
    };
    if header[0] != "basis:" {
        return Err(ParseError::at(*n, "expected a `basis:` header"));
    }
    let labels: Vec<&str> = header[1..].to_vec();
    let k = labels.len();
    if rest.len() != k {
        return Err(ParseError::whole_input(format!(
            "expected {k} matrix rows after the basis line, got {}",
            rest.len()
        )));
    }
    let mut entries = Vec::with_capacity(k);
    for (n, tokens) in rest {
        if tokens.len() != k {
            return Err(ParseError::at(
                *n,
                format!("expected {k} entries, got {}", tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(k);
        for token in tokens {
            match *token {
                "0" => row.push(0u8),
                "1" => row.push(1u8),
                other => {
                    return Err(ParseError::at(
                        *n,
                        format!("matrix entries must be 0 or 1, got `{other}`"),
                    ))
                }
            }
        }
        entries.push(row);
    }
    RelationMatrix::new(labels, entries).map_err(|e| ParseError::whole_input(e.to_string()))
}

pub fn serialize_matrix(matrix: &RelationMatrix) -> String {
    let mut out = format!("basis: {}\n", matrix.labels().join(" "));
    for row in matrix.entries() {
        let rendered: Vec<String> = row.iter().map(u8::to_string).collect();
        out.push_str(&rendered.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a point-map file against known source and target shapes. The
/// file must assign every source point exactly once.
pub fn parse_point_map(text: &str, source: &Shape, target: &Shape) -> Result<PointMap, ParseError> {
    let lines = content_lines(text);
    let mut pairs = Vec::with_capacity(lines.len());
    for (n, tokens) in &lines {
        let [from, "=>", to] = tokens.as_slice() else {
            return Err(ParseError::at(*n, "expected `<source> => <target>`"));
        };
        source
            .resolve(from)
            .map_err(|e| ParseError::at(*n, e.to_string()))?;
        target
            .resolve(to)
            .map_err(|e| ParseError::at(*n, e.to_string()))?;
        pairs.push((*from, *to));
    }
    PointMap::from_label_pairs(source, target, &pairs)
        .map_err(|e| ParseError::whole_input(e.to_string()))
}
