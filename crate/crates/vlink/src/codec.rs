//! The `.vlk` text format for diagrams.
//!
//! Line grammar:
//!   `X a b c d`  real crossing, edge labels on slots 0..3 counterclockwise,
//!                under-strand on slots 0,2
//!   `V a b c d`  virtual crossing, strands 0-2 and 1-3
//!   `O k`        k crossing-free loop components
//!   `#`          comment to end of line; blank lines ignored
//!
//! Every edge label must appear exactly twice; the two occurrences are the
//! matched ports of one arc.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::{CrossingKind, Diagram, DiagramError, Port};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("syntax error at line {line}, column {col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("edge label {label} appears {count} times (expected exactly 2)")]
    LabelArity { label: u64, count: usize },
    #[error("invalid diagram: {0}")]
    Diagram(#[from] DiagramError),
}

fn syntax(line: usize, col: usize, message: impl Into<String>) -> CodecError {
    CodecError::Syntax { line, col, message: message.into() }
}

/// Parses `.vlk` text into a validated diagram.
pub fn parse(text: &str) -> Result<Diagram, CodecError> {
    let mut kinds = Vec::new();
    let mut occurrences: BTreeMap<u64, Vec<Port>> = BTreeMap::new();
    let mut free_loops: Option<(u32, usize)> = None;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut fields = content.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let col = raw.find(tag).map(|i| i + 1).unwrap_or(1);
        match tag {
            "X" | "V" => {
                let labels: Vec<&str> = fields.collect();
                if labels.len() != 4 {
                    return Err(syntax(
                        line,
                        col,
                        format!("crossing line expects 4 edge labels, found {}", labels.len()),
                    ));
                }
                let crossing = kinds.len();
                for (slot, lab) in labels.iter().enumerate() {
                    let label: u64 = lab.parse().map_err(|_| {
                        let col = raw.find(lab).map(|i| i + 1).unwrap_or(1);
                        syntax(line, col, format!("edge label `{lab}` is not a nonnegative integer"))
                    })?;
                    occurrences
                        .entry(label)
                        .or_default()
                        .push(Port::new(crossing, slot as u8));
                }
                kinds.push(if tag == "X" { CrossingKind::Real } else { CrossingKind::Virtual });
            }
            "O" => {
                if free_loops.is_some() {
                    return Err(syntax(line, col, "duplicate `O` line"));
                }
                let rest: Vec<&str> = fields.collect();
                if rest.len() != 1 {
                    return Err(syntax(line, col, "`O` line expects a single count"));
                }
                let k: u32 = rest[0].parse().map_err(|_| {
                    syntax(line, col, format!("loop count `{}` is not a nonnegative integer", rest[0]))
                })?;
                free_loops = Some((k, line));
            }
            other => {
                return Err(syntax(line, col, format!("unknown line tag `{other}`")));
            }
        }
    }

    let mut arcs = Vec::with_capacity(occurrences.len());
    for (label, ports) in occurrences {
        if ports.len() != 2 {
            return Err(CodecError::LabelArity { label, count: ports.len() });
        }
        arcs.push((ports[0], ports[1]));
    }
    Ok(Diagram::new(kinds, &arcs, free_loops.map(|(k, _)| k).unwrap_or(0))?)
}

/// Serializes a diagram; `parse(serialize(d))` is structurally identical to
/// `d`. Edge labels are assigned in order of first use.
pub fn serialize(d: &Diagram) -> String {
    let mut label_of: BTreeMap<(Port, Port), u64> = BTreeMap::new();
    let mut next = 0u64;
    let mut out = String::new();
    for crossing in 0..d.crossing_count() {
        let tag = match d.kind(crossing).expect("crossing in range") {
            CrossingKind::Real => "X",
            CrossingKind::Virtual => "V",
        };
        out.push_str(tag);
        for slot in 0..4u8 {
            let here = Port::new(crossing, slot);
            let there = d.matched(here);
            let key = (here.min(there), here.max(there));
            let label = *label_of.entry(key).or_insert_with(|| {
                let l = next;
                next += 1;
                l
            });
            let _ = write!(out, " {label}");
        }
        out.push('\n');
    }
    if d.free_loops() > 0 {
        let _ = writeln!(out, "O {}", d.free_loops());
    }
    out
}
