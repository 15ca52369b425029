//! A line-oriented text format for structures.
//!
//! ```text
//! # comment, anywhere on a line
//! poset NAME
//! elements a b c 1 0
//! cover 0 a
//! comp a b
//! end
//! ```
//!
//! A file holds any number of blocks. `elements` comes first inside a block
//! and lists every label; `cover x y` declares x < y (the pairs need not be
//! a Hasse diagram, the order is their transitive closure); `comp x y`
//! declares x' = y and must appear exactly once per element. Labels are any
//! whitespace-free tokens without `#`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::poset::{Complementation, ComplementError, Poset};

#[derive(Debug, Clone, PartialEq)]
pub struct StructureBlock {
    pub name: String,
    pub poset: Poset,
    pub comp: Complementation,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("structure {name}: {message}")]
    Build { name: String, message: String },
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

struct Draft {
    name: String,
    elements: Vec<String>,
    covers: Vec<(String, String)>,
    comps: Vec<(String, String)>,
}

fn build(draft: Draft) -> Result<StructureBlock, ParseError> {
    let labels: Vec<&str> = draft.elements.iter().map(String::as_str).collect();
    let covers: Vec<(&str, &str)> =
        draft.covers.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let comps: Vec<(&str, &str)> =
        draft.comps.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let name = draft.name;
    let poset = Poset::from_covers(&labels, &covers)
        .map_err(|e| ParseError::Build { name: name.clone(), message: e.to_string() })?;
    let comp = Complementation::from_pairs(&poset, &comps).map_err(|e| ParseError::Build {
        name: name.clone(),
        message: match e {
            ComplementError::Missing(l) => {
                format!("incomplete complement map: {l} has no complement")
            }
            other => other.to_string(),
        },
    })?;
    Ok(StructureBlock { name, poset, comp })
}

pub fn parse_str(input: &str) -> Result<Vec<StructureBlock>, ParseError> {
    let mut blocks = Vec::new();
    let mut current: Option<Draft> = None;
    let mut last_line = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let text = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let mut tokens = text.split_whitespace();
        let Some(head) = tokens.next() else { continue };
        let rest: Vec<&str> = tokens.collect();
        match head {
            "poset" => {
                if current.is_some() {
                    return Err(syntax(line, "poset begins before the previous block ends"));
                }
                if rest.len() != 1 {
                    return Err(syntax(line, "poset takes exactly one name"));
                }
                current = Some(Draft {
                    name: rest[0].to_string(),
                    elements: Vec::new(),
                    covers: Vec::new(),
                    comps: Vec::new(),
                });
            }
            "elements" => {
                let draft = current
                    .as_mut()
                    .ok_or_else(|| syntax(line, "elements outside a poset block"))?;
                if !draft.elements.is_empty() {
                    return Err(syntax(line, "duplicate elements line"));
                }
                if rest.is_empty() {
                    return Err(syntax(line, "elements needs at least one label"));
                }
                draft.elements = rest.iter().map(|s| s.to_string()).collect();
            }
            "cover" | "comp" => {
                let draft = current
                    .as_mut()
                    .ok_or_else(|| syntax(line, format!("{head} outside a poset block")))?;
                if draft.elements.is_empty() {
                    return Err(syntax(line, format!("{head} before the elements line")));
                }
                if rest.len() != 2 {
                    return Err(syntax(line, format!("{head} takes exactly two labels")));
                }
                let pair = (rest[0].to_string(), rest[1].to_string());
                if head == "cover" {
                    draft.covers.push(pair);
                } else {
                    draft.comps.push(pair);
                }
            }
            "end" => {
                let draft =
                    current.take().ok_or_else(|| syntax(line, "end outside a poset block"))?;
                if !rest.is_empty() {
                    return Err(syntax(line, "end takes no arguments"));
                }
                blocks.push(build(draft)?);
            }
            other => {
                return Err(syntax(line, format!("unknown directive {other}")));
            }
        }
    }
    if current.is_some() {
        return Err(syntax(last_line, "unterminated poset block, missing end"));
    }
    Ok(blocks)
}

/// Serializes a block in the same format, covers reduced to the Hasse
/// diagram. Parsing the output reproduces the block.
pub fn export(block: &StructureBlock) -> String {
    let p = &block.poset;
    let mut out = String::new();
    writeln!(out, "poset {}", block.name).unwrap();
    writeln!(out, "elements {}", p.labels().join(" ")).unwrap();
    for (a, b) in p.cover_pairs() {
        writeln!(out, "cover {} {}", p.label(a), p.label(b)).unwrap();
    }
    for x in p.elements() {
        writeln!(out, "comp {} {}", p.label(x), p.label(block.comp.of(x))).unwrap();
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const MO2: &str = "\
# a six-element example
poset mo2
elements 0 a b b' a' 1
cover 0 a
cover 0 b
cover 0 b'   # trailing comment
cover 0 a'
cover a 1
cover b 1
cover b' 1
cover a' 1
comp 0 1
comp a a'
comp b b'
comp b' b
comp a' a
comp 1 0
end
";

    #[test]
    fn parses_a_block() {
        let blocks = parse_str(MO2).unwrap();
        assert_eq!(blocks.len(), 1);
        let b = &blocks[0];
        assert_eq!(b.name, "mo2");
        assert_eq!(b.poset.n(), 6);
        assert_eq!(b.poset.label(b.poset.top()), "1");
        assert_eq!(b.comp.of(b.poset.index_of("a").unwrap()), b.poset.index_of("a'").unwrap());
    }

    #[test]
    fn export_round_trips() {
        let blocks = parse_str(MO2).unwrap();
        let text = export(&blocks[0]);
        let again = parse_str(&text).unwrap();
        assert_eq!(blocks, again);
        assert_eq!(text, export(&again[0]));
    }

    #[test]
    fn parses_multiple_blocks_and_blank_lines() {
        let two = format!("{MO2}\n\n# another\n{MO2}");
        let blocks = parse_str(&two).unwrap();
        assert_eq!(blocks.len(), 2);
    }

    #[test]
    fn reports_line_numbers_for_syntax_errors() {
        let err = parse_str("poset x\nelements a b\nfrobnicate a\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax { line: 3, message: "unknown directive frobnicate".into() }
        );
        let err = parse_str("cover a b\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 1, .. }));
        let err = parse_str("poset x\nelements a b\ncover a\n").unwrap_err();
        assert!(matches!(err, ParseError::Syntax { line: 3, .. }));
        let err = parse_str("poset x\nelements a b\ncover a b\n").unwrap_err();
        assert!(err.to_string().contains("unterminated"));
    }

    #[test]
    fn rejects_incomplete_complement_maps() {
        let err = parse_str(
            "poset x\nelements 0 1\ncover 0 1\ncomp 0 1\nend\n",
        )
        .unwrap_err();
        match err {
            ParseError::Build { name, message } => {
                assert_eq!(name, "x");
                assert!(message.contains("incomplete complement map"), "{message}");
            }
            other => panic!("expected build error, got {other}"),
        }
    }

    #[test]
    fn propagates_order_build_failures() {
        let err =
            parse_str("poset x\nelements a b\ncover a b\ncover b a\ncomp a b\ncomp b a\nend\n")
                .unwrap_err();
        assert!(matches!(err, ParseError::Build { .. }));
        let err = parse_str("poset x\nelements a b\ncover a q\nend\n").unwrap_err();
        assert!(err.to_string().contains('q'));
    }

    #[test]
    fn keeps_primed_labels_intact() {
        let blocks = parse_str(MO2).unwrap();
        let labels = blocks[0].poset.labels();
        assert!(labels.contains(&"b'".to_string()));
    }
}
