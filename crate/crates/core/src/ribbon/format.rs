//! Rotation-system text format.
//!
//! ```text
//! # comment
//! v1: 1 8 12
//! v2: 9 -4 2 3 8 / v3: 11 10 5 6 9
//! ```
//!
//! One record per vertex, separated by newlines or `/`. Each entry is a
//! nonzero signed label; a missing sign means `+`. Labels must cover `1..=m`
//! with every label appearing exactly twice.

use std::fmt;

use super::{Label, Occurrence, RibbonGraph, MAX_LABEL};
use crate::error::{Error, ParseError, ParseErrorKind, Result};

pub(super) fn parse(text: &str) -> Result<RibbonGraph> {
    let mut rotations = Vec::new();
    let mut lines_of_vertex = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        for record in content.split('/') {
            let record = record.trim();
            if record.is_empty() {
                continue;
            }
            let (name, body) = record
                .split_once(':')
                .ok_or_else(|| syntax(line, format!("expected `v<k>: ...`, found `{record}`")))?;
            let name = name.trim();
            let valid_name = name
                .strip_prefix('v')
                .is_some_and(|k| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()));
            if !valid_name {
                return Err(syntax(line, format!("bad vertex name `{name}`")));
            }
            let rotation = parse_occurrences(body, line)?;
            rotations.push(rotation);
            lines_of_vertex.push(line);
        }
    }
    if rotations.is_empty() {
        return Err(ParseError {
            line: text.lines().count().max(1),
            kind: ParseErrorKind::Empty,
        }
        .into());
    }
    if rotations.len() > 1 {
        if let Some(v) = rotations.iter().position(Vec::is_empty) {
            return Err(ParseError {
                line: lines_of_vertex[v],
                kind: ParseErrorKind::EmptyRotation,
            }
            .into());
        }
    }
    let located: Vec<(usize, &[Occurrence])> = lines_of_vertex
        .iter()
        .copied()
        .zip(rotations.iter().map(Vec::as_slice))
        .collect();
    check_labels(&located)?;
    RibbonGraph::new(rotations)
}

/// Parses whitespace-separated signed labels.
pub(crate) fn parse_occurrences(body: &str, line: usize) -> Result<Vec<Occurrence>> {
    body.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|token| {
            let value: i64 = token
                .parse()
                .map_err(|_| syntax(line, format!("`{token}` is not a signed integer")))?;
            if value == 0 {
                return Err(syntax(line, "label 0 is not allowed".into()));
            }
            if value.unsigned_abs() > MAX_LABEL as u64 {
                return Err(ParseError {
                    line,
                    kind: ParseErrorKind::LabelOutOfRange {
                        label: value.unsigned_abs().min(u32::MAX as u64) as Label,
                        max: MAX_LABEL as usize,
                    },
                }
                .into());
            }
            Ok(Occurrence::from_signed(value))
        })
        .collect()
}

/// Every label in `1..=m` exactly twice, where `m` is the number of distinct
/// labels. Errors point at the line where the problem becomes visible.
pub(crate) fn check_labels(records: &[(usize, &[Occurrence])]) -> Result<()> {
    let mut seen: Vec<(usize, usize)> = vec![(0, 0); MAX_LABEL as usize + 1];
    for &(line, occs) in records {
        for o in occs {
            let entry = &mut seen[o.label as usize];
            entry.0 += 1;
            if entry.0 == 1 || entry.0 == 3 {
                entry.1 = line;
            }
        }
    }
    let distinct = seen.iter().filter(|(c, _)| *c > 0).count();
    for (label, &(count, line)) in seen.iter().enumerate() {
        if count == 0 {
            continue;
        }
        if count != 2 {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::LabelCount {
                    label: label as Label,
                    count,
                },
            }
            .into());
        }
        if label > distinct {
            return Err(ParseError {
                line,
                kind: ParseErrorKind::LabelOutOfRange {
                    label: label as Label,
                    max: distinct,
                },
            }
            .into());
        }
    }
    Ok(())
}

pub(crate) fn syntax(line: usize, message: String) -> Error {
    ParseError {
        line,
        kind: ParseErrorKind::Syntax(message),
    }
    .into()
}

impl fmt::Display for RibbonGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, rotation) in self.rotations.iter().enumerate() {
            if v > 0 {
                writeln!(f)?;
            }
            write!(f, "v{}:", v + 1)?;
            for occ in rotation {
                write!(f, " {occ}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for RibbonGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ribbon::Sign;

    const SIX_VERTEX_GRAPH: &str =
        "v1: 1 8 12 / v2: 9 4 2 3 8 / v3: 11 10 5 6 9 / v4: 7 4 11 / v5: 5 2 1 6 12 / v6: 3 7 10";

    fn line_of(err: Error) -> (usize, ParseErrorKind) {
        match err {
            Error::Parse(p) => (p.line, p.kind),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn parses_six_vertex_example() {
        let g = parse(SIX_VERTEX_GRAPH).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert_eq!(g.rotation(0), &[1, 8, 12].map(Occurrence::plus));
        assert_eq!(g.connected_components(), 1);
    }

    #[test]
    fn parses_single_loops() {
        let g = parse("v1: 1 1").unwrap();
        assert!(g.is_bouquet() && !g.is_twisted(1));
        let g = parse("v1: 1 -1").unwrap();
        assert_eq!(g.rotation(0)[1].sign, Sign::Minus);
        assert!(g.is_twisted(1));
    }

    #[test]
    fn round_trips() {
        for text in [SIX_VERTEX_GRAPH, "v1: 1 1", "v1: 1 -1", "v1:"] {
            let g = parse(text).unwrap();
            let again = parse(&g.serialize()).unwrap();
            assert_eq!(g, again);
            assert_eq!(again.serialize(), g.serialize());
        }
    }

    #[test]
    fn comments_and_newlines() {
        let g = parse("# two vertices\nv1: 1 2   # first\n\nv2: 2 -1\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.is_twisted(1));
    }

    #[test]
    fn reports_label_count_with_line() {
        let (line, kind) = line_of(parse("v1: 1 2\nv2: 2 1 1").unwrap_err());
        assert_eq!(line, 2);
        assert_eq!(kind, ParseErrorKind::LabelCount { label: 1, count: 3 });

        let (line, kind) = line_of(parse("v1: 1 1\nv2: 2").unwrap_err());
        assert_eq!(line, 2);
        assert_eq!(kind, ParseErrorKind::LabelCount { label: 2, count: 1 });
    }

    #[test]
    fn reports_out_of_range_label() {
        let (line, kind) = line_of(parse("v1: 1 1\nv2: 3 3").unwrap_err());
        assert_eq!(line, 2);
        assert_eq!(kind, ParseErrorKind::LabelOutOfRange { label: 3, max: 2 });
    }

    #[test]
    fn reports_syntax_errors() {
        assert_eq!(line_of(parse("v1: 1 x 1").unwrap_err()).0, 1);
        assert_eq!(line_of(parse("v1: 1 1\nw2 2 2").unwrap_err()).0, 2);
        assert_eq!(line_of(parse("v1: 1 1\nv2: 0 0").unwrap_err()).0, 2);
        assert!(matches!(
            line_of(parse("# nothing\n").unwrap_err()).1,
            ParseErrorKind::Empty
        ));
        assert!(matches!(
            line_of(parse("v1: 1 1\nv2:").unwrap_err()).1,
            ParseErrorKind::EmptyRotation
        ));
    }
}
