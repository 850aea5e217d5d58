//! The textual quiver format and object specifications.
//!
//! A quiver file is a list of arrow lines `i -> j`, optionally valued as
//! `i -> j [dij dji]`, with `#` comments and an optional header
//! `type <LABEL> rank <n>`. Vertices are one-based. Parse errors carry line
//! numbers.

use crate::cluster::ClusterObject;
use crate::quiver::{Arrow, QuiverError, ValuedQuiver};
use crate::rep::Catalog;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: vertex index must be a positive integer")]
    BadVertex { line: usize },
    #[error("header declares type {declared} but the arrows describe type {actual}")]
    TypeMismatch { declared: String, actual: String },
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// Parse quiver text. The rank is the largest vertex mentioned unless the
/// header declares one.
pub fn parse_quiver(text: &str) -> Result<ValuedQuiver, ParseError> {
    let mut declared_rank: Option<usize> = None;
    let mut declared_type: Option<String> = None;
    let mut raw_arrows: Vec<(usize, usize, i64, i64)> = Vec::new();
    let mut max_vertex = 0usize;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("type ") {
            let tokens: Vec<&str> = rest.split_whitespace().collect();
            match tokens.as_slice() {
                [label, "rank", n] => {
                    declared_type = Some((*label).to_string());
                    declared_rank = Some(n.parse().map_err(|_| ParseError::Syntax {
                        line,
                        message: "rank must be a nonnegative integer".into(),
                    })?);
                }
                _ => {
                    return Err(ParseError::Syntax {
                        line,
                        message: "expected `type <LABEL> rank <n>`".into(),
                    })
                }
            }
            continue;
        }
        let (lhs, rhs) = content.split_once("->").ok_or_else(|| ParseError::Syntax {
            line,
            message: "expected `i -> j` or `i -> j [dij dji]`".into(),
        })?;
        let from: usize = lhs.trim().parse().map_err(|_| ParseError::BadVertex { line })?;
        let rhs = rhs.trim();
        let (to_str, val) = match rhs.split_once('[') {
            None => (rhs, (1i64, 1i64)),
            Some((to_str, bracket)) => {
                let inner = bracket.strip_suffix(']').ok_or_else(|| ParseError::Syntax {
                    line,
                    message: "unclosed valuation bracket".into(),
                })?;
                let parts: Vec<&str> = inner.split_whitespace().collect();
                if parts.len() != 2 {
                    return Err(ParseError::Syntax {
                        line,
                        message: "valuation must be two integers `[dij dji]`".into(),
                    });
                }
                let a: i64 = parts[0].parse().map_err(|_| ParseError::Syntax {
                    line,
                    message: "valuation must be two integers".into(),
                })?;
                let b: i64 = parts[1].parse().map_err(|_| ParseError::Syntax {
                    line,
                    message: "valuation must be two integers".into(),
                })?;
                (to_str, (a, b))
            }
        };
        let to: usize = to_str.trim().parse().map_err(|_| ParseError::BadVertex { line })?;
        if from == 0 || to == 0 {
            return Err(ParseError::BadVertex { line });
        }
        max_vertex = max_vertex.max(from).max(to);
        raw_arrows.push((from - 1, to - 1, val.0, val.1));
    }

    let n = declared_rank.unwrap_or(max_vertex);
    let arrows = raw_arrows
        .into_iter()
        .map(|(from, to, a, b)| Arrow { from, to, val: (a, b) })
        .collect();
    let quiver = ValuedQuiver::new(n, arrows)?;
    if let Some(declared) = declared_type {
        let actual = quiver.cartan().type_label().unwrap_or("non-finite").to_string();
        if declared != actual {
            return Err(ParseError::TypeMismatch { declared, actual });
        }
    }
    Ok(quiver)
}

/// Canonical text form; parses back to an equal quiver.
pub fn print_quiver(q: &ValuedQuiver) -> String {
    let mut out = String::new();
    if let Some(label) = q.cartan().type_label() {
        out.push_str(&format!("type {} rank {}\n", label, q.rank()));
    } else {
        out.push_str(&format!("type non-finite rank {}\n", q.rank()));
    }
    for a in q.arrows() {
        if a.val == (1, 1) {
            out.push_str(&format!("{} -> {}\n", a.from + 1, a.to + 1));
        } else {
            out.push_str(&format!("{} -> {} [{} {}]\n", a.from + 1, a.to + 1, a.val.0, a.val.1));
        }
    }
    out
}

/// 64-bit FNV-1a over the canonical text; keys the catalog cache.
pub fn quiver_hash(q: &ValuedQuiver) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for byte in q.canonical_text().bytes() {
        hash ^= byte as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}

/// Parse a cluster-object specification: `P<i>`, `I<i>`, `E<i>`, `P<i>[1]`,
/// or `M(d1,...,dn)` naming a catalog key.
pub fn parse_object_spec(cat: &Catalog, spec: &str) -> Result<ClusterObject, String> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("M(") {
        let inner = rest.strip_suffix(')').ok_or("unclosed dimension vector")?;
        let coords: Result<Vec<i64>, _> =
            inner.split(',').map(|p| p.trim().parse::<i64>()).collect();
        let key = coords.map_err(|_| "dimension vector entries must be integers".to_string())?;
        if key.len() != cat.quiver.rank() {
            return Err(format!("dimension vector must have length {}", cat.quiver.rank()));
        }
        if !cat.contains(&key) {
            return Err(format!("{key:?} is not the dimension vector of an indecomposable"));
        }
        return Ok(ClusterObject::module(key));
    }
    let shifted = spec.ends_with("[1]");
    let core = if shifted { &spec[..spec.len() - 3] } else { spec };
    if core.len() < 2 {
        return Err(format!("cannot parse object `{spec}`"));
    }
    let (kind, idx_str) = core.split_at(1);
    let idx: usize = idx_str
        .parse::<usize>()
        .ok()
        .filter(|&i| i >= 1 && i <= cat.quiver.rank())
        .ok_or_else(|| format!("bad vertex index in `{spec}`"))?;
    let i = idx - 1;
    let key = match kind {
        "P" => cat.projective_key(i),
        "I" => cat.injective_key(i),
        "E" => cat.simple_key(i),
        _ => return Err(format!("unknown object kind `{kind}`")),
    };
    if shifted {
        if kind != "P" {
            return Err("only shifted projectives are fundamental-domain objects".to_string());
        }
        Ok(ClusterObject::shifted_projective(cat, i))
    } else {
        Ok(ClusterObject::module(key))
    }
}

/// Parse a comma-separated list of object specifications.
pub fn parse_object_list(cat: &Catalog, list: &str) -> Result<Vec<ClusterObject>, String> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_object_spec(cat, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::linear_quiver;
    use std::sync::Arc;

    #[test]
    fn parse_simply_laced() {
        let q = parse_quiver("1 -> 2\n2 -> 3").unwrap();
        assert_eq!(q, linear_quiver(3));
        assert_eq!(q.cartan().type_label(), Some("A3"));
    }

    #[test]
    fn parse_valued_g2() {
        let q = parse_quiver("1 -> 2 [1 3]").unwrap();
        assert_eq!(q.cartan().type_label(), Some("G2"));
        assert_eq!(q.cartan().entry(0, 1), -1);
        assert_eq!(q.cartan().entry(1, 0), -3);
    }

    #[test]
    fn parse_cycle_error() {
        let err = parse_quiver("1 -> 2\n2 -> 1").unwrap_err();
        assert!(matches!(err, ParseError::Quiver(_)));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_quiver("1 -> 2\nnot an arrow").unwrap_err();
        match err {
            ParseError::Syntax { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn header_rank_and_comments() {
        let q = parse_quiver("# a single vertex\ntype A1 rank 1\n").unwrap();
        assert_eq!(q.rank(), 1);
        let mismatch = parse_quiver("type G2 rank 2\n1 -> 2\n").unwrap_err();
        assert!(matches!(mismatch, ParseError::TypeMismatch { .. }));
    }

    #[test]
    fn round_trip() {
        for text in ["1 -> 2\n2 -> 3\n", "1 -> 2 [1 3]\n", "type A1 rank 1\n"] {
            let q = parse_quiver(text).unwrap();
            let printed = print_quiver(&q);
            let q2 = parse_quiver(&printed).unwrap();
            assert_eq!(q, q2, "round trip through {printed:?}");
        }
    }

    #[test]
    fn hash_distinguishes_orientation() {
        let a = parse_quiver("1 -> 2\n2 -> 3").unwrap();
        let b = parse_quiver("1 -> 2\n3 -> 2").unwrap();
        assert_ne!(quiver_hash(&a), quiver_hash(&b));
        assert_eq!(quiver_hash(&a), quiver_hash(&parse_quiver("1 -> 2\n2 -> 3").unwrap()));
    }

    #[test]
    fn object_specs() {
        let cat = Catalog::build(Arc::new(linear_quiver(2))).unwrap();
        assert_eq!(parse_object_spec(&cat, "P1").unwrap(), ClusterObject::module(vec![1, 1]));
        assert_eq!(parse_object_spec(&cat, "E2").unwrap(), ClusterObject::module(vec![0, 1]));
        assert_eq!(parse_object_spec(&cat, "I2").unwrap(), ClusterObject::module(vec![1, 1]));
        assert_eq!(
            parse_object_spec(&cat, "P2[1]").unwrap(),
            ClusterObject::shifted_projective(&cat, 1)
        );
        assert_eq!(
            parse_object_spec(&cat, "M(1,0)").unwrap(),
            ClusterObject::module(vec![1, 0])
        );
        assert!(parse_object_spec(&cat, "M(9,9)").is_err());
        assert!(parse_object_spec(&cat, "E2[1]").is_err());
        let list = parse_object_list(&cat, "P1, P2[1]").unwrap();
        assert_eq!(list.len(), 2);
    }
}
