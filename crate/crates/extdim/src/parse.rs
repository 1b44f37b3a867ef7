//! Line-oriented parser for the algebra description language.
//!
//! ```text
//! # comment
//! field Q            | field F <p>
//! vertex <label> ...
//! arrow <label> : <src> -> <tgt>
//! rel <coef>*<path> [+ <coef>*<path> | - <coef>*<path> ...]
//! ```
//!
//! A path is written `a1.a2.a3` and read left to right as a traversal:
//! first follow `a1`, then `a2`. Relations must combine parallel paths of
//! length at least two. Coefficients are integer or rational literals; an
//! omitted coefficient means 1.

use crate::algebra::{AlgebraError, Path, PathAlgebra};
use crate::quiver::{Arrow, Quiver};
use crate::scalar::{is_prime, FieldSpec, Scalar};
use std::sync::Arc;

#[derive(Debug, Clone, thiserror::Error)]
#[error("line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum AlgebraParseError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

pub fn parse_algebra(text: &str) -> Result<Arc<PathAlgebra>, AlgebraParseError> {
    let mut field: Option<FieldSpec> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    struct RawRel {
        line: usize,
        terms: Vec<(String, Vec<String>)>, // (coef literal, arrow labels)
    }
    let mut raw_rels: Vec<RawRel> = Vec::new();

    for (lineno, raw_line) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = match raw_line.split_once('#') {
            Some((before, _)) => before,
            None => raw_line,
        };
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col_of = |word: &str| content.find(word).map(|i| i + 1).unwrap_or(1);
        let mut words = trimmed.split_whitespace();
        let keyword = words.next().unwrap();
        match keyword {
            "field" => {
                let rest: Vec<&str> = words.collect();
                let spec = match rest.as_slice() {
                    ["Q"] => FieldSpec::Rational,
                    ["F", p] => {
                        let p: u64 = p.parse().map_err(|_| {
                            ParseError::new(line, col_of(p), format!("bad prime `{p}`"))
                        })?;
                        if !is_prime(p) {
                            return Err(ParseError::new(
                                line,
                                1,
                                format!("{p} is not prime"),
                            )
                            .into());
                        }
                        FieldSpec::Prime(p)
                    }
                    _ => {
                        return Err(ParseError::new(
                            line,
                            1,
                            "expected `field Q` or `field F <p>`",
                        )
                        .into())
                    }
                };
                if field.replace(spec).is_some() {
                    return Err(ParseError::new(line, 1, "field declared twice").into());
                }
            }
            "vertex" => {
                for w in words {
                    if vertices.iter().any(|v| v == w) {
                        return Err(ParseError::new(
                            line,
                            col_of(w),
                            format!("duplicate vertex `{w}`"),
                        )
                        .into());
                    }
                    vertices.push(w.to_string());
                }
            }
            "arrow" => {
                // arrow <label> : <src> -> <tgt>
                let rest: Vec<&str> = words.collect();
                let joined = rest.join(" ");
                let (label, ends) = joined.split_once(':').ok_or_else(|| {
                    ParseError::new(line, 1, "expected `arrow <label> : <src> -> <tgt>`")
                })?;
                let label = label.trim();
                let (src, tgt) = ends.split_once("->").ok_or_else(|| {
                    ParseError::new(line, col_of(":"), "expected `<src> -> <tgt>`")
                })?;
                let (src, tgt) = (src.trim(), tgt.trim());
                let find = |v: &str| -> Result<usize, ParseError> {
                    vertices.iter().position(|x| x == v).ok_or_else(|| {
                        ParseError::new(line, col_of(v), format!("undeclared vertex `{v}`"))
                    })
                };
                let source = find(src)?;
                let target = find(tgt)?;
                if label.is_empty() || label.contains(char::is_whitespace) {
                    return Err(ParseError::new(line, 1, "bad arrow label").into());
                }
                if arrows.iter().any(|a| a.label == label) {
                    return Err(ParseError::new(
                        line,
                        col_of(label),
                        format!("duplicate arrow `{label}`"),
                    )
                    .into());
                }
                arrows.push(Arrow { label: label.to_string(), source, target });
            }
            "rel" => {
                let rest = trimmed["rel".len()..].trim();
                if rest.is_empty() {
                    return Err(ParseError::new(line, 1, "empty relation").into());
                }
                // split on top-level + and - (a leading - binds to the first term)
                let mut terms: Vec<(String, Vec<String>)> = Vec::new();
                let mut sign = String::from("+");
                let mut chunk = String::new();
                let flush = |sign: &str, chunk: &str, terms: &mut Vec<(String, Vec<String>)>| -> Result<(), ParseError> {
                    let chunk = chunk.trim();
                    if chunk.is_empty() {
                        return Err(ParseError::new(line, 1, "empty term in relation"));
                    }
                    let (coef, path) = match chunk.split_once('*') {
                        Some((c, p)) => (c.trim().to_string(), p.trim()),
                        None => ("1".to_string(), chunk),
                    };
                    let coef = if sign == "-" { format!("-{coef}") } else { coef };
                    let labels: Vec<String> =
                        path.split('.').map(|s| s.trim().to_string()).collect();
                    if labels.iter().any(|l| l.is_empty()) {
                        return Err(ParseError::new(line, col_of(path), "empty arrow label in path"));
                    }
                    terms.push((coef, labels));
                    Ok(())
                };
                for (i, ch) in rest.char_indices() {
                    if (ch == '+' || ch == '-') && i > 0 {
                        flush(&sign, &chunk, &mut terms)?;
                        sign = ch.to_string();
                        chunk.clear();
                    } else if ch == '-' && i == 0 {
                        sign = "-".into();
                    } else {
                        chunk.push(ch);
                    }
                }
                flush(&sign, &chunk, &mut terms)?;
                raw_rels.push(RawRel { line, terms });
            }
            other => {
                return Err(ParseError::new(
                    line,
                    col_of(other),
                    format!("unknown keyword `{other}`"),
                )
                .into())
            }
        }
    }

    let field = field.unwrap_or(FieldSpec::Rational);
    if vertices.is_empty() {
        return Err(ParseError::new(1, 1, "no vertices declared").into());
    }
    let quiver = Quiver::new(vertices, arrows)
        .map_err(|e| ParseError::new(1, 1, e))?;

    let mut relations: Vec<Vec<(Path, Scalar)>> = Vec::new();
    for raw in raw_rels {
        let mut rel: Vec<(Path, Scalar)> = Vec::new();
        for (coef, labels) in raw.terms {
            let c = field
                .parse_scalar(&coef)
                .map_err(|e| ParseError::new(raw.line, 1, e))?;
            let mut arrow_ids = Vec::with_capacity(labels.len());
            for l in &labels {
                let id = quiver.arrow_index(l).ok_or_else(|| {
                    ParseError::new(raw.line, 1, format!("undeclared arrow `{l}`"))
                })?;
                arrow_ids.push(id);
            }
            for w in arrow_ids.windows(2) {
                let (a, b) = (&quiver.arrows[w[0]], &quiver.arrows[w[1]]);
                if a.target != b.source {
                    return Err(ParseError::new(
                        raw.line,
                        1,
                        format!(
                            "path breaks at `{}`: it ends at `{}` but `{}` starts at `{}`",
                            a.label,
                            quiver.vertices[a.target],
                            b.label,
                            quiver.vertices[b.source]
                        ),
                    )
                    .into());
                }
            }
            let source = quiver.arrows[arrow_ids[0]].source;
            let target = quiver.arrows[*arrow_ids.last().unwrap()].target;
            rel.push((Path { source, target, arrows: arrow_ids }, c));
        }
        relations.push(rel);
    }

    Ok(PathAlgebra::new(field, quiver, relations)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_algebra() {
        let a = parse_algebra("field Q\nvertex 1\n").unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn empty_input_is_an_error() {
        let e = parse_algebra("").unwrap_err();
        assert!(matches!(e, AlgebraParseError::Syntax(_)));
    }

    #[test]
    fn loop_with_square_relation() {
        let src = "field Q\nvertex 1\narrow g : 1 -> 1\nrel g.g\n";
        let a = parse_algebra(src).unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.nilpotency, 2);
    }

    #[test]
    fn undeclared_vertex_reported_with_position() {
        let src = "field Q\nvertex 1 2\narrow a : 1 -> 3\n";
        let e = parse_algebra(src).unwrap_err();
        let AlgebraParseError::Syntax(pe) = e else { panic!("expected syntax error") };
        assert_eq!(pe.line, 3);
        assert!(pe.msg.contains("undeclared vertex"));
    }

    #[test]
    fn short_relation_rejected() {
        let src = "field Q\nvertex 1 2\narrow a : 1 -> 2\nrel a\n";
        let e = parse_algebra(src).unwrap_err();
        assert!(matches!(e, AlgebraParseError::Algebra(AlgebraError::BadRelation(_))));
    }

    #[test]
    fn non_composable_path_rejected() {
        let src = "field Q\nvertex 1 2\narrow a : 1 -> 2\narrow b : 1 -> 2\nrel a.b\n";
        let e = parse_algebra(src).unwrap_err();
        let AlgebraParseError::Syntax(pe) = e else { panic!("expected syntax error") };
        assert!(pe.msg.contains("path breaks"));
    }

    #[test]
    fn signed_and_scaled_relation_terms() {
        // commutative square with coefficient baggage
        let src = "field Q\nvertex 0 1 2 3\n\
                   arrow a : 0 -> 1\narrow b : 1 -> 3\n\
                   arrow c : 0 -> 2\narrow d : 2 -> 3\n\
                   rel 2*a.b - 2*c.d\n";
        let a = parse_algebra(src).unwrap();
        assert_eq!(a.dim(), 9);
    }

    #[test]
    fn comments_and_blank_lines() {
        let src = "# header\nfield F 2\n\nvertex 1 # trailing\narrow g : 1 -> 1\nrel g.g\n";
        let a = parse_algebra(src).unwrap();
        assert_eq!(a.field, FieldSpec::Prime(2));
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn composite_modulus_rejected() {
        let e = parse_algebra("field F 6\nvertex 1\n").unwrap_err();
        let AlgebraParseError::Syntax(pe) = e else { panic!() };
        assert!(pe.msg.contains("not prime"));
    }
}
