//! Plain-text algebra descriptions.
//!
//! ```text
//! # sl3 singular block
//! vertices: 1 2 3
//! arrow a: 1 -> 2
//! arrow b: 2 -> 1
//! arrow c: 2 -> 3
//! arrow d: 3 -> 2
//! relation: c*d = 0
//! relation: a*b = d*c
//! composition: right-to-left
//! ```
//!
//! Relations are rational combinations of `*`-products of arrows, e.g. `2*a*b - 1/2*d*c`.
//! Directives may appear in any order; relations are resolved after all arrows are known.

use std::path::Path as FsPath;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::pathalg::{Convention, PathAlgebra, PathCombination, Quiver, Relation};

/// Parsed contents of an algebra file, before saturation.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraDescription {
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    pub convention: Convention,
}

impl AlgebraDescription {
    pub fn build(&self, cap: usize) -> Result<PathAlgebra> {
        PathAlgebra::build(
            self.quiver.clone(),
            self.relations.clone(),
            self.convention,
            cap,
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("vertices: {}\n", self.quiver.vertices().join(" "));
        for a in self.quiver.arrows() {
            s.push_str(&format!(
                "arrow {}: {} -> {}\n",
                a.name,
                self.quiver.vertices()[a.source],
                self.quiver.vertices()[a.target]
            ));
        }
        for r in &self.relations {
            s.push_str(&format!(
                "relation: {}\n",
                r.write(&self.quiver, self.convention)
            ));
        }
        s.push_str(&format!("composition: {}\n", self.convention));
        s
    }
}

pub fn parse_algebra_file(path: &FsPath) -> Result<AlgebraDescription> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_algebra(&text)
}

struct RawRelation {
    line: usize,
    col: usize,
    text: String,
}

fn perr(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraDescription> {
    let mut vertices: Option<(usize, Vec<String>)> = None;
    let mut arrows: Vec<(String, String, String, usize, usize)> = Vec::new();
    let mut raw_relations = Vec::new();
    let mut convention = Convention::RightToLeft;

    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let Some(colon) = content.find(':') else {
            return Err(perr(line, indent + 1, "expected `directive: ...`"));
        };
        let head = content[..colon].trim();
        let body = &content[colon + 1..];
        let body_col = colon + 2 + (body.len() - body.trim_start().len());
        let body = body.trim();
        let mut head_words = head.split_whitespace();
        match head_words.next() {
            Some("vertices") if head_words.next().is_none() => {
                let vs: Vec<String> = body.split_whitespace().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(perr(line, body_col, "empty vertex list"));
                }
                if vertices.is_some() {
                    return Err(perr(line, indent + 1, "vertices declared twice"));
                }
                vertices = Some((line, vs));
            }
            Some("arrow") => {
                let Some(name) = head_words.next() else {
                    return Err(perr(line, indent + 1, "arrow needs a name"));
                };
                if head_words.next().is_some() || !is_identifier(name) {
                    return Err(perr(line, indent + 7, format!("bad arrow name `{head}`")));
                }
                let Some((s, t)) = body.split_once("->") else {
                    return Err(perr(line, body_col, "expected `source -> target`"));
                };
                let (s, t) = (s.trim(), t.trim());
                if s.is_empty() || t.is_empty() || s.contains(' ') || t.contains(' ') {
                    return Err(perr(line, body_col, "expected `source -> target`"));
                }
                arrows.push((name.to_string(), s.to_string(), t.to_string(), line, body_col));
            }
            Some("relation") if head_words.next().is_none() => {
                raw_relations.push(RawRelation {
                    line,
                    col: body_col,
                    text: body.to_string(),
                });
            }
            Some("composition") if head_words.next().is_none() => {
                convention = match body {
                    "right-to-left" => Convention::RightToLeft,
                    "left-to-right" => Convention::LeftToRight,
                    other => {
                        return Err(perr(
                            line,
                            body_col,
                            format!("unknown composition `{other}`"),
                        ))
                    }
                };
            }
            _ => {
                return Err(Error::UnknownDirective {
                    line,
                    directive: head.to_string(),
                })
            }
        }
    }

    let Some((_, vs)) = vertices else {
        return Err(perr(1, 1, "missing `vertices:` declaration"));
    };
    for (name, s, t, line, col) in &arrows {
        for v in [s, t] {
            if !vs.contains(v) {
                return Err(perr(
                    *line,
                    *col,
                    format!("arrow `{name}` uses undeclared vertex `{v}`"),
                ));
            }
        }
    }
    let triples: Vec<(String, String, String)> = arrows
        .iter()
        .map(|(n, s, t, _, _)| (n.clone(), s.clone(), t.clone()))
        .collect();
    let quiver = Quiver::new(&vs, &triples).map_err(|e| perr(1, 1, e.to_string()))?;

    let mut relations = Vec::new();
    for raw in &raw_relations {
        relations.push(parse_relation(&quiver, raw, convention)?);
    }
    Ok(AlgebraDescription {
        quiver,
        relations,
        convention,
    })
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Num(Q),
    Star,
    Plus,
    Minus,
    Slash,
    Eq,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        match c {
            ' ' | '\t' => i += 1,
            '*' => {
                out.push((Tok::Star, col));
                i += 1;
            }
            '+' => {
                out.push((Tok::Plus, col));
                i += 1;
            }
            '-' => {
                out.push((Tok::Minus, col));
                i += 1;
            }
            '/' => {
                out.push((Tok::Slash, col));
                i += 1;
            }
            '=' => {
                out.push((Tok::Eq, col));
                i += 1;
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                let n: BigInt = s.parse().map_err(|_| perr(line, col, "bad number"))?;
                out.push((Tok::Num(Q::from_integer(n)), col));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                out.push((Tok::Ident(chars[start..i].iter().collect()), col));
            }
            other => return Err(perr(line, col, format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

fn parse_relation(quiver: &Quiver, raw: &RawRelation, convention: Convention) -> Result<Relation> {
    let toks = tokenize(&raw.text, raw.line, raw.col)?;
    let eqs: Vec<usize> = toks
        .iter()
        .enumerate()
        .filter(|(_, (t, _))| *t == Tok::Eq)
        .map(|(i, _)| i)
        .collect();
    if eqs.len() != 1 {
        return Err(perr(raw.line, raw.col, "relation needs exactly one `=`"));
    }
    let end_col = raw.col + raw.text.len();
    let lhs = parse_side(quiver, &toks[..eqs[0]], raw.line, toks[eqs[0]].1, convention)?;
    let rhs = parse_side(quiver, &toks[eqs[0] + 1..], raw.line, end_col, convention)?;
    if lhs.is_zero() && rhs.is_zero() {
        return Err(perr(raw.line, raw.col, "relation `0 = 0` is empty"));
    }
    Relation::new(lhs, rhs).map_err(|e| perr(raw.line, raw.col, e.to_string()))
}

fn parse_side(
    quiver: &Quiver,
    toks: &[(Tok, usize)],
    line: usize,
    end_col: usize,
    convention: Convention,
) -> Result<PathCombination> {
    if toks.is_empty() {
        return Err(perr(line, end_col, "empty side of relation"));
    }
    let mut terms = Vec::new();
    let mut i = 0;
    let mut first = true;
    while i < toks.len() {
        let mut sign = Q::one();
        match &toks[i].0 {
            Tok::Plus if !first => i += 1,
            Tok::Minus => {
                sign = -sign;
                i += 1;
            }
            _ if first => {}
            _ => return Err(perr(line, toks[i].1, "expected `+` or `-`")),
        }
        first = false;
        let mut coef = sign;
        let mut arrows: Vec<(String, usize)> = Vec::new();
        let mut expect_factor = true;
        while i < toks.len() {
            match (&toks[i].0, expect_factor) {
                (Tok::Num(n), true) => {
                    let mut value = n.clone();
                    if matches!(toks.get(i + 1), Some((Tok::Slash, _))) {
                        let Some((Tok::Num(d), dcol)) = toks.get(i + 2) else {
                            return Err(perr(line, toks[i + 1].1, "expected denominator"));
                        };
                        if d.is_zero() {
                            return Err(perr(line, *dcol, "zero denominator"));
                        }
                        value /= d;
                        i += 2;
                    }
                    coef *= value;
                    expect_factor = false;
                }
                (Tok::Ident(name), true) => {
                    arrows.push((name.clone(), toks[i].1));
                    expect_factor = false;
                }
                (Tok::Star, false) => expect_factor = true,
                (Tok::Plus | Tok::Minus, false) => break,
                (_, _) => {
                    return Err(perr(line, toks[i].1, "unexpected token"));
                }
            }
            i += 1;
        }
        if expect_factor {
            let col = toks.get(i).map_or(end_col, |t| t.1);
            return Err(perr(line, col, "expected a factor"));
        }
        if arrows.is_empty() {
            if coef.is_zero() {
                continue;
            }
            return Err(perr(line, end_col, "constant terms are not allowed"));
        }
        let mut idx = Vec::new();
        for (name, col) in &arrows {
            idx.push(
                quiver
                    .arrow_index(name)
                    .ok_or_else(|| perr(line, *col, format!("undeclared arrow `{name}`")))?,
            );
        }
        if convention == Convention::RightToLeft {
            idx.reverse();
        }
        let path = quiver
            .path(&idx)
            .map_err(|e| perr(line, arrows[0].1, e.to_string()))?;
        if !coef.is_zero() {
            terms.push((coef, path));
        }
    }
    Ok(PathCombination { terms })
}

#[cfg(test)]
mod tests {
    use super::*;

    const SL3: &str = "\
# singular block
vertices: 1 2 3
arrow a: 1 -> 2
arrow b: 2 -> 1
arrow c: 2 -> 3
arrow d: 3 -> 2
relation: c*d = 0
relation: a*b = d*c
";

    #[test]
    fn parses_sl3_presentation() {
        let d = parse_algebra(SL3).unwrap();
        assert_eq!(d.quiver.num_vertices(), 3);
        assert_eq!(d.quiver.num_arrows(), 4);
        assert_eq!(d.relations.len(), 2);
        assert_eq!(d.convention, Convention::RightToLeft);
    }

    #[test]
    fn text_round_trip() {
        let d = parse_algebra(SL3).unwrap();
        let again = parse_algebra(&d.to_text()).unwrap();
        assert_eq!(d, again);
    }

    #[test]
    fn undeclared_arrow_is_named() {
        let text = "vertices: 1 2\narrow a: 1 -> 2\nrelation: x*y = 0\n";
        match parse_algebra(text).unwrap_err() {
            Error::Parse { line, col, msg } => {
                assert_eq!(line, 3);
                assert_eq!(col, 11);
                assert!(msg.contains("`x`"), "{msg}");
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn empty_vertex_list_is_an_error() {
        assert!(matches!(
            parse_algebra("vertices:\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn unknown_directive() {
        assert!(matches!(
            parse_algebra("vertices: 1\nfoo: bar\n"),
            Err(Error::UnknownDirective { line: 2, .. })
        ));
    }

    #[test]
    fn coefficients_and_conventions() {
        let text = "vertices: 1 2\narrow a: 1 -> 2\narrow b: 2 -> 1\narrow c: 2 -> 1\n\
                    relation: 2*b*a - 1/2*c*a = 0\ncomposition: right-to-left\n";
        let d = parse_algebra(text).unwrap();
        let r = &d.relations[0];
        assert_eq!(r.lhs().terms.len(), 2);
        assert_eq!(r.lhs().terms[1].0, Q::new(BigInt::from(-1), BigInt::from(2)));
        let ltr = text.replace("right-to-left", "left-to-right");
        // under left-to-right `b*a` reads b then a: 2 -> 1 -> 2
        let d2 = parse_algebra(&ltr).unwrap();
        assert_eq!(d2.relations[0].endpoints(), (1, 1));
        assert_eq!(r.endpoints(), (0, 0));
    }
}
