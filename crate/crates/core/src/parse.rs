//! Polynomial expression parser.
//!
//! ```text
//! expr     := ('+' | '-')? term (('+' | '-') term)*
//! term     := factor ('*' factor)*
//! factor   := primary ('^' nat)*
//! primary  := rational | var | '(' expr ')'
//! rational := int ('/' posint)?
//! ```
//!
//! Whitespace is ignored. Every variable must be declared in the target ring.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{Poly, Ring};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the source.
    pub offset: usize,
    /// 1-based.
    pub line: usize,
    /// 1-based, in characters.
    pub column: usize,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::Syntax(msg) => write!(
                f,
                "syntax error at line {}, column {} (offset {}): {}",
                self.line, self.column, self.offset, msg
            ),
            ParseErrorKind::UnknownVariable(v) => write!(
                f,
                "unknown variable `{}` at line {}, column {}",
                v, self.line, self.column
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Ring,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>, (String, usize)> {
    let mut out = Vec::new();
    let mut it = src.char_indices().peekable();
    while let Some(&(i, c)) = it.peek() {
        if c.is_whitespace() {
            it.next();
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = it.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + d.len_utf8();
                it.next();
            }
            out.push((Tok::Int(src[i..end].parse().unwrap()), i));
        } else if c.is_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = it.peek() {
                if !(d.is_alphanumeric() || d == '_' || d == '\'') {
                    break;
                }
                end = j + d.len_utf8();
                it.next();
            }
            out.push((Tok::Ident(src[i..end].to_string()), i));
        } else if "+-*/^()".contains(c) {
            out.push((Tok::Sym(c), i));
            it.next();
        } else {
            return Err((format!("unexpected character `{c}`"), i));
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

impl<'a> Parser<'a> {
    fn error(&self, kind: ParseErrorKind, offset: usize) -> ParseError {
        let before = &self.src[..offset.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let line_start = before.rfind('\n').map_or(0, |p| p + 1);
        let column = before[line_start..].chars().count() + 1;
        ParseError { kind, offset, line, column }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        let offset = self.toks[self.pos].1;
        self.error(ParseErrorKind::Syntax(msg.into()), offset)
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Poly, ParseError> {
        let negate = if self.eat('-') {
            true
        } else {
            self.eat('+');
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly, ParseError> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly, ParseError> {
        let mut base = self.primary()?;
        while self.eat('^') {
            match self.peek().clone() {
                Tok::Int(n) => {
                    let e: u32 = n
                        .try_into()
                        .map_err(|_| self.syntax("exponent too large"))?;
                    self.pos += 1;
                    base = base.pow(e);
                }
                _ => return Err(self.syntax("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Poly, ParseError> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.pos += 1;
                let mut q = Rational::from_integer(n);
                if self.eat('/') {
                    match self.peek().clone() {
                        Tok::Int(d) if !d.is_zero() => {
                            self.pos += 1;
                            q /= Rational::from_integer(d);
                        }
                        _ => return Err(self.syntax("expected a positive integer denominator")),
                    }
                }
                Ok(Poly::constant(self.ring, q))
            }
            Tok::Ident(name) => match self.ring.var(&name) {
                Ok(v) => {
                    self.pos += 1;
                    Ok(v)
                }
                Err(_) => {
                    let offset = self.toks[self.pos].1;
                    Err(self.error(ParseErrorKind::UnknownVariable(name), offset))
                }
            },
            Tok::Sym('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.syntax("expected `)`"));
                }
                Ok(inner)
            }
            Tok::End => Err(self.syntax("unexpected end of input")),
            Tok::Sym(c) => Err(self.syntax(format!("unexpected `{c}`"))),
        }
    }
}

/// Parses `src` into a polynomial over `ring`.
pub fn parse_poly(src: &str, ring: &Ring) -> Result<Poly, ParseError> {
    let toks = match lex(src) {
        Ok(t) => t,
        Err((msg, offset)) => {
            let p = Parser { src, toks: vec![(Tok::End, offset)], pos: 0, ring };
            return Err(p.error(ParseErrorKind::Syntax(msg), offset));
        }
    };
    let mut p = Parser { src, toks, pos: 0, ring };
    let out = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.syntax("trailing input"));
    }
    Ok(out)
}

/// Parses a `name:weight,name:weight` list (weight defaults to 1).
pub fn parse_weight_system(src: &str) -> crate::Result<Ring> {
    let mut vars = Vec::new();
    for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, w) = match item.split_once(':') {
            Some((n, w)) => {
                let w: u32 = w.trim().parse().map_err(|_| {
                    crate::Error::InvalidWeights(format!("bad weight in `{item}`"))
                })?;
                (n.trim().to_string(), w)
            }
            None => (item.to_string(), 1),
        };
        vars.push((name, w));
    }
    crate::poly::WeightSystem::new(vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::WeightSystem;
    use crate::rational::ratio;

    #[test]
    fn a2_relation() {
        let r = WeightSystem::new([("x", 1), ("y", 1), ("z", 2)]).unwrap();
        let p = parse_poly("x*z - y^3", &r).unwrap();
        let expect = r.var("x").unwrap() * r.var("z").unwrap() - r.var("y").unwrap().pow(3);
        assert_eq!(p, expect);
    }

    #[test]
    fn rational_coefficient() {
        let r = WeightSystem::standard(["alpha", "beta"]).unwrap();
        let p = parse_poly("2/3*alpha^5 + beta^7", &r).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient_of(&[5, 0]), ratio(2, 3));
    }

    #[test]
    fn syntax_error_position() {
        let r = WeightSystem::standard(["x", "y"]).unwrap();
        let e = parse_poly("x +* y", &r).unwrap_err();
        assert_eq!(e.offset, 3);
        assert_eq!((e.line, e.column), (1, 4));
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
    }

    #[test]
    fn unknown_variable_named() {
        let r = WeightSystem::standard(["x"]).unwrap();
        let e = parse_poly("x + w", &r).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnknownVariable("w".into()));
        assert_eq!(e.offset, 4);
    }

    #[test]
    fn multiline_position() {
        let r = WeightSystem::standard(["x"]).unwrap();
        let e = parse_poly("x +\n  ) ", &r).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
    }

    #[test]
    fn nesting_and_powers() {
        let r = WeightSystem::standard(["x", "y"]).unwrap();
        let p = parse_poly("-(x - y)^2 + 1/2", &r).unwrap();
        let q = parse_poly("-x^2 + 2*x*y - y^2 + 1/2", &r).unwrap();
        assert_eq!(p, q);
        assert!(parse_poly("x^", &r).is_err());
        assert!(parse_poly("1/0", &r).is_err());
        assert!(parse_poly("(x", &r).is_err());
    }

    #[test]
    fn weight_lists() {
        let r = parse_weight_system("u:1, x, z:2").unwrap();
        assert_eq!(r.weights(), &[1, 1, 2]);
        assert!(parse_weight_system("x:0").is_err());
    }
}
