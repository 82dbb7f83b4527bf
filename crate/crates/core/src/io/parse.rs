//! Tokenizer and expression parser for polynomials and operators.
//!
//! Expressions are sums of products of numbers, variables, operator symbols
//! `d_<var>` and parenthesized expressions, with `^` for nonnegative integer
//! powers and `/` for division by nonzero constants. A sign may only begin
//! an expression or follow `(`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::field::Rational;
use crate::localize::WeylOperator;
use crate::{Error, QPoly, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Str(String),
    Sym(char),
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "identifier '{s}'"),
            Tok::Int(n) => write!(f, "number {n}"),
            Tok::Str(s) => write!(f, "string \"{s}\""),
            Tok::Sym(c) => write!(f, "'{c}'"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

const SYMBOLS: &str = "+-*/^(),;=[]<>";

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut line = 1;
    let mut col = 1;
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Int(s.parse().expect("digits")),
                line: l0,
                column: c0,
            });
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(chars[start..i].iter().collect()),
                line: l0,
                column: c0,
            });
        } else if c == '"' {
            i += 1;
            while i < chars.len() && chars[i] != '"' && chars[i] != '\n' {
                i += 1;
            }
            if chars.get(i) != Some(&'"') {
                return Err(Error::Parse {
                    line: l0,
                    column: c0,
                    message: "unterminated string".into(),
                });
            }
            i += 1;
            out.push(Token {
                tok: Tok::Str(chars[start + 1..i - 1].iter().collect()),
                line: l0,
                column: c0,
            });
        } else if SYMBOLS.contains(c) {
            i += 1;
            out.push(Token {
                tok: Tok::Sym(c),
                line: l0,
                column: c0,
            });
        } else {
            return Err(Error::Parse {
                line: l0,
                column: c0,
                message: format!("unexpected character '{c}'"),
            });
        }
        col += i - start;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: col,
    });
    Ok(out)
}

/// Cursor over a token stream.
pub(crate) struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    pub fn new(toks: &'a [Token]) -> Self {
        Parser { toks, pos: 0 }
    }

    pub fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    pub fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)].tok
    }

    pub fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    pub fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    pub fn eat_sym(&mut self, c: char) -> bool {
        if self.at_sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    pub fn error_here(&self, expected: &[&str]) -> Error {
        let t = self.peek();
        Error::Parse {
            line: t.line,
            column: t.column,
            message: format!("expected {}, found {}", expected.join(" or "), t.tok),
        }
    }

    pub fn error_at(t: &Token, message: impl Into<String>) -> Error {
        Error::Parse {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    pub fn expect_sym(&mut self, c: char) -> Result<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(self.error_here(&[&format!("'{c}'")]))
        }
    }

    pub fn expect_ident(&mut self) -> Result<(String, Token)> {
        match &self.peek().tok {
            Tok::Ident(s) => {
                let s = s.clone();
                Ok((s, self.next()))
            }
            _ => Err(self.error_here(&["identifier"])),
        }
    }

    pub fn at_eof(&self) -> bool {
        self.peek().tok == Tok::Eof
    }

    /// Parses an expression over `vars` and the symbols `d_<var>`, as a
    /// polynomial in `2n` variables (the `x` block, then the `∂` block).
    pub fn expr(&mut self, vars: &[String]) -> Result<QPoly> {
        let mut acc = if self.at_sym('-') {
            self.next();
            -self.term(vars)?
        } else {
            self.eat_sym('+');
            self.term(vars)?
        };
        loop {
            if self.eat_sym('+') {
                acc = &acc + &self.term(vars)?;
            } else if self.eat_sym('-') {
                acc = &acc - &self.term(vars)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, vars: &[String]) -> Result<QPoly> {
        let mut acc = self.factor(vars)?;
        loop {
            if self.eat_sym('*') {
                acc = &acc * &self.factor(vars)?;
            } else if self.at_sym('/') {
                let at = self.next();
                let d = self.factor(vars)?;
                if !d.is_constant() || d.is_zero() {
                    return Err(Parser::error_at(&at, "division by a non-constant or zero"));
                }
                acc = acc.scale(&d.constant_coeff().recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self, vars: &[String]) -> Result<QPoly> {
        let base = self.atom(vars)?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(k) => {
                let k: u32 = k.try_into().map_err(|_| Parser::error_at(&t, "exponent too large"))?;
                self.next();
                Ok(base.pow(k))
            }
            _ => Err(Parser::error_at(
                &t,
                format!("malformed exponent: expected nonnegative integer, found {}", t.tok),
            )),
        }
    }

    fn atom(&mut self, vars: &[String]) -> Result<QPoly> {
        let n = vars.len();
        let t = self.peek().clone();
        match &t.tok {
            Tok::Int(k) => {
                self.next();
                Ok(QPoly::constant(2 * n, Rational::from_integer(k.clone())))
            }
            Tok::Ident(name) => {
                self.next();
                if let Some(i) = vars.iter().position(|v| v == name) {
                    return Ok(QPoly::var(2 * n, i));
                }
                if let Some(i) = name.strip_prefix("d_").and_then(|v| vars.iter().position(|w| w == v)) {
                    return Ok(QPoly::var(2 * n, n + i));
                }
                Err(Parser::error_at(&t, format!("unknown variable '{name}'")))
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr(vars)?;
                self.expect_sym(')')?;
                Ok(e)
            }
            _ => Err(self.error_here(&["number", "variable", "'('"])),
        }
    }
}

fn parse_whole(text: &str, vars: &[String]) -> Result<QPoly> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks);
    let e = p.expr(vars)?;
    if !p.at_eof() {
        return Err(p.error_here(&["operator", "end of input"]));
    }
    Ok(e)
}

/// Parses a polynomial in the named variables.
pub fn parse_polynomial(text: &str, vars: &[String]) -> Result<QPoly> {
    let e = parse_whole(text, vars)?;
    to_polynomial(&e, vars.len()).ok_or_else(|| Error::Semantic(format!("'{text}' contains operator symbols")))
}

pub(crate) fn to_polynomial(e: &QPoly, n: usize) -> Option<QPoly> {
    e.terms()
        .all(|(m, _)| m.support_len() <= n)
        .then(|| e.clone().with_nvars(n))
}

/// Parses `Σ c_a(x) ∂^a` with coefficients written to the left of the
/// `d_<var>` symbols (symbols commute with everything in the input).
pub fn parse_operator(text: &str, vars: &[String]) -> Result<WeylOperator> {
    let e = parse_whole(text, vars)?;
    Ok(split_operator(&e, vars.len()))
}

pub(crate) fn split_operator(e: &QPoly, n: usize) -> WeylOperator {
    let all: Vec<usize> = (0..n).collect();
    let syms: Vec<usize> = (n..2 * n).collect();
    WeylOperator::from_terms(
        n,
        e.terms()
            .map(|(m, c)| (m.select(&syms), QPoly::term(n, m.select(&all), c.clone()))),
    )
}

/// A constant expression, for point coordinates.
pub(crate) fn constant_of(e: &QPoly) -> Option<Rational> {
    if e.is_zero() {
        return Some(Rational::zero());
    }
    e.is_constant().then(|| e.constant_coeff())
}
