//! Problem files.
//!
//! ```text
//! ring QQ[x1,x2];
//! ideal I1 = x1 - x2^3;
//! ideal I2 = x2 - x1^3;
//! ideal Q3 = x1^3, x2^3, x1^2*x2 - x1*x2^2;
//! ideal I = intersect(I1, I2, Q3);
//! ideal m = x1, x2;
//! point origin = (0, 0);
//! primes = I1, I2, m;
//! certificate = "golden.json";
//! ```
//!
//! Ideals may also be built with `sum(...)`, `product(...)` and
//! `power(name, k)`. Comments start with `#` or `//`.

use std::collections::HashSet;

use crate::field::Rational;
use crate::groebner::Ideal;
use crate::io::parse::{constant_of, to_polynomial, tokenize, Parser, Tok};
use crate::{Error, QIdeal, Result};

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub vars: Vec<String>,
    pub ideals: Vec<(String, QIdeal)>,
    pub points: Vec<(String, Vec<Rational>)>,
    pub primes: Vec<String>,
    pub certificate: Option<String>,
}

impl ProblemFile {
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn ideal(&self, name: &str) -> Option<&QIdeal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn point(&self, name: &str) -> Option<&[Rational]> {
        self.points.iter().find(|(n, _)| n == name).map(|(_, p)| p.as_slice())
    }

    /// A named ideal, or the maximal ideal of a named point.
    pub fn ideal_or_point(&self, name: &str) -> Option<QIdeal> {
        self.ideal(name).cloned().or_else(|| self.point(name).map(Ideal::point))
    }

    pub fn prime_ideals(&self) -> Result<Vec<QIdeal>> {
        self.primes
            .iter()
            .map(|n| {
                self.ideal_or_point(n)
                    .ok_or_else(|| Error::Semantic(format!("unknown prime '{n}'")))
            })
            .collect()
    }
}

const COMBINATORS: [&str; 4] = ["intersect", "sum", "product", "power"];

pub fn parse_problem(text: &str) -> Result<ProblemFile> {
    let toks = tokenize(text)?;
    let mut p = Parser::new(&toks);
    let mut file = ProblemFile {
        vars: Vec::new(),
        ideals: Vec::new(),
        points: Vec::new(),
        primes: Vec::new(),
        certificate: None,
    };
    let mut names = HashSet::new();
    let mut have_ring = false;
    while !p.at_eof() {
        if p.eat_sym(';') {
            continue;
        }
        let (kw, kw_tok) = p.expect_ident()?;
        match kw.as_str() {
            "ring" => {
                if have_ring {
                    return Err(Parser::error_at(&kw_tok, "ring declared twice"));
                }
                let (field, ft) = p.expect_ident()?;
                if field != "QQ" {
                    return Err(Parser::error_at(
                        &ft,
                        format!("unsupported field '{field}', expected QQ"),
                    ));
                }
                p.expect_sym('[')?;
                let mut seen = HashSet::new();
                loop {
                    let (v, vt) = p.expect_ident()?;
                    if v.starts_with("d_") {
                        return Err(Parser::error_at(&vt, "variable names may not start with d_"));
                    }
                    if !seen.insert(v.clone()) {
                        return Err(Parser::error_at(&vt, format!("duplicate variable '{v}'")));
                    }
                    file.vars.push(v);
                    if !p.eat_sym(',') {
                        break;
                    }
                }
                p.expect_sym(']')?;
                have_ring = true;
            }
            _ if !have_ring => return Err(Parser::error_at(&kw_tok, "expected 'ring' declaration first")),
            "ideal" => {
                let (name, nt) = p.expect_ident()?;
                if !names.insert(name.clone()) {
                    return Err(Parser::error_at(&nt, format!("duplicate name '{name}'")));
                }
                p.expect_sym('=')?;
                let ideal = ideal_rhs(&mut p, &file)?;
                file.ideals.push((name, ideal));
            }
            "point" => {
                let (name, nt) = p.expect_ident()?;
                if !names.insert(name.clone()) {
                    return Err(Parser::error_at(&nt, format!("duplicate name '{name}'")));
                }
                p.expect_sym('=')?;
                let open = p.peek().clone();
                p.expect_sym('(')?;
                let mut coords = Vec::new();
                loop {
                    let at = p.peek().clone();
                    let e = p.expr(&file.vars)?;
                    coords.push(
                        constant_of(&e).ok_or_else(|| Parser::error_at(&at, "point coordinates must be constants"))?,
                    );
                    if !p.eat_sym(',') {
                        break;
                    }
                }
                p.expect_sym(')')?;
                if coords.len() != file.nvars() {
                    return Err(Parser::error_at(
                        &open,
                        format!(
                            "point has {} coordinates, ring has {} variables",
                            coords.len(),
                            file.nvars()
                        ),
                    ));
                }
                file.points.push((name, coords));
            }
            "primes" => {
                p.expect_sym('=')?;
                loop {
                    let (n, nt) = p.expect_ident()?;
                    if file.ideal(&n).is_none() && file.point(&n).is_none() {
                        return Err(Parser::error_at(&nt, format!("unknown ideal '{n}'")));
                    }
                    file.primes.push(n);
                    if !p.eat_sym(',') {
                        break;
                    }
                }
            }
            "certificate" => {
                p.expect_sym('=')?;
                match p.next().tok {
                    Tok::Str(s) => file.certificate = Some(s),
                    _ => {
                        return Err(Parser::error_at(
                            &kw_tok,
                            "expected a quoted path after 'certificate ='",
                        ))
                    }
                }
            }
            _ => {
                return Err(Parser::error_at(
                    &kw_tok,
                    format!("expected one of ring, ideal, point, primes, certificate; found '{kw}'"),
                ))
            }
        }
        if !p.at_eof() {
            p.expect_sym(';')?;
        }
    }
    if !have_ring {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "missing ring declaration".into(),
        });
    }
    Ok(file)
}

fn ideal_rhs(p: &mut Parser<'_>, file: &ProblemFile) -> Result<QIdeal> {
    let n = file.nvars();
    if let Tok::Ident(name) = p.peek().tok.clone() {
        if COMBINATORS.contains(&name.as_str()) && p.peek_at(1) == &Tok::Sym('(') {
            let at = p.next();
            p.expect_sym('(')?;
            let mut args = Vec::new();
            loop {
                let (a, atok) = p.expect_ident()?;
                let ideal = file
                    .ideal_or_point(&a)
                    .ok_or_else(|| Parser::error_at(&atok, format!("unknown ideal '{a}'")))?;
                args.push(ideal);
                if name == "power" || !p.eat_sym(',') {
                    break;
                }
            }
            let result = match name.as_str() {
                "intersect" => Ideal::intersect_all(&args)?,
                "sum" => args.iter().skip(1).try_fold(args[0].clone(), |acc, i| acc.sum(i))?,
                "product" => args.iter().skip(1).try_fold(args[0].clone(), |acc, i| acc.product(i))?,
                _ => {
                    p.expect_sym(',')?;
                    let kt = p.next();
                    let Tok::Int(k) = &kt.tok else {
                        return Err(Parser::error_at(&kt, "expected a power"));
                    };
                    let k: u32 = k.try_into().map_err(|_| Parser::error_at(&kt, "power too large"))?;
                    args[0].power(k)
                }
            };
            p.expect_sym(')')?;
            let _ = at;
            return Ok(result);
        }
    }
    if p.at_sym(';') || p.at_eof() {
        return Err(p.error_here(&["generator"]));
    }
    let mut gens = Vec::new();
    loop {
        let at = p.peek().clone();
        let e = p.expr(&file.vars)?;
        gens.push(
            to_polynomial(&e, n).ok_or_else(|| Parser::error_at(&at, "generators may not contain operator symbols"))?,
        );
        if !p.eat_sym(',') {
            break;
        }
    }
    if gens.iter().all(|g| g.is_zero()) {
        return Err(Error::Semantic("empty ideal: all generators are zero".into()));
    }
    Ok(QIdeal::new(n, gens))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let f = parse_problem("ring QQ[x1,x2]; ideal I = x1 - x2^3;").unwrap();
        assert_eq!(f.ideal("I").unwrap().gens().len(), 1);
    }

    #[test]
    fn errors() {
        let e = parse_problem("ring QQ[x1,x2];\nideal I = x1 + + x2;").unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 2,
                column: 16,
                message: "expected number or variable or '(', found '+'".into()
            }
        );
        assert!(parse_problem("ring QQ[x1]; ideal I = x1; ideal I = x1;").is_err());
        assert!(parse_problem("ring QQ[x1]; ideal I = ;").is_err());
        assert!(parse_problem("ring QQ[x1]; ideal I = 0;").is_err());
        assert!(parse_problem("ring QQ[x1]; ideal I = y;").is_err());
        assert!(parse_problem("ring ZZ[x1];").is_err());
        assert!(parse_problem("ideal I = x1;").is_err());
    }

    #[test]
    fn points_and_primes() {
        let f = parse_problem("ring QQ[x,y]; point p = (1/2, -3); ideal m = x, y; primes = m, p;").unwrap();
        assert_eq!(f.point("p").unwrap().len(), 2);
        assert_eq!(f.prime_ideals().unwrap().len(), 2);
        assert!(parse_problem("ring QQ[x,y]; point p = (1);").is_err());
    }
}
