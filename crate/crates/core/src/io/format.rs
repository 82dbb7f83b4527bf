//! Text rendering of polynomials, rational functions and operators.

use num_traits::{One, Signed, Zero};

use crate::field::{Field, Rational};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;

/// `x1^2*x2`; empty for the unit monomial.
pub fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], e)),
        }
    }
    parts.join("*")
}

fn format_rational_abs(q: &Rational) -> String {
    let a = q.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Renders a sum of `(coefficient, factor)` terms where `factor` is an
/// already formatted product (empty for 1).
fn format_sum<F: Field>(terms: Vec<(F, String)>, coeff_fmt: &dyn Fn(&F) -> String) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (c, factor)) in terms.into_iter().enumerate() {
        let (negative, body) = match c.as_rational() {
            Some(q) => {
                let neg = q.is_negative();
                let body = if factor.is_empty() {
                    format_rational_abs(&q)
                } else if q.abs().is_one() {
                    factor
                } else {
                    format!("{}*{}", format_rational_abs(&q), factor)
                };
                (neg, body)
            }
            None => {
                let cs = coeff_fmt(&c);
                let body = if factor.is_empty() {
                    format!("({cs})")
                } else {
                    format!("({cs})*{factor}")
                };
                (false, body)
            }
        };
        match (k, negative) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

/// Renders a polynomial with the given variable names; coefficients that are
/// not rational numbers are parenthesized and rendered with `coeff_names`.
pub fn format_polynomial_with<F: Field>(p: &Polynomial<F>, names: &[String], coeff_names: &[String]) -> String {
    let terms = p
        .sorted_terms(MonomialOrder::GrevLex)
        .into_iter()
        .map(|(m, c)| (c.clone(), format_monomial(m, names)))
        .collect();
    format_sum(terms, &|c: &F| format_coefficient(c, coeff_names))
}

pub fn format_polynomial<F: Field>(p: &Polynomial<F>, names: &[String]) -> String {
    format_polynomial_with(p, names, &[])
}

/// Renders a field element; rational functions use `names` for parameters.
pub fn format_coefficient<F: Field>(c: &F, names: &[String]) -> String {
    if let Some(q) = c.as_rational() {
        return q.to_string();
    }
    c.format_named(names)
}

pub fn format_ratfun(r: &RationalFunction, names: &[String]) -> String {
    let num = format_polynomial(r.numerator(), names);
    if r.is_polynomial() && r.denominator().constant_coeff().is_one() {
        return num;
    }
    let den = format_polynomial(r.denominator(), names);
    format!("({num})/({den})")
}

/// Renders `sum c_a ∂^a` with `d_<var>` symbols. Each coefficient is
/// rendered by `coeff` as a polynomial string; compound coefficients are
/// parenthesized.
pub fn format_operator_terms<C>(
    terms: &[(Monomial, C)],
    names: &[String],
    single_term: impl Fn(&C) -> Option<(Rational, Monomial)>,
    coeff: impl Fn(&C) -> String,
) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let dnames: Vec<String> = names.iter().map(|n| format!("d_{n}")).collect();
    let mut rows: Vec<(Rational, String)> = Vec::new();
    for (alpha, c) in terms {
        let dpart = format_monomial(alpha, &dnames);
        match single_term(c) {
            Some((q, m)) => {
                let xpart = format_monomial(&m, names);
                let factor = match (xpart.is_empty(), dpart.is_empty()) {
                    (true, _) => dpart.clone(),
                    (false, true) => xpart,
                    (false, false) => format!("{xpart}*{dpart}"),
                };
                rows.push((q, factor));
            }
            None => {
                let cs = coeff(c);
                let factor = if dpart.is_empty() {
                    format!("({cs})")
                } else {
                    format!("({cs})*{dpart}")
                };
                rows.push((Rational::one(), factor));
            }
        }
    }
    let rows = rows.into_iter().filter(|(q, _)| !q.is_zero()).collect();
    format_sum(rows, &|_: &Rational| unreachable!())
}
