//! Rational functions `Q(t)` in a set of parameter variables.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::field::{Field, Rational};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;

pub type QPoly = Polynomial<Rational>;

/// Splits `f` as a polynomial in `x_v` with coefficients free of `x_v`,
/// indexed by the power of `x_v`.
fn coefficients_in(f: &QPoly, v: usize) -> Vec<QPoly> {
    let n = f.nvars();
    let mut out = vec![QPoly::zero(n); f.degree_in(v) as usize + 1];
    for (m, c) in f.terms() {
        let k = m.exponent(v) as usize;
        let mut e = m.padded(n);
        e[v] = 0;
        out[k].add_term(Monomial::new(e), c.clone());
    }
    out
}

fn max_var(f: &QPoly) -> Option<usize> {
    f.terms()
        .map(|(m, _)| m.support_len())
        .max()
        .and_then(|l| l.checked_sub(1))
}

/// Greatest common divisor over `Q`, normalized to lex-leading coefficient 1.
/// `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &QPoly, b: &QPoly) -> QPoly {
    let ord = MonomialOrder::Lex;
    if a.is_zero() {
        return b.monic(ord);
    }
    if b.is_zero() {
        return a.monic(ord);
    }
    let n = a.nvars().max(b.nvars());
    if a.is_constant() || b.is_constant() {
        return QPoly::one(n);
    }
    let a = a.clone().with_nvars(n);
    let b = b.clone().with_nvars(n);
    let v = max_var(&a).max(max_var(&b)).expect("non-constant");
    if a.degree_in(v) == 0 {
        return poly_gcd(&a, &content(&b, v));
    }
    if b.degree_in(v) == 0 {
        return poly_gcd(&content(&a, v), &b);
    }
    let ca = content(&a, v);
    let cb = content(&b, v);
    let mut p = a.div_exact(&ca).expect("content divides");
    let mut q = b.div_exact(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = pseudo_remainder(&p, &q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            q = QPoly::one(n);
            break;
        }
        p = q;
        q = primitive_part(&r, v);
    }
    let g = poly_gcd(&ca, &cb) * primitive_part(&q, v);
    g.monic(ord)
}

/// Gcd of the coefficients of `f` viewed as a polynomial in `x_v`.
fn content(f: &QPoly, v: usize) -> QPoly {
    let mut g = QPoly::zero(f.nvars());
    for c in coefficients_in(f, v) {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn primitive_part(f: &QPoly, v: usize) -> QPoly {
    let c = content(f, v);
    f.div_exact(&c).expect("content divides").monic(MonomialOrder::Lex)
}

/// Pseudo-remainder of `a` by `b` with respect to `x_v`.
fn pseudo_remainder(a: &QPoly, b: &QPoly, v: usize) -> QPoly {
    let n = a.nvars();
    let db = b.degree_in(v);
    let lb = coefficients_in(b, v).pop().expect("nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = coefficients_in(&r, v).pop().expect("nonzero");
        let shift = QPoly::term(n, Monomial::var_pow(v, dr - db), Rational::one());
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}

/// An element `num/den` of `Q(t_1, ..., t_k)`.
///
/// Always reduced, with the denominator's lex-leading coefficient equal to 1.
/// The zero function is `0/1`.
#[derive(Clone)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

impl RationalFunction {
    /// `num/den` in reduced form; panics if `den` is zero.
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let n = num.nvars().max(den.nvars());
        let num = num.with_nvars(n);
        let den = den.with_nvars(n);
        if num.is_zero() {
            return Self::from_poly(QPoly::zero(n));
        }
        let g = poly_gcd(&num, &den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        Self::normalized(num, den)
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        let lc = den
            .leading_term(MonomialOrder::Lex)
            .expect("nonzero denominator")
            .1
            .clone();
        if lc.is_one() {
            return RationalFunction { num, den };
        }
        let inv = lc.recip();
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: QPoly) -> Self {
        let n = p.nvars();
        RationalFunction {
            num: p,
            den: QPoly::one(n),
        }
    }

    /// The parameter `t_i` in a field with `nvars` parameters.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::from_poly(QPoly::var(nvars, i))
    }

    pub fn numerator(&self) -> &QPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QPoly {
        &self.den
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    fn lift(&self, n: usize) -> (QPoly, QPoly) {
        if self.num.nvars() == n {
            (self.num.clone(), self.den.clone())
        } else {
            (self.num.clone().with_nvars(n), self.den.clone().with_nvars(n))
        }
    }

    fn as_constant(&self) -> Option<&Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            // den is monic, so a constant denominator is 1
            Some(self.num.terms().next().map(|(_, c)| c).unwrap_or(&ZERO))
        } else {
            None
        }
    }
}

static ZERO: std::sync::LazyLock<Rational> = std::sync::LazyLock::new(Rational::zero);

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.num.terms().eq(other.num.terms()) && self.den.terms().eq(other.den.terms())
    }
}

impl Eq for RationalFunction {}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.nvars().max(rhs.nvars());
        if let (Some(a), Some(b)) = (self.as_constant(), rhs.as_constant()) {
            return Self::from_poly(QPoly::constant(n, a + b));
        }
        let (a, b) = self.lift(n);
        let (c, d) = rhs.lift(n);
        if b == d {
            return Self::new(&a + &c, b);
        }
        if b.is_constant() {
            return Self::normalized(&(&a * &d) + &c, d);
        }
        if d.is_constant() {
            return Self::normalized(&a + &(&c * &b), b);
        }
        let g = poly_gcd(&b, &d);
        let bg = b.div_exact(&g).expect("gcd divides");
        let dg = d.div_exact(&g).expect("gcd divides");
        Self::new(&(&a * &dg) + &(&c * &bg), &b * &dg)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let n = self.nvars().max(rhs.nvars());
        if self.num.is_zero() || rhs.num.is_zero() {
            return Self::from_poly(QPoly::zero(n));
        }
        if let Some(a) = self.as_constant() {
            let (c, d) = rhs.lift(n);
            return RationalFunction {
                num: c.scale(a),
                den: d,
            };
        }
        if let Some(b) = rhs.as_constant() {
            let (a, d) = self.lift(n);
            return RationalFunction {
                num: a.scale(b),
                den: d,
            };
        }
        let (a, b) = self.lift(n);
        let (c, d) = rhs.lift(n);
        let g1 = poly_gcd(&a, &d);
        let g2 = poly_gcd(&c, &b);
        let num = &a.div_exact(&g1).expect("gcd") * &c.div_exact(&g2).expect("gcd");
        let den = &b.div_exact(&g2).expect("gcd") * &d.div_exact(&g1).expect("gcd");
        Self::normalized(num, den)
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(QPoly::zero(0))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(QPoly::one(0))
    }
}

impl Field for RationalFunction {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::normalized(self.den.clone(), self.num.clone()))
        }
    }

    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(QPoly::constant(0, q.clone()))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_constant().cloned()
    }

    fn format_named(&self, names: &[String]) -> String {
        if names.len() >= self.nvars() {
            crate::io::format_ratfun(self, names)
        } else {
            self.to_string()
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars()).map(|i| format!("t{i}")).collect();
        write!(f, "{}", crate::io::format_ratfun(self, &names))
    }
}
