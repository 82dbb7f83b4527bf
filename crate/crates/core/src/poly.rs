//! Sparse multivariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::{Error, Result};

/// A polynomial in `nvars` variables with coefficients in `F`.
///
/// Terms are kept in a `BTreeMap` keyed by monomial (lexicographic), with no
/// zero coefficients stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial<F> {
    nvars: usize,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::term(nvars, Monomial::one(), c)
    }

    pub fn term(nvars: usize, m: Monomial, c: F) -> Self {
        assert!(m.support_len() <= nvars, "monomial outside ring");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars, terms }
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        Self::term(nvars, Monomial::var(i), F::one())
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, summing
    /// repeated monomials.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(nvars: usize, it: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant coefficient.
    pub fn constant_coeff(&self) -> F {
        self.terms.get(&Monomial::one()).cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of monomials.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    /// Terms sorted in descending order under `ord`.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(&Monomial, &F)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.compare(b.0, a.0));
        v
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: F) {
        assert!(m.support_len() <= self.nvars, "monomial outside ring");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Smallest total degree of a term (the order of vanishing at the origin).
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    /// Degree in the variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(i)).max().unwrap_or(0)
    }

    /// Largest term under `ord`.
    pub fn leading_term(&self, ord: MonomialOrder) -> Result<(&Monomial, &F)> {
        if ord == MonomialOrder::Lex {
            return self.terms.iter().next_back().ok_or(Error::ZeroPolynomial);
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Result<Monomial> {
        self.leading_term(ord).map(|(m, _)| m.clone())
    }

    /// Divides by the leading coefficient under `ord`; zero stays zero.
    pub fn monic(&self, ord: MonomialOrder) -> Self {
        match self.leading_term(ord) {
            Ok((_, c)) => {
                let inv = c.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
            Err(_) => self.clone(),
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c.clone()))
                .filter(|(_, a)| !a.is_zero())
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to `x_i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if let Some((k, dm)) = m.derive(i) {
                out.add_term(dm, c.clone() * F::from_int(k as i64));
            }
        }
        out
    }

    /// `∂^alpha f`.
    pub fn derivative_multi(&self, alpha: &Monomial) -> Self {
        let mut out = self.clone();
        for (i, &k) in alpha.exponents().iter().enumerate() {
            for _ in 0..k {
                out = out.derivative(i);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "point dimension");
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in m.exponents().iter().enumerate() {
                for _ in 0..k {
                    t = t * point[i].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// `f(x + shift)`.
    pub fn translate(&self, shift: &[F]) -> Self {
        assert_eq!(shift.len(), self.nvars, "shift dimension");
        let lin: Vec<Self> = (0..self.nvars)
            .map(|i| Self::var(self.nvars, i) + Self::constant(self.nvars, shift[i].clone()))
            .collect();
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut t = Self::constant(self.nvars, c.clone());
            for (i, &k) in m.exponents().iter().enumerate() {
                t = &t * &lin[i].pow(k);
            }
            out = out + t;
        }
        out
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies `f` to every coefficient and re-targets the ring.
    pub fn map_coeffs<G: Field>(&self, nvars: usize, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Re-targets to a ring with `nvars` variables; all monomials must fit.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        assert!(self.terms.keys().all(|m| m.support_len() <= nvars));
        self.nvars = nvars;
        self
    }

    /// Prepends `k` fresh variables (indices `0..k`).
    pub fn shift_vars(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars + k,
            terms: self.terms.iter().map(|(m, c)| (m.shift_right(k), c.clone())).collect(),
        }
    }

    /// Removes the first `k` variables, which must not occur.
    pub fn unshift_vars(&self, k: usize) -> Self {
        Polynomial {
            nvars: self.nvars - k,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    debug_assert!((0..k).all(|i| m.exponent(i) == 0));
                    (m.shift_left(k), c.clone())
                })
                .collect(),
        }
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let (lm, lc) = d.leading_term(MonomialOrder::Lex).ok()?;
        let inv = lc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((m, c)) = r.terms.iter().next_back() {
            let qm = lm.divide_into(m)?;
            let qc = c.clone() * inv.clone();
            r = &r - &d.mul_term(&qm, &qc);
            q.add_term(qm, qc);
        }
        Some(q)
    }
}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", crate::io::format_polynomial(self, &names))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a, F: Field> $tr<&'a Polynomial<F>> for &'a Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: &'a Polynomial<F>) -> Polynomial<F> {
                self.$checked(rhs).expect("polynomial ring mismatch")
            }
        }
        impl<F: Field> $tr for Polynomial<F> {
            type Output = Polynomial<F>;
            fn $m(self, rhs: Polynomial<F>) -> Polynomial<F> {
                (&self).$checked(&rhs).expect("polynomial ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<F: Field> Neg for Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: Field> Neg for &Polynomial<F> {
    type Output = Polynomial<F>;
    fn neg(self) -> Polynomial<F> {
        -self.clone()
    }
}

/// Total-degree-then-lex comparison of polynomials' supports, used to give
/// generator lists a deterministic order.
pub fn compare_by_leading(a: &Polynomial<impl Field>, b: &Polynomial<impl Field>, ord: MonomialOrder) -> Ordering {
    match (a.leading_monomial(ord), b.leading_monomial(ord)) {
        (Ok(x), Ok(y)) => ord.compare(&x, &y),
        (Err(_), Err(_)) => Ordering::Equal,
        (Err(_), _) => Ordering::Less,
        (_, Err(_)) => Ordering::Greater,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};
    use proptest::prelude::*;

    type P = Polynomial<Rational>;

    fn x(i: usize) -> P {
        P::var(2, i)
    }

    fn c(n: i64) -> P {
        P::constant(2, rat(n, 1))
    }

    #[test]
    fn spec_arithmetic_examples() {
        assert_eq!((x(0) + c(1)) + (x(0) - c(1)), c(2) * x(0));
        assert_eq!((x(0) - x(1)) * (x(0) + x(1)), x(0).pow(2) - x(1).pow(2));
        let lhs = (x(0) - x(1).pow(3)) * (x(1) - x(0).pow(3));
        let rhs = x(0) * x(1) - x(0).pow(4) - x(1).pow(4) + x(0).pow(3) * x(1).pow(3);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = P::var(2, 0);
        let b = P::var(3, 0);
        assert_eq!(a.checked_add(&b), Err(Error::RingMismatch { left: 2, right: 3 }));
    }

    #[test]
    fn zero_polynomial_has_no_leading_term() {
        assert_eq!(
            P::zero(2).leading_term(MonomialOrder::GrevLex).unwrap_err(),
            Error::ZeroPolynomial
        );
    }

    #[test]
    fn exact_division() {
        let f = (x(0) - x(1)) * (x(0) + x(1).pow(2));
        assert_eq!(f.div_exact(&(x(0) - x(1))).unwrap(), x(0) + x(1).pow(2));
        assert!(f.div_exact(&(x(0) + c(3))).is_none());
    }

    #[test]
    fn translation_and_derivatives() {
        let f = x(0).pow(2) * x(1);
        let g = f.translate(&[rat(1, 1), rat(-2, 1)]);
        assert_eq!(g.evaluate(&[rat(0, 1), rat(0, 1)]), rat(-2, 1));
        assert_eq!(f.derivative_multi(&Monomial::new(vec![2, 1])), c(2));
    }

    pub(crate) fn arb_poly(n: usize) -> impl Strategy<Value = P> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -3i64..4), 0..5)
            .prop_map(move |ts| P::from_terms(n, ts.into_iter().map(|(e, k)| (Monomial::new(e), rat(k, 1)))))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn ring_axioms(a in arb_poly(2), b in arb_poly(2), cc in arb_poly(2)) {
            prop_assert_eq!(&(&a + &b) + &cc, &a + &(&b + &cc));
            prop_assert_eq!(&(&a * &b) * &cc, &a * &(&b * &cc));
            prop_assert_eq!(&a * &(&b + &cc), &(&a * &b) + &(&a * &cc));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_empty());
        }
    }
}
