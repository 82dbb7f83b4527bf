//! Monomials and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Exponent vector `x^a` (or `∂^a` when used for operators).
///
/// Trailing zero exponents are never stored, so a monomial does not carry
/// the number of ring variables and the derived `Ord` coincides with the
/// lexicographic order `x1 > x2 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exponents: Vec<u32>) -> Self {
        while exponents.last() == Some(&0) {
            exponents.pop();
        }
        Monomial(exponents)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, k: u32) -> Self {
        let mut e = vec![0; i + 1];
        e[i] = k;
        Self::new(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Stored exponents (trailing zeros omitted).
    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent vector padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        let mut e = self.0.clone();
        e.resize(n.max(e.len()), 0);
        e
    }

    /// Index one past the last variable with a nonzero exponent.
    pub fn support_len(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::new(
            (0..other.0.len()).map(|i| other.0[i] - self.exponent(i)).collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::new((0..n).map(|i| self.exponent(i).max(other.exponent(i))).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Formal derivative with respect to variable `i`: the multiplicity and
    /// the lowered monomial, or `None` when the exponent is zero.
    pub fn derive(&self, i: usize) -> Option<(u32, Monomial)> {
        let k = self.exponent(i);
        if k == 0 {
            return None;
        }
        let mut e = self.0.clone();
        e[i] -= 1;
        Some((k, Monomial::new(e)))
    }

    /// True when only variables with indices in `vars` occur.
    pub fn only_in(&self, vars: &[usize]) -> bool {
        self.0.iter().enumerate().all(|(i, &e)| e == 0 || vars.contains(&i))
    }

    /// Moves every exponent `shift` positions to the right.
    pub fn shift_right(&self, shift: usize) -> Monomial {
        if self.is_one() {
            return self.clone();
        }
        let mut e = vec![0; shift];
        e.extend_from_slice(&self.0);
        Monomial(e)
    }

    /// Drops the first `shift` exponents.
    pub fn shift_left(&self, shift: usize) -> Monomial {
        Monomial::new(self.0.iter().skip(shift).copied().collect())
    }

    /// Keeps the exponents of the listed variables, renumbered in list order.
    pub fn select(&self, vars: &[usize]) -> Monomial {
        Monomial::new(vars.iter().map(|&v| self.exponent(v)).collect())
    }

    /// Sends exponent `i` to position `targets[i]`.
    pub fn scatter(&self, targets: &[usize], n: usize) -> Monomial {
        let mut e = vec![0; n];
        for (i, &k) in self.0.iter().enumerate() {
            e[targets[i]] += k;
        }
        Monomial::new(e)
    }

    /// Factorial weight `a! = a_1! a_2! ...`.
    pub fn factorial(&self) -> num_bigint::BigInt {
        let mut acc = num_bigint::BigInt::from(1);
        for &k in &self.0 {
            for j in 2..=k {
                acc *= j;
            }
        }
        acc
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// All monomials in `n` variables of total degree exactly `d`.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial::new(cur.clone()));
            cur[i] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(n, i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![Monomial::one()] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// All monomials in `n` variables of total degree at most `d`, in ascending
/// graded reverse lexicographic order.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut layer = monomials_of_degree(n, k);
        layer.sort_by(|a, b| MonomialOrder::GrevLex.compare(a, b));
        out.extend(layer);
    }
    out
}

/// A monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    /// Lexicographic with `x1 > x2 > ... > xn`.
    Lex,
    /// Graded reverse lexicographic.
    #[default]
    GrevLex,
    /// Block order: the first `block` variables are compared by grevlex,
    /// ties broken by grevlex on the remaining variables. Any monomial
    /// involving the first block is larger than every monomial free of it.
    Elimination(usize),
}

fn grevlex_range(a: &Monomial, b: &Monomial, lo: usize, hi: Option<usize>) -> Ordering {
    let end = hi.unwrap_or_else(|| a.support_len().max(b.support_len()));
    let deg = |m: &Monomial| -> u32 { (lo..end).map(|i| m.exponent(i)).sum() };
    match deg(a).cmp(&deg(b)) {
        Ordering::Equal => {}
        other => return other,
    }
    for i in (lo..end).rev() {
        match a.exponent(i).cmp(&b.exponent(i)) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex_range(a, b, 0, None),
            MonomialOrder::Elimination(k) => match grevlex_range(a, b, 0, Some(k)) {
                Ordering::Equal => grevlex_range(a, b, k, None),
                other => other,
            },
        }
    }

    /// Comparison of explicit exponent vectors of equal length.
    pub fn compare_exponents(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        Ok(self.compare(&Monomial::new(a.to_vec()), &Monomial::new(b.to_vec())))
    }
}
