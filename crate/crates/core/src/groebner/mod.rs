//! Gröbner bases and the ideal operations built on them.

mod buchberger;

use std::sync::{Arc, OnceLock};

use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::{Error, Result};

use buchberger::Terms;

/// A reduced Gröbner basis for a fixed monomial order.
#[derive(Clone)]
pub struct GroebnerBasis<F> {
    nvars: usize,
    order: MonomialOrder,
    polys: Vec<Polynomial<F>>,
    terms: Vec<Terms<F>>,
}

impl<F: Field> std::fmt::Debug for GroebnerBasis<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("order", &self.order)
            .field("polys", &self.polys)
            .finish()
    }
}

impl<F: Field> GroebnerBasis<F> {
    pub fn compute(nvars: usize, gens: &[Polynomial<F>], order: MonomialOrder) -> Self {
        let terms = buchberger::groebner(gens, order);
        let polys = terms.iter().map(|t| buchberger::from_terms(nvars, t.clone())).collect();
        GroebnerBasis {
            nvars,
            order,
            polys,
            terms,
        }
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Basis elements, monic, sorted ascending by leading monomial.
    pub fn polys(&self) -> &[Polynomial<F>] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|t| &t.last().expect("nonzero").0)
    }

    pub fn is_unit(&self) -> bool {
        self.polys.len() == 1 && self.polys[0].is_constant()
    }

    /// Unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        assert_eq!(f.nvars(), self.nvars, "polynomial ring mismatch");
        let t = buchberger::reduce(buchberger::to_terms(f, self.order), &self.terms, self.order, false);
        buchberger::from_terms(self.nvars, t)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// True when every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                let s = buchberger::s_poly(&self.polys[i], &self.polys[j], self.order);
                if !self.contains(&s) {
                    return false;
                }
            }
        }
        true
    }

    /// Standard monomials when the quotient is finite dimensional.
    pub fn standard_monomials(&self) -> StandardMonomialSet {
        let lms: Vec<Monomial> = self.leading_monomials().cloned().collect();
        if lms.iter().any(Monomial::is_one) {
            return StandardMonomialSet {
                monomials: Vec::new(),
                finite: true,
            };
        }
        let finite = (0..self.nvars).all(|i| lms.iter().any(|m| m.exponent(i) > 0 && m.only_in(&[i])));
        if !finite {
            return StandardMonomialSet {
                monomials: Vec::new(),
                finite: false,
            };
        }
        let mut out = vec![Monomial::one()];
        let mut frontier = vec![Monomial::one()];
        while let Some(m) = frontier.pop() {
            for i in 0..self.nvars {
                let next = m.mul(&Monomial::var(i));
                if lms.iter().any(|l| l.divides(&next)) || out.contains(&next) {
                    continue;
                }
                out.push(next.clone());
                frontier.push(next);
            }
        }
        out.sort_by(|a, b| MonomialOrder::GrevLex.compare(a, b));
        StandardMonomialSet {
            monomials: out,
            finite: true,
        }
    }
}

/// Monomials outside the initial ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardMonomialSet {
    /// Ascending grevlex; empty when `finite` is false.
    pub monomials: Vec<Monomial>,
    pub finite: bool,
}

/// Vector-space dimension of a quotient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

/// An ideal given by generators, with a write-once cache holding the reduced
/// Gröbner basis for the first order requested.
#[derive(Clone)]
pub struct Ideal<F> {
    nvars: usize,
    gens: Vec<Polynomial<F>>,
    cache: OnceLock<Arc<GroebnerBasis<F>>>,
}

impl<F: Field> std::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(&self.gens).finish()
    }
}

impl<F: Field> Ideal<F> {
    /// Ideal generated by `gens`; zero generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Polynomial<F>>) -> Self {
        for g in &gens {
            assert_eq!(g.nvars(), nvars, "generator outside ring");
        }
        Ideal {
            nvars,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: OnceLock::new(),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::new(nvars, Vec::new())
    }

    pub fn unit(nvars: usize) -> Self {
        Self::new(nvars, vec![Polynomial::one(nvars)])
    }

    /// The maximal ideal `<x_1 - p_1, ..., x_n - p_n>`.
    pub fn point(p: &[F]) -> Self {
        let n = p.len();
        Self::new(
            n,
            (0..n)
                .map(|i| Polynomial::var(n, i) - Polynomial::constant(n, p[i].clone()))
                .collect(),
        )
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    /// Reduced Gröbner basis for `order`, cached when the cache is empty or
    /// already holds this order.
    pub fn groebner(&self, order: MonomialOrder) -> Arc<GroebnerBasis<F>> {
        if let Some(gb) = self.cache.get() {
            if gb.order == order {
                return gb.clone();
            }
            return Arc::new(GroebnerBasis::compute(self.nvars, &self.gens, order));
        }
        let gb = self
            .cache
            .get_or_init(|| Arc::new(GroebnerBasis::compute(self.nvars, &self.gens, order)));
        if gb.order == order {
            gb.clone()
        } else {
            Arc::new(GroebnerBasis::compute(self.nvars, &self.gens, order))
        }
    }

    /// Reduced grevlex basis.
    pub fn gb(&self) -> Arc<GroebnerBasis<F>> {
        self.groebner(MonomialOrder::GrevLex)
    }

    pub fn normal_form(&self, f: &Polynomial<F>, order: MonomialOrder) -> Polynomial<F> {
        self.groebner(order).normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.gb().contains(f)
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        let gb = self.gb();
        other.gens.iter().all(|g| gb.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    fn check(&self, other: &Ideal<F>) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(self.nvars, g))
    }

    pub fn product(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ok(Ideal::new(self.nvars, g))
    }

    /// `self^k`, generated by all products of `k` generators.
    pub fn power(&self, k: u32) -> Ideal<F> {
        if k == 0 {
            return Ideal::unit(self.nvars);
        }
        let gens = self.gb().polys().to_vec();
        let mut layer: Vec<(usize, Polynomial<F>)> = gens.iter().enumerate().map(|(i, g)| (i, g.clone())).collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for (i, p) in &layer {
                for (j, g) in gens.iter().enumerate().skip(*i) {
                    next.push((j, p * g));
                }
            }
            layer = next;
        }
        Ideal::new(self.nvars, layer.into_iter().map(|(_, p)| p).collect())
    }

    /// Eliminates a tag variable placed in front of the ring variables.
    fn eliminate_tag(&self, tagged: Vec<Polynomial<F>>) -> Ideal<F> {
        let gb = GroebnerBasis::compute(self.nvars + 1, &tagged, MonomialOrder::Elimination(1));
        let kept = gb
            .polys()
            .iter()
            .filter(|p| p.terms().all(|(m, _)| m.exponent(0) == 0))
            .map(|p| p.unshift_vars(1))
            .collect();
        Ideal::new(self.nvars, kept)
    }

    /// `self ∩ other` via `<w·I, (1-w)·J>` eliminating `w`.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(self.nvars));
        }
        let n1 = self.nvars + 1;
        let w = Polynomial::var(n1, 0);
        let one_minus_w = Polynomial::one(n1) - w.clone();
        let mut tagged: Vec<Polynomial<F>> = self.gens.iter().map(|g| &w * &g.shift_vars(1)).collect();
        tagged.extend(other.gens.iter().map(|g| &one_minus_w * &g.shift_vars(1)));
        Ok(self.eliminate_tag(tagged))
    }

    pub fn intersect_all(ideals: &[Ideal<F>]) -> Result<Ideal<F>> {
        let (first, rest) = ideals
            .split_first()
            .ok_or_else(|| Error::InvalidArgument("empty intersection".into()))?;
        rest.iter().try_fold(first.clone(), |acc, j| acc.intersect(j))
    }

    /// `self : f`.
    pub fn colon_element(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let inter = self.intersect(&Ideal::new(self.nvars, vec![f.clone()]))?;
        let gens = inter
            .gb()
            .polys()
            .iter()
            .map(|g| g.div_exact(f).expect("element of <f> is divisible by f"))
            .collect();
        Ok(Ideal::new(self.nvars, gens))
    }

    /// `self : f^∞ = (I + <1 - w f>) ∩ R`.
    pub fn saturate_element(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        if f.is_zero() {
            return Err(Error::ZeroDivision);
        }
        let n1 = self.nvars + 1;
        let mut tagged: Vec<Polynomial<F>> = self.gens.iter().map(|g| g.shift_vars(1)).collect();
        tagged.push(Polynomial::one(n1) - &Polynomial::var(n1, 0) * &f.shift_vars(1));
        Ok(self.eliminate_tag(tagged))
    }

    /// `self : J^∞ = ⋂_{g ∈ gens(J)} self : g^∞`.
    pub fn saturate(&self, j: &Ideal<F>) -> Result<Ideal<F>> {
        self.check(j)?;
        if j.is_zero() {
            return Ok(self.clone());
        }
        let parts = j
            .gb()
            .polys()
            .iter()
            .map(|g| self.saturate_element(g))
            .collect::<Result<Vec<_>>>()?;
        Ideal::intersect_all(&parts)
    }

    pub fn quotient_dimension(&self) -> (QuotientDimension, StandardMonomialSet) {
        let s = self.gb().standard_monomials();
        let d = if s.finite {
            QuotientDimension::Finite(s.monomials.len())
        } else {
            QuotientDimension::Infinite
        };
        (d, s)
    }

    /// Equality of ideals through their reduced grevlex bases.
    pub fn equals(&self, other: &Ideal<F>) -> bool {
        self.nvars == other.nvars && self.gb().polys() == other.gb().polys()
    }
}

impl<F: Field> PartialEq for Ideal<F> {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    type P = Polynomial<Rational>;

    fn x(i: usize) -> P {
        P::var(2, i)
    }

    fn c(n: i64) -> P {
        P::constant(2, rat(n, 1))
    }

    fn ideal(g: Vec<P>) -> Ideal<Rational> {
        Ideal::new(2, g)
    }

    fn q3_gens() -> Vec<P> {
        vec![x(0).pow(3), x(1).pow(3), x(0).pow(2) * x(1) - x(0) * x(1).pow(2)]
    }

    fn m() -> Ideal<Rational> {
        ideal(vec![x(0), x(1)])
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let f = x(0) - x(1).pow(3);
        let gb = ideal(vec![f.clone()]).groebner(MonomialOrder::Lex);
        assert_eq!(gb.polys(), &[f]);
    }

    #[test]
    fn q3_generators_form_a_reduced_basis() {
        let gb = ideal(q3_gens()).gb();
        let mut got = gb.polys().to_vec();
        let mut want = q3_gens();
        got.sort_by(|a, b| a.terms().cmp(b.terms()));
        want.sort_by(|a, b| a.terms().cmp(b.terms()));
        assert_eq!(got, want);
        assert!(gb.satisfies_buchberger_criterion());
    }

    #[test]
    fn unit_ideal_basis() {
        let gb = ideal(vec![x(0), x(0) - c(1)]).gb();
        assert_eq!(gb.polys(), &[c(1)]);
    }

    #[test]
    fn normal_form_examples() {
        let f = x(0).pow(2) * x(1) - x(0) * x(1).pow(2);
        let i = ideal(vec![x(0) - x(1).pow(3)]);
        assert_eq!(i.normal_form(&f, MonomialOrder::Lex), x(1).pow(7) - x(1).pow(5));
        assert_eq!(Ideal::zero(2).normal_form(&f, MonomialOrder::GrevLex), f);
        let j = ideal(vec![x(0).pow(3)]);
        assert!(j.normal_form(&(x(0).pow(3) * x(1)), MonomialOrder::GrevLex).is_zero());
    }

    #[test]
    fn coprime_principal_intersection() {
        let a = x(0) - x(1).pow(3);
        let b = x(1) - x(0).pow(3);
        let i = ideal(vec![a.clone()]).intersect(&ideal(vec![b.clone()])).unwrap();
        assert!(i.equals(&ideal(vec![&a * &b])));
    }

    #[test]
    fn colon_by_element() {
        let i = ideal(vec![x(0).pow(2), x(0) * x(1)]);
        assert!(i.colon_element(&x(0)).unwrap().equals(&m()));
        assert_eq!(i.colon_element(&P::zero(2)).unwrap_err(), Error::ZeroDivision);
    }

    fn golden_ideal() -> Ideal<Rational> {
        let q1 = ideal(vec![x(0) - x(1).pow(3)]);
        let q2 = ideal(vec![x(1) - x(0).pow(3)]);
        Ideal::intersect_all(&[q1, q2, ideal(q3_gens())]).unwrap()
    }

    #[test]
    fn saturation_drops_embedded_component() {
        let sat = golden_ideal().saturate(&m()).unwrap();
        let g = (x(0) - x(1).pow(3)) * (x(1) - x(0).pow(3));
        assert!(sat.equals(&ideal(vec![g])));
        let again = sat.saturate(&m()).unwrap();
        assert!(again.equals(&sat));
    }

    #[test]
    fn quotient_dimensions() {
        let i = golden_ideal().sum(&m().power(4)).unwrap();
        assert_eq!(i.quotient_dimension().0, QuotientDimension::Finite(9));
        let (d, s) = m().quotient_dimension();
        assert_eq!(d, QuotientDimension::Finite(1));
        assert_eq!(s.monomials, vec![Monomial::one()]);
        assert_eq!(
            ideal(vec![x(0) - x(1).pow(3)]).quotient_dimension().0,
            QuotientDimension::Infinite
        );
    }

    #[test]
    fn ideal_equality() {
        assert!(ideal(vec![x(0), x(1)]).equals(&ideal(vec![x(1), x(0)])));
        assert!(!ideal(vec![x(0)]).equals(&ideal(vec![x(0).pow(2)])));
        let lhs = golden_ideal().sum(&m().power(4)).unwrap();
        let rhs = ideal(vec![x(0).pow(2) * x(1) - x(0) * x(1).pow(2)])
            .sum(&m().power(4))
            .unwrap();
        assert!(lhs.equals(&rhs));
    }

    #[test]
    fn infinite_intersection_stabilizes_on_golden_example() {
        let i = golden_ideal();
        let sat = i.saturate(&m()).unwrap();
        let eq_at = |d: u32| sat.intersect(&i.sum(&m().power(d)).unwrap()).unwrap().equals(&i);
        assert!(!eq_at(3));
        for d in 4..=6 {
            assert!(eq_at(d));
        }
    }

    #[test]
    fn ring_mismatch_in_ideal_ops() {
        let a = ideal(vec![x(0)]);
        let b = Ideal::<Rational>::new(3, vec![P::var(3, 0)]);
        assert!(matches!(a.sum(&b), Err(Error::RingMismatch { .. })));
    }
}
