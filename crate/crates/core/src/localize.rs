//! Localization at a prime: the choice of free variables `t`, the passage
//! between `Q[x]` and `Q(t)[y]`, residue fields `Q(t)[y]/m`, and operators
//! with polynomial coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::dualspace::{DiffOperator, LocalPoint};
use crate::field::{Field, Rational};
use crate::groebner::{GroebnerBasis, Ideal};
use crate::linalg::solve;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ratfun::{poly_gcd, RationalFunction};
use crate::{Error, QIdeal, QPoly, Qt, QtIdeal, QtPoly, Result};

/// A partition of the variables into free `t` and bound `y`, both in
/// increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    nvars: usize,
    free: Vec<usize>,
    bound: Vec<usize>,
}

impl Splitting {
    /// Uses the given free variables, which must be independent modulo `p`.
    pub fn with_free(p: &QIdeal, free: &[usize]) -> Result<Self> {
        let n = p.nvars();
        if p.is_unit() {
            return Err(Error::UnitIdeal("free variables of the unit ideal"));
        }
        let mut free = free.to_vec();
        free.sort_unstable();
        free.dedup();
        if free.iter().any(|&i| i >= n) {
            return Err(Error::InvalidArgument("free variable out of range".into()));
        }
        if !eliminates_to_zero(p, &free) {
            return Err(Error::InvalidArgument(
                "free variables are algebraically dependent modulo the prime".into(),
            ));
        }
        Ok(Self::from_free(n, free))
    }

    fn from_free(nvars: usize, free: Vec<usize>) -> Self {
        let bound = (0..nvars).filter(|i| !free.contains(i)).collect();
        Splitting { nvars, free, bound }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn free(&self) -> &[usize] {
        &self.free
    }

    pub fn bound(&self) -> &[usize] {
        &self.bound
    }

    /// `f ∈ Q[x]` as an element of `Q(t)[y]`.
    pub fn to_local(&self, f: &QPoly) -> QtPoly {
        assert_eq!(f.nvars(), self.nvars, "splitting ring mismatch");
        let nt = self.free.len();
        let mut out = QtPoly::zero(self.bound.len());
        for (m, c) in f.terms() {
            let coeff = RationalFunction::from_poly(QPoly::term(nt, m.select(&self.free), c.clone()));
            out.add_term(m.select(&self.bound), coeff);
        }
        out
    }

    /// A polynomial in `t` as a polynomial of `Q[x]`.
    pub fn embed_free(&self, p: &QPoly) -> QPoly {
        QPoly::from_terms(
            self.nvars,
            p.terms().map(|(m, c)| (m.scatter(&self.free, self.nvars), c.clone())),
        )
    }

    /// `L·f ∈ Q[x]` where `L` is the monic lcm of the coefficient
    /// denominators of `f`. Returns the product and `L`.
    pub fn clear_denominators(&self, f: &QtPoly) -> (QPoly, QPoly) {
        let nt = self.free.len();
        let dens: Vec<QPoly> = f.terms().map(|(_, c)| c.denominator().clone().with_nvars(nt)).collect();
        let l = poly_lcm(nt, &dens);
        let mut out = QPoly::zero(self.nvars);
        for (ym, c) in f.terms() {
            let cofactor = l
                .div_exact(&c.denominator().clone().with_nvars(nt))
                .expect("lcm is a multiple");
            let num = &c.numerator().clone().with_nvars(nt) * &cofactor;
            let ypart = ym.scatter(&self.bound, self.nvars);
            for (tm, q) in num.terms() {
                out.add_term(tm.scatter(&self.free, self.nvars).mul(&ypart), q.clone());
            }
        }
        (out, l)
    }
}

/// Monic lcm of polynomials in `nt` variables.
fn poly_lcm(nt: usize, ps: &[QPoly]) -> QPoly {
    let mut l = QPoly::one(nt);
    for p in ps {
        if p.is_constant() {
            continue;
        }
        let g = poly_gcd(&l, p);
        l = (&l * p).div_exact(&g).expect("gcd divides");
    }
    l.monic(MonomialOrder::Lex)
}

fn leading_monomials(p: &QIdeal) -> Vec<Monomial> {
    p.groebner(MonomialOrder::Lex).leading_monomials().cloned().collect()
}

/// `p ∩ Q[free] = 0`, from a Gröbner basis for an order eliminating the
/// other variables.
fn eliminates_to_zero(p: &QIdeal, free: &[usize]) -> bool {
    let n = p.nvars();
    let mut perm: Vec<usize> = (0..n).filter(|i| !free.contains(i)).collect();
    let nb = perm.len();
    perm.extend_from_slice(free);
    let permuted = QIdeal::new(
        n,
        p.gens()
            .iter()
            .map(|g| QPoly::from_terms(n, g.terms().map(|(m, c)| (m.select(&perm), c.clone()))))
            .collect(),
    );
    let tail: Vec<usize> = (nb..n).collect();
    !permuted
        .groebner(MonomialOrder::Elimination(nb))
        .leading_monomials()
        .any(|m| m.only_in(&tail))
}

fn independent(lts: &[Monomial], vars: &[usize]) -> bool {
    !lts.iter().any(|m| m.only_in(vars))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// A maximal set of variables independent modulo the prime `p`.
///
/// Variables are taken greedily in declaration order against the lex
/// leading monomials of `p`; if that set is not of maximum size (the
/// dimension of `p`), the first maximum independent set is used instead.
pub fn free_variables(p: &QIdeal) -> Result<Splitting> {
    if p.is_unit() {
        return Err(Error::UnitIdeal("free variables of the unit ideal"));
    }
    let n = p.nvars();
    let lts = leading_monomials(p);
    let mut greedy = Vec::new();
    for i in 0..n {
        greedy.push(i);
        if !independent(&lts, &greedy) {
            greedy.pop();
        }
    }
    for k in (greedy.len() + 1..=n).rev() {
        if let Some(s) = combinations(n, k).into_iter().find(|s| independent(&lts, s)) {
            return Ok(Splitting::from_free(n, s));
        }
    }
    Ok(Splitting::from_free(n, greedy))
}

/// An ideal of `Q[x]` extended to `Q(t)[y]`.
#[derive(Clone, Debug)]
pub struct LocalizedIdeal {
    pub splitting: Splitting,
    pub ideal: QtIdeal,
}

pub fn extend_scalars(i: &QIdeal, s: &Splitting) -> LocalizedIdeal {
    LocalizedIdeal {
        splitting: s.clone(),
        ideal: QtIdeal::new(s.bound.len(), i.gens().iter().map(|g| s.to_local(g)).collect()),
    }
}

/// `J ∩ Q[x]` for an ideal `J` of `Q(t)[y]`: denominators of a Gröbner basis
/// are cleared and the result is saturated by the lcm of the factors used.
pub fn contract(j: &QtIdeal, s: &Splitting) -> Result<QIdeal> {
    let gb = j.gb();
    if gb.is_unit() {
        return Ok(QIdeal::unit(s.nvars));
    }
    let mut gens = Vec::new();
    let mut dens = Vec::new();
    for g in gb.polys() {
        let (p, l) = s.clear_denominators(g);
        gens.push(p);
        dens.push(l);
    }
    let h = s.embed_free(&poly_lcm(s.free.len(), &dens));
    let ideal = QIdeal::new(s.nvars, gens);
    if h.is_constant() {
        return Ok(ideal);
    }
    ideal.saturate_element(&h)
}

struct ResidueInner<F> {
    nvars: usize,
    ideal: Ideal<F>,
    gb: Arc<GroebnerBasis<F>>,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    point: Option<Vec<F>>,
}

/// The residue field of a maximal ideal `m` of `F[y]`, with elements
/// represented on the standard monomials of `m`.
///
/// Cloning is cheap; all residues share the handle.
#[derive(Clone)]
pub struct ResidueField<F>(Arc<ResidueInner<F>>);

impl<F: Field> fmt::Debug for ResidueField<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ResidueField({:?}, degree {})", self.0.ideal, self.0.basis.len())
    }
}

impl<F: Field> ResidueField<F> {
    /// Fails when `m` is the unit ideal or the quotient is infinite. Finite
    /// quotients are trusted to be fields.
    pub fn new(m: &Ideal<F>) -> Result<Self> {
        let gb = m.gb();
        if gb.is_unit() {
            return Err(Error::UnitIdeal("residue field of the unit ideal"));
        }
        let sm = gb.standard_monomials();
        if !sm.finite {
            return Err(Error::NotMaximal(format!("{:?} has an infinite quotient", m.gens())));
        }
        let n = m.nvars();
        let basis = sm.monomials;
        let point = (basis.len() == 1).then(|| {
            (0..n)
                .map(|i| gb.normal_form(&Polynomial::var(n, i)).constant_coeff())
                .collect()
        });
        let index = basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(ResidueField(Arc::new(ResidueInner {
            nvars: n,
            ideal: m.clone(),
            gb,
            basis,
            index,
            point,
        })))
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.0.basis
    }

    pub fn degree(&self) -> usize {
        self.0.basis.len()
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.0.ideal
    }

    pub fn element(&self, coords: Vec<F>) -> Residue<F> {
        assert!(coords.len() <= self.degree(), "too many coordinates");
        Residue::with_ctx(Some(self.clone()), coords)
    }

    /// Polynomial representative on the standard monomials.
    pub fn representative(&self, r: &Residue<F>) -> Polynomial<F> {
        Polynomial::from_terms(self.0.nvars, self.0.basis.iter().cloned().zip(r.coords.iter().cloned()))
    }

    fn residue_of_normal_form(&self, nf: &Polynomial<F>) -> Residue<F> {
        let mut coords = vec![F::zero(); self.degree()];
        for (m, c) in nf.terms() {
            coords[self.0.index[m]] = c.clone();
        }
        Residue::with_ctx(Some(self.clone()), coords)
    }
}

impl<F: Field> LocalPoint<F> for ResidueField<F> {
    type Kappa = Residue<F>;

    fn nvars(&self) -> usize {
        self.0.nvars
    }

    fn maximal_ideal(&self) -> Ideal<F> {
        self.0.ideal.clone()
    }

    fn reduce(&self, f: &Polynomial<F>) -> Residue<F> {
        match &self.0.point {
            Some(p) => Residue::constant(f.evaluate(p)),
            None => self.residue_of_normal_form(&self.0.gb.normal_form(f)),
        }
    }

    fn embed(&self, c: &F) -> Residue<F> {
        Residue::constant(c.clone())
    }

    fn residue_degree(&self) -> usize {
        self.degree()
    }

    fn coordinates(&self, k: &Residue<F>) -> Vec<F> {
        let mut v = k.coords.clone();
        v.resize(self.degree(), F::zero());
        v
    }

    fn rational_coordinates(&self) -> Option<Vec<F>> {
        self.0.point.clone()
    }
}

/// An element of a residue field. Coordinates are on the standard monomials
/// of the maximal ideal, with trailing zeros removed; constants need no
/// field handle.
#[derive(Clone)]
pub struct Residue<F> {
    ctx: Option<ResidueField<F>>,
    coords: Vec<F>,
}

impl<F: Field> Residue<F> {
    fn with_ctx(ctx: Option<ResidueField<F>>, mut coords: Vec<F>) -> Self {
        while coords.last().is_some_and(Zero::is_zero) {
            coords.pop();
        }
        Residue { ctx, coords }
    }

    pub fn constant(c: F) -> Self {
        Self::with_ctx(None, vec![c])
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    /// The element as a base field element, when it is one.
    pub fn as_base(&self) -> Option<F> {
        match self.coords.len() {
            0 => Some(F::zero()),
            1 => Some(self.coords[0].clone()),
            _ => None,
        }
    }

    fn join_ctx(&self, other: &Self) -> Option<ResidueField<F>> {
        self.ctx.clone().or_else(|| other.ctx.clone())
    }

    fn context(&self) -> &ResidueField<F> {
        self.ctx.as_ref().expect("non-constant residue carries its field")
    }

    pub fn representative(&self) -> Polynomial<F> {
        match &self.ctx {
            Some(k) => k.representative(self),
            None => Polynomial::constant(0, self.as_base().expect("constant")),
        }
    }

    fn scale(&self, c: &F) -> Self {
        Self::with_ctx(
            self.ctx.clone(),
            self.coords.iter().map(|x| x.clone() * c.clone()).collect(),
        )
    }
}

impl<F: Field> PartialEq for Residue<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords
    }
}

impl<F: Field> Eq for Residue<F> {}

impl<F: Field> Add for Residue<F> {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let ctx = self.join_ctx(&other);
        let (mut a, b) = if self.coords.len() >= other.coords.len() {
            (self.coords, other.coords)
        } else {
            (other.coords, self.coords)
        };
        for (x, y) in a.iter_mut().zip(b) {
            *x = x.clone() + y;
        }
        Self::with_ctx(ctx, a)
    }
}

impl<F: Field> Neg for Residue<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Residue {
            ctx: self.ctx,
            coords: self.coords.into_iter().map(|x| -x).collect(),
        }
    }
}

impl<F: Field> Sub for Residue<F> {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl<F: Field> Mul for Residue<F> {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        if self.coords.is_empty() || other.coords.is_empty() {
            return Self::zero();
        }
        if let Some(c) = self.as_base() {
            return Residue {
                ctx: other.join_ctx(&self),
                ..other.scale(&c)
            };
        }
        if let Some(c) = other.as_base() {
            return Residue {
                ctx: self.join_ctx(&other),
                ..self.scale(&c)
            };
        }
        let k = self.context().clone();
        let prod = &k.representative(&self) * &k.representative(&other);
        k.residue_of_normal_form(&k.0.gb.normal_form(&prod))
    }
}

impl<F: Field> Zero for Residue<F> {
    fn zero() -> Self {
        Residue {
            ctx: None,
            coords: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }
}

impl<F: Field> One for Residue<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: Field> Field for Residue<F> {
    /// Solves `self·x = 1` on the standard monomial basis.
    fn inv(&self) -> Option<Self> {
        if let Some(c) = self.as_base() {
            return c.inv().map(Self::constant);
        }
        let k = self.context().clone();
        let dim = k.degree();
        let cols: Vec<Vec<F>> = k
            .basis()
            .iter()
            .map(|b| {
                let e = Polynomial::term(k.0.nvars, b.clone(), F::one());
                k.coordinates(&(self.clone() * k.reduce(&e)))
            })
            .collect();
        let a: Vec<Vec<F>> = (0..dim).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let mut e0 = vec![F::zero(); dim];
        e0[0] = F::one();
        let x = solve(&a, &e0)?;
        let r = Self::with_ctx(Some(k), x);
        (r.clone() * self.clone()).is_one().then_some(r)
    }

    fn from_rational(q: &Rational) -> Self {
        Self::constant(F::from_rational(q))
    }

    fn as_rational(&self) -> Option<Rational> {
        self.as_base().and_then(|c| c.as_rational())
    }

    /// `names` lists the residue variables followed by any names the base
    /// field needs.
    fn format_named(&self, names: &[String]) -> String {
        match (&self.ctx, self.as_base()) {
            (_, Some(c)) => c.format_named(names),
            (Some(k), None) if names.len() >= k.0.nvars => {
                crate::io::format_polynomial_with(&self.representative(), &names[..k.0.nvars], &names[k.0.nvars..])
            }
            _ => self.to_string(),
        }
    }
}

impl<F: Field> fmt::Display for Residue<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_base() {
            Some(c) => write!(f, "{c}"),
            None => {
                let n = self.context().0.nvars;
                let names: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
                write!(f, "{}", crate::io::format_polynomial(&self.representative(), &names))
            }
        }
    }
}

impl<F: Field> fmt::Debug for Residue<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// `Σ c_a(x) ∂^a` with polynomial coefficients in `Q[x]`, acting on
/// polynomials by `f ↦ Σ c_a ∂^a f`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeylOperator {
    nvars: usize,
    terms: BTreeMap<Monomial, QPoly>,
}

impl WeylOperator {
    pub fn from_terms<I: IntoIterator<Item = (Monomial, QPoly)>>(nvars: usize, it: I) -> Self {
        let mut terms: BTreeMap<Monomial, QPoly> = BTreeMap::new();
        for (a, c) in it {
            assert_eq!(c.nvars(), nvars, "coefficient ring mismatch");
            let s = match terms.remove(&a) {
                Some(old) => &old + &c,
                None => c,
            };
            if !s.is_zero() {
                terms.insert(a, s);
            }
        }
        WeylOperator { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn order(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn apply(&self, f: &QPoly) -> QPoly {
        assert_eq!(f.nvars(), self.nvars, "operator ring mismatch");
        let mut acc = QPoly::zero(self.nvars);
        for (a, c) in &self.terms {
            let d = f.derivative_multi(a);
            if !d.is_zero() {
                acc = &acc + &(c * &d);
            }
        }
        acc
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let mut terms: Vec<(Monomial, QPoly)> = self.terms.iter().map(|(a, c)| (a.clone(), c.clone())).collect();
        terms.sort_by(|a, b| MonomialOrder::GrevLex.compare(&b.0, &a.0));
        crate::io::format_operator_terms(
            &terms,
            names,
            |c: &QPoly| {
                (c.len() == 1).then(|| {
                    let (m, q) = c.terms().next().expect("one term");
                    (q.clone(), m.clone())
                })
            },
            |c: &QPoly| crate::io::format_polynomial(c, names),
        )
    }
}

impl fmt::Display for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.format_with(&names))
    }
}

impl fmt::Debug for WeylOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Replaces each coefficient of an operator over `κ = Q(t)[y]/m` by its
/// standard-monomial representative and clears all denominators, giving an
/// operator over `Q[x]` whose symbols `∂` act on the bound variables.
pub fn lift_to_weyl(op: &DiffOperator<Residue<Qt>>, s: &Splitting) -> WeylOperator {
    let reps: Vec<(Monomial, QtPoly)> = op
        .terms()
        .map(|(a, k)| {
            let rep = match &k.ctx {
                Some(field) => field.representative(k),
                None => QtPoly::constant(s.bound.len(), k.as_base().expect("constant")),
            };
            (a.clone(), rep.with_nvars(s.bound.len()))
        })
        .collect();
    let nt = s.free.len();
    let dens: Vec<QPoly> = reps
        .iter()
        .flat_map(|(_, p)| {
            p.terms()
                .map(|(_, c)| c.denominator().clone().with_nvars(nt))
                .collect::<Vec<_>>()
        })
        .collect();
    let l = RationalFunction::from_poly(poly_lcm(nt, &dens));
    WeylOperator::from_terms(
        s.nvars,
        reps.into_iter().map(|(a, p)| {
            let scaled = p.scale(&l);
            (a.scatter(&s.bound, s.nvars), s.clear_denominators(&scaled).0)
        }),
    )
}

/// The image in `κ` of an operator with coefficients in `Q[x]` whose
/// symbols involve only bound variables.
pub fn weyl_to_residue(op: &WeylOperator, s: &Splitting, kappa: &ResidueField<Qt>) -> DiffOperator<Residue<Qt>> {
    DiffOperator::from_terms(
        s.bound.len(),
        op.terms().map(|(a, c)| {
            debug_assert!(a.only_in(&s.bound));
            (a.select(&s.bound), kappa.reduce(&s.to_local(c)))
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn x(n: usize, i: usize) -> QPoly {
        QPoly::var(n, i)
    }

    #[test]
    fn free_variables_of_curve() {
        let p = QIdeal::new(2, vec![&x(2, 0) - &x(2, 1).pow(3)]);
        let s = free_variables(&p).unwrap();
        assert_eq!(s.free(), &[1]);
        assert_eq!(s.bound(), &[0]);
    }

    #[test]
    fn free_variables_of_point_and_zero() {
        let m = QIdeal::new(2, vec![x(2, 0), x(2, 1)]);
        assert!(free_variables(&m).unwrap().free().is_empty());
        assert_eq!(free_variables(&QIdeal::zero(2)).unwrap().free(), &[0, 1]);
        assert!(matches!(free_variables(&QIdeal::unit(2)), Err(Error::UnitIdeal(_))));
    }

    #[test]
    fn free_variables_prefers_maximum_set() {
        // lex leading terms x1 x3 and x2 x3: the greedy pass takes {x1, x2}
        let p = QIdeal::new(3, vec![&x(3, 0) * &x(3, 2), &x(3, 1) * &x(3, 2)]);
        let s = free_variables(&p).unwrap();
        assert_eq!(s.free().len(), 2);
    }

    #[test]
    fn to_local_and_back() {
        let p = QIdeal::new(2, vec![&x(2, 0) - &x(2, 1).pow(3)]);
        let s = free_variables(&p).unwrap();
        let f = &(&x(2, 0) * &x(2, 1)) - &x(2, 1).pow(3);
        let (back, l) = s.clear_denominators(&s.to_local(&f));
        assert_eq!(l, QPoly::one(1));
        assert_eq!(back, f);
    }

    #[test]
    fn residue_inverse_of_square_root() {
        // κ = Q(t)[y]/<y^2 - t>: y^-1 = y/t
        let t = Qt::var(1, 0);
        let y = QtPoly::var(1, 0);
        let m = QtIdeal::new(1, vec![&y.pow(2) - &QtPoly::constant(1, t.clone())]);
        let k = ResidueField::new(&m).unwrap();
        assert_eq!(k.degree(), 2);
        let ry = k.reduce(&y);
        let inv = ry.inv().unwrap();
        let want = k.reduce(&y.scale(&t.inv().unwrap()));
        assert_eq!(inv, want);
        assert!((ry * inv).is_one());
    }

    #[test]
    fn residue_field_rejects_infinite_quotient() {
        let m = QIdeal::new(2, vec![x(2, 0)]);
        assert!(matches!(ResidueField::new(&m), Err(Error::NotMaximal(_))));
    }

    #[test]
    fn rational_residue_field_evaluates() {
        let m = QIdeal::point(&[rat(1, 2), rat(-3, 1)]);
        let k = ResidueField::new(&m).unwrap();
        let f = &x(2, 0) * &x(2, 1);
        assert_eq!(k.reduce(&f).as_base(), Some(rat(-3, 2)));
    }

    #[test]
    fn contraction_recovers_prime() {
        let p = QIdeal::new(2, vec![&x(2, 0).pow(2) - &x(2, 1)]);
        let s = free_variables(&p).unwrap();
        let local = extend_scalars(&p, &s);
        assert!(contract(&local.ideal, &s).unwrap().equals(&p));
    }

    #[test]
    fn lift_clears_denominators() {
        let p = QIdeal::new(2, vec![&x(2, 0).pow(2) - &x(2, 1)]);
        let s = free_variables(&p).unwrap();
        assert_eq!(s.free(), &[1]);
        let local = extend_scalars(&p, &s);
        let k = ResidueField::new(&local.ideal).unwrap();
        let t = Qt::var(1, 0);
        let c = k.reduce(&QtPoly::var(1, 0)).inv().unwrap();
        let op = DiffOperator::monomial(1, Monomial::var(0), c);
        let w = lift_to_weyl(&op, &s);
        // 1/y = y/t, so the lift is x1·∂1 (up to the cleared factor t)
        let names = vec!["x1".to_string(), "x2".to_string()];
        assert_eq!(w.format_with(&names), "x1*d_x1");
        let back = weyl_to_residue(&w, &s, &k);
        assert_eq!(back.coeff(&Monomial::var(0)), k.reduce(&QtPoly::var(1, 0)));
        let _ = t;
    }
}
