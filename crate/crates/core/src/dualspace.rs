//! Differential operators with constant coefficients in a residue field, and
//! truncated local dual spaces computed from Macaulay matrices.
//!
//! An operator `D = Σ c_a ∂^a` acts on the right on a polynomial `f` by
//! `D·f = Σ c_a [∂^a f]`, where `[·]` is the class in the residue field of
//! the maximal ideal. Right multiplication by `x_i - p_i` at a rational
//! point is the formal derivative `∂D/∂(∂_i)` (see [`DiffOperator::antidifferentiate`]).

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::field::{Field, Rational};
use crate::groebner::Ideal;
use crate::linalg::{nullspace, Subspace};
use crate::monomial::{monomials_up_to, Monomial};
use crate::poly::Polynomial;
use crate::{Error, Result};

/// A maximal ideal together with exact arithmetic in its residue field.
pub trait LocalPoint<F: Field> {
    /// The residue field `κ`.
    type Kappa: Field;

    fn nvars(&self) -> usize;

    fn maximal_ideal(&self) -> Ideal<F>;

    /// Class of `f` in `κ`.
    fn reduce(&self, f: &Polynomial<F>) -> Self::Kappa;

    fn embed(&self, c: &F) -> Self::Kappa;

    /// `[κ : F]`.
    fn residue_degree(&self) -> usize;

    /// Coordinates of `k` on a fixed `F`-basis of `κ` (length `residue_degree`).
    fn coordinates(&self, k: &Self::Kappa) -> Vec<F>;

    /// Coordinates on the point, when the residue field is `F` itself.
    fn rational_coordinates(&self) -> Option<Vec<F>>;

    /// Rows of the Macaulay matrix: one row per product `g·u` with `u` a
    /// monomial of degree at most `order`, one column per entry of `columns`
    /// (the `∂`-monomials of degree at most `order`), entry `[∂^a (g·u)]`.
    fn macaulay_rows(&self, gens: &[Polynomial<F>], order: u32, columns: &[Monomial]) -> Vec<Vec<Self::Kappa>> {
        let n = self.nvars();
        let mut rows = Vec::new();
        for g in gens {
            for u in monomials_up_to(n, order) {
                let h = g.mul_term(&u, &F::one());
                let derivs = derivative_table(&h, columns);
                rows.push(columns.iter().map(|a| self.reduce(&derivs[a])).collect());
            }
        }
        rows
    }
}

/// `∂^a h` for every `a` in `columns`, which must be closed under lowering
/// exponents and sorted by degree.
fn derivative_table<F: Field>(h: &Polynomial<F>, columns: &[Monomial]) -> HashMap<Monomial, Polynomial<F>> {
    let mut table: HashMap<Monomial, Polynomial<F>> = HashMap::with_capacity(columns.len());
    for a in columns {
        if a.is_one() {
            table.insert(a.clone(), h.clone());
            continue;
        }
        let i = a.exponents().iter().position(|&e| e > 0).expect("non-unit");
        let (_, lower) = a.derive(i).expect("positive exponent");
        let d = table
            .get(&lower)
            .map(|p| p.derivative(i))
            .unwrap_or_else(|| h.derivative_multi(a));
        table.insert(a.clone(), d);
    }
    table
}

/// A rational point `p ∈ F^n`; the residue field is `F` and reduction is
/// evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoint<F> {
    coords: Vec<F>,
}

impl<F: Field> RationalPoint<F> {
    pub fn new(coords: Vec<F>) -> Self {
        RationalPoint { coords }
    }

    pub fn origin(n: usize) -> Self {
        RationalPoint {
            coords: vec![F::zero(); n],
        }
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }
}

impl<F: Field> LocalPoint<F> for RationalPoint<F> {
    type Kappa = F;

    fn nvars(&self) -> usize {
        self.coords.len()
    }

    fn maximal_ideal(&self) -> Ideal<F> {
        Ideal::point(&self.coords)
    }

    fn reduce(&self, f: &Polynomial<F>) -> F {
        f.evaluate(&self.coords)
    }

    fn embed(&self, c: &F) -> F {
        c.clone()
    }

    fn residue_degree(&self) -> usize {
        1
    }

    fn coordinates(&self, k: &F) -> Vec<F> {
        vec![k.clone()]
    }

    fn rational_coordinates(&self) -> Option<Vec<F>> {
        Some(self.coords.clone())
    }

    /// Works in coordinates centered at the point: the entry for column
    /// `∂^a` is `a!` times the coefficient of `(x-p)^a`, and products whose
    /// order of vanishing exceeds `order` give zero rows and are skipped.
    fn macaulay_rows(&self, gens: &[Polynomial<F>], order: u32, columns: &[Monomial]) -> Vec<Vec<F>> {
        let n = self.coords.len();
        let weights: Vec<F> = columns
            .iter()
            .map(|a| F::from_rational(&Rational::from_integer(a.factorial())))
            .collect();
        let mut rows = Vec::new();
        for g in gens {
            let centered = g.translate(&self.coords).truncate(order);
            let Some(low) = centered.low_degree() else {
                continue;
            };
            if low > order {
                continue;
            }
            for u in monomials_up_to(n, order - low) {
                let h = centered.mul_term(&u, &F::one()).truncate(order);
                rows.push(
                    columns
                        .iter()
                        .zip(&weights)
                        .map(|(a, w)| h.coeff(a) * w.clone())
                        .collect(),
                );
            }
        }
        rows
    }
}

/// `Σ c_a ∂^a` with coefficients in a field `K`.
#[derive(Clone, PartialEq, Eq)]
pub struct DiffOperator<K> {
    nvars: usize,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Field> DiffOperator<K> {
    pub fn zero(nvars: usize) -> Self {
        DiffOperator {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    /// The identity operator (evaluation).
    pub fn identity(nvars: usize) -> Self {
        Self::monomial(nvars, Monomial::one(), K::one())
    }

    pub fn monomial(nvars: usize, alpha: Monomial, c: K) -> Self {
        Self::from_terms(nvars, [(alpha, c)])
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, K)>>(nvars: usize, it: I) -> Self {
        let mut terms: BTreeMap<Monomial, K> = BTreeMap::new();
        for (a, c) in it {
            assert!(a.support_len() <= nvars, "operator outside ring");
            let s = match terms.remove(&a) {
                Some(old) => old + c,
                None => c,
            };
            if !s.is_zero() {
                terms.insert(a, s);
            }
        }
        DiffOperator { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    pub fn coeff(&self, alpha: &Monomial) -> K {
        self.terms.get(alpha).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `|a|` present; zero for the zero operator.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Left multiplication by a scalar.
    pub fn scale(&self, c: &K) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(a, k)| (a.clone(), c.clone() * k.clone())),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(a, k)| (a.clone(), k.clone())),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-K::one()))
    }

    pub fn map_coeffs<L: Field>(&self, f: impl Fn(&K) -> L) -> DiffOperator<L> {
        DiffOperator::from_terms(self.nvars, self.terms.iter().map(|(a, k)| (a.clone(), f(k))))
    }

    /// Formal derivative with respect to the symbol `∂_i`. At a rational
    /// point this is right multiplication by `x_i - p_i`.
    pub fn antidifferentiate(&self, i: usize) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms
                .iter()
                .filter_map(|(a, k)| a.derive(i).map(|(e, lower)| (lower, k.clone() * K::from_int(e as i64)))),
        )
    }

    /// The right action `D·f`, as a residue class.
    pub fn apply<F: Field, P: LocalPoint<F, Kappa = K>>(&self, f: &Polynomial<F>, point: &P) -> K {
        assert_eq!(f.nvars(), self.nvars, "operator ring mismatch");
        let mut acc = K::zero();
        for (a, c) in &self.terms {
            let d = f.derivative_multi(a);
            if d.is_zero() {
                continue;
            }
            acc = acc + c.clone() * point.reduce(&d);
        }
        acc
    }

    /// Coefficient vector on the given `∂`-monomial columns.
    pub fn to_vector(&self, columns: &[Monomial]) -> Vec<K> {
        debug_assert!(self.terms.keys().all(|a| columns.contains(a)));
        columns.iter().map(|a| self.coeff(a)).collect()
    }

    pub fn from_vector(nvars: usize, columns: &[Monomial], v: &[K]) -> Self {
        Self::from_terms(nvars, columns.iter().cloned().zip(v.iter().cloned()))
    }
}

impl<K: Field> fmt::Display for DiffOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        write!(f, "{}", format_operator(self, &names))
    }
}

impl<K: Field> fmt::Debug for DiffOperator<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Text form with `d_<name>` symbols, terms by descending `∂`-degree.
pub fn format_operator<K: Field>(op: &DiffOperator<K>, names: &[String]) -> String {
    let mut terms: Vec<(Monomial, K)> = op.terms.iter().map(|(a, k)| (a.clone(), k.clone())).collect();
    terms.sort_by(|a, b| crate::monomial::MonomialOrder::GrevLex.compare(&b.0, &a.0));
    crate::io::format_operator_terms(
        &terms,
        names,
        |k: &K| k.as_rational().map(|q| (q, Monomial::one())),
        |k: &K| k.format_named(&[]),
    )
}

/// Echelon basis of a truncated dual space `D^(d)_m[I]`.
///
/// Columns are the `∂`-monomials of degree at most `order` in ascending
/// grevlex order, so each basis operator's pivot is its lowest monomial.
#[derive(Clone, Debug)]
pub struct DualBasis<K> {
    nvars: usize,
    order: u32,
    space: Subspace<K>,
}

impl<K: Field> DualBasis<K> {
    pub fn from_operators(nvars: usize, order: u32, ops: &[DiffOperator<K>]) -> Self {
        let columns = monomials_up_to(nvars, order);
        for op in ops {
            assert!(op.order() <= order, "operator order exceeds truncation");
        }
        let vecs = ops.iter().map(|o| o.to_vector(&columns)).collect();
        DualBasis {
            nvars,
            order,
            space: Subspace::new(columns.len(), vecs),
        }
    }

    fn from_space(nvars: usize, order: u32, space: Subspace<K>) -> Self {
        DualBasis { nvars, order, space }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn columns(&self) -> Vec<Monomial> {
        monomials_up_to(self.nvars, self.order)
    }

    pub fn operators(&self) -> Vec<DiffOperator<K>> {
        let cols = self.columns();
        self.space
            .basis()
            .iter()
            .map(|v| DiffOperator::from_vector(self.nvars, &cols, v))
            .collect()
    }

    /// The space as vectors on the columns of truncation order `order`.
    fn lifted(&self, order: u32) -> Subspace<K> {
        if order == self.order {
            return self.space.clone();
        }
        Self::from_operators(self.nvars, order, &self.operators()).space
    }

    pub fn contains(&self, op: &DiffOperator<K>) -> bool {
        if op.order() > self.order {
            return op.is_zero();
        }
        self.space.contains(&op.to_vector(&self.columns()))
    }

    pub fn contains_basis(&self, other: &DualBasis<K>) -> bool {
        other.operators().iter().all(|o| self.contains(o))
    }

    /// Equality of spans, regardless of the recorded truncation orders.
    pub fn span_equals(&self, other: &DualBasis<K>) -> bool {
        self.dim() == other.dim() && self.contains_basis(other) && other.contains_basis(self)
    }

    pub fn sum(&self, other: &DualBasis<K>) -> DualBasis<K> {
        let d = self.order.max(other.order);
        Self::from_space(self.nvars, d, self.lifted(d).sum(&other.lifted(d)))
    }

    pub fn intersection(&self, other: &DualBasis<K>) -> DualBasis<K> {
        let d = self.order.max(other.order);
        Self::from_space(self.nvars, d, self.lifted(d).intersection(&other.lifted(d)))
    }

    /// The operators of order at most `k` in the span.
    pub fn truncate(&self, k: u32) -> DualBasis<K> {
        if k >= self.order {
            return self.clone();
        }
        let cols = self.columns();
        let low = Subspace::new(
            cols.len(),
            cols.iter()
                .enumerate()
                .filter(|(_, a)| a.degree() <= k)
                .map(|(i, _)| {
                    let mut v = vec![K::zero(); cols.len()];
                    v[i] = K::one();
                    v
                })
                .collect(),
        );
        let inter = self.space.intersection(&low);
        let ops: Vec<DiffOperator<K>> = inter
            .basis()
            .iter()
            .map(|v| DiffOperator::from_vector(self.nvars, &cols, v))
            .collect();
        Self::from_operators(self.nvars, k, &ops)
    }

    /// Echelon representatives of a complement of `self` inside `larger`.
    pub fn complement_in(&self, larger: &DualBasis<K>) -> Vec<DiffOperator<K>> {
        let d = self.order.max(larger.order);
        let cols = monomials_up_to(self.nvars, d);
        self.lifted(d)
            .complement_in(&larger.lifted(d))
            .iter()
            .map(|v| DiffOperator::from_vector(self.nvars, &cols, v))
            .collect()
    }
}

fn check_ring<F: Field, P: LocalPoint<F>>(nvars: usize, point: &P) -> Result<()> {
    if nvars != point.nvars() {
        return Err(Error::RingMismatch {
            left: nvars,
            right: point.nvars(),
        });
    }
    Ok(())
}

/// `D^(d)_m[I]`: operators of order at most `d` with `D·(g·u) ∈ m` for every
/// generator `g` and monomial `u` of degree at most `d`.
pub fn truncated_dual<F: Field, P: LocalPoint<F>>(ideal: &Ideal<F>, point: &P, d: u32) -> Result<DualBasis<P::Kappa>> {
    check_ring(ideal.nvars(), point)?;
    let n = ideal.nvars();
    let columns = monomials_up_to(n, d);
    let rows = point.macaulay_rows(ideal.gens(), d, &columns);
    let kernel = nullspace(rows, columns.len());
    Ok(DualBasis::from_space(n, d, Subspace::new(columns.len(), kernel)))
}

/// `dim D^(d+1) = dim D^(d)`.
pub fn dual_stabilized<F: Field, P: LocalPoint<F>>(ideal: &Ideal<F>, point: &P, d: u32) -> Result<bool> {
    Ok(truncated_dual(ideal, point, d + 1)?.dim() == truncated_dual(ideal, point, d)?.dim())
}

/// `{f : D·f ∈ m for all D ∈ B}`, which equals `I + m^(d+1)` for
/// `B = D^(d)_m[I]`. Computed on the standard monomials of `m^(d+1)`.
pub fn annihilator_ideal<F: Field, P: LocalPoint<F>>(basis: &DualBasis<P::Kappa>, point: &P) -> Result<Ideal<F>> {
    check_ring(basis.nvars(), point)?;
    let n = basis.nvars();
    let power = point.maximal_ideal().power(basis.order() + 1);
    let standard = power.gb().standard_monomials();
    if !standard.finite {
        return Err(Error::NotMaximal(
            "power of the point ideal is not zero-dimensional".into(),
        ));
    }
    let monos = standard.monomials;
    let ops = basis.operators();
    let mut rows: Vec<Vec<F>> = Vec::new();
    for op in &ops {
        let values: Vec<Vec<F>> = monos
            .iter()
            .map(|s| point.coordinates(&op.apply(&Polynomial::term(n, s.clone(), F::one()), point)))
            .collect();
        for b in 0..point.residue_degree() {
            rows.push(values.iter().map(|v| v[b].clone()).collect());
        }
    }
    let kernel = nullspace(rows, monos.len());
    let mut gens: Vec<Polynomial<F>> = kernel
        .into_iter()
        .map(|v| Polynomial::from_terms(n, monos.iter().cloned().zip(v)))
        .collect();
    gens.extend(power.gens().iter().cloned());
    Ok(Ideal::new(n, gens))
}
