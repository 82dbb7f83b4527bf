//! Excess dual spaces, Noetherian operator certificates, the differential
//! membership test, recovery of primary components from dual data, and the
//! canonical (Ortiz) primary component at a maximal ideal.

use crate::dualspace::{annihilator_ideal, truncated_dual, DiffOperator, DualBasis};
use crate::field::Field;
use crate::groebner::Ideal;
use crate::localize::{contract, extend_scalars, free_variables, lift_to_weyl, weyl_to_residue};
use crate::localize::{LocalizedIdeal, Residue, ResidueField, Splitting, WeylOperator};
use crate::{Error, QIdeal, QPoly, Qt, Result};

/// Orders beyond which the stopping test gives up.
pub const MAX_ORDER: u32 = 64;

/// The excess dual space `D[I] / D[I : m^∞]` at a maximal ideal `m`.
#[derive(Clone, Debug)]
pub struct ExcessDual<F: Field> {
    pub kappa: ResidueField<F>,
    /// Stabilization order `d*`.
    pub order: u32,
    /// `D^(d*)[I]`.
    pub dual: DualBasis<Residue<F>>,
    /// `D^(d*)[I : m^∞]`.
    pub sat_dual: DualBasis<Residue<F>>,
    /// Echelon coset representatives of the excess, lowest order first.
    pub representatives: Vec<DiffOperator<Residue<F>>>,
    /// `(d, dim D^(d)[I], dim D^(d)[I : m^∞])` for each order examined.
    pub history: Vec<(u32, usize, usize)>,
}

impl<F: Field> ExcessDual<F> {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// `d* + 1`: the least `k` with `I = (I : m^∞) ∩ (I + m^k)`.
    pub fn nil(&self) -> u32 {
        self.order + 1
    }
}

/// The excess dual of `ideal` at the maximal ideal `m`, given the
/// saturation `sat = ideal : m^∞`.
///
/// The order `d*` is the least `d` with `I = sat ∩ (I + m^(d+1))`, checked
/// with Gröbner bases; beyond it every truncation has the same excess. The
/// excess dimensions at `d*, ..., d* + stall` are recomputed from the
/// truncated duals and must agree.
pub fn excess_dual<F: Field>(ideal: &Ideal<F>, m: &Ideal<F>, sat: &Ideal<F>, stall: u32) -> Result<ExcessDual<F>> {
    if stall == 0 {
        return Err(Error::InvalidArgument("stall must be at least 1".into()));
    }
    if ideal.nvars() != m.nvars() || ideal.nvars() != sat.nvars() {
        return Err(Error::RingMismatch {
            left: ideal.nvars(),
            right: m.nvars().min(sat.nvars()),
        });
    }
    if !sat.contains_ideal(ideal) {
        return Err(Error::Inconsistent("the saturation does not contain the ideal".into()));
    }
    let kappa = ResidueField::new(m)?;
    let mut order = None;
    for d in 0..=MAX_ORDER {
        let truncated = ideal.sum(&m.power(d + 1))?;
        if sat.intersect(&truncated)?.equals(ideal) {
            order = Some(d);
            break;
        }
    }
    let order = order.ok_or_else(|| {
        Error::Inconsistent(format!(
            "no stabilization up to order {MAX_ORDER}; is the saturation correct?"
        ))
    })?;

    let mut history = Vec::new();
    let mut first = None;
    for d in order..=order + stall {
        let di = truncated_dual(ideal, &kappa, d)?;
        let ds = truncated_dual(sat, &kappa, d)?;
        history.push((d, di.dim(), ds.dim()));
        if first.is_none() {
            first = Some((di, ds));
        }
    }
    let excess: Vec<usize> = history.iter().map(|&(_, a, b)| a - b).collect();
    if excess.iter().any(|&e| e != excess[0]) {
        return Err(Error::Inconsistent(format!(
            "excess dimension changes after the stopping order: {excess:?}"
        )));
    }
    let (dual, sat_dual) = first.expect("at least one order");
    let representatives = sat_dual.complement_in(&dual);
    Ok(ExcessDual {
        kappa,
        order,
        dual,
        sat_dual,
        representatives,
        history,
    })
}

/// Per-prime data of a certificate.
#[derive(Clone, Debug)]
pub struct Component {
    pub prime: QIdeal,
    pub splitting: Splitting,
    /// Operators with coefficients in `Q[x]`, acting through `∂_y` only.
    pub operators: Vec<WeylOperator>,
    pub nil: Option<u32>,
}

/// Noetherian operators of an ideal: for each listed prime, operators whose
/// vanishing modulo the prime characterizes membership.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub vars: Vec<String>,
    pub ideal: QIdeal,
    pub components: Vec<Component>,
}

impl Certificate {
    pub fn nvars(&self) -> usize {
        self.ideal.nvars()
    }
}

/// The excess dual of `I` at `p` after localizing at the splitting.
pub fn localized_excess(
    ideal: &QIdeal,
    p: &QIdeal,
    s: &Splitting,
    stall: u32,
) -> Result<(ExcessDual<Qt>, LocalizedIdeal)> {
    let sat = ideal.saturate(p)?;
    let li = extend_scalars(ideal, s);
    let lp = extend_scalars(p, s);
    let ls = extend_scalars(&sat, s);
    let ex = excess_dual(&li.ideal, &lp.ideal, &ls.ideal, stall)?;
    Ok((ex, li))
}

fn component(ideal: &QIdeal, p: &QIdeal, s: Splitting) -> Result<Component> {
    if p.nvars() != ideal.nvars() {
        return Err(Error::RingMismatch {
            left: ideal.nvars(),
            right: p.nvars(),
        });
    }
    let (ex, _) = localized_excess(ideal, p, &s, 1)?;
    let operators = ex.representatives.iter().map(|d| lift_to_weyl(d, &s)).collect();
    Ok(Component {
        prime: p.clone(),
        splitting: s,
        operators,
        nil: Some(ex.nil()),
    })
}

/// Certificate for `I` from its associated primes, with free variables
/// chosen by [`free_variables`].
pub fn noetherian_certificate(ideal: &QIdeal, primes: &[QIdeal]) -> Result<Certificate> {
    let with: Vec<(QIdeal, Option<Splitting>)> = primes.iter().map(|p| (p.clone(), None)).collect();
    noetherian_certificate_with(ideal, &with)
}

/// As [`noetherian_certificate`], with an optional splitting per prime.
/// Primes are processed concurrently; output keeps the input order.
pub fn noetherian_certificate_with(ideal: &QIdeal, primes: &[(QIdeal, Option<Splitting>)]) -> Result<Certificate> {
    if primes.is_empty() {
        return Err(Error::EmptyPrimeList);
    }
    let results: Vec<Result<Component>> = std::thread::scope(|scope| {
        let handles: Vec<_> = primes
            .iter()
            .map(|(p, s)| {
                scope.spawn(move || {
                    let s = match s {
                        Some(s) => s.clone(),
                        None => free_variables(p)?,
                    };
                    component(ideal, p, s)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("certificate worker panicked"))
            .collect()
    });
    let components = results.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(Certificate {
        vars: (1..=ideal.nvars()).map(|i| format!("x{i}")).collect(),
        ideal: ideal.clone(),
        components,
    })
}

/// A failed membership condition: `D·f` has nonzero normal form modulo the
/// prime of a component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub component: usize,
    pub operator: usize,
    pub value: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Member,
    NotMember(Witness),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

/// `f ∈ I` iff `D·f ∈ p` for every component `p` and operator `D`.
pub fn membership(f: &QPoly, cert: &Certificate) -> Result<Membership> {
    if f.nvars() != cert.nvars() {
        return Err(Error::RingMismatch {
            left: f.nvars(),
            right: cert.nvars(),
        });
    }
    for (ci, c) in cert.components.iter().enumerate() {
        let gb = c.prime.gb();
        for (oi, op) in c.operators.iter().enumerate() {
            let value = gb.normal_form(&op.apply(f));
            if !value.is_zero() {
                return Ok(Membership::NotMember(Witness {
                    component: ci,
                    operator: oi,
                    value,
                }));
            }
        }
    }
    Ok(Membership::Member)
}

/// A component recovered from dual data.
#[derive(Clone, Debug)]
pub struct Recovered {
    pub ideal: QIdeal,
    /// False when some operator had order at least the bound and was cut.
    pub complete: bool,
}

/// `{f : D·f ∈ m for all D}` for `D` in the span of the component's
/// operators and `sat_dual` (a dual basis of `I : p^∞` over the same
/// residue field), truncated to order `bound - 1`, together with `m^bound`,
/// contracted back to `Q[x]`.
pub fn recover_component(entry: &Component, sat_dual: &DualBasis<Residue<Qt>>, bound: u32) -> Result<Recovered> {
    if bound == 0 {
        return Err(Error::InvalidArgument("degree bound must be positive".into()));
    }
    let s = &entry.splitting;
    let lp = extend_scalars(&entry.prime, s);
    let kappa = ResidueField::new(&lp.ideal)?;
    let ops: Vec<DiffOperator<Residue<Qt>>> = entry
        .operators
        .iter()
        .map(|w| weyl_to_residue(w, s, &kappa))
        .chain(sat_dual.operators())
        .collect();
    let top = ops.iter().map(DiffOperator::order).max().unwrap_or(0);
    let combined = DualBasis::from_operators(s.bound().len(), top.max(bound - 1), &ops);
    let truncated = combined.truncate(bound - 1);
    let local = annihilator_ideal(&truncated, &kappa)?;
    Ok(Recovered {
        ideal: contract(&local, s)?,
        complete: top < bound,
    })
}

/// The canonical primary component at `p`.
#[derive(Clone, Debug)]
pub struct OrtizComponent {
    pub nil: u32,
    /// `I + m^nil` in the localized ring.
    pub localized: LocalizedIdeal,
    /// `I + p^nil` in `Q[x]`, when `p` is maximal there.
    pub global: Option<QIdeal>,
    pub excess: ExcessDual<Qt>,
}

/// `Q = I + m^nil` with `nil` the stabilization order of the excess dual
/// plus one. Fails when `p` is not associated to `I`.
pub fn ortiz_component(ideal: &QIdeal, p: &QIdeal) -> Result<OrtizComponent> {
    let s = free_variables(p)?;
    let (ex, li) = localized_excess(ideal, p, &s, 1)?;
    if ex.dim() == 0 {
        return Err(Error::NotAssociated);
    }
    let nil = ex.nil();
    let lp = extend_scalars(p, &s);
    let localized = LocalizedIdeal {
        splitting: s.clone(),
        ideal: li.ideal.sum(&lp.ideal.power(nil))?,
    };
    let global = s.free().is_empty().then(|| ideal.sum(&p.power(nil))).transpose()?;
    Ok(OrtizComponent {
        nil,
        localized,
        global,
        excess: ex,
    })
}
