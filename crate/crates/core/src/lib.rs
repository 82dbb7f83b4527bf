//! Local dual spaces of polynomial ideals over the rationals.
//!
//! The crate computes truncated local (Macaulay) dual spaces at maximal
//! ideals, excess dual spaces at associated primes, Noetherian operator
//! certificates with a differential membership test, and canonical
//! (Ortiz) primary components. All arithmetic is exact.
//!
//! Algebra is generic over the coefficient [`Field`]; the aliases below name
//! the instances used in practice.

pub mod decomp;
pub mod dualspace;
pub mod error;
pub mod field;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod localize;
pub mod monomial;
pub mod oracle;
pub mod poly;
pub mod ratfun;

pub use decomp::{
    excess_dual, localized_excess, membership, noetherian_certificate, noetherian_certificate_with, ortiz_component,
    recover_component, Certificate, Component, ExcessDual, Membership, OrtizComponent, Recovered, Witness,
};
pub use dualspace::{
    annihilator_ideal, dual_stabilized, truncated_dual, DiffOperator, DualBasis, LocalPoint, RationalPoint,
};
pub use error::{Error, Result};
pub use field::{Field, Rational};
pub use groebner::{GroebnerBasis, Ideal, QuotientDimension, StandardMonomialSet};
pub use localize::{
    extend_scalars, free_variables, lift_to_weyl, weyl_to_residue, Residue, ResidueField, Splitting, WeylOperator,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use ratfun::RationalFunction;

/// The rationals.
pub type Q = Rational;
/// Rational functions in the free variables of a prime.
pub type Qt = RationalFunction;
/// Polynomials over the rationals.
pub type QPoly = Polynomial<Q>;
/// Polynomials over `Q(t)` in the bound variables of a prime.
pub type QtPoly = Polynomial<Qt>;
/// Ideals of `Q[x]`.
pub type QIdeal = Ideal<Q>;
/// Ideals of `Q(t)[y]`.
pub type QtIdeal = Ideal<Qt>;
/// Residue fields of maximal ideals of `Q(t)[y]`.
pub type Kappa = Residue<Qt>;
