//! Coefficient fields.
//!
//! Every algebraic routine in the crate is generic over [`Field`]. The
//! concrete fields are the rationals [`Rational`], rational functions
//! [`RationalFunction`](crate::ratfun::RationalFunction) and residue fields
//! [`Residue`](crate::localize::Residue).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

/// An exact field of characteristic zero.
///
/// Elements are kept in a canonical form so that `==` is equality in the
/// field. Zero and one are context free: they combine with elements of any
/// instance of the field (for example any residue field of the same base).
pub trait Field:
    Clone
    + PartialEq
    + Eq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Image of a rational number.
    fn from_rational(q: &Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    /// `self / other`; `None` when `other` is zero.
    fn checked_div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self.clone() * o)
    }

    /// The rational number this element equals, if any.
    fn as_rational(&self) -> Option<Rational>;

    /// Text form using `names` for any variables the element involves.
    fn format_named(&self, names: &[String]) -> String {
        let _ = names;
        self.to_string()
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Rational number from a numerator/denominator pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Inverse of `c` in its field.
pub fn field_invert<F: Field>(c: &F) -> crate::Result<F> {
    c.inv().ok_or(crate::Error::ZeroDivision)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_inverse() {
        assert_eq!(field_invert(&rat(3, 4)).unwrap(), rat(4, 3));
        assert_eq!(field_invert(&rat(0, 1)), Err(crate::Error::ZeroDivision));
    }

    #[test]
    fn rationals_are_canonical() {
        assert_eq!(rat(2, 4), rat(-1, -2));
        assert!((rat(1, 3) - rat(1, 3)).is_zero());
    }
}
