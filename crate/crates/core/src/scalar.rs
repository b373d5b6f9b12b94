//! Exact scalar fields.
//!
//! Every computation in this crate is an exact identity check, so the scalar
//! type must be an exact field of characteristic zero. [`Scalar`] is
//! implemented for arbitrary-precision rationals ([`num_rational::BigRational`])
//! and for machine-word rationals ([`num_rational::Rational64`]); the latter
//! panics on overflow and is only meant for small examples.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::{BigRational, Rational64};
use num_traits::{NumRef, Signed, Zero};

/// An exact field of characteristic zero.
pub trait Scalar:
    NumRef + std::ops::Neg<Output = Self> + Clone + Debug + Display + FromStr + Send + Sync + 'static
{
    fn from_i64(v: i64) -> Self;

    /// `Some(r)` with `r * r == self` when `self` is a square in the field.
    fn sqrt_exact(&self) -> Option<Self>;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }
}

impl Scalar for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        // gcd(p, q) = 1, so p/q is a square iff p*q is an integer square.
        let prod = self.numer() * self.denom();
        let root = prod.sqrt();
        if &root * &root == prod {
            Some(BigRational::new(root, self.denom().clone()))
        } else {
            None
        }
    }
}

impl Scalar for Rational64 {
    fn from_i64(v: i64) -> Self {
        Rational64::from_integer(v)
    }

    fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let prod = i128::from(*self.numer()) * i128::from(*self.denom());
        let root = prod.sqrt();
        if root * root == prod {
            Some(Rational64::new(i64::try_from(root).ok()?, *self.denom()))
        } else {
            None
        }
    }
}

/// Parses a rational written as `p` or `p/q`.
pub fn parse_scalar<F: Scalar>(s: &str) -> Option<F> {
    s.trim().parse::<F>().ok()
}
