//! Exact coefficient domains.
//!
//! Everything in the kernel is generic over [`Ring`] (add, multiply, zero
//! test) and [`Domain`] (a ring with exact division). Three concrete domains
//! are provided: [`Rational`], the multivariate parameter polynomials
//! [`ParamPoly`], and [`Fraction`], which inverts powers of one designated
//! element of a domain.

mod fraction;
mod param;
mod rational;

use std::fmt::{Debug, Display};

use crate::error::Result;

pub use fraction::Fraction;
pub use param::ParamPoly;
pub use rational::Rational;

/// A commutative ring with exact arithmetic and exact zero test.
///
/// `zero()` and `one()` carry no context, so domains that need one (like the
/// variable list of [`ParamPoly`]) must accept context-free constants in
/// every operation.
pub trait Ring: Clone + PartialEq + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_i64(n: i64) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// `(-1)^exp · self`.
    fn signed(&self, exp: u64) -> Self {
        if exp.is_multiple_of(2) {
            self.clone()
        } else {
            self.neg()
        }
    }
}

/// An integral domain in which exact division is decidable.
pub trait Domain: Ring {
    /// Returns `q` with `q · divisor = self`, or `DivisionNotExact`.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;
}

/// A domain where every nonzero element is invertible.
pub trait Field: Domain {
    fn inv(&self) -> Result<Self>;
}

/// Multiplies `value` by `base^exp` when `exp >= 0`, otherwise divides
/// exactly by `base^(-exp)`.
pub fn scale_by_power<D: Domain>(value: &D, base: &D, exp: i64) -> Result<D> {
    if exp >= 0 {
        Ok(value.mul(&base.pow(exp as u32)))
    } else {
        value.exact_div(&base.pow((-exp) as u32))
    }
}
