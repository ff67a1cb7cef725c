//! Exact arithmetic kernel.
//!
//! Every structure in this crate is generic over the [`Ring`] and [`Field`]
//! traits defined here. Concrete coefficient domains are:
//!
//! * [`BigRational`](num_rational::BigRational), the rationals;
//! * [`Fp`], a prime field whose modulus is taken from the enclosing
//!   [`PrimeContext`];
//! * [`QuadExt`], a quadratic extension `B(sqrt d)` of any of the above, with
//!   the aliases [`QOmega`] (`d = -3`), [`QSqrt3`] (`d = 3`) and [`Fp2`];
//! * [`Polynomial`], which is itself a ring and nests to give multivariate
//!   polynomial rings such as `Q[a, b, c][x]`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

pub mod encode;
pub mod expr;
pub mod fp;
pub mod mgcd;
pub mod poly;
pub mod quad;
pub mod ratfunc;
pub mod rational;
pub mod resultant;
pub mod roots;

pub use fp::{with_prime, Fp, PrimeContext};
pub use mgcd::{integral_primitive, GcdRing, RationalLeaves};
pub use poly::Polynomial;
pub use quad::{Fp2, NegThree, QOmega, QSqrt3, QuadExt, QuadParam, Three};
pub use ratfunc::RationalFunction;
pub use rational::{rat, Q};
pub use resultant::{determinant, discriminant, resultant};
pub use roots::RootFinding;

/// Errors raised by the arithmetic kernel.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("resultant of two zero polynomials")]
    BothZero,
    #[error("discriminant needs degree >= 2, got {0:?}")]
    DegreeTooSmall(Option<usize>),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("characteristic {0} is not supported (must not be 2 or 3)")]
    BadCharacteristic(u64),
    #[error("no primitive cube root of unity in this field")]
    NoCubeRoot,
    #[error("inexact division")]
    InexactDivision,
}

/// A commutative ring with identity.
///
/// Constants are produced without reference to an instance, so every
/// implementation must know its own context (see [`PrimeContext`] for the
/// prime fields).
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_bigint(n: &BigInt) -> Self;
    fn is_zero(&self) -> bool;

    /// Quotient `self / divisor` when it exists in the ring.
    ///
    /// In a field this is ordinary division (`None` for a zero divisor). In a
    /// polynomial ring it is exact long division.
    fn exact_div(&self, divisor: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

/// A commutative field.
pub trait Field: Ring + Div<Output = Self> {
    fn inv(&self) -> Option<Self>;

    /// A primitive cube root of unity `w` (so `1 + w + w^2 = 0`), if the field
    /// has one.
    fn cube_root_of_unity() -> Option<Self>;

    /// A square root in the field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    /// Characteristic of the field (0 for number fields).
    fn characteristic() -> u64;
}

/// Integer power with sign handling for negative exponents in a field.
pub fn powi<F: Field>(x: &F, e: i32) -> Option<F> {
    if e >= 0 {
        Some(x.pow(e as u32))
    } else {
        x.inv().map(|i| i.pow(e.unsigned_abs()))
    }
}
