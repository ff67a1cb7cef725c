//! Quadratic extensions `B(sqrt d)` of a base field `B`.

use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::fp::Fp;
use super::rational::Q;
use super::{Field, Ring};

/// Fixes the non-square `d` adjoined by a [`QuadExt`].
pub trait QuadParam<B: Field>: 'static {
    /// The adjoined square `d`; must not be a square in `B`.
    fn d() -> B;
}

/// `d = -3`, so `QuadExt<Q, NegThree>` is `Q(w)` with `1 + w + w^2 = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NegThree;
/// `d = 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Three;
/// The least quadratic non-residue of the current prime field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpNonResidue;

impl QuadParam<Q> for NegThree {
    fn d() -> Q {
        Q::from_i64(-3)
    }
}

impl QuadParam<Q> for Three {
    fn d() -> Q {
        Q::from_i64(3)
    }
}

impl QuadParam<Fp> for FpNonResidue {
    fn d() -> Fp {
        Fp::elements()
            .find(|x| !x.is_square())
            .expect("every odd prime field has a non-residue")
    }
}

/// `Q(w) = Q(sqrt -3)`.
pub type QOmega = QuadExt<Q, NegThree>;
/// `Q(sqrt 3)`.
pub type QSqrt3 = QuadExt<Q, Three>;
/// `F_{p^2}`, built over the current prime field.
pub type Fp2 = QuadExt<Fp, FpNonResidue>;

/// The element `a + b sqrt(d)`.
pub struct QuadExt<B, D> {
    a: B,
    b: B,
    _d: PhantomData<fn() -> D>,
}

impl<B: Field, D: QuadParam<B>> QuadExt<B, D> {
    pub fn new(a: B, b: B) -> Self {
        QuadExt { a, b, _d: PhantomData }
    }

    pub fn from_base(a: B) -> Self {
        Self::new(a, B::zero())
    }

    /// The generator `sqrt(d)`.
    pub fn sqrt_d() -> Self {
        Self::new(B::zero(), B::one())
    }

    pub fn d() -> B {
        D::d()
    }

    /// Rational (base-field) part.
    pub fn re(&self) -> &B {
        &self.a
    }

    /// Coefficient of `sqrt(d)`.
    pub fn im(&self) -> &B {
        &self.b
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -self.b.clone())
    }

    pub fn norm(&self) -> B {
        self.a.square() - D::d() * self.b.square()
    }

    /// Returns the base-field value when the `sqrt(d)` part vanishes.
    pub fn to_base(&self) -> Option<B> {
        self.b.is_zero().then(|| self.a.clone())
    }
}

impl QOmega {
    /// `w = (-1 + sqrt(-3)) / 2`.
    pub fn omega() -> Self {
        let half = super::rat(1, 2);
        QuadExt::new(-half.clone(), half)
    }
}

impl<B: Field, D> Clone for QuadExt<B, D> {
    fn clone(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: self.b.clone(),
            _d: PhantomData,
        }
    }
}

impl<B: Field, D> PartialEq for QuadExt<B, D> {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl<B: Field, D: QuadParam<B>> fmt::Debug for QuadExt<B, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) + ({:?})*sqrt({:?})", self.a, self.b, D::d())
    }
}

impl<B: Field, D: QuadParam<B>> Add for QuadExt<B, D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<B: Field, D: QuadParam<B>> Sub for QuadExt<B, D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<B: Field, D: QuadParam<B>> Mul for QuadExt<B, D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let a = self.a.clone() * rhs.a.clone() + D::d() * self.b.clone() * rhs.b.clone();
        let b = self.a * rhs.b + self.b * rhs.a;
        Self::new(a, b)
    }
}

impl<B: Field, D: QuadParam<B>> Neg for QuadExt<B, D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl<B: Field, D: QuadParam<B>> Div for QuadExt<B, D> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in quadratic extension")
    }
}

impl<B: Field, D: QuadParam<B>> Ring for QuadExt<B, D> {
    fn zero() -> Self {
        Self::from_base(B::zero())
    }
    fn one() -> Self {
        Self::from_base(B::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::from_base(B::from_i64(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::from_base(B::from_bigint(n))
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inv().map(|i| self.clone() * i)
    }
}

impl<B: Field, D: QuadParam<B>> Field for QuadExt<B, D> {
    fn inv(&self) -> Option<Self> {
        let n = self.norm().inv()?;
        Some(Self::new(self.a.clone() * n.clone(), -self.b.clone() * n))
    }

    fn cube_root_of_unity() -> Option<Self> {
        if let Some(w) = B::cube_root_of_unity() {
            return Some(Self::from_base(w));
        }
        // sqrt(-3) = s sqrt(d) with s^2 = -3/d
        let s = (B::from_i64(-3) / D::d()).sqrt()?;
        let two = B::from_i64(2);
        Some(Self::new(-B::one() / two.clone(), s / two))
    }

    fn sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = self.a.sqrt() {
                return Some(Self::from_base(r));
            }
            return (self.a.clone() / D::d()).sqrt().map(|y| Self::new(B::zero(), y));
        }
        let n = self.norm().sqrt()?;
        let two = B::from_i64(2);
        for n in [n.clone(), -n] {
            let Some(x) = ((self.a.clone() + n) / two.clone()).sqrt() else {
                continue;
            };
            if x.is_zero() {
                continue;
            }
            let y = self.b.clone() / (two.clone() * x.clone());
            return Some(Self::new(x, y));
        }
        None
    }

    fn characteristic() -> u64 {
        B::characteristic()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, with_prime};

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = QOmega::omega();
        assert_eq!(QOmega::one() + w.clone() + w.square(), QOmega::zero());
        assert_eq!(w.pow(3), QOmega::one());
        assert_eq!(QOmega::cube_root_of_unity(), Some(w));
        assert!(QSqrt3::cube_root_of_unity().is_none());
    }

    #[test]
    fn inverse_and_sqrt() {
        let x = QSqrt3::new(rat(-1, 1), rat(1, 1));
        assert_eq!(x.clone() * x.inv().unwrap(), QSqrt3::one());
        let sq = x.square();
        let r = sq.sqrt().unwrap();
        assert_eq!(r.square(), sq);
        assert_eq!(QSqrt3::from_i64(3).sqrt(), Some(QSqrt3::sqrt_d()));
        assert!(QSqrt3::from_i64(2).sqrt().is_none());
        let m3 = QOmega::from_i64(-3);
        assert_eq!(m3.sqrt().unwrap().square(), m3);
    }

    #[test]
    fn fp2_has_cube_roots_of_unity() {
        with_prime(11, || {
            let w = Fp2::cube_root_of_unity().unwrap();
            assert_eq!(Fp2::one() + w.clone() + w.square(), Fp2::zero());
            let x = Fp2::new(Fp::new(3), Fp::new(5));
            assert_eq!(x.clone() * x.inv().unwrap(), Fp2::one());
        })
        .unwrap();
    }
}
