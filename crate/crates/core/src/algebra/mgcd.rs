//! Greatest common divisors in nested polynomial rings over `Q`.
//!
//! Uses contents and primitive pseudo-remainder sequences, recursing through
//! the coefficient rings.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Polynomial, Ring, Q};

/// A unique factorization domain with normalized gcds.
pub trait GcdRing: Ring {
    /// Normalized gcd; zero only when both inputs are zero.
    fn gcd_with(&self, other: &Self) -> Self;

    /// The unit separating `self` from its normal form (one for zero).
    fn unit(&self) -> Self;

    fn normalize(&self) -> Self {
        self.exact_div(&self.unit()).expect("units divide")
    }
}

impl GcdRing for Q {
    fn gcd_with(&self, other: &Self) -> Self {
        if Ring::is_zero(self) && Ring::is_zero(other) {
            <Q as Ring>::zero()
        } else {
            <Q as Ring>::one()
        }
    }

    fn unit(&self) -> Self {
        if Ring::is_zero(self) {
            <Q as Ring>::one()
        } else {
            self.clone()
        }
    }
}

impl<R: GcdRing> Polynomial<R> {
    /// Normalized gcd of the coefficients.
    pub fn content(&self) -> R {
        self.coeffs()
            .iter()
            .fold(R::zero(), |acc, c| acc.gcd_with(c))
    }

    /// `self` divided by its content.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        self.map_coeffs(|x| x.exact_div(&c).expect("content divides"))
    }
}

impl<R: GcdRing> GcdRing for Polynomial<R> {
    fn gcd_with(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalize();
        }
        if other.is_zero() {
            return self.normalize();
        }
        let c = self.content().gcd_with(&other.content());
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let r = a.pseudo_divrem(&b).expect("b is nonzero").1;
            if r.is_zero() {
                break;
            }
            a = b;
            b = r.primitive_part();
        }
        (b.primitive_part() * Self::constant(c)).normalize()
    }

    fn unit(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => Self::constant(lc.unit()),
            None => Self::one(),
        }
    }
}

/// Rings whose elements are built from rational leaves.
pub trait RationalLeaves: Ring {
    fn for_each_leaf(&self, f: &mut dyn FnMut(&Q));
    fn scale_leaves(&self, q: &Q) -> Self;
}

impl RationalLeaves for Q {
    fn for_each_leaf(&self, f: &mut dyn FnMut(&Q)) {
        f(self)
    }
    fn scale_leaves(&self, q: &Q) -> Self {
        self * q
    }
}

impl<R: RationalLeaves> RationalLeaves for Polynomial<R> {
    fn for_each_leaf(&self, f: &mut dyn FnMut(&Q)) {
        for c in self.coeffs() {
            c.for_each_leaf(f);
        }
    }
    fn scale_leaves(&self, q: &Q) -> Self {
        self.map_coeffs(|c| c.scale_leaves(q))
    }
}

/// The primitive part with integer leaves of gcd one and a positive leading
/// leaf.
pub fn integral_primitive<T: GcdRing + RationalLeaves>(x: &T) -> T {
    let x = x.normalize();
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    x.for_each_leaf(&mut |q| {
        den = den.lcm(q.denom());
        num = num.gcd(q.numer());
    });
    if num.is_zero() {
        return x;
    }
    x.scale_leaves(&Q::new(den, num.abs()))
}
