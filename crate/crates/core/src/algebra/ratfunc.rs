use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgebraError, Field, Polynomial, Ring};

/// A quotient of polynomials `num / den`.
///
/// Arithmetic does not cancel common factors; use [`RationalFunction::reduced`]
/// over a field. Equality (`same_as`) is by cross-multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<R> {
    num: Polynomial<R>,
    den: Polynomial<R>,
}

impl<R: Ring> RationalFunction<R> {
    pub fn new(num: Polynomial<R>, den: Polynomial<R>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZeroPolynomial);
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: Polynomial<R>) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn numerator(&self) -> &Polynomial<R> {
        &self.num
    }

    pub fn denominator(&self) -> &Polynomial<R> {
        &self.den
    }

    /// `max(deg num, deg den)`; the degree of the induced map of the line
    /// when numerator and denominator are coprime.
    pub fn map_degree(&self) -> usize {
        self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0))
    }

    pub fn derivative(&self) -> Self {
        RationalFunction {
            num: self.num.derivative() * self.den.clone() - self.num.clone() * self.den.derivative(),
            den: self.den.clone() * self.den.clone(),
        }
    }

    /// Equality of the underlying functions.
    pub fn same_as(&self, other: &Self) -> bool {
        self.num.clone() * other.den.clone() == other.num.clone() * self.den.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `g(self)` for a polynomial `g`, with denominator `den^deg(g)`.
    pub fn substitute_into(&self, g: &Polynomial<R>) -> Self {
        let k = g.degree().unwrap_or(0);
        let mut num = Polynomial::zero();
        let mut npow = Polynomial::one();
        let dpows: Vec<Polynomial<R>> = std::iter::successors(Some(Polynomial::one()), |p| {
            Some(p.clone() * self.den.clone())
        })
        .take(k + 1)
        .collect();
        for i in 0..=k {
            num = num + (npow.clone() * dpows[k - i].clone()).scale(&g.coeff(i));
            npow = npow * self.num.clone();
        }
        RationalFunction {
            num,
            den: dpows[k].clone(),
        }
    }

    pub fn scale(&self, c: &R) -> Self {
        RationalFunction {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Result<RationalFunction<S>, AlgebraError> {
        RationalFunction::new(self.num.map_coeffs(&f), self.den.map_coeffs(&f))
    }
}

impl<F: Field> RationalFunction<F> {
    /// Cancel the gcd and make the denominator monic.
    pub fn reduced(&self) -> Self {
        let g = self.num.gcd(&self.den);
        let num = self.num.divrem(&g).expect("gcd nonzero").0;
        let den = self.den.divrem(&g).expect("gcd nonzero").0;
        let lc = den.leading_coefficient().expect("nonzero").inv().expect("unit");
        RationalFunction {
            num: num.scale(&lc),
            den: den.scale(&lc),
        }
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x);
        d.inv().map(|i| self.num.eval(x) * i)
    }

    /// True when numerator and denominator share no root.
    pub fn is_coprime(&self) -> bool {
        self.num.gcd(&self.den).degree() == Some(0)
    }
}

impl<R: Ring> Add for RationalFunction<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        RationalFunction {
            num: self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            den: self.den * rhs.den,
        }
    }
}

impl<R: Ring> Sub for RationalFunction<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for RationalFunction<R> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<R: Ring> Mul for RationalFunction<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        RationalFunction {
            num: self.num * rhs.num,
            den: self.den * rhs.den,
        }
    }
}
