//! Dense univariate polynomials over a pluggable coefficient ring.
//!
//! `Polynomial<R>` is itself a [`Ring`], so `Polynomial<Polynomial<Q>>` is
//! `Q[a][x]` and so on. Coefficients are stored in ascending order of degree
//! with trailing zeros trimmed; the zero polynomial has no coefficients and
//! degree `None`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use super::{AlgebraError, Field, Ring};

#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    /// `coeffs[i]` is the coefficient of `x^i`.
    pub fn new(coeffs: Vec<R>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| R::from_i64(c)).collect())
    }

    pub fn constant(c: R) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(R::one(), 1)
    }

    /// `c x^deg`.
    pub fn monomial(c: R, deg: usize) -> Self {
        let mut coeffs = vec![R::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Ring::is_zero) {
            self.coeffs.pop();
        }
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(R::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&R> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Value of the binary form `sum c_i x^i z^(n-i)` of formal degree `n`.
    pub fn eval_homogeneous(&self, x: &R, z: &R, n: usize) -> R {
        assert!(self.degree().map_or(true, |d| d <= n));
        let mut acc = R::zero();
        let mut zpow = R::one();
        for i in (0..=n).rev() {
            acc = acc + self.coeff(i) * x.pow(i as u32) * zpow.clone();
            zpow = zpow * z.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * R::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![R::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// `self(g(x))`.
    pub fn compose(&self, g: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| acc * g.clone() + Self::constant(c.clone()))
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial::new(self.coeffs.iter().map(f).collect())
    }

    /// Pseudo-division: returns `(q, r)` with
    /// `lc(g)^(deg f - deg g + 1) f = q g + r` and `deg r < deg g`.
    pub fn pseudo_divrem(&self, g: &Self) -> Result<(Self, Self), AlgebraError> {
        let dg = g.degree().ok_or(AlgebraError::DivisionByZeroPolynomial)?;
        let lc = g.coeffs[dg].clone();
        let Some(df) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if df < dg {
            return Ok((Self::zero(), self.clone()));
        }
        let mut r = self.clone();
        let mut q = Self::zero();
        let mut e = df - dg + 1;
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let t = Self::monomial(r.coeffs[dr].clone(), dr - dg);
            q = q.scale(&lc) + t.clone();
            r = r.scale(&lc) - t * g.clone();
            e -= 1;
        }
        let s = lc.pow(e as u32);
        let (q, r) = (q.scale(&s), r.scale(&s));
        Ok((q, r))
    }

    /// Long division that only ever divides by `lc(g)` exactly in `R`.
    ///
    /// Succeeds for monic `g` over any ring.
    pub fn divrem_exact(&self, g: &Self) -> Result<(Self, Self), AlgebraError> {
        let dg = g.degree().ok_or(AlgebraError::DivisionByZeroPolynomial)?;
        let lc = &g.coeffs[dg];
        let mut r = self.clone();
        let mut qc = vec![R::zero(); self.coeffs.len().saturating_sub(dg)];
        while let Some(dr) = r.degree() {
            if dr < dg {
                break;
            }
            let c = r.coeffs[dr]
                .exact_div(lc)
                .ok_or(AlgebraError::InexactDivision)?;
            let t = Self::monomial(c.clone(), dr - dg);
            qc[dr - dg] = c;
            r = r - t * g.clone();
            debug_assert!(r.degree().map_or(true, |d| d < dr));
        }
        Ok((Self::new(qc), r))
    }
}

impl<F: Field> Polynomial<F> {
    /// Euclidean division over a field: `f = q g + r` with `deg r < deg g`.
    pub fn divrem(&self, g: &Self) -> Result<(Self, Self), AlgebraError> {
        self.divrem_exact(g)
    }

    pub fn rem(&self, g: &Self) -> Result<Self, AlgebraError> {
        Ok(self.divrem(g)?.1)
    }

    /// Scaled to leading coefficient one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// `f / gcd(f, f')`, monic.
    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.divrem(&g).expect("gcd is nonzero").0.monic()
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[F]) -> Self {
        roots.iter().fold(Self::constant(F::one()), |acc, r| {
            acc * Self::new(vec![-r.clone(), F::one()])
        })
    }
}

impl<R: Ring> Add for Polynomial<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = a.clone() + b;
        }
        Self::new(long)
    }
}

impl<R: Ring> Sub for Polynomial<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Polynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<R: Ring> Mul for Polynomial<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![R::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(out)
    }
}

impl<R: Ring> Ring for Polynomial<R> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Self::constant(R::one())
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(R::from_i64(n))
    }
    fn from_bigint(n: &BigInt) -> Self {
        Self::constant(R::from_bigint(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        match self.divrem_exact(divisor) {
            Ok((q, r)) if r.is_zero() => Some(q),
            _ => None,
        }
    }
}

/// Generators of a nested polynomial ring, innermost variable first.
///
/// `vars3::<Q>()` returns `(a, b, c)` as elements of `Q[a][b][c]`.
pub fn vars3<R: Ring>() -> [Polynomial<Polynomial<Polynomial<R>>>; 3] {
    let a = Polynomial::constant(Polynomial::constant(Polynomial::<R>::x()));
    let b = Polynomial::constant(Polynomial::x());
    let c = Polynomial::x();
    [a, b, c]
}

/// `(a, b)` as elements of `R[a][b]`.
pub fn vars2<R: Ring>() -> [Polynomial<Polynomial<R>>; 2] {
    [Polynomial::constant(Polynomial::<R>::x()), Polynomial::x()]
}

/// Lift a polynomial over `R` to one over `R[t]` (constant coefficients).
pub fn lift<R: Ring>(p: &Polynomial<R>) -> Polynomial<Polynomial<R>> {
    p.map_coeffs(|c| Polynomial::constant(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, with_prime, Fp, Q};

    type P = Polynomial<Q>;

    #[test]
    fn degrees_and_trimming() {
        assert_eq!(P::zero().degree(), None);
        assert_eq!(P::from_i64s(&[1, 0, 0]).degree(), Some(0));
        assert_eq!(P::from_i64s(&[0, 0, 3]).degree(), Some(2));
        assert_eq!((P::x() - P::x()).degree(), None);
    }

    #[test]
    fn divrem_trivial_and_error() {
        let (q, r) = P::from_i64s(&[0, 0, 1]).divrem(&P::x()).unwrap();
        assert_eq!(q, P::x());
        assert!(r.is_zero());
        assert_eq!(
            P::x().divrem(&P::zero()),
            Err(AlgebraError::DivisionByZeroPolynomial)
        );
    }

    #[test]
    fn divrem_over_f13() {
        with_prime(13, || {
            let f = Polynomial::<Fp>::from_i64s(&[1, 2, 0, 1]);
            let g = Polynomial::<Fp>::from_i64s(&[1, 1]);
            let (q, r) = f.divrem(&g).unwrap();
            assert_eq!(q, Polynomial::from_i64s(&[3, -1, 1]));
            assert_eq!(r, Polynomial::constant(Fp::new(11)));
        })
        .unwrap();
    }

    #[test]
    fn pseudo_division_identity() {
        let f = P::from_i64s(&[1, 2, 3, 4, 5]);
        let g = P::from_i64s(&[7, 0, 3]);
        let (q, r) = f.pseudo_divrem(&g).unwrap();
        let scale = rat(3, 1).pow(3);
        assert_eq!(f.scale(&scale), q * g.clone() + r.clone());
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = P::from_i64s(&[-1, 1]);
        let b = P::from_i64s(&[2, 1]);
        let f = a.clone() * a.clone() * b.clone();
        assert!(!f.is_squarefree());
        assert_eq!(f.squarefree_part(), a.clone() * b.clone());
        assert_eq!(f.gcd(&(a.clone() * P::from_i64s(&[5, 1]))), a);
    }

    #[test]
    fn composition_and_derivative() {
        let f = P::from_i64s(&[1, 0, 1]);
        let g = P::from_i64s(&[1, 1]);
        assert_eq!(f.compose(&g), P::from_i64s(&[2, 2, 1]));
        assert_eq!(f.derivative(), P::from_i64s(&[0, 2]));
    }

    #[test]
    fn nested_ring_exact_division() {
        let [a, b, _] = vars3::<Q>();
        let p = (a.clone() + b.clone()) * (a.clone() - b.clone());
        assert_eq!(p.exact_div(&(a.clone() + b.clone())), Some(a.clone() - b.clone()));
        assert_eq!(p.exact_div(&(a.clone() + b.clone() + Ring::one())), None);
    }
}
