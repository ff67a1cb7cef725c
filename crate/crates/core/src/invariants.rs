//! Igusa–Clebsch, Igusa and absolute invariants of binary sextics.
//!
//! `I2, I4, I6, I10` are the root-difference invariants of Igusa–Clebsch
//! (Mestre's `A', B', C', D'`). For `f = a6 x^6 + ... + a0` with roots `r_i`
//! and writing `(ij)` for `r_i - r_j`,
//!
//! * `I2  = a6^2  * sum_15 (12)^2 (34)^2 (56)^2`
//! * `I4  = a6^4  * sum_10 (12)^2 (23)^2 (31)^2 (45)^2 (56)^2 (64)^2`
//! * `I6  = a6^6  * sum_60 (12)^2 (23)^2 (31)^2 (45)^2 (56)^2 (64)^2 (14)^2 (25)^2 (36)^2`
//! * `I10 = a6^10 * prod_{i<j} (ij)^2 = disc(f)`
//!
//! evaluated here through their expansions in the coefficients, which also
//! cover quintics (a root at infinity).

use serde_json::{json, Value};

use crate::algebra::encode::Encode;
use crate::algebra::{discriminant, Field, Polynomial, Ring};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantsError {
    #[error("singular model: the sextic has a repeated root")]
    SingularModel,
    #[error("a genus-2 model needs degree 5 or 6, got {0:?}")]
    BadDegree(Option<usize>),
    #[error("weighted projective comparison of two zero tuples")]
    BothZero,
    #[error("J10 = 0: absolute invariants are undefined")]
    ZeroJ10,
}

/// `(I2, I4, I6, I10)`, weights `(2, 4, 6, 10)`.
#[derive(Debug, Clone, PartialEq)]
pub struct IgusaClebsch<F> {
    pub i2: F,
    pub i4: F,
    pub i6: F,
    pub i10: F,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Igusa<F> {
    pub j2: F,
    pub j4: F,
    pub j6: F,
    pub j8: F,
    pub j10: F,
}

/// `j1 = J2^5/J10`, `j2 = J2^3 J4/J10`, `j3 = J2^2 J6/J10`.
#[derive(Debug, Clone, PartialEq)]
pub struct Absolute<F> {
    pub j1: F,
    pub j2: F,
    pub j3: F,
}

type Term = (i64, [u8; 7]);

const I2_TERMS: &[Term] = &[
    (6, [0, 0, 0, 2, 0, 0, 0]),
    (-16, [0, 0, 1, 0, 1, 0, 0]),
    (40, [0, 1, 0, 0, 0, 1, 0]),
    (-240, [1, 0, 0, 0, 0, 0, 1]),
];

const I4_TERMS: &[Term] = &[
    (4, [0, 0, 2, 0, 2, 0, 0]),
    (-12, [0, 0, 2, 1, 0, 1, 0]),
    (48, [0, 0, 3, 0, 0, 0, 1]),
    (-12, [0, 1, 0, 1, 2, 0, 0]),
    (36, [0, 1, 0, 2, 0, 1, 0]),
    (4, [0, 1, 1, 0, 1, 1, 0]),
    (-180, [0, 1, 1, 1, 0, 0, 1]),
    (-80, [0, 2, 0, 0, 0, 2, 0]),
    (300, [0, 2, 0, 0, 1, 0, 1]),
    (48, [1, 0, 0, 0, 3, 0, 0]),
    (-180, [1, 0, 0, 1, 1, 1, 0]),
    (324, [1, 0, 0, 2, 0, 0, 1]),
    (300, [1, 0, 1, 0, 0, 2, 0]),
    (-504, [1, 0, 1, 0, 1, 0, 1]),
    (-540, [1, 1, 0, 0, 0, 1, 1]),
    (1620, [2, 0, 0, 0, 0, 0, 2]),
];

const I6_TERMS: &[Term] = &[
    (8, [0, 0, 2, 2, 2, 0, 0]),
    (-24, [0, 0, 2, 3, 0, 1, 0]),
    (-24, [0, 0, 3, 0, 3, 0, 0]),
    (76, [0, 0, 3, 1, 1, 1, 0]),
    (60, [0, 0, 3, 2, 0, 0, 1]),
    (-36, [0, 0, 4, 0, 0, 2, 0]),
    (-160, [0, 0, 4, 0, 1, 0, 1]),
    (-24, [0, 1, 0, 3, 2, 0, 0]),
    (72, [0, 1, 0, 4, 0, 1, 0]),
    (76, [0, 1, 1, 1, 3, 0, 0]),
    (-238, [0, 1, 1, 2, 1, 1, 0]),
    (-198, [0, 1, 1, 3, 0, 0, 1]),
    (28, [0, 1, 2, 0, 2, 1, 0]),
    (26, [0, 1, 2, 1, 0, 2, 0]),
    (492, [0, 1, 2, 1, 1, 0, 1]),
    (616, [0, 1, 3, 0, 0, 1, 1]),
    (-36, [0, 2, 0, 0, 4, 0, 0]),
    (26, [0, 2, 0, 1, 2, 1, 0]),
    (176, [0, 2, 0, 2, 0, 2, 0]),
    (330, [0, 2, 0, 2, 1, 0, 1]),
    (64, [0, 2, 1, 0, 1, 2, 0]),
    (-640, [0, 2, 1, 0, 2, 0, 1]),
    (-1860, [0, 2, 1, 1, 0, 1, 1]),
    (-900, [0, 2, 2, 0, 0, 0, 2]),
    (-320, [0, 3, 0, 0, 0, 3, 0]),
    (1600, [0, 3, 0, 0, 1, 1, 1]),
    (2250, [0, 3, 0, 1, 0, 0, 2]),
    (60, [1, 0, 0, 2, 3, 0, 0]),
    (-198, [1, 0, 0, 3, 1, 1, 0]),
    (162, [1, 0, 0, 4, 0, 0, 1]),
    (-160, [1, 0, 1, 0, 4, 0, 0]),
    (492, [1, 0, 1, 1, 2, 1, 0]),
    (330, [1, 0, 1, 2, 0, 2, 0]),
    (-468, [1, 0, 1, 2, 1, 0, 1]),
    (-640, [1, 0, 2, 0, 1, 2, 0]),
    (424, [1, 0, 2, 0, 2, 0, 1]),
    (-876, [1, 0, 2, 1, 0, 1, 1]),
    (-96, [1, 0, 3, 0, 0, 0, 2]),
    (616, [1, 1, 0, 0, 3, 1, 0]),
    (-1860, [1, 1, 0, 1, 1, 2, 0]),
    (-876, [1, 1, 0, 1, 2, 0, 1]),
    (1818, [1, 1, 0, 2, 0, 1, 1]),
    (1600, [1, 1, 1, 0, 0, 3, 0]),
    (3472, [1, 1, 1, 0, 1, 1, 1]),
    (3060, [1, 1, 1, 1, 0, 0, 2]),
    (-2240, [1, 2, 0, 0, 0, 2, 1]),
    (-18600, [1, 2, 0, 0, 1, 0, 2]),
    (-900, [2, 0, 0, 0, 2, 2, 0]),
    (-96, [2, 0, 0, 0, 3, 0, 1]),
    (2250, [2, 0, 0, 1, 0, 3, 0]),
    (3060, [2, 0, 0, 1, 1, 1, 1]),
    (-10044, [2, 0, 0, 2, 0, 0, 2]),
    (-18600, [2, 0, 1, 0, 0, 2, 1]),
    (20664, [2, 0, 1, 0, 1, 0, 2]),
    (59940, [2, 1, 0, 0, 0, 1, 2]),
    (-119880, [3, 0, 0, 0, 0, 0, 3]),
];

fn eval_terms<R: Ring>(terms: &[Term], a: &[R; 7]) -> R {
    terms.iter().fold(R::zero(), |acc, (c, e)| {
        let m = e
            .iter()
            .zip(a)
            .filter(|(k, _)| **k > 0)
            .fold(R::from_i64(*c), |m, (k, x)| m * x.pow(*k as u32));
        acc + m
    })
}

fn sextic_coeffs<R: Ring>(f: &Polynomial<R>) -> Result<[R; 7], InvariantsError> {
    match f.degree() {
        Some(5) | Some(6) => Ok(std::array::from_fn(|i| f.coeff(i))),
        d => Err(InvariantsError::BadDegree(d)),
    }
}

/// `I10` of the binary sextic, i.e. `disc(f)` for degree 6 and
/// `a5^2 disc(f)` for degree 5.
fn i10<R: Ring>(f: &Polynomial<R>) -> R {
    let d = discriminant(f).expect("degree at least 5");
    if f.degree() == Some(5) {
        f.coeff(5).square() * d
    } else {
        d
    }
}

/// Igusa–Clebsch invariants of `y^2 = f(x)` over any coefficient ring.
///
/// Degree 5 is read as a sextic with a root at infinity. No smoothness check.
pub fn igusa_clebsch_unchecked<R: Ring>(f: &Polynomial<R>) -> Result<IgusaClebsch<R>, InvariantsError> {
    let a = sextic_coeffs(f)?;
    Ok(IgusaClebsch {
        i2: eval_terms(I2_TERMS, &a),
        i4: eval_terms(I4_TERMS, &a),
        i6: eval_terms(I6_TERMS, &a),
        i10: i10(f),
    })
}

/// Igusa–Clebsch invariants of the genus-2 curve `y^2 = f(x)`.
pub fn igusa_clebsch<F: Field>(f: &Polynomial<F>) -> Result<IgusaClebsch<F>, InvariantsError> {
    let ic = igusa_clebsch_unchecked(f)?;
    if ic.i10.is_zero() {
        return Err(InvariantsError::SingularModel);
    }
    Ok(ic)
}

pub fn igusa_from_clebsch<F: Field>(ic: &IgusaClebsch<F>) -> Igusa<F> {
    let k = |n: i64| F::from_i64(n);
    let j2 = ic.i2.clone() / k(8);
    let j4 = (k(4) * j2.square() - ic.i4.clone()) / k(96);
    let j6 = (k(8) * j2.pow(3) - k(160) * j2.clone() * j4.clone() - ic.i6.clone()) / k(576);
    let j8 = (j2.clone() * j6.clone() - j4.square()) / k(4);
    let j10 = ic.i10.clone() / k(4096);
    Igusa { j2, j4, j6, j8, j10 }
}

pub fn clebsch_from_igusa<F: Field>(j: &Igusa<F>) -> IgusaClebsch<F> {
    let k = |n: i64| F::from_i64(n);
    IgusaClebsch {
        i2: k(8) * j.j2.clone(),
        i4: k(4) * j.j2.square() - k(96) * j.j4.clone(),
        i6: k(8) * j.j2.pow(3) - k(160) * j.j2.clone() * j.j4.clone() - k(576) * j.j6.clone(),
        i10: k(4096) * j.j10.clone(),
    }
}

pub fn absolute_invariants<F: Field>(j: &Igusa<F>) -> Result<Absolute<F>, InvariantsError> {
    let inv = j.j10.inv().ok_or(InvariantsError::ZeroJ10)?;
    Ok(Absolute {
        j1: j.j2.pow(5) * inv.clone(),
        j2: j.j2.pow(3) * j.j4.clone() * inv.clone(),
        j3: j.j2.square() * j.j6.clone() * inv,
    })
}

impl<R: Ring> IgusaClebsch<R> {
    pub fn map<S: Ring>(self, f: impl Fn(R) -> S) -> IgusaClebsch<S> {
        IgusaClebsch {
            i2: f(self.i2),
            i4: f(self.i4),
            i6: f(self.i6),
            i10: f(self.i10),
        }
    }

    pub fn from_array([i2, i4, i6, i10]: [R; 4]) -> Self {
        IgusaClebsch { i2, i4, i6, i10 }
    }

    pub fn from_i64s(v: [i64; 4]) -> Self {
        Self::from_array(v.map(R::from_i64))
    }

    pub fn to_array(&self) -> [R; 4] {
        [self.i2.clone(), self.i4.clone(), self.i6.clone(), self.i10.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.to_array().iter().all(Ring::is_zero)
    }
}

impl<R: Ring + Encode> IgusaClebsch<R> {
    pub fn to_json(&self) -> Value {
        json!({
            "invariants": self.to_array().iter().map(Encode::encode).collect::<Vec<_>>(),
            "weights": [2, 4, 6, 10],
        })
    }
}

/// Equality in the weighted projective space `P(2, 4, 6, 10)`.
///
/// True iff `v = (l^2 u2, l^4 u4, l^6 u6, l^10 u10)` for some nonzero `l`
/// in an algebraic closure. Decided by cross-multiplication only.
pub fn wp_equal<R: Ring>(u: &IgusaClebsch<R>, v: &IgusaClebsch<R>) -> Result<bool, InvariantsError> {
    // with mu = l^2 the weights become 1, 2, 3, 5
    const W: [u32; 4] = [1, 2, 3, 5];
    if u.is_zero() && v.is_zero() {
        return Err(InvariantsError::BothZero);
    }
    let (u, v) = (u.to_array(), v.to_array());
    if (0..4).any(|i| u[i].is_zero() != v[i].is_zero()) {
        return Ok(false);
    }
    let nz: Vec<usize> = (0..4).filter(|&i| !u[i].is_zero()).collect();
    for (n, &i) in nz.iter().enumerate() {
        for &k in &nz[n + 1..] {
            let g = gcd(W[i], W[k]);
            let (ei, ek) = (W[k] / g, W[i] / g);
            // v_i^{w_k} u_k^{w_i} = v_k^{w_i} u_i^{w_k}
            if v[i].pow(ei) * u[k].pow(ek) != v[k].pow(ek) * u[i].pow(ei) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Q};

    fn ic(v: [i64; 4]) -> IgusaClebsch<Q> {
        IgusaClebsch::from_i64s(v)
    }

    #[test]
    fn example_sextics() {
        let f: Polynomial<Q> = Polynomial::from_i64s(&[25, 0, 0, 25, 0, 0, 4]);
        let got = igusa_clebsch(&f).unwrap();
        assert_eq!(got, ic([-20250, 36450000, -176326875000, 83037656250000]));
        assert!(wp_equal(&got, &ic([-90, 720, -15480, 144])).unwrap());

        // x (x^2 + 1)(4x^2 + 3), a quintic
        let f: Polynomial<Q> = Polynomial::from_i64s(&[0, 3, 0, 7, 0, 4]);
        assert_eq!(igusa_clebsch(&f).unwrap(), ic([774, 9648, 2763360, 27648]));
    }

    #[test]
    fn weighted_projective_comparison() {
        let u = ic([-90, 720, -15480, 144]);
        let v = ic([-1440, 184320, -63406080, 150994944]);
        assert!(wp_equal(&u, &v).unwrap());
        assert!(wp_equal(&u, &u).unwrap());
        assert!(!wp_equal(&ic([1, 1, 1, 1]), &ic([1, 1, 1, 2])).unwrap());
        assert!(!wp_equal(&ic([1, 0, 1, 1]), &ic([1, 1, 1, 1])).unwrap());
        assert!(wp_equal(&ic([0, 0, 0, 3]), &ic([0, 0, 0, 7])).unwrap());
        assert_eq!(wp_equal(&ic([0; 4]), &ic([0; 4])), Err(InvariantsError::BothZero));
    }

    #[test]
    fn errors() {
        let sq: Polynomial<Q> = Polynomial::from_i64s(&[1, 0, 1]) * Polynomial::from_i64s(&[1, 0, 1])
            * Polynomial::from_i64s(&[0, 1, 1]);
        assert_eq!(igusa_clebsch(&sq), Err(InvariantsError::SingularModel));
        let cubic: Polynomial<Q> = Polynomial::from_i64s(&[1, 0, 0, 1]);
        assert_eq!(igusa_clebsch(&cubic), Err(InvariantsError::BadDegree(Some(3))));
    }

    #[test]
    fn zero_cascade_and_round_trip() {
        let z = IgusaClebsch::from_array([rat(0, 1), rat(0, 1), rat(0, 1), rat(5, 1)]);
        let j = igusa_from_clebsch(&z);
        assert!(j.j2.is_zero() && j.j4.is_zero());
        assert_eq!(j.j10, rat(5, 4096));
        assert_eq!(clebsch_from_igusa(&j), z);
        let u = ic([-90, 720, -15480, 144]);
        let j = igusa_from_clebsch(&u);
        assert_eq!(j.j2.clone() * j.j6.clone() - j.j4.square(), rat(4, 1) * j.j8.clone());
        assert_eq!(clebsch_from_igusa(&j), u);
    }
}
