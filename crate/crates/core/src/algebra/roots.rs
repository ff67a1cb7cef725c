//! Roots of univariate polynomials in the supported fields.
//!
//! Over `F_p` this is Rabin's algorithm. Over `Q` and `Q(sqrt d)` the
//! polynomial (or its norm down to `Q`) is reduced modulo a suitable prime,
//! its roots there are lifted `p`-adically, and factors of degree one and
//! two over `Q` are recovered from products of lifted roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fp::{current_modulus, is_prime, PrimeContext};
use super::{Field, Fp, Polynomial, QuadExt, QuadParam, Ring, Q};

pub trait RootFinding: Field {
    /// The distinct roots of `f` in this field, in a canonical order.
    ///
    /// The zero polynomial and the constants have no roots.
    fn roots(f: &Polynomial<Self>) -> Vec<Self>;
}

fn powmod(base: &Polynomial<Fp>, mut e: u64, m: &Polynomial<Fp>) -> Polynomial<Fp> {
    let mut acc = Polynomial::one();
    let mut b = base.rem(m).expect("nonzero modulus");
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc * b.clone()).rem(m).expect("nonzero modulus");
        }
        b = (b.clone() * b).rem(m).expect("nonzero modulus");
        e >>= 1;
    }
    acc
}

fn split_linear(g: Polynomial<Fp>, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
    match g.degree() {
        None | Some(0) => {}
        Some(1) => out.push(-g.coeff(0) / g.coeff(1)),
        Some(n) => loop {
            let delta = Fp::from_u64(rng.gen_range(0..p));
            let shifted = Polynomial::new(vec![delta, Fp::one()]);
            let h = powmod(&shifted, (p - 1) / 2, &g) - Polynomial::one();
            let d = h.gcd(&g);
            let k = d.degree().unwrap_or(0);
            if k > 0 && k < n {
                let rest = g.divrem(&d).expect("nonzero").0;
                split_linear(d, p, rng, out);
                split_linear(rest, p, rng, out);
                return;
            }
        },
    }
}

impl RootFinding for Fp {
    fn roots(f: &Polynomial<Fp>) -> Vec<Fp> {
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let p = current_modulus().expect("inside a prime context");
        let f = f.monic();
        let xp = powmod(&Polynomial::x(), p, &f);
        let g = (xp - Polynomial::x()).gcd(&f);
        let mut out = Vec::new();
        let mut rng = ChaCha8Rng::seed_from_u64(p);
        split_linear(g, p, &mut rng, &mut out);
        out.sort_by_key(|r| r.value());
        out
    }
}

/// Primitive integer polynomial with the same roots as the squarefree part
/// of `f`.
fn primitive_squarefree(f: &Polynomial<Q>) -> Vec<BigInt> {
    let f = f.squarefree_part();
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Q::from_integer(den.clone())).to_integer())
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
    if ints.last().is_some_and(|c| c.is_negative()) {
        ints.iter_mut().for_each(|c| *c = -c.clone());
    }
    ints
}

fn eval_mod(n: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    n.iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn inverse_mod(x: &BigInt, m: &BigInt) -> BigInt {
    let e = x.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    e.x.mod_floor(m)
}

fn symmetric(x: BigInt, m: &BigInt) -> BigInt {
    let x = x.mod_floor(m);
    if &x * 2 > *m {
        x - m
    } else {
        x
    }
}

/// Linear and monic quadratic factors over `Q` of a squarefree primitive
/// integer polynomial `n`; quadratic factors are searched only when
/// `quad_d` is given, using a prime at which `quad_d` is a square.
fn small_factors(n: &[BigInt], quad_d: Option<i64>) -> (Vec<Q>, Vec<(Q, Q)>) {
    let m = n.len() - 1;
    let lc = n[m].clone();
    let as_q: Polynomial<Q> = Polynomial::new(n.iter().map(|c| Q::from_integer(c.clone())).collect());

    let mut p = 5u64;
    let lifted = loop {
        p += 1;
        if !is_prime(p) || (&lc % p).is_zero() {
            continue;
        }
        let _ctx = PrimeContext::enter(p).expect("prime above 3");
        if let Some(d) = quad_d {
            let d = Fp::new(d);
            if d.is_zero() || !d.is_square() {
                continue;
            }
        }
        let np: Polynomial<Fp> = Polynomial::new(n.iter().map(Fp::from_bigint).collect());
        if !np.is_squarefree() {
            continue;
        }
        break Fp::roots(&np);
    };

    let norm2: BigInt = n.iter().map(|c| c * c).sum();
    let bound = lc.abs() * (BigInt::one() << m) * (norm2.sqrt() + 1u32);
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while modulus <= &bound * &bound * 2u32 {
        modulus *= &pb;
    }
    let deriv: Vec<BigInt> = (1..=m).map(|i| &n[i] * i).collect();
    let roots: Vec<BigInt> = lifted
        .iter()
        .map(|r| {
            let mut x = BigInt::from(r.value());
            let mut prec = pb.clone();
            while prec < modulus {
                prec = (&prec * &prec).min(modulus.clone());
                let step = eval_mod(n, &x, &prec) * inverse_mod(&eval_mod(&deriv, &x, &prec), &prec);
                x = (x - step).mod_floor(&prec);
            }
            x
        })
        .collect();

    let lcq = Q::from_integer(lc.clone());
    let mut linear = Vec::new();
    for r in &roots {
        let c = symmetric(&lc * r, &modulus);
        let root = Q::new(c, lc.clone());
        if Ring::is_zero(&as_q.eval(&root)) {
            linear.push(root);
        }
    }
    let mut quadratic = Vec::new();
    if quad_d.is_some() {
        for i in 0..roots.len() {
            for j in i + 1..roots.len() {
                let s = symmetric(-(&lc) * (&roots[i] + &roots[j]), &modulus);
                let t = symmetric(&lc * &roots[i] * &roots[j], &modulus);
                let cand = Polynomial::new(vec![
                    Q::from_integer(t),
                    Q::from_integer(s),
                    lcq.clone(),
                ]);
                if as_q.rem(&cand).expect("nonzero").is_zero() {
                    let cand = cand.monic();
                    quadratic.push((cand.coeff(1), cand.coeff(0)));
                }
            }
        }
    }
    (linear, quadratic)
}

impl RootFinding for Q {
    fn roots(f: &Polynomial<Q>) -> Vec<Q> {
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = small_factors(&primitive_squarefree(f), None).0;
        out.sort();
        out.dedup();
        out
    }
}

impl<D: QuadParam<Q>> RootFinding for QuadExt<Q, D> {
    fn roots(f: &Polynomial<Self>) -> Vec<Self> {
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let conj = f.map_coeffs(|c| c.conj());
        let norm = (f.clone() * conj).map_coeffs(|c| c.re().clone());
        let d = D::d();
        let d = i64::try_from(d.to_integer()).expect("small integer d");
        let (lin, quad) = small_factors(&primitive_squarefree(&norm), Some(d));
        let two = Self::from_i64(2);
        let mut cands: Vec<Self> = lin.into_iter().map(Self::from_base).collect();
        for (s, t) in quad {
            let disc = Self::from_base(s.clone() * s.clone() - Q::from_i64(4) * t);
            if let Some(r) = disc.sqrt() {
                let s = Self::from_base(s);
                cands.push((-s.clone() + r.clone()) / two.clone());
                cands.push((-s - r) / two.clone());
            }
        }
        let mut out: Vec<Self> = cands.into_iter().filter(|c| f.eval(c).is_zero()).collect();
        out.sort_by(|x, y| (x.re(), x.im()).cmp(&(y.re(), y.im())));
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, with_prime, QOmega, QSqrt3};

    #[test]
    fn prime_field_roots() {
        with_prime(13, || {
            let f = Polynomial::from_roots(&[Fp::new(2), Fp::new(5), Fp::new(11)])
                * Polynomial::from_i64s(&[2, 0, 1]);
            let r = Fp::roots(&f);
            assert_eq!(r, vec![Fp::new(2), Fp::new(5), Fp::new(11)]);
            assert!(Fp::roots(&Polynomial::from_i64s(&[2, 0, 1])).is_empty());
        })
        .unwrap();
    }

    #[test]
    fn rational_roots() {
        let f = Polynomial::from_roots(&[rat(-3, 7), rat(5, 2), rat(5, 2)])
            * Polynomial::from_i64s(&[-2, 0, 1]);
        assert_eq!(Q::roots(&f), vec![rat(-3, 7), rat(5, 2)]);
        assert!(Q::roots(&Polynomial::from_i64s(&[1, 0, 1])).is_empty());
    }

    #[test]
    fn quadratic_field_roots() {
        let w = QOmega::omega();
        let r1 = QOmega::new(rat(1, 3), rat(-2, 5));
        let f = Polynomial::from_roots(&[w.clone(), r1.clone(), QOmega::from_i64(4)]);
        let mut want = vec![w, r1, QOmega::from_i64(4)];
        want.sort_by(|x, y| (x.re(), x.im()).cmp(&(y.re(), y.im())));
        assert_eq!(QOmega::roots(&f), want);
        // x^3 - 2 has no root in Q(w)
        assert!(QOmega::roots(&Polynomial::from_i64s(&[-2, 0, 0, 1])).is_empty());
        let g: Polynomial<QSqrt3> = Polynomial::from_i64s(&[-2, 2, 1]);
        let r = QSqrt3::roots(&g);
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|x| g.eval(x).is_zero()));
    }
}
