//! Prime fields `F_p` with a runtime modulus.
//!
//! The modulus lives in a thread-local set by [`PrimeContext`]; every element
//! also records its modulus, and mixing elements from different fields panics.

use std::cell::Cell;
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{AlgebraError, Field, Ring};

thread_local! {
    static MODULUS: Cell<u64> = const { Cell::new(0) };
}

/// Guard that makes `F_p` the current prime field on this thread.
///
/// Contexts nest; dropping the guard restores the previous modulus.
#[must_use = "the prime field is only active while the guard is alive"]
pub struct PrimeContext {
    prev: u64,
    p: u64,
    _not_send: PhantomData<*const ()>,
}

impl PrimeContext {
    pub fn enter(p: u64) -> Result<Self, AlgebraError> {
        if p == 2 || p == 3 {
            return Err(AlgebraError::BadCharacteristic(p));
        }
        if !is_prime(p) || p >= 1 << 62 {
            return Err(AlgebraError::NotPrime(p));
        }
        let prev = MODULUS.with(|m| m.replace(p));
        Ok(PrimeContext {
            prev,
            p,
            _not_send: PhantomData,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Drop for PrimeContext {
    fn drop(&mut self) {
        MODULUS.with(|m| m.set(self.prev));
    }
}

/// Run `f` with `F_p` as the current prime field.
pub fn with_prime<T>(p: u64, f: impl FnOnce() -> T) -> Result<T, AlgebraError> {
    let _ctx = PrimeContext::enter(p)?;
    Ok(f())
}

/// The modulus of the innermost active [`PrimeContext`], if any.
pub fn current_modulus() -> Option<u64> {
    let p = MODULUS.with(|m| m.get());
    (p != 0).then_some(p)
}

fn modulus() -> u64 {
    current_modulus().expect("prime field element created outside a PrimeContext")
}

/// Element of `F_p`, stored as its least non-negative residue.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    v: u64,
    p: u64,
}

impl Fp {
    /// Residue of `v` in the current prime field.
    pub fn new(v: i64) -> Self {
        let p = modulus();
        Fp {
            v: v.rem_euclid(p as i64) as u64,
            p,
        }
    }

    pub fn from_u64(v: u64) -> Self {
        let p = modulus();
        Fp { v: v % p, p }
    }

    pub fn value(&self) -> u64 {
        self.v
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Fp { v: 1 % self.p, p: self.p };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Reduction of a rational number; `None` when `p` divides the denominator.
    pub fn from_rational(q: &super::Q) -> Option<Self> {
        let d = <Fp as Ring>::from_bigint(q.denom());
        d.inv().map(|d| <Fp as Ring>::from_bigint(q.numer()) * d)
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(&self) -> bool {
        self.v == 0 || self.pow_u64((self.p - 1) / 2).v == 1
    }

    /// All elements of the current field, in increasing order of residue.
    pub fn elements() -> impl Iterator<Item = Fp> {
        let p = modulus();
        (0..p).map(move |v| Fp { v, p })
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.p, other.p, "mixing elements of F_{} and F_{}", self.p, other.p);
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.v, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = self.v + rhs.v;
        Fp {
            v: if s >= self.p { s - self.p } else { s },
            p: self.p,
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp {
            v: if self.v >= rhs.v {
                self.v - rhs.v
            } else {
                self.v + self.p - rhs.v
            },
            p: self.p,
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        Fp {
            v: ((self.v as u128 * rhs.v as u128) % self.p as u128) as u64,
            p: self.p,
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            v: if self.v == 0 { 0 } else { self.p - self.v },
            p: self.p,
        }
    }
}

impl Div for Fp {
    type Output = Fp;
    fn div(self, rhs: Fp) -> Fp {
        self * rhs.inv().expect("division by zero in F_p")
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp { v: 0, p: modulus() }
    }
    fn one() -> Self {
        Fp::new(1)
    }
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn from_bigint(n: &BigInt) -> Self {
        let p = modulus();
        let r = n.mod_floor(&BigInt::from(p));
        Fp {
            v: r.to_u64().expect("residue fits in u64"),
            p,
        }
    }
    fn is_zero(&self) -> bool {
        self.v == 0
    }
    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        divisor.inv().map(|i| *self * i)
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        if self.v == 0 {
            return None;
        }
        let e = (self.v as i128).extended_gcd(&(self.p as i128));
        debug_assert_eq!(e.gcd, 1);
        Some(Fp {
            v: e.x.rem_euclid(self.p as i128) as u64,
            p: self.p,
        })
    }

    fn cube_root_of_unity() -> Option<Self> {
        let p = modulus();
        if p % 3 != 1 {
            return None;
        }
        (2..p)
            .map(|g| Fp::from_u64(g).pow_u64((p - 1) / 3))
            .find(|w| w.v != 1)
    }

    /// Tonelli–Shanks.
    fn sqrt(&self) -> Option<Self> {
        let p = self.p;
        if self.v == 0 {
            return Some(*self);
        }
        if !self.is_square() {
            return None;
        }
        if p % 4 == 3 {
            return Some(self.pow_u64((p + 1) / 4));
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q % 2 == 0 {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .map(Fp::from_u64)
            .find(|z| !z.is_square())
            .expect("a non-residue exists");
        let mut m = s;
        let mut c = z.pow_u64(q);
        let mut t = self.pow_u64(q);
        let mut r = self.pow_u64((q + 1) / 2);
        while t.v != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2.v != 1 {
                t2 = t2 * t2;
                i += 1;
            }
            let b = c.pow_u64(1 << (m - i - 1));
            m = i;
            c = b * b;
            t = t * c;
            r = r * b;
        }
        Some(r)
    }

    fn characteristic() -> u64 {
        modulus()
    }
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &w in &WITNESSES {
        if n % w == 0 {
            return n == w;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &WITNESSES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes `p > 3` with `p ≡ residue (mod modulus)`, in increasing order.
pub fn primes_congruent(residue: u64, modulus: u64) -> impl Iterator<Item = u64> {
    (5u64..).filter(move |&p| p % modulus == residue && is_prime(p))
}
