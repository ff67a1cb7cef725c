//! Elliptic curves in the Hesse pencil `x^3 + y^3 + z^3 + 3a xyz = 0`.
//!
//! The identity is `[-1 : 1 : 0]` and negation swaps `x` and `y`. The nine
//! points with `xyz = 0` form the 3-torsion of every member of the pencil.

use serde_json::{json, Value};

use crate::algebra::encode::Encode;
use crate::algebra::poly::vars3;
use crate::algebra::fp::current_modulus;
use crate::algebra::{Field, Fp, Polynomial, Ring, RootFinding};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HesseError {
    #[error("a³ = −1: the Hesse cubic is singular")]
    Singular,
    #[error("the point is not on the curve")]
    NotOnCurve,
    #[error("[0:0:0] is not a projective point")]
    ZeroPoint,
    #[error("points lie on different curves")]
    CurveMismatch,
    #[error("the field has no primitive cube root of unity")]
    NoOmega,
    #[error("auxiliary point is 3-torsion or makes g vanish or blow up")]
    BadAuxiliaryPoint,
    #[error("quartic does not split: the 3-torsion is not rational")]
    QuarticDoesNotSplit,
    #[error("no ordering of the roots satisfies the surface equation")]
    NoOrdering,
    #[error("degenerate isogeny parameter: t(t³−1)(8t³+1) = 0")]
    DegenerateIsogeny,
    #[error("singular Weierstrass curve: 4A³+27B² = 0")]
    SingularWeierstrass,
}

pub type Result<T> = std::result::Result<T, HesseError>;

/// `E_a : x^3 + y^3 + z^3 + 3a xyz = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct HesseCurve<F> {
    a: F,
}

/// A point `[x : y : z]`, scaled so that its last nonzero coordinate is one.
#[derive(Debug, Clone, PartialEq)]
pub struct HessePoint<F> {
    pub x: F,
    pub y: F,
    pub z: F,
}

/// Coordinates of a 3-torsion point in the basis `S = [-1:0:1]`,
/// `T = [-w:1:0]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TorsionVector {
    pub m: u8,
    pub n: u8,
}

impl TorsionVector {
    pub fn new(m: i64, n: i64) -> Self {
        TorsionVector {
            m: m.rem_euclid(3) as u8,
            n: n.rem_euclid(3) as u8,
        }
    }

    pub fn all() -> impl Iterator<Item = TorsionVector> {
        (0..9).map(|i| TorsionVector::new(i / 3, i % 3))
    }
}

impl<F: Field> HessePoint<F> {
    pub fn new(x: F, y: F, z: F) -> Result<Self> {
        let s = [&z, &y, &x]
            .into_iter()
            .find(|c| !c.is_zero())
            .ok_or(HesseError::ZeroPoint)?
            .inv()
            .expect("nonzero");
        Ok(HessePoint {
            x: x * s.clone(),
            y: y * s.clone(),
            z: z * s,
        })
    }

    pub fn coords(&self) -> [F; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// The cyclic shift `[z : x : y]`, translation by a 3-torsion point.
    fn shift(&self) -> Self {
        HessePoint::new(self.z.clone(), self.x.clone(), self.y.clone()).expect("nonzero")
    }

    fn unshift(&self) -> Self {
        HessePoint::new(self.y.clone(), self.z.clone(), self.x.clone()).expect("nonzero")
    }
}

impl<F: Field + Encode> HessePoint<F> {
    pub fn to_json(&self) -> Value {
        json!([self.x.encode(), self.y.encode(), self.z.encode()])
    }
}

/// `j(E_a) = -27 a^3 (a^3 - 8)^3 / (a^3 + 1)^3`.
pub fn j_hesse<F: Field>(a: &F) -> Result<F> {
    let a3 = a.pow(3);
    let den = (a3.clone() + F::one()).pow(3).inv().ok_or(HesseError::Singular)?;
    Ok(-F::from_i64(27) * a3.clone() * (a3 - F::from_i64(8)).pow(3) * den)
}

fn omega<F: Field>() -> Result<F> {
    F::cube_root_of_unity().ok_or(HesseError::NoOmega)
}

impl<F: Field> HesseCurve<F> {
    pub fn new(a: F) -> Result<Self> {
        if (a.pow(3) + F::one()).is_zero() {
            return Err(HesseError::Singular);
        }
        Ok(HesseCurve { a })
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn j(&self) -> F {
        j_hesse(&self.a).expect("nonsingular")
    }

    pub fn eval(&self, x: &F, y: &F, z: &F) -> F {
        x.pow(3) + y.pow(3) + z.pow(3) + F::from_i64(3) * self.a.clone() * x.clone() * y.clone() * z.clone()
    }

    pub fn contains(&self, p: &HessePoint<F>) -> bool {
        self.eval(&p.x, &p.y, &p.z).is_zero()
    }

    pub fn point(&self, x: F, y: F, z: F) -> Result<HessePoint<F>> {
        let p = HessePoint::new(x, y, z)?;
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(HesseError::NotOnCurve)
        }
    }

    pub fn identity(&self) -> HessePoint<F> {
        HessePoint::new(-F::one(), F::one(), F::zero()).expect("nonzero")
    }

    pub fn neg(&self, p: &HessePoint<F>) -> HessePoint<F> {
        HessePoint::new(p.y.clone(), p.x.clone(), p.z.clone()).expect("nonzero")
    }

    pub fn double(&self, p: &HessePoint<F>) -> HessePoint<F> {
        let (x, y, z) = (&p.x, &p.y, &p.z);
        let (x3, y3, z3) = (x.pow(3), y.pow(3), z.pow(3));
        HessePoint::new(
            y.clone() * (x3.clone() - z3.clone()),
            x.clone() * (z3.clone() - y3.clone()),
            z.clone() * (y3 - x3),
        )
        .expect("doubling never degenerates on a smooth Hesse cubic")
    }

    fn add_formula(p: &HessePoint<F>, q: &HessePoint<F>) -> Option<HessePoint<F>> {
        let (x1, y1, z1) = (&p.x, &p.y, &p.z);
        let (x2, y2, z2) = (&q.x, &q.y, &q.z);
        HessePoint::new(
            y1.square() * x2.clone() * z2.clone() - y2.square() * x1.clone() * z1.clone(),
            x1.square() * y2.clone() * z2.clone() - x2.square() * y1.clone() * z1.clone(),
            z1.square() * x2.clone() * y2.clone() - z2.square() * x1.clone() * y1.clone(),
        )
        .ok()
    }

    /// The group law.
    ///
    /// Where the addition formula degenerates, uses doubling for `P = Q`
    /// and otherwise adds `P` translated by a 3-torsion point (the cyclic
    /// shift of coordinates), then translates back.
    pub fn add(&self, p: &HessePoint<F>, q: &HessePoint<F>) -> HessePoint<F> {
        if let Some(r) = Self::add_formula(p, q) {
            return r;
        }
        if p == q {
            return self.double(p);
        }
        let p1 = p.shift();
        if let Some(r) = Self::add_formula(&p1, q) {
            return r.unshift();
        }
        let p2 = p1.shift();
        Self::add_formula(&p2, q)
            .expect("one of three translates is in general position")
            .unshift()
            .unshift()
    }

    pub fn checked_add(&self, p: &HessePoint<F>, q: &HessePoint<F>) -> Result<HessePoint<F>> {
        if !self.contains(p) || !self.contains(q) {
            return Err(HesseError::CurveMismatch);
        }
        Ok(self.add(p, q))
    }

    pub fn sub(&self, p: &HessePoint<F>, q: &HessePoint<F>) -> HessePoint<F> {
        self.add(p, &self.neg(q))
    }

    pub fn mul(&self, k: i64, p: &HessePoint<F>) -> HessePoint<F> {
        let base = if k < 0 { self.neg(p) } else { p.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.add(&acc, &b);
            }
            b = self.add(&b, &b);
            e >>= 1;
        }
        acc
    }

    /// `S = [-1 : 0 : 1]`.
    pub fn s(&self) -> HessePoint<F> {
        HessePoint::new(-F::one(), F::zero(), F::one()).expect("nonzero")
    }

    /// `T = [-w : 1 : 0]`.
    pub fn t(&self) -> Result<HessePoint<F>> {
        Ok(HessePoint::new(-omega::<F>()?, F::one(), F::zero()).expect("nonzero"))
    }

    /// `m S + n T`.
    pub fn torsion_point(&self, v: TorsionVector) -> Result<HessePoint<F>> {
        let s = self.mul(v.m as i64, &self.s());
        let t = self.mul(v.n as i64, &self.t()?);
        Ok(self.add(&s, &t))
    }

    /// The nine points with `xyz = 0`, each tagged with its coordinates in
    /// the basis `(S, T)`.
    pub fn three_torsion(&self) -> Result<Vec<(HessePoint<F>, TorsionVector)>> {
        let w = omega::<F>()?;
        let us = [-F::one(), -w.clone(), -w.square()];
        let mut pts = Vec::new();
        for u in &us {
            pts.push(HessePoint::new(u.clone(), F::one(), F::zero()).expect("nonzero"));
            pts.push(HessePoint::new(u.clone(), F::zero(), F::one()).expect("nonzero"));
            pts.push(HessePoint::new(F::zero(), u.clone(), F::one()).expect("nonzero"));
        }
        let tagged: Vec<(HessePoint<F>, TorsionVector)> = TorsionVector::all()
            .map(|v| Ok((self.torsion_point(v)?, v)))
            .collect::<Result<_>>()?;
        Ok(pts
            .into_iter()
            .map(|p| {
                let v = tagged
                    .iter()
                    .find(|(q, _)| *q == p)
                    .expect("every flex is a combination of S and T")
                    .1;
                (p, v)
            })
            .collect())
    }

    /// `g(P + T) / g(P)` with `g = (x^2 z + y^2 x + z^2 y) / (xyz)`.
    pub fn weil_pairing3_via_g(&self, p: &HessePoint<F>) -> Result<F> {
        if !self.contains(p) {
            return Err(HesseError::NotOnCurve);
        }
        let g = |q: &HessePoint<F>| -> Option<F> {
            let (x, y, z) = (&q.x, &q.y, &q.z);
            let num = x.square() * z.clone() + y.square() * x.clone() + z.square() * y.clone();
            let den = x.clone() * y.clone() * z.clone();
            if num.is_zero() {
                return None;
            }
            den.inv().map(|d| num * d)
        };
        let pt = self.add(p, &self.t()?);
        match (g(&pt), g(p)) {
            (Some(a), Some(b)) => Ok(a / b),
            _ => Err(HesseError::BadAuxiliaryPoint),
        }
    }
}

/// `det(eta(P), eta(Q))` mod 3.
pub fn weil_exponent(p: TorsionVector, q: TorsionVector) -> u8 {
    ((p.m as i64 * q.n as i64 - p.n as i64 * q.m as i64).rem_euclid(3)) as u8
}

/// `e_3(P, Q) = w^det(eta(P), eta(Q))`.
pub fn weil_pairing3<F: Field>(p: TorsionVector, q: TorsionVector) -> Result<F> {
    Ok(omega::<F>()?.pow(weil_exponent(p, q) as u32))
}

/// The twelve parameters `a, aw, aw^2, m, mw, mw^2, ...` with
/// `m in {(2-a)/(1+a), (2w-a)/(w+a), (2w^2-a)/(w^2+a)}` defining curves
/// isomorphic to `E_a`; `None` marks an entry whose denominator vanishes.
pub fn orbit12<F: Field>(a: &F) -> Result<Vec<Option<F>>> {
    let w = omega::<F>()?;
    let rot = [F::one(), w.clone(), w.square()];
    let mut out = Vec::with_capacity(12);
    let bases: Vec<Option<F>> = std::iter::once(Some(a.clone()))
        .chain(rot.iter().map(|r| {
            (r.clone() + a.clone())
                .inv()
                .map(|d| (F::from_i64(2) * r.clone() - a.clone()) * d)
        }))
        .collect();
    for base in bases {
        for r in &rot {
            out.push(base.clone().map(|b| b * r.clone()));
        }
    }
    Ok(out)
}

/// Output of [`weierstrass_to_hesse`].
#[derive(Debug, Clone, PartialEq)]
pub struct HesseForm<F> {
    /// Hesse parameter.
    pub t: F,
    /// Twisting factor: `A u^2 = -3t(t^3 - 8)` and `B u^3 = -2(t^6 + 20t^3 - 8)`.
    pub u: F,
    /// Roots `(t1, t2, t3)` of the kernel quartic, in the order used.
    pub roots: [F; 3],
    /// Rows of the linear map from `y^2 z = x^3 + A u^2 x z^2 + B u^3 z^3`
    /// onto `E_t`.
    pub iso: [[F; 3]; 3],
}

/// The matrix `[3t x - (1+2w) y + 3(t^3+4) z : 3t x + (1+2w) y + 3(t^3+4) z : 6(x - 3t^2 z)]`.
pub fn hesse_iso_matrix<F: Field>(t: &F) -> Result<[[F; 3]; 3]> {
    let k = |n: i64| F::from_i64(n);
    let w = omega::<F>()?;
    let s = F::one() + k(2) * w;
    let c = k(3) * (t.pow(3) + k(4));
    let tt = k(3) * t.clone();
    Ok([
        [tt.clone(), -s.clone(), c.clone()],
        [tt, s, c],
        [k(6), F::zero(), -k(18) * t.square()],
    ])
}

/// Whether the iso matrix carries `-y^2 z + x^3 - 3t(t^3-8) x z^2 -
/// 2(t^6+20t^3-8) z^3` onto a nonzero multiple of the Hesse cubic of `t`,
/// as an identity of ternary forms.
pub fn hesse_iso_identity<F: Field>(t: &F) -> Result<bool> {
    let k = |n: i64| F::from_i64(n);
    let m = hesse_iso_matrix(t)?;
    let [x, y, z] = vars3::<F>();
    type T3<F> = Polynomial<Polynomial<Polynomial<F>>>;
    let c = |v: &F| T3::<F>::constant(Polynomial::constant(Polynomial::constant(v.clone())));
    let row = |r: &[F; 3]| c(&r[0]) * x.clone() + c(&r[1]) * y.clone() + c(&r[2]) * z.clone();
    let (u, v, s) = (row(&m[0]), row(&m[1]), row(&m[2]));
    let hesse = u.pow(3) + v.pow(3) + s.pow(3) + c(&(k(3) * t.clone())) * u * v * s;
    let weier = -y.square() * z.clone() + x.pow(3)
        - c(&(k(3) * t.clone() * (t.pow(3) - k(8)))) * x.clone() * z.square()
        - c(&(k(2) * (t.pow(6) + k(20) * t.pow(3) - k(8)))) * z.pow(3);
    // x^3 has coefficient one in `weier`
    let lead = hesse.coeff(0).coeff(0).coeff(3);
    Ok(!lead.is_zero() && hesse == c(&lead) * weier)
}

/// Hesse parameter of `y^2 = x^3 + A x + B` from the roots of the kernel
/// quartic `3x^4 + 6A x^2 + 12B x - A^2`.
pub fn weierstrass_to_hesse<F: Field + RootFinding>(a: &F, b: &F) -> Result<HesseForm<F>> {
    let k = |n: i64| F::from_i64(n);
    if (k(4) * a.pow(3) + k(27) * b.square()).is_zero() {
        return Err(HesseError::SingularWeierstrass);
    }
    let w = omega::<F>()?;
    let quartic = Polynomial::new(vec![
        -a.square(),
        k(12) * b.clone(),
        k(6) * a.clone(),
        F::zero(),
        k(3),
    ]);
    let roots = F::roots(&quartic);
    if roots.len() != 4 {
        return Err(HesseError::QuarticDoesNotSplit);
    }
    let w2 = w.square();
    for i in 0..4 {
        for j in 0..4 {
            for l in 0..4 {
                if i == j || j == l || i == l {
                    continue;
                }
                let (t1, t2, t3) = (&roots[i], &roots[j], &roots[l]);
                let surface = t1.square() + w.clone() * t2.square() + w2.clone() * t3.square()
                    - k(2) * w2.clone() * t1.clone() * t2.clone()
                    - k(2) * w.clone() * t1.clone() * t3.clone()
                    - k(2) * t2.clone() * t3.clone();
                if !surface.is_zero() {
                    continue;
                }
                let d = t2.clone() - t3.clone();
                let t = (k(3) * t1.clone()
                    + (k(5) + w.clone()) * t2.clone()
                    + (k(4) - w.clone()) * t3.clone())
                    / ((F::one() + k(2) * w.clone()) * d.clone());
                let u = k(12)
                    * (t1.clone() + (k(2) + w.clone()) * t2.clone() + (F::one() - w.clone()) * t3.clone())
                    / d.square();
                return Ok(HesseForm {
                    iso: hesse_iso_matrix(&t)?,
                    t,
                    u,
                    roots: [t1.clone(), t2.clone(), t3.clone()],
                });
            }
        }
    }
    Err(HesseError::NoOrdering)
}

/// The 2-isogeny `E_a -> E_b` with kernel `{O, [t:t:1]}`.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoIsogeny<F> {
    pub t: F,
    pub source: HesseCurve<F>,
    pub target: HesseCurve<F>,
}

type Ternary<F> = Polynomial<Polynomial<Polynomial<F>>>;

impl<F: Field> TwoIsogeny<F> {
    /// `a = -(1+2t^3)/(3t^2)`, `b = (1-4t^3)/(3t)`.
    pub fn new(t: F) -> Result<Self> {
        let k = |n: i64| F::from_i64(n);
        let t3 = t.pow(3);
        if (t.clone() * (t3.clone() - k(1)) * (k(8) * t3.clone() + k(1))).is_zero() {
            return Err(HesseError::DegenerateIsogeny);
        }
        let a = -(k(1) + k(2) * t3.clone()) / (k(3) * t.square());
        let b = (k(1) - k(4) * t3) / (k(3) * t.clone());
        Ok(TwoIsogeny {
            source: HesseCurve::new(a)?,
            target: HesseCurve::new(b)?,
            t,
        })
    }

    /// The generator `[t : t : 1]` of the kernel.
    pub fn kernel_point(&self) -> HessePoint<F> {
        HessePoint::new(self.t.clone(), self.t.clone(), F::one()).expect("nonzero")
    }

    /// The three cubic forms `(f1, f2, f3)` in `(x, y, z)`, `x` innermost.
    pub fn forms(&self) -> [Ternary<F>; 3] {
        let [x, y, z] = vars3::<F>();
        let c = |n: F| Ternary::<F>::constant(Polynomial::constant(Polynomial::constant(n)));
        let t = self.t.clone();
        let t2 = c(t.square());
        let t3 = c(t.pow(3));
        let tc = c(t.clone());
        let two = c(F::from_i64(2));
        let f1 = x.clone()
            * (-two.clone() * t2.clone() * y.square() - t2.clone() * x.clone() * y.clone()
                + t2.clone() * x.square()
                - y.clone() * z.clone()
                + two.clone() * t3.clone() * x.clone() * z.clone()
                + tc.clone() * z.square());
        let f2 = y.clone()
            * (-two.clone() * t2.clone() * x.square() - t2.clone() * x.clone() * y.clone()
                + t2 * y.square()
                - x.clone() * z.clone()
                + two.clone() * t3 * y.clone() * z.clone()
                + tc.clone() * z.square());
        let f3 = tc.clone()
            * z.clone()
            * (x.clone() + y.clone() + tc.clone() * z.clone())
            * (x + y - two * tc * z);
        [f1, f2, f3]
    }

    fn eval_forms(&self, p: &HessePoint<F>) -> Option<HessePoint<F>> {
        let [f1, f2, f3] = self.forms();
        let ev = |f: &Ternary<F>| f.eval(&Polynomial::constant(Polynomial::constant(p.z.clone())))
            .eval(&Polynomial::constant(p.y.clone()))
            .eval(&p.x);
        HessePoint::new(ev(&f1), ev(&f2), ev(&f3)).ok()
    }

    /// `gamma(P)`; at the base points of the forms (the kernel) uses
    /// `gamma(P + R) - gamma(R)` for a 3-torsion point `R`.
    pub fn apply(&self, p: &HessePoint<F>) -> HessePoint<F> {
        if let Some(q) = self.eval_forms(p) {
            return q;
        }
        let e = &self.source;
        let s = e.s();
        for r in [s.clone(), e.neg(&s), e.double(&s.shift())] {
            let pr = e.add(p, &r);
            if let (Some(a), Some(b)) = (self.eval_forms(&pr), self.eval_forms(&r)) {
                return self.target.sub(&a, &b);
            }
        }
        unreachable!("some translate avoids the base points")
    }
}

impl<F: Field + Encode> TwoIsogeny<F> {
    pub fn to_json(&self) -> Value {
        let forms: Vec<Value> = self
            .forms()
            .iter()
            .map(|f| {
                let mut m = serde_json::Map::new();
                for (ez, cz) in f.coeffs().iter().enumerate() {
                    for (ey, cy) in cz.coeffs().iter().enumerate() {
                        for (ex, cx) in cy.coeffs().iter().enumerate() {
                            if !cx.is_zero() {
                                m.insert(monomial_name(ex, ey, ez), cx.encode());
                            }
                        }
                    }
                }
                Value::Object(m)
            })
            .collect();
        json!({
            "t": self.t.encode(),
            "source": {"a": self.source.a.encode()},
            "target": {"a": self.target.a.encode()},
            "map": forms,
        })
    }
}

fn monomial_name(ex: usize, ey: usize, ez: usize) -> String {
    let mut s = String::new();
    for (v, e) in [("x", ex), ("y", ey), ("z", ez)] {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{e}")),
        }
    }
    s
}

/// The points of order two, `[r : r : 1]` with `2r^3 + 3a r^2 + 1 = 0`.
pub fn two_torsion<F: Field + RootFinding>(curve: &HesseCurve<F>) -> Vec<HessePoint<F>> {
    let cubic = Polynomial::new(vec![
        F::one(),
        F::zero(),
        F::from_i64(3) * curve.a.clone(),
        F::from_i64(2),
    ]);
    F::roots(&cubic)
        .into_iter()
        .map(|r| HessePoint::new(r.clone(), r, F::one()).expect("nonzero"))
        .collect()
}

/// A point of `E_a` with `z = 1` and the given `x`, if one exists.
pub fn lift_x<F: Field + RootFinding>(curve: &HesseCurve<F>, x: &F) -> Option<HessePoint<F>> {
    // y^3 + 3a x y + (x^3 + 1) = 0
    let cubic = Polynomial::new(vec![
        x.pow(3) + F::one(),
        F::from_i64(3) * curve.a.clone() * x.clone(),
        F::zero(),
        F::one(),
    ]);
    F::roots(&cubic)
        .into_iter()
        .next()
        .map(|y| HessePoint::new(x.clone(), y, F::one()).expect("nonzero"))
}

/// A uniformly chosen `x` lifted to a random point of `E_a(F_p)` with `z = 1`.
pub fn random_point_fp<G: rand::Rng>(curve: &HesseCurve<Fp>, rng: &mut G) -> HessePoint<Fp> {
    loop {
        let x = Fp::from_u64(rng.gen_range(0..current_modulus().expect("prime context")));
        let cubic = Polynomial::new(vec![
            x.pow(3) + Fp::one(),
            Fp::from_i64(3) * curve.a * x,
            Fp::zero(),
            Fp::one(),
        ]);
        let ys = Fp::roots(&cubic);
        if !ys.is_empty() {
            let y = ys[rng.gen_range(0..ys.len())];
            return HessePoint::new(x, y, Fp::one()).expect("nonzero");
        }
    }
}

/// Every point of `E_a(F_p)`.
pub fn points_fp(curve: &HesseCurve<Fp>) -> Vec<HessePoint<Fp>> {
    let mut out = Vec::new();
    for x in Fp::elements() {
        let cubic = Polynomial::new(vec![
            x.pow(3) + Fp::one(),
            Fp::from_i64(3) * curve.a * x,
            Fp::zero(),
            Fp::one(),
        ]);
        for y in Fp::roots(&cubic) {
            out.push(HessePoint::new(x, y, Fp::one()).expect("nonzero"));
        }
    }
    // z = 0 forces x^3 = -y^3
    let cube_minus_one = Polynomial::new(vec![Fp::one(), Fp::zero(), Fp::zero(), Fp::one()]);
    for u in Fp::roots(&cube_minus_one) {
        out.push(HessePoint::new(u, Fp::one(), Fp::zero()).expect("nonzero"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, with_prime, QOmega, QSqrt3, Q};

    #[test]
    fn j_values() {
        assert_eq!(j_hesse(&rat(0, 1)), Ok(rat(0, 1)));
        assert_eq!(j_hesse(&rat(2, 1)), Ok(rat(0, 1)));
        assert_eq!(j_hesse(&rat(-1, 1)), Err(HesseError::Singular));
        let a = QSqrt3::new(rat(-1, 1), rat(1, 1));
        assert_eq!(j_hesse(&a), Ok(QSqrt3::from_i64(1728)));
    }

    #[test]
    fn group_law_basics_over_f13() {
        with_prime(13, || {
            let e = HesseCurve::new(Fp::new(1)).unwrap();
            let o = e.identity();
            let s = e.s();
            assert_eq!(e.add(&s, &s), e.neg(&s));
            assert_eq!(e.add(&s, &e.neg(&s)), o);
            for x in Fp::elements() {
                if let Some(p) = lift_x(&e, &x) {
                    assert_eq!(e.add(&o, &p), p);
                    assert_eq!(e.add(&p, &o), p);
                    assert_eq!(e.add(&p, &e.neg(&p)), o);
                }
            }
        })
        .unwrap();
    }

    #[test]
    fn torsion_and_pairing() {
        let e = HesseCurve::new(QOmega::from_i64(3)).unwrap();
        let tors = e.three_torsion().unwrap();
        assert_eq!(tors.len(), 9);
        assert!(tors.contains(&(e.identity(), TorsionVector::new(0, 0))));
        assert!(tors.contains(&(e.s(), TorsionVector::new(1, 0))));
        assert!(tors.contains(&(e.t().unwrap(), TorsionVector::new(0, 1))));
        let s = TorsionVector::new(1, 0);
        let t = TorsionVector::new(0, 1);
        let w = QOmega::omega();
        assert_eq!(weil_pairing3::<QOmega>(s, t), Ok(w.clone()));
        assert_eq!(weil_pairing3::<QOmega>(s, s), Ok(QOmega::one()));
        assert_eq!(weil_pairing3::<QOmega>(t, s), Ok(w.square()));
        assert_eq!(weil_pairing3::<Q>(s, t), Err(HesseError::NoOmega));
    }

    #[test]
    fn pairing_via_g_over_f13() {
        with_prime(13, || {
            let e = HesseCurve::new(Fp::new(1)).unwrap();
            let w = Fp::cube_root_of_unity().unwrap();
            let mut seen = 0;
            for x in Fp::elements() {
                let Some(p) = lift_x(&e, &x) else { continue };
                if let Ok(v) = e.weil_pairing3_via_g(&p) {
                    assert_eq!(v, w);
                    seen += 1;
                }
            }
            assert!(seen >= 2);
        })
        .unwrap();
    }

    #[test]
    fn orbit_is_one_j_class() {
        let a = QOmega::from_i64(3);
        let orbit = orbit12(&a).unwrap();
        let j = j_hesse(&a).unwrap();
        assert_eq!(orbit.len(), 12);
        for b in &orbit {
            assert_eq!(j_hesse(b.as_ref().unwrap()).unwrap(), j);
        }
        for i in 0..12 {
            for k in i + 1..12 {
                assert_ne!(orbit[i], orbit[k]);
            }
        }
        let flagged = orbit12(&QOmega::from_i64(-1)).unwrap();
        assert_eq!(flagged.iter().filter(|e| e.is_none()).count(), 3);
    }

    #[test]
    fn weierstrass_conversion() {
        let (a, b) = (QOmega::from_i64(21), QOmega::from_i64(-26));
        let h = weierstrass_to_hesse(&a, &b).unwrap();
        let k = |n: i64| QOmega::from_i64(n);
        let t = h.t.clone();
        assert_eq!(a * h.u.square(), -k(3) * t.clone() * (t.pow(3) - k(8)));
        assert_eq!(b * h.u.pow(3), -k(2) * (t.pow(6) + k(20) * t.pow(3) - k(8)));
        assert!(orbit12(&QOmega::one()).unwrap().contains(&Some(t.clone())));
        assert!(hesse_iso_identity(&t).unwrap());
        assert_eq!(
            weierstrass_to_hesse(&k(1), &QOmega::zero()),
            Err(HesseError::QuarticDoesNotSplit)
        );
    }

    #[test]
    fn isogeny_at_t2() {
        let iso = TwoIsogeny::new(rat(2, 1)).unwrap();
        assert_eq!(iso.source.a(), &rat(-17, 12));
        assert_eq!(iso.target.a(), &rat(-31, 6));
        assert_eq!(iso.apply(&iso.kernel_point()), iso.target.identity());
        let s = iso.source.s();
        assert_eq!(iso.apply(&s), iso.target.s());
        assert!(two_torsion(&iso.source).contains(&iso.kernel_point()));
        assert_eq!(TwoIsogeny::new(rat(1, 1)), Err(HesseError::DegenerateIsogeny));
    }
}
