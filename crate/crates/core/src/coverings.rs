//! Degree-3 coverings of elliptic curves by genus-2 curves.
//!
//! A genus-2 curve `d y^2 = S(x)` covers an elliptic curve `s Y^2 = g(X)` by
//! `(x, y) -> (f(x), y h(x))` with `f` a degree-3 rational function. The
//! constructors below produce both coverings of a (3,3)-split curve for the
//! generic parametrization and the special ones, together with the
//! j-invariants of the two elliptic curves.

use std::fmt;

use serde_json::{json, Value};

use crate::algebra::encode::{render, Encode};
use crate::algebra::poly::vars2;
use crate::algebra::{
    discriminant, integral_primitive, resultant, Field, GcdRing, Polynomial, RationalFunction, Ring,
    RootFinding, Q,
};

/// `twist * y^2 = sextic(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveModel<F> {
    pub sextic: Polynomial<F>,
    pub twist: F,
}

/// `scale * y^2 = cubic(x)` with `cubic` monic of degree 3.
#[derive(Debug, Clone, PartialEq)]
pub struct Weierstrass<F> {
    pub scale: F,
    pub cubic: Polynomial<F>,
}

/// `(x, y) -> (x_map(x), y * y_mul(x))` from `source` to `target`.
#[derive(Debug, Clone, PartialEq)]
pub struct Covering<F> {
    pub source: CurveModel<F>,
    pub target: Weierstrass<F>,
    pub x_map: RationalFunction<F>,
    pub y_mul: RationalFunction<F>,
}

/// A genus-2 curve with its two complementary coverings.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverData<F> {
    pub curve: CurveModel<F>,
    pub phi1: Covering<F>,
    pub phi2: Covering<F>,
    pub j1: F,
    pub j2: F,
}

/// A parameter condition that must not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Condition {
    BZero,
    CZero,
    DiscP,
    DiscD,
    DiscQ,
    ResPQ,
    A2Minus4B,
    A2Minus3B,
    FourB3Minus27C2,
    /// `P` and `Q` have a common root.
    SharedRoot { common: String, multiple: bool },
    SingularSextic,
    /// Numerator and denominator of `f_i` share a factor.
    MapNotCoprime(u8),
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::BZero => write!(f, "b = 0"),
            Condition::CZero => write!(f, "c = 0"),
            Condition::DiscP => write!(f, "disc(P) = 0"),
            Condition::DiscD => write!(f, "b³−27c² = 0"),
            Condition::DiscQ => write!(f, "disc(Q) = 0"),
            Condition::ResPQ => write!(f, "res(P,Q) = 0"),
            Condition::A2Minus4B => write!(f, "a²−4b = 0"),
            Condition::A2Minus3B => write!(f, "a²−3b = 0"),
            Condition::FourB3Minus27C2 => write!(f, "4b³−27c² = 0"),
            Condition::SharedRoot { common, multiple } => {
                write!(f, "res(P,Q) = 0: P and Q share {common}")?;
                if *multiple {
                    write!(f, ", a multiple root of both P(x) and Q(x)")?;
                }
                Ok(())
            }
            Condition::SingularSextic => write!(f, "sextic is not squarefree"),
            Condition::MapNotCoprime(i) => {
                write!(f, "numerator and denominator of f{i} have a common factor")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoverError {
    #[error("degenerate parameters: {0}")]
    Degenerate(Condition),
    #[error("singular cubic: the Weierstrass model has discriminant 0")]
    SingularCubic,
    #[error("degenerate candidate: {0}")]
    DegenerateCandidate(&'static str),
    #[error("the map does not define a covering of a Weierstrass model: {0}")]
    NotACovering(&'static str),
}

fn require<F: Ring>(value: &F, cond: Condition) -> Result<(), CoverError> {
    if value.is_zero() {
        Err(CoverError::Degenerate(cond))
    } else {
        Ok(())
    }
}

fn poly<F: Ring>(coeffs: Vec<F>) -> Polynomial<F> {
    Polynomial::new(coeffs)
}

fn ratfunc<F: Ring>(num: Polynomial<F>, den: Polynomial<F>) -> RationalFunction<F> {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `f' / l`.
fn derivative_over<F: Ring>(f: &RationalFunction<F>, l: &Polynomial<F>) -> RationalFunction<F> {
    let d = f.derivative();
    ratfunc(d.numerator().clone(), d.denominator().clone() * l.clone())
}

fn check_coprime<F: Field>(f: &RationalFunction<F>, i: u8) -> Result<(), CoverError> {
    if f.is_coprime() {
        Ok(())
    } else {
        Err(CoverError::Degenerate(Condition::MapNotCoprime(i)))
    }
}

fn check_squarefree<F: Field>(s: &Polynomial<F>) -> Result<(), CoverError> {
    if s.is_squarefree() {
        Ok(())
    } else {
        Err(CoverError::Degenerate(Condition::SingularSextic))
    }
}

fn shared_root<F: Field + Encode>(p: &Polynomial<F>, q: &Polynomial<F>) -> Option<Condition> {
    let g = p.gcd(q);
    if g.degree() == Some(0) {
        return None;
    }
    let root = g.squarefree_part();
    let common = if root.degree() == Some(1) {
        format!("the root x = {}", render(&(-root.coeff(0))))
    } else {
        format!("the roots of {}", render(&g))
    };
    let multiple = [p, q]
        .iter()
        .all(|f| f.gcd(&f.derivative()).gcd(&g).degree().unwrap_or(0) > 0);
    Some(Condition::SharedRoot { common, multiple })
}

impl<F: Field> Weierstrass<F> {
    /// `scale * y^2 = x^3 + c2 x^2 + c1 x + c0`.
    pub fn new(scale: F, c2: F, c1: F, c0: F) -> Self {
        Weierstrass {
            scale,
            cubic: poly(vec![c0, c1, c2, F::one()]),
        }
    }
}

/// The j-invariant `256 (c2^2 - 3 c1)^3 / disc(cubic)`; independent of the
/// scale.
pub fn j_of_weierstrass<F: Field>(e: &Weierstrass<F>) -> Result<F, CoverError> {
    let cubic = &e.cubic;
    if cubic.degree() != Some(3) {
        return Err(CoverError::SingularCubic);
    }
    let cubic = cubic.monic();
    let (c2, c1) = (cubic.coeff(2), cubic.coeff(1));
    let disc = discriminant(&cubic).expect("cubic");
    let inv = disc.inv().ok_or(CoverError::SingularCubic)?;
    Ok(F::from_i64(256) * (c2.square() - F::from_i64(3) * c1).pow(3) * inv)
}

/// `s h^2 S / d == g(f)` as rational functions.
pub fn verify_covering<F: Field>(cov: &Covering<F>) -> bool {
    let gf = cov.x_map.substitute_into(&cov.target.cubic);
    let h = &cov.y_mul;
    let lhs = h.numerator().clone().square().scale(&cov.target.scale)
        * cov.source.sextic.clone()
        * gf.denominator().clone();
    let rhs = gf.numerator().clone().scale(&cov.source.twist) * h.denominator().clone().square();
    !cov.x_map.numerator().is_zero() && lhs == rhs
}

/// Covering induced by `f`, with `y`-multiplier `f' / l`, onto the
/// Weierstrass model whose finite branch points are the images of the
/// Weierstrass points of `twist * y^2 = sextic` outside the fibre over
/// infinity.
pub fn covering_from_map<F: Field>(
    curve: &CurveModel<F>,
    f: &RationalFunction<F>,
    l: &Polynomial<F>,
) -> Result<Covering<F>, CoverError> {
    let (n, m) = (f.numerator(), f.denominator());
    let (w, rem) = curve
        .sextic
        .divrem(m)
        .map_err(|_| CoverError::NotACovering("zero denominator"))?;
    if !rem.is_zero() {
        return Err(CoverError::NotACovering("denominator does not divide the sextic"));
    }
    let deg = f.map_degree();
    let width = n.coeffs().len().max(m.coeffs().len());
    // X M(y) - N(y), a polynomial in y over F[X]
    let pencil: Polynomial<Polynomial<F>> = poly(
        (0..width)
            .map(|i| poly(vec![-n.coeff(i), m.coeff(i)]))
            .collect(),
    );
    let mut g = resultant(&pencil, &crate::algebra::poly::lift(&w)).expect("nonzero");
    if curve.sextic.degree() == Some(5) && !m.coeff(deg).is_zero() {
        g = g * poly(vec![-n.coeff(deg), m.coeff(deg)]);
    }
    if g.degree() != Some(3) {
        return Err(CoverError::NotACovering("branch cubic does not have degree 3"));
    }
    let g = g.monic();
    let h = derivative_over(f, l);
    let gf = f.substitute_into(&g);
    let ratio = ratfunc(
        gf.numerator().clone() * h.denominator().clone().square(),
        gf.denominator().clone() * h.numerator().clone().square() * curve.sextic.clone(),
    )
    .reduced();
    if ratio.numerator().degree() != Some(0) || ratio.denominator().degree() != Some(0) {
        return Err(CoverError::NotACovering("g(f) / (h^2 S) is not constant"));
    }
    let scale = ratio.numerator().coeff(0) / ratio.denominator().coeff(0) * curve.twist.clone();
    Ok(Covering {
        source: curve.clone(),
        target: Weierstrass { scale, cubic: g },
        x_map: f.clone(),
        y_mul: h,
    })
}

/// `F(X, Y) = X^3 - 1296 X^2 - 729 X Y + 559872 X - 80621568`.
pub fn f_relation<F: Ring>(x: &F, y: &F) -> F {
    let k = |n: i64| F::from_i64(n);
    x.pow(3) - k(1296) * x.square() - k(729) * x.clone() * y.clone() + k(559872) * x.clone()
        - k(80621568)
}

/// Generic case: `f1 = x^2/P`, `P = x^3 + a x^2 + b x + c`.
pub fn generic_cover<F: Field + Encode>(a: &F, b: &F, c: &F) -> Result<CoverData<F>, CoverError> {
    let k = |n: i64| F::from_i64(n);
    let (a, b, c) = (a.clone(), b.clone(), c.clone());
    let p = poly(vec![c.clone(), b.clone(), a.clone(), F::one()]);
    let q = poly(vec![
        c.square(),
        k(2) * b.clone() * c.clone(),
        b.square(),
        k(4) * c.clone(),
    ]);
    let delta1 = a.square() * b.square() - k(4) * b.pow(3) - k(4) * a.pow(3) * c.clone()
        + k(18) * a.clone() * b.clone() * c.clone()
        - k(27) * c.square();
    let delta2 = b.pow(3) - k(27) * c.square();
    require(&c, Condition::CZero)?;
    require(&delta1, Condition::DiscP)?;
    require(&delta2, Condition::DiscD)?;
    require(&discriminant(&q).expect("cubic"), Condition::DiscQ)?;
    require(&resultant(&p, &q).expect("nonzero"), Condition::ResPQ)?;
    let sextic = p.clone() * q.clone();
    check_squarefree(&sextic)?;
    let curve = CurveModel {
        sextic,
        twist: F::one(),
    };

    let f1 = ratfunc(Polynomial::monomial(F::one(), 2), p.clone());
    let l2 = poly(vec![k(3) * c.clone(), b.clone()]);
    let lin = poly(vec![
        c.clone() * (b.square() - k(3) * a.clone() * c.clone()),
        b.pow(3) - k(4) * a.clone() * b.clone() * c.clone() + k(9) * c.square(),
    ]);
    let f2 = ratfunc(l2.clone().square() * lin, q.clone());
    check_coprime(&f1, 1)?;
    check_coprime(&f2, 2)?;

    let d = curve.twist.clone();
    let e1 = Weierstrass::new(
        d.clone() / delta1.clone(),
        k(2) * (-a.clone() * b.square() + k(6) * a.square() * c.clone() - k(9) * b.clone() * c.clone())
            / delta1.clone(),
        (b.square() - k(12) * a.clone() * c.clone()) / delta1.clone(),
        k(4) * c.clone() / delta1.clone(),
    );
    let e2 = Weierstrass::new(
        delta2.clone() * d,
        a.clone() * b.pow(3) - k(27) * b.square() * c.clone() + k(54) * a.clone() * c.square(),
        b.pow(7) - k(18) * a.clone() * b.pow(5) * c.clone()
            + k(54) * a.square() * b.pow(3) * c.square()
            + k(189) * b.pow(4) * c.square()
            - k(972) * a.clone() * b.square() * c.pow(3)
            + k(729) * a.square() * c.pow(4)
            + k(729) * b.clone() * c.pow(4),
        -c.clone()
            * (k(2) * b.pow(3) - k(9) * a.clone() * b.clone() * c.clone() + k(27) * c.square()).pow(3),
    );
    let phi1 = Covering {
        source: curve.clone(),
        target: e1,
        y_mul: derivative_over(&f1, &Polynomial::x()),
        x_map: f1,
    };
    let phi2 = Covering {
        source: curve.clone(),
        target: e2,
        y_mul: derivative_over(&f2, &l2),
        x_map: f2,
    };
    let j1 = k(16)
        * (a.square() * b.pow(4) + k(12) * b.pow(5) - k(126) * a.clone() * b.pow(3) * c.clone()
            + k(216) * a.square() * b.clone() * c.square()
            + k(405) * b.square() * c.square()
            - k(972) * a.clone() * c.pow(3))
        .pow(3)
        / (delta2.pow(3) * delta1.square());
    let j2 = k(256) * (a.square() - k(3) * b.clone()).pow(3) / delta1;
    Ok(CoverData {
        curve,
        phi1,
        phi2,
        j1,
        j2,
    })
}

/// First map special: `f1 = x^3 / (x^2 + a x + b)`.
pub fn special_first<F: Field + Encode>(a: &F, b: &F) -> Result<CoverData<F>, CoverError> {
    let k = |n: i64| F::from_i64(n);
    let (a, b) = (a.clone(), b.clone());
    let a4b = a.square() - k(4) * b.clone();
    let a3b = a.square() - k(3) * b.clone();
    require(&b, Condition::BZero)?;
    require(&a4b, Condition::A2Minus4B)?;
    require(&a3b, Condition::A2Minus3B)?;
    let p = poly(vec![b.clone(), a.clone(), F::one()]);
    let q = poly(vec![
        F::zero(),
        -k(3) * b.square(),
        -k(2) * a.clone() * b.clone(),
        a4b.clone(),
    ]);
    let sextic = q.clone() * p.clone();
    check_squarefree(&sextic)?;
    let curve = CurveModel {
        sextic,
        twist: F::one(),
    };
    let f1 = ratfunc(Polynomial::monomial(F::one(), 3), p);
    let l2 = poly(vec![k(3) * b.clone(), a.clone()]);
    let f2 = ratfunc(
        l2.clone().square()
            * poly(vec![b.clone() * a3b.clone(), a.clone() * a4b.clone()]),
        q,
    );
    check_coprime(&f1, 1)?;
    check_coprime(&f2, 2)?;
    let phi1 = covering_from_map(&curve, &f1, &Polynomial::x())?;
    let phi2 = covering_from_map(&curve, &f2, &l2)?;
    let j1 = k(16)
        * (k(16) * a.pow(6) - k(144) * a.pow(4) * b.clone() + k(405) * a.square() * b.square()
            - k(324) * b.pow(3))
        .pow(3)
        / (k(729) * b.pow(4) * a3b.pow(3) * a4b.square());
    let j2 = k(256) * a3b.pow(3) / (b.square() * a4b);
    Ok(CoverData {
        curve,
        phi1,
        phi2,
        j1,
        j2,
    })
}

/// Second map special: `f2 = (b x + 3c)^3 / Q`.
pub fn special_second<F: Field + Encode>(b: &F, c: &F) -> Result<CoverData<F>, CoverError> {
    let k = |n: i64| F::from_i64(n);
    let (b, c) = (b.clone(), c.clone());
    require(&b, Condition::BZero)?;
    require(&c, Condition::CZero)?;
    let l = poly(vec![k(3) * c.clone(), b.clone()]);
    let p = l.clone()
        * poly(vec![
            k(3) * b.clone() * c.clone(),
            k(2) * b.square(),
            k(9) * c.clone(),
        ]);
    let q = poly(vec![
        c.square(),
        k(2) * b.clone() * c.clone(),
        b.square(),
        k(4) * c.clone(),
    ]);
    if let Some(cond) = shared_root(&p, &q) {
        return Err(CoverError::Degenerate(cond));
    }
    let delta = b.pow(3) - k(27) * c.square();
    let delta4 = k(4) * b.pow(3) - k(27) * c.square();
    require(&delta, Condition::DiscD)?;
    require(&delta4, Condition::FourB3Minus27C2)?;
    let sextic = p.clone() * q.clone();
    check_squarefree(&sextic)?;
    let curve = CurveModel {
        sextic,
        twist: F::one(),
    };
    let f1 = ratfunc(Polynomial::monomial(F::one(), 2), p);
    let f2 = ratfunc(l.clone().pow(3), q);
    check_coprime(&f1, 1)?;
    check_coprime(&f2, 2)?;
    let d = curve.twist.clone();
    let d3 = delta.pow(3);
    let e1 = Weierstrass::new(
        k(9) * b.clone() * d.clone() / (k(4) * d3.clone()),
        k(3) / delta.clone(),
        -k(3) * (k(5) * b.pow(3) + k(108) * c.square()) / (k(4) * d3.clone()),
        F::one() / d3,
    );
    let e2 = Weierstrass::new(
        d / c.clone(),
        k(2) * delta.clone() / c.clone(),
        -k(27) * delta,
        F::zero(),
    );
    let phi1 = Covering {
        source: curve.clone(),
        target: e1,
        y_mul: derivative_over(&f1, &Polynomial::x()),
        x_map: f1,
    };
    let phi2 = Covering {
        source: curve.clone(),
        target: e2,
        y_mul: derivative_over(&f2, &l),
        x_map: f2,
    };
    let j1 = k(64) * b.pow(3) / c.square();
    let j2 = k(64) * delta4.pow(3) / (k(729) * b.pow(3) * c.pow(4));
    Ok(CoverData {
        curve,
        phi1,
        phi2,
        j1,
        j2,
    })
}

/// A candidate complementary map `f = l^k * rest / den`, the factor `l`
/// carrying the prescribed ramification point (a `k`-fold zero).
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate<R> {
    pub l: Polynomial<R>,
    pub k: u32,
    pub rest: Polynomial<R>,
    pub den: Polynomial<R>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Residue<R> {
    /// The polynomial whose roots make up the rest of the pulled-back
    /// ramification fibre.
    pub r: Polynomial<R>,
    /// Zero iff `r` is proportional to the expected fibre polynomial; equals
    /// `r mod p` when `p` is monic of degree `deg r`.
    pub residue: Polynomial<R>,
}

fn pseudo_quotient<R: Ring>(f: &Polynomial<R>, g: &Polynomial<R>, what: &'static str) -> Result<Polynomial<R>, CoverError> {
    let (q, r) = f
        .pseudo_divrem(g)
        .map_err(|_| CoverError::DegenerateCandidate(what))?;
    if r.is_zero() {
        Ok(q)
    } else {
        Err(CoverError::DegenerateCandidate(what))
    }
}

/// Push-pull of the ramification of `cand`, compared against the fibre `p`.
///
/// With `N = l^k rest`, `M = den` and `D = (N'M - NM') / l^(k-1)` the other
/// ramification points, computes
/// `R = res_y(N(x) M(y) - N(y) M(x), D(y)) / D(x)^2`. When `k` is odd the
/// ramification point is a Weierstrass point and is removed from `p` first.
pub fn complement_residue<R: Ring>(cand: &Candidate<R>, p: &Polynomial<R>) -> Result<Residue<R>, CoverError> {
    let n = cand.l.pow(cand.k) * cand.rest.clone();
    let m = cand.den.clone();
    if n.is_zero() || m.is_zero() {
        return Err(CoverError::DegenerateCandidate("zero numerator or denominator"));
    }
    let t = n.derivative() * m.clone() - n.clone() * m.derivative();
    let d = pseudo_quotient(&t, &cand.l.pow(cand.k.saturating_sub(1)), "ramification factor")?;
    if d.degree().unwrap_or(0) == 0 {
        return Err(CoverError::DegenerateCandidate("no further ramification"));
    }
    let width = n.coeffs().len().max(m.coeffs().len());
    // N(x) M(y) - N(y) M(x) as a polynomial in y over R[x]
    let pencil: Polynomial<Polynomial<R>> = poly(
        (0..width)
            .map(|i| n.scale(&m.coeff(i)) - m.scale(&n.coeff(i)))
            .collect(),
    );
    let dy: Polynomial<Polynomial<R>> = d.map_coeffs(|c| Polynomial::constant(c.clone()));
    let res = resultant(&pencil, &dy).expect("nonzero");
    if res.is_zero() {
        return Err(CoverError::DegenerateCandidate("numerator and denominator share a factor"));
    }
    let r = pseudo_quotient(&res, &d.square(), "ramification polynomial")?;
    let w = if cand.k % 2 == 1 && cand.k > 1 {
        pseudo_quotient(p, &cand.l, "ramification point is not a root of P")?
    } else {
        p.clone()
    };
    let dw = w.degree().ok_or(CoverError::DegenerateCandidate("zero fibre"))?;
    let residue = r.scale(&w.coeff(dw)) - w.scale(&r.coeff(dw));
    Ok(Residue { r, residue })
}

type Q2 = Polynomial<Polynomial<Q>>;

/// One family of pairs of special coverings.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecialFamily {
    /// The defining condition, e.g. `a = 0`.
    pub condition: String,
    /// The free parameter of the family.
    pub parameter: &'static str,
    pub f1: RationalFunction<Polynomial<Q>>,
    pub f2: RationalFunction<Polynomial<Q>>,
    pub j1: Q,
    pub j2: Q,
    /// Whether `E2` is the complementary curve of the covering `C -> E1`.
    pub complementary: bool,
}

/// Outcome of the classification of pairs of special coverings.
#[derive(Debug, Clone, PartialEq)]
pub struct BothSpecial {
    /// The push-pull polynomial of `f2 = 1/Q` over `Q[a, b]`, primitive.
    pub r: Polynomial<Q2>,
    /// `r mod (x^2 + a x + b)`.
    pub remainder: Polynomial<Q2>,
    pub families: Vec<SpecialFamily>,
}

fn strip_factor(g: &Q2, e: &Q2) -> Q2 {
    let mut g = g.clone();
    loop {
        let h = g.gcd_with(e);
        if h.degree().unwrap_or(0) == 0 && h.coeff(0).degree().unwrap_or(0) == 0 {
            return g;
        }
        g = g.exact_div(&h).expect("gcd divides");
    }
}

fn normalize_map(f: RationalFunction<Polynomial<Q>>) -> RationalFunction<Polynomial<Q>> {
    ratfunc(
        integral_primitive(&f.numerator().clone()),
        integral_primitive(&f.denominator().clone()),
    )
}

/// Specialize a family map at a parameter value.
fn at(f: &RationalFunction<Polynomial<Q>>, t: &Q) -> RationalFunction<Q> {
    ratfunc(
        f.numerator().map_coeffs(|c| c.eval(t)),
        f.denominator().map_coeffs(|c| c.eval(t)),
    )
}

fn family_j(
    f1: &RationalFunction<Polynomial<Q>>,
    f2: &RationalFunction<Polynomial<Q>>,
    t: &Q,
) -> Result<(Q, Q, Covering<Q>, Covering<Q>), CoverError> {
    let (f1, f2) = (at(f1, t), at(f2, t));
    let curve = CurveModel {
        sextic: f1.denominator().clone() * f2.denominator().clone(),
        twist: Q::one(),
    };
    let c1 = covering_from_map(&curve, &f1, &Polynomial::x())?;
    let c2 = covering_from_map(&curve, &f2, &Polynomial::one())?;
    Ok((j_of_weierstrass(&c1.target)?, j_of_weierstrass(&c2.target)?, c1, c2))
}

/// Classify pairs of coverings that are both special.
///
/// With `f1 = x^3/(x^2 + a x + b)` and `f2 = 1/Q`, the push-pull polynomial
/// of `f2` must be divisible by `x^2 + a x + b`; the components of the
/// vanishing locus of the remainder (away from `b = 0` and `a^2 = 4b`) are
/// the families.
pub fn both_special_families() -> Result<BothSpecial, CoverError> {
    let [a, b] = vars2::<Q>();
    let k = |n: i64| Q2::from_i64(n);
    let p = poly(vec![b.clone(), a.clone(), k(1)]);
    let a4b = a.square() - k(4) * b.clone();
    let q = poly(vec![
        k(0),
        -k(3) * b.square(),
        -k(2) * a.clone() * b.clone(),
        a4b.clone(),
    ]);
    let cand = Candidate {
        l: Polynomial::one(),
        k: 3,
        rest: Polynomial::one(),
        den: q.clone(),
    };
    let r = integral_primitive(&complement_residue(&cand, &p)?.r);
    let remainder = r.divrem_exact(&p).expect("monic").1;
    let mut g = remainder.content();
    for excluded in [b.clone(), a4b] {
        g = strip_factor(&g, &excluded);
    }

    let f1 = ratfunc(Polynomial::monomial(k(1), 3), p);
    let f2 = ratfunc(Polynomial::one(), q);
    let one = Q::one();
    let mut families = Vec::new();
    let mut push = |condition: String,
                    parameter: &'static str,
                    f1: RationalFunction<Polynomial<Q>>,
                    f2: RationalFunction<Polynomial<Q>>,
                    complement_j: &dyn Fn(&Q) -> Q|
     -> Result<(), CoverError> {
        let (f1, f2) = (normalize_map(f1), normalize_map(f2));
        let (j1, j2, _, _) = family_j(&f1, &f2, &one)?;
        let two = Q::from_i64(2);
        let (j1b, j2b, _, _) = family_j(&f1, &f2, &two)?;
        if (j1b, j2b) != (j1.clone(), j2.clone()) {
            return Err(CoverError::NotACovering("j varies along the family"));
        }
        let complementary = complement_j(&one) == j2;
        families.push(SpecialFamily {
            condition,
            parameter,
            f1,
            f2,
            j1,
            j2,
            complementary,
        });
        Ok(())
    };

    // components {a = r}: roots of the content in the b-direction
    let content = g.content();
    for root in Q::roots(&content) {
        let sub = |f: &RationalFunction<Q2>| {
            ratfunc(
                f.numerator().map_coeffs(|c| c.map_coeffs(|ca| ca.eval(&root))),
                f.denominator().map_coeffs(|c| c.map_coeffs(|ca| ca.eval(&root))),
            )
        };
        let r0 = root.clone();
        push(
            format!("a = {}", render(&root)),
            "b",
            sub(&f1),
            sub(&f2),
            &move |bv: &Q| first_special_j2(&r0, bv),
        )?;
    }
    // components {b = beta(a)}
    let pp = g.primitive_part();
    match pp.degree() {
        Some(0) | None => {}
        Some(1) => {
            let beta = (-pp.coeff(0))
                .exact_div(&pp.coeff(1))
                .ok_or(CoverError::NotACovering("component is not a graph over a"))?;
            let sub = |f: &RationalFunction<Q2>| {
                ratfunc(
                    f.numerator().map_coeffs(|c| c.eval(&beta)),
                    f.denominator().map_coeffs(|c| c.eval(&beta)),
                )
            };
            let b0 = beta.clone();
            push(
                format!("b = {}", render_in_a(&beta)),
                "a",
                sub(&f1),
                sub(&f2),
                &move |av: &Q| first_special_j2(av, &b0.eval(av)),
            )?;
        }
        Some(_) => return Err(CoverError::NotACovering("unexpected component of higher degree")),
    }
    Ok(BothSpecial {
        r,
        remainder,
        families,
    })
}

/// `j(E2)` of the first-special construction.
fn first_special_j2(a: &Q, b: &Q) -> Q {
    let k = |n: i64| Q::from_i64(n);
    let a3b = a.square() - k(3) * b.clone();
    let a4b = a.square() - k(4) * b.clone();
    k(256) * a3b.pow(3) / (b.square() * a4b)
}

fn render_in_a(p: &Polynomial<Q>) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !Ring::is_zero(*c))
        .map(|(i, c)| match i {
            0 => render(c),
            1 => format!("{}·a", render(c)),
            _ => format!("{}·a^{i}", render(c)),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn ratfunc_json<F: Ring + Encode>(f: &RationalFunction<F>) -> (Value, Value) {
    (f.numerator().encode(), f.denominator().encode())
}

impl<F: Ring + Encode> Covering<F> {
    pub fn to_json(&self) -> Value {
        let (xn, xd) = ratfunc_json(&self.x_map);
        let (yn, yd) = ratfunc_json(&self.y_mul);
        json!({
            "x_num": xn,
            "x_den": xd,
            "y_mul_num": yn,
            "y_mul_den": yd,
            "target": {"scale": self.target.scale.encode(), "cubic": self.target.cubic.encode()},
        })
    }
}

impl<F: Ring + Encode> CoverData<F> {
    pub fn to_json(&self) -> Value {
        json!({
            "curve": {"sextic": self.curve.sextic.encode(), "twist": self.curve.twist.encode()},
            "maps": [self.phi1.to_json(), self.phi2.to_json()],
            "j": [self.j1.encode(), self.j2.encode()],
        })
    }
}

impl SpecialFamily {
    pub fn to_json(&self) -> Value {
        json!({
            "condition": self.condition,
            "parameter": self.parameter,
            "f1": {"num": self.f1.numerator().encode(), "den": self.f1.denominator().encode()},
            "f2": {"num": self.f2.numerator().encode(), "den": self.f2.denominator().encode()},
            "j": [self.j1.encode(), self.j2.encode()],
            "complementary": self.complementary,
        })
    }
}
