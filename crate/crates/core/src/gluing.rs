//! Gluing two Hesse curves along their 3-torsion.
//!
//! `E_a x E_b` sits in `P^8` through the Segre embedding. The group
//! `Gamma` is the graph of `S -> S`, `T -> -T`.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::encode::Encode;
use crate::algebra::fp::{is_prime, primes_congruent};
use crate::algebra::{with_prime, Field, Fp, Ring, Q};
use crate::hesse::{
    orbit12, random_point_fp, two_torsion, HesseCurve, HesseError, HessePoint, TorsionVector, TwoIsogeny,
};
use crate::invariants::{wp_equal, IgusaClebsch};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GluingError {
    #[error("{0}³ = −1: the Hesse cubic is singular")]
    Singular(char),
    #[error("3a²b²+a³+b³−3ab+2 = 0: E_a and E_b are 2-isogenous: quotient splits, product of elliptic curves, not a Jacobian")]
    Degenerate,
    #[error("the field has no primitive cube root of unity")]
    NoOmega,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("bad reduction modulo {0}")]
    BadReduction(u64),
    #[error("2-torsion of E_{curve} is not rational over F_{p} ({found} of 3 points); work over F_{p}^{degree}")]
    TorsionNotRational { curve: char, p: u64, found: usize, degree: u32 },
    #[error("2-torsion point is on both or neither eigenform zero locus")]
    DichotomyViolated,
    #[error("no translation by the glued 3-torsion matches map {0}")]
    NoMatching(usize),
    #[error(transparent)]
    Hesse(#[from] HesseError),
}

pub type Result<T> = std::result::Result<T, GluingError>;

/// Hesse parameters `(a, b)` of `E_1` and `E_2`.
#[derive(Debug, Clone, PartialEq)]
pub struct GluingParams<F> {
    pub a: F,
    pub b: F,
}

impl<F: Field> GluingParams<F> {
    pub fn new(a: F, b: F) -> Result<Self> {
        if (a.pow(3) + F::one()).is_zero() {
            return Err(GluingError::Singular('a'));
        }
        if (b.pow(3) + F::one()).is_zero() {
            return Err(GluingError::Singular('b'));
        }
        Ok(GluingParams { a, b })
    }

    pub fn curves(&self) -> (HesseCurve<F>, HesseCurve<F>) {
        (
            HesseCurve::new(self.a.clone()).expect("checked"),
            HesseCurve::new(self.b.clone()).expect("checked"),
        )
    }
}

/// `3a^2 b^2 + a^3 + b^3 - 3ab + 2`.
pub fn degeneracy_value<R: Ring>(a: &R, b: &R) -> R {
    R::from_i64(3) * a.square() * b.square() + a.pow(3) + b.pow(3) - R::from_i64(3) * a.clone() * b.clone()
        + R::from_i64(2)
}

/// The classical modular polynomial of level two.
pub fn modular_phi2<R: Ring>(x: &R, y: &R) -> R {
    let k = |n: i64| R::from_i64(n);
    x.pow(3) + y.pow(3) - x.square() * y.square()
        + k(1488) * (x.square() * y.clone() + x.clone() * y.square())
        - k(162000) * (x.square() + y.square())
        + k(40773375) * x.clone() * y.clone()
        + k(8748000000) * (x.clone() + y.clone())
        - k(157464000000000)
}

// (c, m, n) stands for c (a^m b^n + a^n b^m), or c a^m b^m when m = n
const I2_INNER: &[(i64, u32, u32)] = &[
    (9, 6, 6),
    (-30, 7, 4),
    (-88, 5, 5),
    (1, 8, 2),
    (54, 6, 3),
    (65, 4, 4),
    (-32, 7, 1),
    (-104, 5, 2),
    (40, 6, 0),
    (44, 3, 3),
    (100, 4, 1),
    (-68, 2, 2),
    (16, 3, 0),
    (112, 1, 1),
    (-20, 0, 0),
];

const I4_INNER: &[(i64, u32, u32)] = &[
    (9, 4, 4),
    (240, 3, 3),
    (8, 4, 1),
    (240, 2, 2),
    (160, 3, 0),
    (256, 1, 1),
    (320, 0, 0),
];

const I6_INNER: &[(i64, u32, u32)] = &[
    (729, 10, 10),
    (-3402, 11, 8),
    (30456, 9, 9),
    (81, 12, 6),
    (-70794, 10, 7),
    (-201555, 8, 8),
    (-2160, 11, 5),
    (60, 12, 3),
    (106560, 9, 6),
    (-148932, 7, 7),
    (-121608, 10, 4),
    (480, 11, 2),
    (-358740, 8, 5),
    (-8, 12, 0),
    (156928, 9, 3),
    (336444, 6, 6),
    (-50160, 10, 1),
    (81072, 7, 4),
    (-462096, 5, 5),
    (-167112, 8, 2),
    (84224, 9, 0),
    (455568, 6, 3),
    (761040, 4, 4),
    (181152, 7, 1),
    (-93600, 5, 2),
    (219552, 6, 0),
    (383424, 3, 3),
    (564480, 4, 1),
    (88512, 2, 2),
    (74624, 3, 0),
    (314112, 1, 1),
    (-55040, 0, 0),
];

fn symmetric_sum<R: Ring>(terms: &[(i64, u32, u32)], pa: &[R], pb: &[R]) -> R {
    terms.iter().fold(R::zero(), |acc, &(c, m, n)| {
        let (m, n) = (m as usize, n as usize);
        let mono = if m == n {
            pa[m].clone() * pb[m].clone()
        } else {
            pa[m].clone() * pb[n].clone() + pa[n].clone() * pb[m].clone()
        };
        acc + R::from_i64(c) * mono
    })
}

/// The closed-form Igusa–Clebsch invariants of `(E_a x E_b)/Gamma` with no
/// admissibility checks, usable over any ring.
pub fn prop2_unchecked<R: Ring>(a: &R, b: &R) -> IgusaClebsch<R> {
    let pa: Vec<R> = (0..=12).map(|e| a.pow(e)).collect();
    let pb: Vec<R> = (0..=12).map(|e| b.pow(e)).collect();
    let d = degeneracy_value(a, b);
    let d4 = d.pow(4);
    let k = |n: i64| R::from_i64(n);
    IgusaClebsch {
        i2: k(72) * symmetric_sum(I2_INNER, &pa, &pb),
        i4: k(36) * d4.clone() * symmetric_sum(I4_INNER, &pa, &pb),
        i6: k(72) * d4 * symmetric_sum(I6_INNER, &pa, &pb),
        i10: k(36864) * (pa[3].clone() + R::one()) * (pb[3].clone() + R::one()) * d.pow(12),
    }
}

/// Igusa–Clebsch invariants of the genus-2 curve whose Jacobian is
/// `(E_a x E_b)/Gamma`.
pub fn prop2_invariants<F: Field>(a: &F, b: &F) -> Result<IgusaClebsch<F>> {
    GluingParams::new(a.clone(), b.clone())?;
    if degeneracy_value(a, b).is_zero() {
        return Err(GluingError::Degenerate);
    }
    Ok(prop2_unchecked(a, b))
}

/// JSON for the glued invariants, flagging the split case.
pub fn glue_report<F: Field + Encode>(a: &F, b: &F) -> Result<Value> {
    GluingParams::new(a.clone(), b.clone())?;
    let degenerate = degeneracy_value(a, b).is_zero();
    let mut v = prop2_unchecked(a, b).to_json();
    v["degenerate"] = json!(degenerate);
    Ok(v)
}

/// Pairs of indices into `orbit12(a) x orbit12(b)` grouped by weighted
/// projective equality of the glued invariants.
#[derive(Debug, Clone, PartialEq)]
pub struct OrbitPartition {
    pub classes: Vec<Vec<(usize, usize)>>,
    /// Pairs with a flagged orbit entry or a split quotient.
    pub skipped: Vec<(usize, usize)>,
}

pub fn orbit_partition<F: Field>(a: &F, b: &F) -> Result<OrbitPartition> {
    let oa = orbit12(a)?;
    let ob = orbit12(b)?;
    let mut reps: Vec<IgusaClebsch<F>> = Vec::new();
    let mut classes: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut skipped = Vec::new();
    for (i, x) in oa.iter().enumerate() {
        for (j, y) in ob.iter().enumerate() {
            let ic = match (x, y) {
                (Some(x), Some(y)) => prop2_invariants(x, y).ok(),
                _ => None,
            };
            let Some(ic) = ic else {
                skipped.push((i, j));
                continue;
            };
            match reps.iter().position(|r| wp_equal(r, &ic) == Ok(true)) {
                Some(k) => classes[k].push((i, j)),
                None => {
                    reps.push(ic);
                    classes.push(vec![(i, j)]);
                }
            }
        }
    }
    Ok(OrbitPartition { classes, skipped })
}

/// A point `[X1 : ... : X9]` of `P^8`, last nonzero coordinate one.
#[derive(Debug, Clone, PartialEq)]
pub struct SegrePoint<F> {
    pub coords: [F; 9],
}

impl<F: Field> SegrePoint<F> {
    pub fn new(coords: [F; 9]) -> Option<Self> {
        let s = coords.iter().rev().find(|c| !c.is_zero())?.inv()?;
        Some(SegrePoint {
            coords: coords.map(|c| c * s.clone()),
        })
    }

    /// Whether the coordinates form a rank-one 3x3 matrix.
    pub fn is_rank_one(&self) -> bool {
        let x = |i: usize, j: usize| self.coords[3 * i + j].clone();
        (0..3).all(|i| {
            (0..3).all(|k| {
                (0..3).all(|j| (0..3).all(|l| (x(i, j) * x(k, l) - x(i, l) * x(k, j)).is_zero()))
            })
        })
    }
}

impl<F: Field + Encode> SegrePoint<F> {
    pub fn to_json(&self) -> Value {
        Value::Array(self.coords.iter().map(Encode::encode).collect())
    }
}

pub fn segre_embed<F: Field>(p: &HessePoint<F>, q: &HessePoint<F>) -> SegrePoint<F> {
    let u = p.coords();
    let v = q.coords();
    SegrePoint::new(std::array::from_fn(|k| u[k / 3].clone() * v[k % 3].clone())).expect("nonzero")
}

/// A linear map of `P^8`, acting on column vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ProjLinearMap9<F> {
    pub m: [[F; 9]; 9],
}

fn proportional<F: Field>(u: &[F], v: &[F]) -> Option<F> {
    let k = v.iter().position(|c| !c.is_zero())?;
    let l = u[k].clone() / v[k].clone();
    (!l.is_zero() && u.iter().zip(v).all(|(x, y)| *x == l.clone() * y.clone())).then_some(l)
}

impl<F: Field> ProjLinearMap9<F> {
    pub fn identity() -> Self {
        ProjLinearMap9 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { F::one() } else { F::zero() })),
        }
    }

    /// The map `X_k -> c_k X_{perm[k]}` (zero-based indices).
    pub fn monomial(perm: [usize; 9], scale: [F; 9]) -> Self {
        ProjLinearMap9 {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| if perm[i] == j { scale[i].clone() } else { F::zero() })
            }),
        }
    }

    pub fn apply(&self, p: &SegrePoint<F>) -> Option<SegrePoint<F>> {
        SegrePoint::new(std::array::from_fn(|i| {
            (0..9).fold(F::zero(), |acc, j| acc + self.m[i][j].clone() * p.coords[j].clone())
        }))
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        ProjLinearMap9 {
            m: std::array::from_fn(|i| {
                std::array::from_fn(|j| {
                    (0..9).fold(F::zero(), |acc, k| acc + self.m[i][k].clone() * other.m[k][j].clone())
                })
            }),
        }
    }

    fn flat(&self) -> Vec<F> {
        self.m.iter().flatten().cloned().collect()
    }

    pub fn projectively_equal(&self, other: &Self) -> bool {
        proportional(&self.flat(), &other.flat()).is_some()
    }

    fn normalized(&self) -> Vec<F> {
        let f = self.flat();
        let s = f.iter().find(|c| !c.is_zero()).expect("invertible").inv().expect("nonzero");
        f.into_iter().map(|c| c * s.clone()).collect()
    }
}

/// Order of the group generated by `gens` inside `PGL_9`.
pub fn projective_group_order<F: Field>(gens: &[ProjLinearMap9<F>]) -> usize {
    let mut seen = vec![ProjLinearMap9::<F>::identity().normalized()];
    let mut frontier = vec![ProjLinearMap9::<F>::identity()];
    while let Some(g) = frontier.pop() {
        for h in gens {
            let gh = g.compose(h);
            let key = gh.normalized();
            if !seen.contains(&key) {
                seen.push(key);
                frontier.push(gh);
            }
        }
    }
    seen.len()
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinearForm9<F> {
    pub c: [F; 9],
}

impl<F: Field> LinearForm9<F> {
    pub fn eval(&self, p: &SegrePoint<F>) -> F {
        (0..9).fold(F::zero(), |acc, i| acc + self.c[i].clone() * p.coords[i].clone())
    }

    /// The pullback `L ∘ M`.
    pub fn pullback(&self, m: &ProjLinearMap9<F>) -> Self {
        LinearForm9 {
            c: std::array::from_fn(|j| (0..9).fold(F::zero(), |acc, k| acc + self.c[k].clone() * m.m[k][j].clone())),
        }
    }

    /// `lambda` with `self = lambda * other`, if any.
    pub fn ratio(&self, other: &Self) -> Option<F> {
        proportional(&self.c, &other.c)
    }
}

/// `sum_{i <= j} q[i][j] X_i X_j`; entries below the diagonal are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm9<F> {
    pub q: [[F; 9]; 9],
}

impl<F: Field> QuadraticForm9<F> {
    fn from_terms(terms: &[(usize, usize)]) -> Self {
        let mut q: [[F; 9]; 9] = std::array::from_fn(|_| std::array::from_fn(|_| F::zero()));
        for &(i, j) in terms {
            let (i, j) = (i.min(j), i.max(j));
            q[i][j] = q[i][j].clone() + F::one();
        }
        QuadraticForm9 { q }
    }

    pub fn eval(&self, p: &SegrePoint<F>) -> F {
        let x = &p.coords;
        let mut acc = F::zero();
        for i in 0..9 {
            for j in i..9 {
                acc = acc + self.q[i][j].clone() * x[i].clone() * x[j].clone();
            }
        }
        acc
    }

    pub fn pullback(&self, m: &ProjLinearMap9<F>) -> Self {
        // full matrix M^T Q M, folded back to upper triangular
        let mut full: [[F; 9]; 9] = std::array::from_fn(|_| std::array::from_fn(|_| F::zero()));
        for (r, row) in full.iter_mut().enumerate() {
            for (s, e) in row.iter_mut().enumerate() {
                let mut acc = F::zero();
                for i in 0..9 {
                    for j in i..9 {
                        if !self.q[i][j].is_zero() {
                            acc = acc + m.m[i][r].clone() * self.q[i][j].clone() * m.m[j][s].clone();
                        }
                    }
                }
                *e = acc;
            }
        }
        QuadraticForm9 {
            q: std::array::from_fn(|i| {
                std::array::from_fn(|j| match i.cmp(&j) {
                    std::cmp::Ordering::Less => full[i][j].clone() + full[j][i].clone(),
                    std::cmp::Ordering::Equal => full[i][i].clone(),
                    std::cmp::Ordering::Greater => F::zero(),
                })
            }),
        }
    }

    pub fn ratio(&self, other: &Self) -> Option<F> {
        let u: Vec<F> = self.q.iter().flatten().cloned().collect();
        let v: Vec<F> = other.q.iter().flatten().cloned().collect();
        proportional(&u, &v)
    }
}

/// The fixed linear algebra on `P^8`: inversion, the two translation
/// generators, the nine invariant hyperplanes, the eigenforms of the
/// inversion and the four Kummer quadrics.
#[derive(Debug, Clone, PartialEq)]
pub struct StructuralMaps<F> {
    pub inversion: ProjLinearMap9<F>,
    pub trans1: ProjLinearMap9<F>,
    pub trans2: ProjLinearMap9<F>,
    pub l: Vec<LinearForm9<F>>,
    pub s1: Vec<LinearForm9<F>>,
    pub s2: Vec<LinearForm9<F>>,
    pub kummer: Vec<QuadraticForm9<F>>,
}

fn form<F: Field>(terms: &[(usize, F)]) -> LinearForm9<F> {
    let mut c: [F; 9] = std::array::from_fn(|_| F::zero());
    for (i, v) in terms {
        c[i - 1] = v.clone();
    }
    LinearForm9 { c }
}

/// The same objects with 1-based indices as printed.
pub fn structural_maps<F: Field>() -> Result<StructuralMaps<F>> {
    let w = F::cube_root_of_unity().ok_or(GluingError::NoOmega)?;
    let w2 = w.square();
    let one = F::one;
    let ones: [F; 9] = std::array::from_fn(|_| F::one());
    let perm = |p: [usize; 9]| p.map(|i| i - 1);
    let inversion = ProjLinearMap9::monomial(perm([5, 4, 6, 2, 1, 3, 8, 7, 9]), ones.clone());
    let trans1 = ProjLinearMap9::monomial(perm([5, 6, 4, 8, 9, 7, 2, 3, 1]), ones);
    let trans2 = ProjLinearMap9::monomial(
        perm([1, 2, 3, 4, 5, 6, 7, 8, 9]),
        [one(), w.clone(), w2.clone(), w2.clone(), one(), w.clone(), w.clone(), w2.clone(), one()],
    );
    let l = vec![
        form(&[(1, one()), (5, one()), (9, one())]),
        form(&[(1, w.clone()), (5, w2.clone()), (9, one())]),
        form(&[(1, w2.clone()), (5, w.clone()), (9, one())]),
        form(&[(3, one()), (4, one()), (8, one())]),
        form(&[(2, one()), (6, one()), (7, one())]),
        form(&[(3, w2.clone()), (4, w.clone()), (8, one())]),
        form(&[(2, w.clone()), (6, w2.clone()), (7, one())]),
        form(&[(3, w.clone()), (4, w2.clone()), (8, one())]),
        form(&[(2, w2.clone()), (6, w.clone()), (7, one())]),
    ];
    let s1 = vec![
        form(&[(1, one()), (5, one())]),
        form(&[(2, one()), (4, one())]),
        form(&[(3, one()), (6, one())]),
        form(&[(7, one()), (8, one())]),
        form(&[(9, one())]),
    ];
    let s2 = vec![
        form(&[(1, one()), (5, -one())]),
        form(&[(2, one()), (4, -one())]),
        form(&[(3, one()), (6, -one())]),
        form(&[(7, one()), (8, -one())]),
    ];
    let q = |t: &[(usize, usize)]| {
        QuadraticForm9::from_terms(&t.iter().map(|&(i, j)| (i - 1, j - 1)).collect::<Vec<_>>())
    };
    let kummer = vec![
        q(&[(2, 4), (3, 7), (6, 8)]),
        q(&[(2, 3), (4, 6), (7, 8)]),
        q(&[(2, 8), (3, 6), (4, 7)]),
        q(&[(1, 1), (5, 5), (9, 9)]),
    ];
    Ok(StructuralMaps {
        inversion,
        trans1,
        trans2,
        l,
        s1,
        s2,
        kummer,
    })
}

/// `alpha(m S + n T) = m S + 2n T`.
pub fn alpha(v: TorsionVector) -> TorsionVector {
    TorsionVector::new(v.m as i64, 2 * v.n as i64)
}

/// Which element `(g, alpha(g))` of `Gamma` each translation generator
/// realizes, as torsion vectors of `g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Correspondence {
    pub trans1: TorsionVector,
    pub trans2: TorsionVector,
}

/// Decides by evaluation at `samples` random points of `E_a x E_b` over
/// `F_p` which translations the two generators are.
pub fn translation_correspondence(a: &Q, b: &Q, p: u64, samples: usize, seed: u64) -> Result<Correspondence> {
    if !is_prime(p) {
        return Err(GluingError::NotPrime(p));
    }
    if p % 3 != 1 {
        return Err(GluingError::NoOmega);
    }
    with_prime(p, || {
        let reduce = |q: &Q| Fp::from_rational(q).ok_or(GluingError::BadReduction(p));
        let params = GluingParams::new(reduce(a)?, reduce(b)?).map_err(|_| GluingError::BadReduction(p))?;
        let (e1, e2) = params.curves();
        let maps = structural_maps::<Fp>()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ p);
        let pts: Vec<(HessePoint<Fp>, HessePoint<Fp>)> = (0..samples)
            .map(|_| (random_point_fp(&e1, &mut rng), random_point_fp(&e2, &mut rng)))
            .collect();
        let mut found = [None, None];
        for (slot, (idx, m)) in found.iter_mut().zip([(1, &maps.trans1), (2, &maps.trans2)]) {
            for v in TorsionVector::all() {
                let g1 = e1.torsion_point(v)?;
                let g2 = e2.torsion_point(alpha(v))?;
                let ok = pts.iter().all(|(x, y)| {
                    m.apply(&segre_embed(x, y)) == Some(segre_embed(&e1.add(x, &g1), &e2.add(y, &g2)))
                });
                if ok {
                    *slot = Some(v);
                    break;
                }
            }
            if slot.is_none() {
                return Err(GluingError::NoMatching(idx));
            }
        }
        Ok(Correspondence {
            trans1: found[0].expect("set"),
            trans2: found[1].expect("set"),
        })
    })
    .map_err(|_| GluingError::NotPrime(p))?
}

/// Classification of the sixteen points of `(E_a x E_b)[2]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Census {
    pub p: u64,
    /// Points on which every form of `S1` vanishes.
    pub plus_count: usize,
    /// Points on which every form of `S2` vanishes.
    pub minus_count: usize,
    /// Points with `L1 = 0`.
    pub on_d_count: usize,
}

impl Census {
    pub fn to_json(&self) -> Value {
        json!({"p": self.p, "plus": self.plus_count, "minus": self.minus_count, "on_D": self.on_d_count})
    }
}

fn full_two_torsion(curve: &HesseCurve<Fp>, name: char, p: u64) -> Result<Vec<HessePoint<Fp>>> {
    let pts = two_torsion(curve);
    if pts.len() < 3 {
        return Err(GluingError::TorsionNotRational {
            curve: name,
            p,
            found: pts.len(),
            degree: if pts.is_empty() { 3 } else { 2 },
        });
    }
    let mut all = vec![curve.identity()];
    all.extend(pts);
    Ok(all)
}

/// Census over the current prime field.
pub fn census_fp(a: Fp, b: Fp) -> Result<Census> {
    let p = a.modulus();
    let (e1, e2) = GluingParams::new(a, b)?.curves();
    let t1 = full_two_torsion(&e1, 'a', p)?;
    let t2 = full_two_torsion(&e2, 'b', p)?;
    let maps = structural_maps_no_omega();
    let mut c = Census {
        p,
        plus_count: 0,
        minus_count: 0,
        on_d_count: 0,
    };
    for x in &t1 {
        for y in &t2 {
            let s = segre_embed(x, y);
            let plus = maps.0.iter().all(|f| f.eval(&s).is_zero());
            let minus = maps.1.iter().all(|f| f.eval(&s).is_zero());
            match (plus, minus) {
                (true, false) => c.plus_count += 1,
                (false, true) => c.minus_count += 1,
                _ => return Err(GluingError::DichotomyViolated),
            }
            if maps.2.eval(&s).is_zero() {
                c.on_d_count += 1;
            }
        }
    }
    Ok(c)
}

// S1, S2 and L1 have rational coefficients, so the census also runs when
// p = 2 mod 3
fn structural_maps_no_omega() -> (Vec<LinearForm9<Fp>>, Vec<LinearForm9<Fp>>, LinearForm9<Fp>) {
    let one = Fp::one;
    (
        vec![
            form(&[(1, one()), (5, one())]),
            form(&[(2, one()), (4, one())]),
            form(&[(3, one()), (6, one())]),
            form(&[(7, one()), (8, one())]),
            form(&[(9, one())]),
        ],
        vec![
            form(&[(1, one()), (5, -one())]),
            form(&[(2, one()), (4, -one())]),
            form(&[(3, one()), (6, -one())]),
            form(&[(7, one()), (8, -one())]),
        ],
        form(&[(1, one()), (5, one()), (9, one())]),
    )
}

/// Census of `(E_a x E_b)[2]` for rational `a, b` reduced modulo `p`.
pub fn two_torsion_census(a: &Q, b: &Q, p: u64) -> Result<Census> {
    if !is_prime(p) {
        return Err(GluingError::NotPrime(p));
    }
    with_prime(p, || {
        let reduce = |q: &Q| Fp::from_rational(q).ok_or(GluingError::BadReduction(p));
        let (a, b) = (reduce(a)?, reduce(b)?);
        GluingParams::new(a, b).map_err(|_| GluingError::BadReduction(p))?;
        census_fp(a, b)
    })
    .map_err(|_| GluingError::NotPrime(p))?
}

/// Parameters `(a, b)` in `F_p` with all 2-torsion of both curves rational:
/// either off the degeneracy locus, or from the 2-isogeny family.
pub fn census_parameters(p: u64, degenerate: bool, limit: usize) -> Result<Vec<(u64, u64)>> {
    if !is_prime(p) {
        return Err(GluingError::NotPrime(p));
    }
    with_prime(p, || {
        let splits = |x: Fp| {
            HesseCurve::new(x)
                .map(|e| two_torsion(&e).len() == 3)
                .unwrap_or(false)
        };
        let mut out = Vec::new();
        if degenerate {
            for t in Fp::elements() {
                let Ok(iso) = TwoIsogeny::new(t) else { continue };
                let (a, b) = (*iso.source.a(), *iso.target.a());
                if splits(a) && splits(b) {
                    out.push((a.value(), b.value()));
                }
                if out.len() == limit {
                    break;
                }
            }
        } else {
            'outer: for a in Fp::elements().filter(|&a| splits(a)) {
                for b in Fp::elements().filter(|&b| splits(b)) {
                    if !degeneracy_value(&a, &b).is_zero() {
                        out.push((a.value(), b.value()));
                        if out.len() == limit {
                            break 'outer;
                        }
                    }
                }
            }
        }
        out
    })
    .map_err(|_| GluingError::NotPrime(p))
}

/// The smallest `count` primes `p = 1 mod 12` over which both kinds of
/// census parameters exist.
pub fn census_primes(count: usize) -> Vec<u64> {
    primes_congruent(1, 12)
        .filter(|&p| {
            [false, true]
                .iter()
                .all(|&d| census_parameters(p, d, 1).map(|v| !v.is_empty()).unwrap_or(false))
        })
        .take(count)
        .collect()
}
