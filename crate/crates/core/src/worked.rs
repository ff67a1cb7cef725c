//! The three worked genus-2 examples, as data and as a list of checks.

use serde_json::{json, Value};

use crate::algebra::encode::{render, Encode};
use crate::algebra::{rat, Field, Polynomial, QSqrt3, RationalFunction, Ring, Q};
use crate::coverings::{
    both_special_families, f_relation, j_of_weierstrass, verify_covering, Covering, CurveModel, Weierstrass,
};
use crate::gluing::prop2_invariants;
use crate::hesse::j_hesse;
use crate::invariants::{igusa_clebsch, wp_equal, IgusaClebsch};

/// One assertion with both sides rendered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    fn new(name: &str, pass: bool, expected: impl Into<String>, actual: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            pass,
            expected: expected.into(),
            actual: actual.into(),
        }
    }

    fn equal<T: PartialEq + Encode>(name: &str, expected: &T, actual: &T) -> Self {
        Check::new(name, expected == actual, render(expected), render(actual))
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "result": if self.pass { "pass" } else { "fail" },
            "expected": self.expected,
            "actual": self.actual,
        })
    }
}

fn p(c: &[i64]) -> Polynomial<Q> {
    Polynomial::from_i64s(c)
}

fn rf(num: Polynomial<Q>, den: Polynomial<Q>) -> RationalFunction<Q> {
    RationalFunction::new(num, den).expect("nonzero denominator")
}

fn curve(sextic: Polynomial<Q>) -> CurveModel<Q> {
    CurveModel {
        sextic,
        twist: Q::one(),
    }
}

fn cover(source: &CurveModel<Q>, target: Polynomial<Q>, f: RationalFunction<Q>, h: RationalFunction<Q>) -> Covering<Q> {
    Covering {
        source: source.clone(),
        target: Weierstrass {
            scale: Q::one(),
            cubic: target,
        },
        x_map: f,
        y_mul: h,
    }
}

/// A curve with its displayed coverings.
#[derive(Debug, Clone, PartialEq)]
pub struct WorkedExample {
    pub curve: CurveModel<Q>,
    pub maps: Vec<(&'static str, Covering<Q>)>,
    pub invariants: [i64; 4],
}

/// `y^2 = (x^3 + 5)(4x^3 + 5)` over `x^3 + 100` and `x^3 + 625`.
pub fn example1() -> WorkedExample {
    let c = curve(p(&[5, 0, 0, 1]) * p(&[5, 0, 0, 4]));
    let d1 = p(&[5, 0, 0, 1]);
    let d2 = p(&[5, 0, 0, 4]);
    WorkedExample {
        maps: vec![
            (
                "phi1",
                cover(&c, p(&[100, 0, 0, 1]), rf(p(&[0, 0, -15]), d1.clone()), rf(p(&[-50, 0, 0, 5]), d1.square())),
            ),
            (
                "phi2",
                cover(&c, p(&[625, 0, 0, 1]), rf(p(&[0, -75]), d2.clone()), rf(p(&[-125, 0, 0, 200]), d2.square())),
            ),
        ],
        curve: c,
        invariants: [-90, 720, -15480, 144],
    }
}

/// `y^2 = x(x^2 + 1)(4x^2 + 3)` over `x^3 + x` and `x^3 + 108x`.
pub fn example2() -> WorkedExample {
    let c = curve(p(&[0, 3, 0, 7, 0, 4]));
    WorkedExample {
        maps: vec![
            (
                "phi1",
                cover(
                    &c,
                    p(&[0, 1, 0, 1]),
                    rf(p(&[1]), p(&[0, 3, 0, 4])),
                    rf(p(&[1, 0, 4]), p(&[0, 0, 1]) * p(&[3, 0, 4]).square()),
                ),
            ),
            (
                "phi2",
                cover(
                    &c,
                    p(&[0, 108, 0, 1]),
                    rf(p(&[0, 0, 0, 4]), p(&[1, 0, 1])),
                    rf(p(&[0, 12, 0, 4]), p(&[1, 0, 1]).square()),
                ),
            ),
        ],
        curve: c,
        invariants: [774, 9648, 2763360, 27648],
    }
}

/// `y^2 = x(2x^2 + 4x + 3)(3x^2 + 4x + 2)` with two pairs of coverings
/// swapped by `(x, y) -> (1/x, y/x^3)`.
pub fn example3() -> WorkedExample {
    let q1 = p(&[2, 4, 3]);
    let q2 = p(&[3, 4, 2]);
    let c = curve(p(&[0, 1]) * q2.clone() * q1.clone());
    let e1 = p(&[0, 486, 44, 1]);
    let e2 = p(&[3, 1, -1, 1]);
    let xq2 = p(&[0, 1]) * q2.clone();
    let x2q2 = p(&[0, 0, 1]) * q2.square();
    WorkedExample {
        maps: vec![
            (
                "phi1",
                cover(&c, e1.clone(), rf(p(&[0, 0, 0, 18]), q1.clone()), rf(p(&[0, 18]) * p(&[6, 8, 3]), q1.square())),
            ),
            (
                "phi1_bar",
                cover(&c, e1, rf(p(&[18]), xq2.clone()), rf(p(&[18]) * p(&[3, 8, 6]), x2q2.clone())),
            ),
            (
                "phi2",
                cover(&c, e2.clone(), rf(p(&[-2, 4, 5, 2]), q1.clone()), rf(p(&[4, 2]) * p(&[2, 0, 1]), q1.square())),
            ),
            (
                "phi2_bar",
                cover(&c, e2, rf(p(&[2, 5, 4, -2]), xq2), rf(p(&[2, 4]) * p(&[1, 0, 2]), x2q2)),
            ),
        ],
        curve: c,
        invariants: [86, 13456, 471968, 6718464],
    }
}

fn ic_string<R: Ring + Encode>(ic: &IgusaClebsch<R>) -> String {
    let v = ic.to_array().iter().map(render).collect::<Vec<_>>();
    format!("[{}]", v.join(" : "))
}

fn wp_check<F: Field + Encode>(name: &str, expected: [i64; 4], actual: Result<IgusaClebsch<F>, String>) -> Check {
    let want = IgusaClebsch::from_i64s(expected);
    match actual {
        Ok(ic) => Check::new(name, wp_equal(&ic, &want) == Ok(true), ic_string(&want), ic_string(&ic)),
        Err(e) => Check::new(name, false, ic_string(&want), e),
    }
}

fn j_check(name: &str, cov: &Covering<Q>, expected: Q) -> Check {
    match j_of_weierstrass(&cov.target) {
        Ok(j) => Check::equal(name, &expected, &j),
        Err(e) => Check::new(name, false, render(&expected), e.to_string()),
    }
}

fn covering_checks(prefix: &str, ex: &WorkedExample) -> Vec<Check> {
    let mut out = vec![wp_check(
        &format!("{prefix}: invariants of the curve"),
        ex.invariants,
        igusa_clebsch(&ex.curve.sextic).map_err(|e| e.to_string()),
    )];
    for (name, cov) in &ex.maps {
        let ok = verify_covering(cov);
        out.push(Check::new(
            &format!("{prefix}: {name} is a covering"),
            ok,
            "s h^2 S = d g(f)",
            if ok { "identity holds" } else { "identity fails" },
        ));
    }
    out
}

/// `f(1/x)` for the involution `(x, y) -> (1/x, y/x^3)`.
fn compose_xi(f: &RationalFunction<Q>) -> RationalFunction<Q> {
    let flip = |g: &Polynomial<Q>, d: usize| {
        Polynomial::new((0..=d).map(|i| g.coeff(d - i)).collect())
    };
    let d = f.map_degree();
    rf(flip(f.numerator(), d), flip(f.denominator(), d)).reduced()
}

/// Every assertion of the worked examples.
pub fn appendix_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let zero = Q::zero();

    let ex = example1();
    out.extend(covering_checks("example 1", &ex));
    out.push(wp_check(
        "example 1: glued invariants at (0, 0)",
        ex.invariants,
        prop2_invariants(&zero, &zero).map_err(|e| e.to_string()),
    ));
    out.push(Check::equal("example 1: j(E)", &zero, &j_hesse(&zero).expect("smooth")));
    out.push(j_check("example 1: j(E1)", &ex.maps[0].1, zero.clone()));
    out.push(j_check("example 1: j(E2)", &ex.maps[1].1, zero.clone()));

    let ex = example2();
    out.extend(covering_checks("example 2", &ex));
    let a = QSqrt3::new(rat(-1, 1), rat(1, 1));
    out.push(wp_check(
        "example 2: glued invariants at (-1 + sqrt(3), -1 + sqrt(3))",
        ex.invariants,
        prop2_invariants(&a, &a).map_err(|e| e.to_string()),
    ));
    out.push(Check::equal("example 2: j(E)", &QSqrt3::from_i64(1728), &j_hesse(&a).expect("smooth")));
    out.push(j_check("example 2: j(E1)", &ex.maps[0].1, rat(1728, 1)));
    out.push(j_check("example 2: j(E2)", &ex.maps[1].1, rat(1728, 1)));

    let ex = example3();
    out.extend(covering_checks("example 3", &ex));
    let j1 = rat(-873722816, 59049);
    let j2 = rat(64, 9);
    out.push(j_check("example 3: j(E1)", &ex.maps[0].1, j1.clone()));
    out.push(j_check("example 3: j(E2)", &ex.maps[2].1, j2.clone()));
    for (i, k) in [(0, 1), (2, 3)] {
        let name = format!("example 3: {} = {} o xi", ex.maps[k].0, ex.maps[i].0);
        let lhs = ex.maps[k].1.x_map.reduced();
        let rhs = compose_xi(&ex.maps[i].1.x_map);
        out.push(Check::new(&name, lhs == rhs, "equal maps", if lhs == rhs { "equal maps" } else { "maps differ" }));
    }
    out.push(Check::equal("example 3: F(64/9, j(E1))", &zero, &f_relation(&j2, &j1)));
    let k1728 = rat(1728, 1);
    out.push(Check::equal("example 3: F(1728, 1728)", &zero, &f_relation(&k1728, &k1728)));
    match both_special_families() {
        Ok(bs) => {
            let fam = bs.families.iter().find(|f| f.j1 == j1);
            out.push(Check::new(
                "example 3: both-special family with j(E1) is self-paired, not complementary",
                fam.map(|f| f.j2 == j1 && !f.complementary).unwrap_or(false),
                "j2 = j1, complementary = false",
                fam.map(|f| format!("j2 = {}, complementary = {}", render(&f.j2), f.complementary))
                    .unwrap_or_else(|| "no family".into()),
            ));
        }
        Err(e) => out.push(Check::new("example 3: both-special families", false, "two families", e.to_string())),
    }
    out
}
