use split33::algebra::poly::vars3;
use proptest::prelude::*;
use split33::algebra::{discriminant, rat, resultant, Polynomial, RationalFunction, Ring, Q};
use split33::coverings::{
    complement_residue, covering_from_map, f_relation, generic_cover, j_of_weierstrass, special_second,
    verify_covering, Candidate, CoverError, CurveModel,
};
use split33::worked::{example1, example2, example3};

type R3 = Polynomial<Polynomial<Polynomial<Q>>>;
type X3 = Polynomial<R3>;

fn k(n: i64) -> R3 {
    R3::from_i64(n)
}

fn px(coeffs: Vec<R3>) -> X3 {
    Polynomial::new(coeffs)
}

#[test]
fn discriminants_and_resultants_of_the_generic_family() {
    let [a, b, c] = vars3::<Q>();
    let p = px(vec![c.clone(), b.clone(), a.clone(), k(1)]);
    let want = a.square() * b.square() - k(4) * b.pow(3) - k(4) * a.pow(3) * c.clone()
        + k(18) * a.clone() * b.clone() * c.clone()
        - k(27) * c.square();
    assert_eq!(discriminant(&p).unwrap(), want);

    let d = px(vec![-k(2) * c.clone(), -b.clone(), k(0), k(1)]);
    assert_eq!(discriminant(&d).unwrap(), k(4) * (b.pow(3) - k(27) * c.square()));
    assert_eq!(resultant(&X3::x(), &p).unwrap(), c.clone());

    // res_y(x^2 P(y) - y^2 P(x), D(y))
    let pencil: Polynomial<X3> = Polynomial::new(
        (0..4)
            .map(|i| {
                let x2 = X3::monomial(p.coeff(i), 2);
                let y2p = if i == 2 { p.clone() } else { X3::zero() };
                x2 - y2p
            })
            .collect(),
    );
    let dy: Polynomial<X3> = d.map_coeffs(|c| X3::constant(c.clone()));
    let got = resultant(&pencil, &dy).unwrap();
    let q = px(vec![c.square(), k(2) * b.clone() * c.clone(), b.square(), k(4) * c.clone()]);
    assert_eq!(got, X3::constant(c) * d.clone() * d * q);
}

#[test]
fn generic_complementary_map_is_symbolic_solution() {
    let [a, b, c] = vars3::<Q>();
    let p = px(vec![c.clone(), b.clone(), a.clone(), k(1)]);
    let q = px(vec![c.square(), k(2) * b.clone() * c.clone(), b.square(), k(4) * c.clone()]);
    let lin = px(vec![
        c.clone() * (b.square() - k(3) * a.clone() * c.clone()),
        b.pow(3) - k(4) * a.clone() * b.clone() * c.clone() + k(9) * c.square(),
    ]);
    let cand = Candidate {
        l: px(vec![k(3) * c.clone(), b.clone()]),
        k: 2,
        rest: lin,
        den: q,
    };
    let out = complement_residue(&cand, &p).unwrap();
    assert!(out.residue.is_zero());
    assert_eq!(out.r.degree(), Some(3));
}

#[test]
fn worked_maps_verify_and_tampering_fails() {
    for ex in [example1(), example2(), example3()] {
        for (_, cov) in &ex.maps {
            assert!(verify_covering(cov));
            let mut bad = cov.clone();
            bad.target.scale = rat(2, 1);
            assert!(!verify_covering(&bad));
        }
    }
}

#[test]
fn recovered_targets_match_worked_models() {
    let ex = example1();
    // phi1 is doubly ramified at x = 0, phi2 at infinity
    for ((_, cov), l) in ex.maps.iter().zip([Polynomial::x(), Polynomial::one()]) {
        let rebuilt = covering_from_map(&ex.curve, &cov.x_map, &l).unwrap();
        assert!(verify_covering(&rebuilt));
        assert_eq!(j_of_weierstrass(&rebuilt.target), j_of_weierstrass(&cov.target));
    }
}

#[test]
fn second_special_degenerate_family() {
    // (b, c) = (3t^2, -t^3): x = t is a double root of both P and Q
    for t in [1i64, 2, -3] {
        let err = special_second(&rat(3 * t * t, 1), &rat(-t * t * t, 1)).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("res(P,Q) = 0"), "{msg}");
        assert!(msg.contains("multiple root of both"), "{msg}");
    }
    let k = rat(1728, 1);
    assert_eq!(f_relation(&k, &k), rat(0, 1));
}

#[test]
fn non_covering_maps_are_rejected() {
    let curve = CurveModel {
        sextic: Polynomial::from_i64s(&[1, 0, 0, 0, 0, 0, 1]),
        twist: rat(1, 1),
    };
    let f = RationalFunction::new(Polynomial::from_i64s(&[0, 0, 1]), Polynomial::from_i64s(&[1, 1])).unwrap();
    assert!(matches!(
        covering_from_map(&curve, &f, &Polynomial::x()),
        Err(CoverError::NotACovering(_))
    ));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generic_cover_verifies_or_names_condition(a in -6i64..6, b in -6i64..6, c in -6i64..6) {
        match generic_cover(&rat(a, 1), &rat(b, 1), &rat(c, 1)) {
            Ok(data) => {
                prop_assert!(verify_covering(&data.phi1));
                prop_assert!(verify_covering(&data.phi2));
                prop_assert_eq!(j_of_weierstrass(&data.phi1.target).unwrap(), data.j1);
                prop_assert_eq!(j_of_weierstrass(&data.phi2.target).unwrap(), data.j2);
            }
            Err(CoverError::Degenerate(cond)) => prop_assert!(!cond.to_string().is_empty()),
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
    }
}
