//! End-to-end acceptance: one pass/fail line per criterion.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use split33::algebra::poly::{vars2, vars3};
use split33::algebra::{
    discriminant, integral_primitive, rat, resultant, with_prime, Field, Fp, Polynomial, QOmega, QSqrt3, Ring, Q,
};
use split33::coverings::{
    both_special_families, complement_residue, f_relation, j_of_weierstrass, verify_covering, Candidate,
};
use split33::gluing::{
    census_parameters, census_primes, degeneracy_value, modular_phi2, prop2_invariants, prop2_unchecked,
    structural_maps, translation_correspondence, two_torsion_census,
};
use split33::hesse::{
    hesse_iso_identity, j_hesse, points_fp, random_point_fp, weierstrass_to_hesse, weil_pairing3, HesseCurve,
    TorsionVector, TwoIsogeny,
};
use split33::invariants::{igusa_clebsch, wp_equal, IgusaClebsch};
use split33::worked::{example1, example2, example3, WorkedExample};

type Outcome = Result<(), String>;

fn ensure(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn wp(ic: &IgusaClebsch<Q>, want: [i64; 4]) -> bool {
    wp_equal(ic, &IgusaClebsch::from_i64s(want)) == Ok(true)
}

fn example_core(ex: &WorkedExample, name: &str) -> Outcome {
    let ic = igusa_clebsch(&ex.curve.sextic).map_err(|e| e.to_string())?;
    ensure(wp(&ic, ex.invariants), format!("{name}: invariants {:?}", ic.to_array()))?;
    for (m, cov) in &ex.maps {
        ensure(verify_covering(cov), format!("{name}: {m} does not verify"))?;
    }
    Ok(())
}

fn j_of(ex: &WorkedExample, i: usize) -> Result<Q, String> {
    j_of_weierstrass(&ex.maps[i].1.target).map_err(|e| e.to_string())
}

fn criterion1() -> Outcome {
    let ex = example1();
    example_core(&ex, "example 1")?;
    let zero = rat(0, 1);
    let ic = prop2_invariants(&zero, &zero).map_err(|e| e.to_string())?;
    ensure(wp(&ic, [-90, 720, -15480, 144]), "glued invariants at (0, 0)")?;
    ensure(j_hesse(&zero) == Ok(zero.clone()), "j(E)")?;
    ensure(j_of(&ex, 0)? == zero && j_of(&ex, 1)? == zero, "j(E1), j(E2)")
}

fn criterion2() -> Outcome {
    let ex = example2();
    example_core(&ex, "example 2")?;
    let a = QSqrt3::new(rat(-1, 1), rat(1, 1));
    let ic = prop2_invariants(&a, &a).map_err(|e| e.to_string())?;
    let want = IgusaClebsch::from_i64s([774, 9648, 2763360, 27648]).map(QSqrt3::from_base);
    ensure(wp_equal(&ic, &want) == Ok(true), "glued invariants at -1 + sqrt(3)")?;
    let j = rat(1728, 1);
    ensure(j_of(&ex, 0)? == j && j_of(&ex, 1)? == j, "j(E1), j(E2)")
}

fn criterion3() -> Outcome {
    let ex = example3();
    example_core(&ex, "example 3")?;
    let (j1, j2) = (rat(-873722816, 59049), rat(64, 9));
    ensure(j_of(&ex, 0)? == j1 && j_of(&ex, 1)? == j1, "j(E1)")?;
    ensure(j_of(&ex, 2)? == j2 && j_of(&ex, 3)? == j2, "j(E2)")?;
    ensure(f_relation(&j2, &j1).is_zero(), "F(64/9, j1)")?;
    let k = rat(1728, 1);
    ensure(f_relation(&k, &k).is_zero(), "F(1728, 1728)")
}

type R3 = Polynomial<Polynomial<Polynomial<Q>>>;
type X3 = Polynomial<R3>;

fn criterion4() -> Outcome {
    let [a, b, c] = vars3::<Q>();
    let k = |n: i64| R3::from_i64(n);
    let p: X3 = Polynomial::new(vec![c.clone(), b.clone(), a.clone(), k(1)]);
    let d: X3 = Polynomial::new(vec![-k(2) * c.clone(), -b.clone(), k(0), k(1)]);
    let q: X3 = Polynomial::new(vec![c.square(), k(2) * b.clone() * c.clone(), b.square(), k(4) * c.clone()]);
    let disc_p = a.square() * b.square() - k(4) * b.pow(3) - k(4) * a.pow(3) * c.clone()
        + k(18) * a.clone() * b.clone() * c.clone()
        - k(27) * c.square();
    ensure(discriminant(&p).ok() == Some(disc_p), "disc(P)")?;
    ensure(discriminant(&d).ok() == Some(k(4) * (b.pow(3) - k(27) * c.square())), "disc(D)")?;
    ensure(resultant(&X3::x(), &p).ok() == Some(c.clone()), "res(x, P)")?;
    // x^2 P(y) - y^2 P(x) as a polynomial in y
    let pencil: Polynomial<X3> = Polynomial::new(
        (0..4)
            .map(|i| X3::monomial(p.coeff(i), 2) - if i == 2 { p.clone() } else { X3::zero() })
            .collect(),
    );
    let dy = d.map_coeffs(|e| X3::constant(e.clone()));
    let nonic = resultant(&pencil, &dy).map_err(|e| e.to_string())?;
    ensure(nonic == X3::constant(c) * d.square() * q, "res_y(x^2 P(y) - y^2 P(x), D(y))")
}

type Q2 = Polynomial<Polynomial<Q>>;

/// Removes every common factor `e` of the coefficients, then scales to
/// integral primitive form.
fn strip(f: &Polynomial<Q2>, factors: &[Q2]) -> Polynomial<Q2> {
    let mut f = f.clone();
    for e in factors {
        while let Some(coeffs) = f.coeffs().iter().map(|c| c.exact_div(e)).collect::<Option<Vec<_>>>() {
            f = Polynomial::new(coeffs);
        }
    }
    integral_primitive(&f)
}

fn criterion5() -> Outcome {
    // generic
    let [a, b, c] = vars3::<Q>();
    let k = |n: i64| R3::from_i64(n);
    let px = |v: Vec<R3>| -> X3 { Polynomial::new(v) };
    let p = px(vec![c.clone(), b.clone(), a.clone(), k(1)]);
    let q = px(vec![c.square(), k(2) * b.clone() * c.clone(), b.square(), k(4) * c.clone()]);
    let generic = Candidate {
        l: px(vec![k(3) * c.clone(), b.clone()]),
        k: 2,
        rest: px(vec![
            c.clone() * (b.square() - k(3) * a.clone() * c.clone()),
            b.pow(3) - k(4) * a.clone() * b.clone() * c.clone() + k(9) * c.square(),
        ]),
        den: q.clone(),
    };
    let res = complement_residue(&generic, &p).map_err(|e| e.to_string())?;
    ensure(res.residue.is_zero(), "generic residue")?;

    // second map special
    let l = px(vec![k(3) * c.clone(), b.clone()]);
    let p2 = l.clone() * px(vec![k(3) * b.clone() * c.clone(), k(2) * b.square(), k(9) * c.clone()]);
    let second = Candidate {
        l,
        k: 3,
        rest: X3::one(),
        den: q,
    };
    let res = complement_residue(&second, &p2).map_err(|e| e.to_string())?;
    ensure(res.residue.is_zero(), "second-special residue")?;

    // first map special
    let [a, b] = vars2::<Q>();
    let k = |n: i64| Q2::from_i64(n);
    let py = |v: Vec<Q2>| -> Polynomial<Q2> { Polynomial::new(v) };
    let a4b = a.square() - k(4) * b.clone();
    let a3b = a.square() - k(3) * b.clone();
    let p1 = py(vec![b.clone(), a.clone(), k(1)]);
    let q1 = py(vec![k(0), -k(3) * b.square(), -k(2) * a.clone() * b.clone(), a4b.clone()]);
    let first = Candidate {
        l: py(vec![k(3) * b.clone(), a.clone()]),
        k: 2,
        rest: py(vec![b.clone() * a3b.clone(), a.clone() * a4b.clone()]),
        den: q1,
    };
    let res = complement_residue(&first, &p1).map_err(|e| e.to_string())?;
    ensure(res.residue.is_zero(), "first-special residue")?;

    // both special
    let bs = both_special_families().map_err(|e| e.to_string())?;
    let r_disp = py(vec![
        -k(16) * b.square() * a3b,
        -k(4) * a.clone() * b.clone() * a4b.clone(),
        k(3) * a4b.square(),
    ]);
    let excluded = [b.clone(), a4b.clone()];
    ensure(strip(&bs.r, &excluded) == strip(&r_disp, &excluded), "R for f2 = 1/Q")?;
    let e = k(3) * a.square() - k(8) * b.clone();
    let rem_disp = py(vec![
        -a.square() * b.clone() * e.clone(),
        -a.clone() * e * a4b,
    ]);
    ensure(
        strip(&bs.remainder, &excluded) == strip(&rem_disp, &excluded),
        "remainder of R by x^2 + ax + b",
    )?;
    let conds: Vec<&str> = bs.families.iter().map(|f| f.condition.as_str()).collect();
    ensure(conds.len() == 2 && conds[0] == "a = 0" && conds[1].starts_with("b = 3/8"), format!("{conds:?}"))
}

const HESSE_PRIMES: [u64; 3] = [7, 13, 19];

fn criterion6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for p in HESSE_PRIMES {
        with_prime(p, || -> Outcome {
            let mut triples = 0;
            while triples < 500 {
                let Ok(e) = HesseCurve::new(Fp::from_u64(rng.gen_range(0..p))) else { continue };
                let (x, y, z) = (
                    random_point_fp(&e, &mut rng),
                    random_point_fp(&e, &mut rng),
                    random_point_fp(&e, &mut rng),
                );
                ensure(e.add(&e.add(&x, &y), &z) == e.add(&x, &e.add(&y, &z)), "associativity")?;
                ensure(e.add(&x, &y) == e.add(&y, &x), "commutativity")?;
                ensure(e.add(&x, &e.identity()) == x && e.add(&x, &e.neg(&x)) == e.identity(), "identity/inverse")?;
                triples += 1;
            }
            let e = HesseCurve::new(Fp::new(1)).map_err(|e| e.to_string())?;
            let w = Fp::cube_root_of_unity().ok_or("no cube root of unity")?;
            for pt in points_fp(&e) {
                if let Ok(v) = e.weil_pairing3_via_g(&pt) {
                    ensure(v == w, "g-function pairing over F_p")?;
                }
            }
            Ok(())
        })
        .map_err(|e| e.to_string())??;
    }
    // 3-torsion table over Q(w)
    let e = HesseCurve::new(QOmega::from_i64(-2)).map_err(|e| e.to_string())?;
    let tors = e.three_torsion().map_err(|e| e.to_string())?;
    for (p, u) in &tors {
        for (q, v) in &tors {
            let tag = TorsionVector::new((u.m + v.m) as i64, (u.n + v.n) as i64);
            ensure(tors.contains(&(e.add(p, q), tag)), "3-torsion closure")?;
        }
    }
    let (s, t) = (TorsionVector::new(1, 0), TorsionVector::new(0, 1));
    let w = QOmega::omega();
    ensure(weil_pairing3::<QOmega>(s, t) == Ok(w.clone()), "e3(S, T) by determinant")?;
    // [2 : 3 : 1] lies on E_{-2}
    let aux = e.point(QOmega::from_i64(2), QOmega::from_i64(3), QOmega::one()).map_err(|e| e.to_string())?;
    ensure(e.weil_pairing3_via_g(&aux) == Ok(w), "e3(S, T) by the g-function")?;
    let e3 = |x, y| weil_pairing3::<QOmega>(x, y).expect("omega");
    for u in TorsionVector::all() {
        for v in TorsionVector::all() {
            ensure(e3(u, v) * e3(v, u) == QOmega::one(), "alternating")?;
            for x in TorsionVector::all() {
                let uv = TorsionVector::new((u.m + v.m) as i64, (u.n + v.n) as i64);
                ensure(e3(uv, x) == e3(u, x) * e3(v, x), "bilinear")?;
            }
        }
    }
    Ok(())
}

fn criterion7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let k = |n: i64| QOmega::from_i64(n);
    let mut done = 0;
    while done < 20 {
        let t0 = rat(rng.gen_range(-60..60), rng.gen_range(1..12));
        let c = t0.pow(3);
        if t0.is_zero() || c == rat(-1, 1) || c == rat(8, 1) {
            continue;
        }
        let t = QOmega::from_base(t0);
        let a = -k(3) * t.clone() * (t.pow(3) - k(8));
        let b = -k(2) * (t.pow(6) + k(20) * t.pow(3) - k(8));
        let h = weierstrass_to_hesse(&a, &b).map_err(|e| e.to_string())?;
        ensure(j_hesse(&h.t) == j_hesse(&t), "j of the returned parameter")?;
        ensure(hesse_iso_identity(&h.t) == Ok(true), "curve-substitution identity")?;
        done += 1;
    }
    Ok(())
}

fn criterion8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let primes = [37u64, 61, 73];
    let mut tested = 0;
    while tested < 10 {
        let p = primes[tested % 3];
        with_prime(p, || -> Outcome {
            let Ok(iso) = TwoIsogeny::new(Fp::from_u64(rng.gen_range(0..p))) else { return Ok(()) };
            let (e, f) = (&iso.source, &iso.target);
            for _ in 0..200 {
                let x = random_point_fp(e, &mut rng);
                let y = random_point_fp(e, &mut rng);
                ensure(iso.apply(&e.add(&x, &y)) == f.add(&iso.apply(&x), &iso.apply(&y)), "homomorphism")?;
            }
            let kernel: Vec<_> = points_fp(e).into_iter().filter(|q| iso.apply(q) == f.identity()).collect();
            ensure(
                kernel.len() == 2 && kernel.contains(&e.identity()) && kernel.contains(&iso.kernel_point()),
                "kernel",
            )?;
            ensure(iso.apply(&e.s()) == f.s(), "gamma(S) = S")?;
            let t = e.t().map_err(|e| e.to_string())?;
            ensure(iso.apply(&t) == f.neg(&f.t().map_err(|e| e.to_string())?), "gamma(T) = -T")?;
            ensure(degeneracy_value(e.a(), f.a()).is_zero(), "degeneracy over F_p")?;
            ensure(modular_phi2(&e.j(), &f.j()).is_zero(), "Phi2 over F_p")?;
            tested += 1;
            Ok(())
        })
        .map_err(|e| e.to_string())??;
    }
    for _ in 0..10 {
        let t = rat(rng.gen_range(-50..50), rng.gen_range(1..10));
        let Ok(iso) = TwoIsogeny::new(t) else { continue };
        ensure(degeneracy_value(iso.source.a(), iso.target.a()).is_zero(), "degeneracy over Q")?;
        ensure(modular_phi2(&iso.source.j(), &iso.target.j()).is_zero(), "Phi2 over Q")?;
    }
    Ok(())
}

fn criterion9() -> Outcome {
    let maps = structural_maps::<QOmega>().map_err(|e| e.to_string())?;
    for (i, l) in maps.l.iter().enumerate() {
        for m in [&maps.trans1, &maps.trans2] {
            ensure(l.pullback(m).ratio(l).is_some(), format!("L{} is not relatively invariant", i + 1))?;
        }
    }
    for q in &maps.kummer {
        for m in [&maps.trans1, &maps.trans2, &maps.inversion] {
            ensure(q.pullback(m).ratio(q).is_some(), "Kummer quadric")?;
        }
    }
    let primes = census_primes(3);
    ensure(primes.len() == 3, "census primes")?;
    for &p in &primes {
        let c = translation_correspondence(&rat(0, 1), &rat(1, 1), p, 10, p).map_err(|e| e.to_string())?;
        ensure(
            c.trans1 == TorsionVector::new(1, 0) && c.trans2 == TorsionVector::new(0, 1),
            format!("translations mod {p}: {c:?}"),
        )?;
    }
    let (mut generic, mut split) = (0, 0);
    for &p in &primes {
        for (a, b) in census_parameters(p, false, 2).map_err(|e| e.to_string())? {
            let c = two_torsion_census(&rat(a as i64, 1), &rat(b as i64, 1), p).map_err(|e| e.to_string())?;
            ensure((c.plus_count, c.minus_count, c.on_d_count) == (6, 10, 6), format!("{c:?}"))?;
            generic += 1;
        }
        for (a, b) in census_parameters(p, true, 1).map_err(|e| e.to_string())? {
            let c = two_torsion_census(&rat(a as i64, 1), &rat(b as i64, 1), p).map_err(|e| e.to_string())?;
            ensure((c.plus_count, c.minus_count, c.on_d_count) == (6, 10, 7), format!("{c:?}"))?;
            split += 1;
        }
    }
    ensure(generic >= 5 && split >= 3, "census sample sizes")
}

fn criterion10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let w = QOmega::omega();
    let mut done = 0;
    while done < 20 {
        let mut r = || QOmega::new(rat(rng.gen_range(-20..20), rng.gen_range(1..5)), rat(rng.gen_range(-20..20), rng.gen_range(1..5)));
        let (a, b) = (r(), r());
        let Ok(ic) = prop2_invariants(&a, &b) else { continue };
        let get = |x: &QOmega, y: &QOmega| prop2_invariants(x, y).map_err(|e| e.to_string());
        ensure(get(&b, &a)? == ic, "(a, b) <-> (b, a)")?;
        ensure(get(&(a.clone() * w.clone()), &(b.clone() * w.square()))? == ic, "(aw, bw^2)")?;
        ensure(get(&(a.clone() * w.square()), &(b.clone() * w.clone()))? == ic, "(aw^2, bw)")?;
        done += 1;
    }
    let [a, b] = vars2::<Q>();
    let ic = prop2_unchecked(&a, &b);
    let one = Q2::one();
    let expected = Q2::from_i64(36864) * (a.pow(3) + one.clone()) * (b.pow(3) + one) * degeneracy_value(&a, &b).pow(12);
    ensure(ic.i10 == expected, "I10 factorization")
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("worked example 1", criterion1),
        ("worked example 2", criterion2),
        ("worked example 3", criterion3),
        ("generic-family discriminants and resultants", criterion4),
        ("complementarity residues and both-special classification", criterion5),
        ("Hesse group law, 3-torsion and Weil pairing", criterion6),
        ("Weierstrass to Hesse conversion", criterion7),
        ("2-isogeny family", criterion8),
        ("gluing structure and 2-torsion census", criterion9),
        ("glued invariants: symmetries and I10", criterion10),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
