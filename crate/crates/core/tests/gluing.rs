use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use split33::algebra::poly::vars2;
use split33::algebra::{rat, with_prime, Fp, Polynomial, QOmega, QSqrt3, Ring, Q};
use split33::gluing::*;
use split33::hesse::{random_point_fp, HesseCurve, TorsionVector};
use split33::invariants::{igusa_clebsch, wp_equal};

fn qomega(a: i64, b: i64, d: i64) -> QOmega {
    QOmega::new(rat(a, d), rat(b, d))
}

#[test]
fn segre_points_over_fp() {
    with_prime(37, || {
        let e1 = HesseCurve::new(Fp::new(3)).unwrap();
        let e2 = HesseCurve::new(Fp::new(5)).unwrap();
        let maps = structural_maps::<Fp>().unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let p = random_point_fp(&e1, &mut rng);
            let q = random_point_fp(&e2, &mut rng);
            let s = segre_embed(&p, &q);
            assert!(s.is_rank_one());
            assert_eq!(segre_embed(&e1.neg(&p), &e2.neg(&q)), maps.inversion.apply(&s).unwrap());
        }
        let o = segre_embed(&e1.identity(), &e2.identity());
        assert_eq!(maps.l[0].eval(&o), Fp::new(2));
    })
    .unwrap();
}

#[test]
fn hyperplanes_are_relative_invariants() {
    let maps = structural_maps::<QOmega>().unwrap();
    for (i, l) in maps.l.iter().enumerate() {
        for m in [&maps.trans1, &maps.trans2] {
            let pulled = l.pullback(m);
            let matches: Vec<usize> = (0..9).filter(|&j| pulled.ratio(&maps.l[j]).is_some()).collect();
            assert_eq!(matches, vec![i]);
        }
    }
    for q in &maps.kummer {
        for m in [&maps.trans1, &maps.trans2, &maps.inversion] {
            assert!(q.pullback(m).ratio(q).is_some());
        }
    }
    assert_eq!(projective_group_order(&[maps.trans1, maps.trans2]), 9);
}

#[test]
fn translations_over_three_primes() {
    for p in census_primes(3) {
        let c = translation_correspondence(&rat(0, 1), &rat(1, 1), p, 10, 3).unwrap();
        assert_eq!(c.trans1, TorsionVector::new(1, 0));
        assert_eq!(c.trans2, TorsionVector::new(0, 1));
        let d = translation_correspondence(&rat(2, 3), &rat(-5, 7), p, 12, 9).unwrap();
        assert_eq!(c, d);
    }
    assert_eq!(
        translation_correspondence(&rat(0, 1), &rat(1, 1), 11, 10, 0),
        Err(GluingError::NoOmega)
    );
    assert_eq!(
        translation_correspondence(&rat(0, 1), &rat(1, 1), 15, 10, 0),
        Err(GluingError::NotPrime(15))
    );
}

#[test]
fn census_counts() {
    let primes = census_primes(3);
    let mut generic = 0;
    let mut split = 0;
    for &p in &primes {
        for (a, b) in census_parameters(p, false, 2).unwrap() {
            let c = two_torsion_census(&rat(a as i64, 1), &rat(b as i64, 1), p).unwrap();
            assert_eq!((c.plus_count, c.minus_count, c.on_d_count), (6, 10, 6));
            generic += 1;
        }
        for (a, b) in census_parameters(p, true, 1).unwrap() {
            let c = two_torsion_census(&rat(a as i64, 1), &rat(b as i64, 1), p).unwrap();
            assert_eq!((c.plus_count, c.minus_count, c.on_d_count), (6, 10, 7));
            assert_eq!(c.plus_count + c.minus_count, 16);
            split += 1;
        }
    }
    assert!(generic >= 5 && split >= 3);
    assert_eq!(
        two_torsion_census(&rat(1, 37), &rat(0, 1), 37),
        Err(GluingError::BadReduction(37))
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn prop2_symmetries(a in (-30i64..30, -30i64..30, 1i64..6), b in (-30i64..30, -30i64..30, 1i64..6)) {
        let (a, b) = (qomega(a.0, a.1, a.2), qomega(b.0, b.1, b.2));
        let w = QOmega::omega();
        let Ok(ic) = prop2_invariants(&a, &b) else { return Ok(()) };
        prop_assert_eq!(&prop2_invariants(&b, &a).unwrap(), &ic);
        prop_assert_eq!(&prop2_invariants(&(a.clone() * w.clone()), &(b.clone() * w.square())).unwrap(), &ic);
        prop_assert_eq!(&prop2_invariants(&(a * w.square()), &(b * w)).unwrap(), &ic);
    }
}

#[test]
fn i10_factorization() {
    let [a, b] = vars2::<Q>();
    let ic = prop2_unchecked(&a, &b);
    let one = Polynomial::<Polynomial<Q>>::one();
    let d = degeneracy_value(&a, &b);
    assert_eq!(
        ic.i10,
        Polynomial::<Polynomial<Q>>::from_i64(36864) * (a.pow(3) + one.clone()) * (b.pow(3) + one) * d.pow(12)
    );
    assert_eq!(d.degree(), Some(3));
    for f in [&ic.i4, &ic.i6] {
        assert!(f.exact_div(&d.pow(4)).is_some());
    }
}

#[test]
fn agrees_with_appendix_sextics() {
    let ex1: Polynomial<Q> = Polynomial::from_i64s(&[25, 0, 0, 25, 0, 0, 4]);
    let ic1 = igusa_clebsch(&ex1).unwrap();
    assert!(wp_equal(&ic1, &prop2_invariants(&rat(0, 1), &rat(0, 1)).unwrap()).unwrap());
    let ex2: Polynomial<QSqrt3> = Polynomial::from_i64s(&[0, 3, 0, 7, 0, 4]);
    let a = QSqrt3::new(rat(-1, 1), rat(1, 1));
    let ic2 = igusa_clebsch(&ex2).unwrap();
    assert!(wp_equal(&ic2, &prop2_invariants(&a, &a).unwrap()).unwrap());
    assert!(!wp_equal(&ic1.map(QSqrt3::from_base), &ic2).unwrap());
}

#[test]
fn twelve_classes_of_twelve() {
    let part = orbit_partition(&QOmega::from_i64(3), &QOmega::from_i64(5)).unwrap();
    assert!(part.skipped.is_empty());
    assert_eq!(part.classes.len(), 12);
    assert!(part.classes.iter().all(|c| c.len() == 12));
    assert!(part.classes[0].contains(&(1, 2)) && part.classes[0].contains(&(2, 1)));
}

#[test]
fn report_and_errors() {
    let v = glue_report(&rat(0, 1), &rat(0, 1)).unwrap();
    assert_eq!(v["degenerate"], false);
    assert_eq!(v["invariants"][0], "-1440");
    let v = glue_report(&rat(-17, 12), &rat(-31, 6)).unwrap();
    assert_eq!(v["degenerate"], true);
    assert_eq!(glue_report(&rat(0, 1), &rat(-1, 1)), Err(GluingError::Singular('b')));
    assert_eq!(structural_maps::<Q>().unwrap_err(), GluingError::NoOmega);
    let msg = prop2_invariants(&rat(-17, 12), &rat(-31, 6)).unwrap_err().to_string();
    assert!(msg.starts_with("3a²b²+a³+b³−3ab+2 = 0"));
}
