//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its wall-clock time (run with `--nocapture` to see them). Every expected
//! value is exact; there are no tolerances anywhere.

use std::time::Instant;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tiltstab_core::chern::{beta_bar, delta_bar, project, twist, ProjectedChern};
use tiltstab_core::contfrac::{dirichlet_bound_holds, dirichlet_convergents};
use tiltstab_core::frobenius::{
    minimal_irrational_params, thomsen_decompose, toric_euler_char, ToricDivisor, VanishingTask,
    verify_vanishing,
};
use tiltstab_core::geometry::{CohVector, DivisorClass, ThreefoldModel, ToricFactor};
use tiltstab_core::poly::Polynomial;
use tiltstab_core::scalar::{quad_sqrt, rat, rat_int, QuadraticNumber, Rational};
use tiltstab_core::tilt::{
    bmt_surplus_poly, central_charge, nu_numerator_poly, reduced_check, TiltPoint,
};
use tiltstab_core::walls::{counterexample_certificate, radius_bound, wall_center_rank0};

fn product_models() -> Vec<ThreefoldModel> {
    vec![
        ThreefoldModel::p1_abelian_surface(1).unwrap(),
        ThreefoldModel::p2_elliptic_curve(),
        ThreefoldModel::p1_p1_elliptic_curve(),
    ]
}

fn pass(criterion: u32, label: &str, started: Instant, budget_ms: Option<u128>) {
    let elapsed = started.elapsed().as_millis();
    if let Some(budget) = budget_ms {
        assert!(elapsed < budget, "criterion {criterion} took {elapsed}ms, budget {budget}ms");
    }
    println!("ACCEPTANCE {criterion} ({label}): PASS in {elapsed}ms");
}

fn random_cohvector(model: &ThreefoldModel, rng: &mut ChaCha8Rng) -> CohVector {
    CohVector {
        ch0: rat(rng.gen_range(-5..=5), 1),
        ch1: DivisorClass::new(
            (0..model.rank()).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect(),
        ),
        ch2: (0..model.rank()).map(|_| rat(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect(),
        ch3: rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)),
    }
}

fn random_projected(rng: &mut ChaCha8Rng) -> ProjectedChern {
    ProjectedChern::from_rationals(
        rat(rng.gen_range(-8..=8), rng.gen_range(1..=4)),
        rat(rng.gen_range(-8..=8), rng.gen_range(1..=4)),
        rat(rng.gen_range(-8..=8), rng.gen_range(1..=4)),
        rat(rng.gen_range(-8..=8), rng.gen_range(1..=4)),
    )
}

#[test]
fn acceptance_1_appendix_reproduction() {
    let started = Instant::now();
    for s in 1i64..=5 {
        let s = rat_int(s);
        for m in 2u64..=5 {
            let model = ThreefoldModel::cy3_with_plane(s.clone()).unwrap();
            let h = DivisorClass::new(vec![rat_int(m as i64), rat(-1, 2)]);
            let plane = model.structure_sheaf_of_plane().unwrap();
            let projected = project(&model, &h, &plane).unwrap();
            assert_eq!(
                projected,
                ProjectedChern::from_rationals(rat_int(0), rat(9, 4), rat(9, 4), rat(3, 2))
            );
            let twisted = twist(&projected, &QuadraticNumber::one()).unwrap();
            assert_eq!(
                twisted,
                ProjectedChern::from_rationals(rat_int(0), rat(9, 4), rat_int(0), rat(3, 8))
            );
            // tilt slope vanishes identically in alpha at beta = 1
            let num = nu_numerator_poly(&projected, &Polynomial::constant(rat_int(1))).unwrap();
            assert!(num.is_zero());
            assert!(!twisted.e1.is_zero());
            assert_eq!(wall_center_rank0(&projected).unwrap(), QuadraticNumber::one());
            // radius bound formula and its range
            let bound = radius_bound(&s, m, 1).unwrap();
            let m3 = rat_int((m * m * m) as i64);
            assert_eq!(bound, rat_int(9) / (rat_int(8) * m3 * &s - rat_int(9)));
            assert!(bound < Rational::one());
            let cert = counterexample_certificate(&s, m).unwrap();
            assert!(cert.window.is_some(), "window empty at s={s} m={m}");
            assert!(cert.verified());
        }
    }
    pass(1, "appendix reproduction", started, Some(1000));
}

#[test]
fn acceptance_2_line_bundle_saturation() {
    let started = Instant::now();
    for model in product_models() {
        let h = model.default_polarization();
        for c in -3i64..=3 {
            let v = model.chern_of_line_bundle(&h.scale(&rat_int(c))).unwrap();
            let p = project(&model, &h, &v).unwrap();
            // beta = c - alpha as a polynomial in alpha
            let locus = Polynomial::from_coeffs([(0, rat_int(c)), (1, rat_int(-1))]);
            let surplus = bmt_surplus_poly(&p, &locus).unwrap();
            assert!(
                surplus.is_zero(),
                "surplus not identically zero on {} at c={c}: {surplus}",
                model.kind().name()
            );
            let r = reduced_check(&p).unwrap();
            assert!(r.value.is_zero(), "reduced value nonzero at c={c}");
            assert_eq!(r.beta_bar, QuadraticNumber::from_int(c));
        }
    }
    pass(2, "line-bundle saturation", started, None);
}

#[test]
fn acceptance_3_thomsen_suite() {
    let started = Instant::now();
    for factor in [ToricFactor::P1, ToricFactor::P2, ToricFactor::P1xP1] {
        let coeff_sets: Vec<Vec<i64>> = if factor.picard_rank() == 1 {
            (-3..=3).map(|a| vec![a]).collect()
        } else {
            (-3..=3).flat_map(|a| (-3..=3).map(move |b| vec![a, b])).collect()
        };
        for coeffs in &coeff_sets {
            let source = ToricDivisor::from_ints(coeffs);
            let chi = toric_euler_char(factor, &source).unwrap();
            for m in 1u64..=6 {
                let d = thomsen_decompose(factor, &source, m).unwrap();
                assert_eq!(d.rank(), m.pow(factor.dim()), "{factor:?} {coeffs:?} m={m}");
                let pushed: Rational = d
                    .summands
                    .iter()
                    .map(|(td, mult)| toric_euler_char(factor, td).unwrap() * rat_int(*mult as i64))
                    .sum();
                assert_eq!(pushed, chi, "{factor:?} {coeffs:?} m={m}");
            }
        }
    }
    // the three classical decompositions, verbatim
    let d = thomsen_decompose(ToricFactor::P1, &ToricDivisor::from_ints(&[1]), 2).unwrap();
    assert_eq!(d.summands, vec![(ToricDivisor::from_ints(&[0]), 2)]);
    let d = thomsen_decompose(ToricFactor::P2, &ToricDivisor::from_ints(&[0]), 2).unwrap();
    assert_eq!(
        d.summands,
        vec![(ToricDivisor::from_ints(&[-1]), 3), (ToricDivisor::from_ints(&[0]), 1)]
    );
    let d = thomsen_decompose(ToricFactor::P1xP1, &ToricDivisor::from_ints(&[0, 0]), 2).unwrap();
    assert_eq!(
        d.summands,
        vec![
            (ToricDivisor::from_ints(&[-1, -1]), 1),
            (ToricDivisor::from_ints(&[-1, 0]), 1),
            (ToricDivisor::from_ints(&[0, -1]), 1),
            (ToricDivisor::from_ints(&[0, 0]), 1),
        ]
    );
    pass(3, "Frobenius pushforward suite", started, Some(10_000));
}

#[test]
fn acceptance_4_vanishing_verifier() {
    let started = Instant::now();
    let mut runs = 0u32;
    for model in product_models() {
        let h = model.default_polarization();
        for m in 1u64..=4 {
            for task in [VanishingTask::HomIntegral { m }, VanishingTask::Ext2Integral { m }] {
                let r = verify_vanishing(&model, &h, task).unwrap();
                assert!(r.passed(), "{} {:?}: {:?}", model.kind().name(), task, r.failures);
                runs += 1;
            }
        }
        for q in 1u64..=4 {
            for p in 0..q.max(1) {
                if num_integer::gcd(p, q) != 1 && !(p == 0 && q == 1) {
                    continue;
                }
                for m in 1u64..=4 {
                    for task in [
                        VanishingTask::HomRational { p: p as i64, q, m },
                        VanishingTask::Ext2Rational { p: p as i64, q, m },
                    ] {
                        let r = verify_vanishing(&model, &h, task).unwrap();
                        assert!(r.passed(), "{} {:?}: {:?}", model.kind().name(), task, r.failures);
                        runs += 1;
                    }
                }
            }
        }
        let (u_hom, v_hom) = minimal_irrational_params(&model, &h, true).unwrap();
        let (u_ext, v_ext) = minimal_irrational_params(&model, &h, false).unwrap();
        for q in 2u64..=5 {
            for p in 0..q {
                if num_integer::gcd(p, q) != 1 {
                    continue;
                }
                let tasks = [
                    VanishingTask::HomIrrational { p: p as i64, q, u: u_hom, v: v_hom },
                    VanishingTask::Ext2Irrational { p: p as i64, q, u: u_ext, v: v_ext },
                ];
                for task in tasks {
                    let r = verify_vanishing(&model, &h, task).unwrap();
                    assert!(r.passed(), "{} {:?}: {:?}", model.kind().name(), task, r.failures);
                    runs += 1;
                }
            }
        }
    }
    assert!(runs > 150, "grid unexpectedly small: {runs}");
    pass(4, "vanishing-lemma verifier", started, Some(60_000));
}

#[test]
fn acceptance_5_euler_polynomial() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1729);
    for model in product_models() {
        for _ in 0..50 {
            let v = random_cohvector(&model, &mut rng);
            let poly = model.euler_polynomial(&v).unwrap();
            assert_eq!(poly.coeff(6), v.ch3, "leading coefficient is ch3");
            for odd in [1u32, 3, 5] {
                assert!(poly.coeff(odd).is_zero());
            }
            // the polynomial interpolates the pulled-back Euler characteristic
            for q in 1u64..=3 {
                let pulled = model.frob_action(q * q, q, &v).unwrap();
                assert_eq!(model.euler_char(&pulled).unwrap(), poly.eval(&rat_int(q as i64)));
            }
        }
    }
    let p2c = ThreefoldModel::p2_elliptic_curve();
    let v = p2c.chern_of_line_bundle(&p2c.parse_divisor("h+f").unwrap()).unwrap();
    let poly = p2c.euler_polynomial(&v).unwrap();
    assert_eq!(
        poly,
        Polynomial::from_coeffs([(6, rat(1, 2)), (4, rat(3, 2)), (2, rat_int(1))])
    );
    assert_eq!(poly.eval(&rat_int(1)), rat_int(3));
    assert_eq!(p2c.euler_char(&v).unwrap(), rat_int(3));
    pass(5, "Euler polynomial", started, None);
}

#[test]
fn acceptance_6_dirichlet() {
    let started = Instant::now();
    let beta_bar_example = beta_bar(&ProjectedChern::from_rationals(
        rat_int(1),
        rat_int(0),
        rat_int(-1),
        rat_int(0),
    ))
    .unwrap();
    assert_eq!(beta_bar_example, quad_sqrt(&rat_int(2)).unwrap().neg());
    let golden = QuadraticNumber::new(rat(1, 2), rat(1, 2), 5);
    for x in [quad_sqrt(&rat_int(2)).unwrap(), golden, beta_bar_example] {
        let approx = dirichlet_convergents(&x, 10).unwrap();
        assert!(!approx.terminated);
        assert_eq!(approx.convergents.len(), 10);
        for c in &approx.convergents {
            assert!(dirichlet_bound_holds(&x, c).unwrap(), "bound fails for {x} at {c}");
        }
    }
    pass(6, "Dirichlet convergents", started, None);
}

#[test]
fn acceptance_7_algebraic_invariants() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2718);

    // twist invariance of the discriminant, twist composition: 1000 characters
    for _ in 0..1000 {
        let p = random_projected(&mut rng);
        let b1: QuadraticNumber = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)).into();
        let b2: QuadraticNumber = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3)).into();
        let t1 = twist(&p, &b1).unwrap();
        assert_eq!(delta_bar(&t1), delta_bar(&p));
        let chained = twist(&t1, &b2).unwrap();
        assert_eq!(chained, twist(&p, &b1.try_add(&b2).unwrap()).unwrap());
    }

    // the middle pairing vanishes at the distinguished twist
    let mut checked = 0;
    while checked < 1000 {
        let p = random_projected(&mut rng);
        let Ok(bb) = beta_bar(&p) else { continue };
        assert!(twist(&p, &bb).unwrap().e2.is_zero());
        checked += 1;
    }

    // powers of the polarization have vanishing discriminant
    for model in product_models() {
        let h = model.default_polarization();
        for _ in 0..50 {
            let c = rat(rng.gen_range(-9..=9), rng.gen_range(1..=4));
            let p = project(&model, &h, &model.chern_of_line_bundle(&h.scale(&c)).unwrap()).unwrap();
            assert!(delta_bar(&p).is_zero());
        }
    }

    // the imaginary part of the charge is sqrt(3) alpha times the slope
    // numerator
    for _ in 0..1000 {
        let p = random_projected(&mut rng);
        let alpha = rat(rng.gen_range(1..=8), rng.gen_range(1..=4));
        let beta = rat(rng.gen_range(-6..=6), rng.gen_range(1..=3));
        let t = TiltPoint::from_rationals(alpha.clone(), beta.clone()).unwrap();
        let z = central_charge(&p, &t).unwrap();
        let tw = twist(&p, &beta.clone().into()).unwrap();
        let num = tw
            .e2
            .try_sub(&QuadraticNumber::from_rational(&alpha * &alpha * &p.e0 * rat(1, 2)))
            .unwrap();
        let sqrt3_alpha = QuadraticNumber::new(rat_int(0), alpha, 3);
        assert_eq!(z.im, sqrt3_alpha.try_mul(&num).unwrap());
    }

    // pullback functoriality and the projected (x, q^2 y, q^4 z, q^6 w) action
    for model in product_models() {
        let h = model.default_polarization();
        for _ in 0..100 {
            let v = random_cohvector(&model, &mut rng);
            let lhs = model.frob_action(2, 3, &model.frob_action(3, 2, &v).unwrap()).unwrap();
            let rhs = model.frob_action(6, 6, &v).unwrap();
            assert_eq!(lhs, rhs);
            let base = project(&model, &h, &v).unwrap();
            for q in [2u64, 3] {
                let pulled = project(&model, &h, &model.frob_action(q * q, q, &v).unwrap()).unwrap();
                let q2 = rat_int((q * q) as i64);
                assert_eq!(pulled.e0, base.e0);
                assert_eq!(pulled.e1, base.e1.scale(&q2));
                assert_eq!(pulled.e2, base.e2.scale(&(&q2 * &q2)));
                assert_eq!(pulled.e3, base.e3.scale(&(&q2 * &q2 * &q2)));
            }
        }
    }
    pass(7, "algebraic invariant suite", started, None);
}

#[test]
fn acceptance_8_counterexample_sign_audit() {
    let started = Instant::now();
    let od = ProjectedChern::from_rationals(rat_int(0), rat(9, 4), rat(9, 4), rat(3, 2));
    let r = reduced_check(&od).unwrap();
    assert!(!r.holds);
    assert_eq!(r.value, QuadraticNumber::from_rational(rat(3, 8)));

    // surplus at beta = 1 is (3/8)(alpha^2 - 1), symbolically
    let surplus = bmt_surplus_poly(&od, &Polynomial::constant(rat_int(1))).unwrap();
    assert_eq!(surplus, Polynomial::from_coeffs([(2, rat(3, 8)), (0, rat(-3, 8))]));

    let cert = counterexample_certificate(&rat_int(2), 2).unwrap();
    assert_eq!(cert.re_z_threshold_primary, rat(1, 3));
    assert_eq!(cert.re_z_threshold_alternate, rat_int(1));
    assert!(cert.scaling_discrepancy);
    assert_eq!(cert.re_z_probe_alpha, rat(1, 10));
    assert!(cert.re_z_primary_at_probe.is_positive());
    assert!(cert.re_z_alternate_at_probe.is_positive());
    assert_eq!(cert.re_z_primary_at_probe, rat(3, 8) * rat(91, 100));
    assert_eq!(cert.re_z_alternate_at_probe, rat(3, 8) * rat(99, 100));

    // the same value through the central charge itself, exactly
    let t = TiltPoint::from_rationals(rat(1, 10), rat_int(1)).unwrap();
    let z = central_charge(&od.neg(), &t).unwrap();
    assert_eq!(z.re, QuadraticNumber::from_rational(rat(3, 8) * rat(91, 100)));
    assert!(z.im.is_zero());
    pass(8, "counter-example sign audit", started, None);
}
