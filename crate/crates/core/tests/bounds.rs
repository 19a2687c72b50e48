mod common;

use fejer::bounds::*;
use fejer::consts::{C2, C3, FRAC_PI_2, PI};
use fejer::dirichlet::{eci, KernelArgs};
use fejer::fjsums::{l_infinite, FJArgs};
use fejer::specfun::arccot;
use fejer::verify::sample;
use fejer::{ComplexValue, EvalOptions};
use num_complex::Complex64;
use proptest::prelude::*;

fn o() -> EvalOptions {
    EvalOptions::default()
}

#[test]
fn arccot_envelope_examples() {
    assert_eq!(arccot_envelope(-0.5, 2.0).unwrap(), FRAC_PI_2);
    assert_eq!(arccot_envelope(3.0, 0.0).unwrap(), FRAC_PI_2);
    assert!((arccot_envelope(1.0, PI).unwrap() - arccot(3.0).unwrap()).abs() < 1e-16);
}

#[test]
fn arccot_envelope_dominates_partial_sums() {
    let xs = common::linspace(0.01, PI - 0.01, 200);
    for n in 1..=50u64 {
        for &x in &xs {
            let dev = ((PI - x) / 2.0 - common::sine_sum(x, n)).abs();
            assert!(arccot_envelope(n as f64, x).unwrap() > dev, "n = {n}, x = {x}");
        }
    }
}

#[test]
fn m_and_frac_envelopes_dominate_l() {
    let t0 = 0.709_566_763_5;
    for p in sample::fj_points(11, 1000) {
        let (mu, x) = (p[0], p[1]);
        let lv = l_infinite(FJArgs::new(x, mu).unwrap(), &o()).unwrap().abs();
        let m = m_envelope(mu, x, &o()).unwrap();
        assert!(m > lv, "({mu}, {x})");
        assert!(frac_envelope(mu, x).unwrap() >= m);
    }
    for (lambda, x) in [(2.0f64, 0.5f64), (5.0, 1.0), (40.0, 0.1)] {
        let t = lambda * x.sin();
        assert!(t > t0);
        assert!(m_envelope_odd(lambda, x, &o()).unwrap() < arccot(t).unwrap());
    }
}

#[test]
fn log_envelope_examples() {
    let mut checked = 0;
    for p in sample::fj_points(12, 4000) {
        let (mu, x) = (p[0], p[1]);
        if (2.0 * mu + 1.0) * (x / 2.0).sin() >= 1.0 {
            assert!(log_envelope(mu, x).is_err());
            continue;
        }
        let lv = l_infinite(FJArgs::new(x, mu).unwrap(), &o()).unwrap().abs();
        assert!(log_envelope(mu, x).unwrap() > lv, "({mu}, {x})");
        checked += 1;
    }
    assert!(checked >= 500, "{checked}");
    let x = 2.0 * (-1.0f64).exp().asin();
    assert!((log_envelope(0.0, x).unwrap() - (1.0 + C2)).abs() < 1e-14);
    assert!(C2 < 0.8814);
}

#[test]
fn secant_and_refined_envelopes() {
    for i in 0..40 {
        let lambda = 0.5 * 100f64.powf(i as f64 / 39.0);
        for x in common::midpoints(0.0, FRAC_PI_2, 40) {
            assert!(ebycos_rhs(lambda, x, &o()).unwrap() <= sec_envelope(lambda, x).unwrap());
        }
    }
    for p in sample::eci_points(13, 1000) {
        let (lambda, x) = (p[0], p[1]);
        let e = eci(KernelArgs::new(x, lambda), &o()).unwrap();
        let dev = (e.scale(lambda) - ComplexValue::I).abs();
        assert!(dev < lambda * ebycos_rhs(lambda, x, &o()).unwrap(), "({lambda}, {x})");
    }
    assert!(sec_envelope(0.0, 1.0).is_err());
    assert!((sec_envelope(-2.0, 1.0).unwrap() - sec_envelope(2.0, 1.0).unwrap()).abs() == 0.0);
}

#[test]
fn classical_examples() {
    let t = 0.3f64;
    assert_eq!(legendre(0, t), 1.0);
    assert_eq!(legendre(1, t), t);
    assert!((delta_n(1) - 2.0 / 3.0 * 4.0 / PI).abs() < 1e-14);
    assert!(delta_n(400).is_finite());
    for x in common::midpoints(0.0, PI, 1000) {
        let b = classical_bounds(10, x).unwrap();
        assert!(b.koumandos2012 <= b.ak2003, "x = {x}");
        assert!(b.koumandos2012 <= b.bk1998, "x = {x}");
    }
    assert!(classical_bounds(0, 1.0).is_err());
    assert!(classical_bounds(3, PI).is_err());
}

#[test]
fn classical_domains() {
    assert!(!classical_applies(BoundId::Turan1952, 1, 1.0));
    assert!(!classical_applies(BoundId::AK2003, 1, 1.0));
    assert!(classical_applies(BoundId::AK2003, 2, 1.0));
    assert!(!classical_applies(BoundId::BK1998, 10, 0.1));
    assert!(classical_applies(BoundId::BK1998, 10, 1.0));
    assert!(!classical_applies(BoundId::AKEvenUpper, 3, 1.0));
    assert!(!classical_applies(BoundId::TaylorSimple, 3, 1.0));
}

#[test]
fn classical_lower_bounds_hold() {
    let xs = common::midpoints(0.0, PI, 400);
    for n in 1..=30u64 {
        for &x in &xs {
            let s = common::sine_sum(x, n);
            let b = classical_bounds(n, x).unwrap();
            let slack = 1e-12;
            assert!((s - (PI - x) / 2.0).abs() <= b.fj_turan + slack);
            for id in [
                BoundId::Fejer1928,
                BoundId::Turan1952,
                BoundId::AK2003,
                BoundId::BK1998,
                BoundId::Koumandos2012,
                BoundId::AlKou12,
            ] {
                if classical_applies(id, n, x) {
                    assert!(s >= b.get(id).unwrap() - slack, "{id} n = {n}, x = {x}");
                }
            }
        }
    }
}

#[test]
fn taylor_bounds_dominate_oracle() {
    let ids = [BoundId::TaylorSimple, BoundId::TaylorMp, BoundId::TaylorLog1z, BoundId::TaylorMhat];
    for p in sample::taylor_points(14, 1000) {
        let n = p[0] as u64;
        let z = ComplexValue::from_polar(p[1], p[2]);
        let pt = TaylorPoint::new(z, n).unwrap();
        let tb = taylor_bounds(pt).unwrap();
        let r = common::log_remainder(common::to_c(z), n).norm();
        for id in ids {
            if let Some(b) = tb.normalized(id) {
                assert!(b > r, "{id} at z = {z}, n = {n}: {b} <= {r}");
            }
        }
        let lib = log_taylor_remainder(pt, &o()).unwrap();
        assert!(
            (common::to_c(lib.value) - common::log_remainder(common::to_c(z), n)).norm() < 1e-9 * (1.0 + r),
            "z = {z}, n = {n}"
        );
    }
}

#[test]
fn taylor_remainder_at_minus_one() {
    for n in [10u64, 50, 200] {
        let pt = TaylorPoint::new(ComplexValue::real(-1.0), n).unwrap();
        let r = log_taylor_remainder(pt, &o()).unwrap().value.abs();
        let oracle = common::log_remainder(Complex64::new(-1.0, 0.0), n).norm();
        assert!((r - oracle).abs() < 1e-12);
        let scaled = r * 2.0 * (n as f64 + 0.5);
        assert!((scaled - 1.0).abs() < 2.0 / (n * n) as f64, "n = {n}: {scaled}");
    }
}

#[test]
fn taylor_domains() {
    assert!(TaylorPoint::new(ComplexValue::ONE, 3).is_err());
    assert!(TaylorPoint::new(ComplexValue::real(0.5), 0).is_err());
    assert!(TaylorPoint::new(ComplexValue::real(1.5), 3).is_err());
    let on_circle = taylor_bounds(TaylorPoint::new(ComplexValue::cis(0.5), 4).unwrap()).unwrap();
    assert!(on_circle.m_p.is_none() && on_circle.log1z.is_none());
    let far = taylor_bounds(TaylorPoint::new(ComplexValue::real(0.2), 4).unwrap()).unwrap();
    assert!(far.q >= 1.0 && far.log1z.is_none());
    assert_eq!(far.mhat, far.simple);
    // the log branch of mhat would be negative here
    let minus_one = taylor_bounds(TaylorPoint::new(ComplexValue::real(-1.0), 10).unwrap()).unwrap();
    assert!(-minus_one.q.ln() + C3 < 0.0);
    assert!(minus_one.mhat > 0.0);
}

#[test]
fn m_of_p_is_continuous() {
    let p = (-1.0f64).exp();
    assert!((m_of_p(p) - 1.0).abs() < 1e-15);
    assert!((p.ln().abs() - 1.0).abs() < 1e-15);
    assert!((m_of_p(p * (1.0 - 1e-12)) - 1.0).abs() < 1e-11);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn legendre_bounded(n in 0u64..400, t in -1.0f64..=1.0) {
        prop_assert!(legendre(n, t).abs() <= 1.0 + 1e-12);
    }

    #[test]
    fn mhat_below_constituents(n in 1u64..500, r in 0.0f64..=1.0, theta in -PI..PI) {
        prop_assume!(!(r == 1.0 && theta == 0.0));
        let tb = taylor_bounds(TaylorPoint::new(ComplexValue::from_polar(r, theta), n).unwrap()).unwrap();
        prop_assert!(tb.mhat <= tb.simple);
        if let Some(l) = tb.log1z {
            prop_assert!(tb.mhat <= l);
        }
        prop_assert!(tb.mhat > 0.0);
    }

    #[test]
    fn envelope_ordering(mu in -0.49f64..100.0, x in 0.001f64..3.1) {
        prop_assert!(frac_envelope(mu, x).unwrap() >= m_envelope(mu, x, &o()).unwrap());
    }
}
