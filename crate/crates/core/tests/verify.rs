use fejer::bounds::BoundId;
use fejer::consts::{FRAC_PI_2, PI, T0_PUBLISHED, T1_PUBLISHED};
use fejer::verify::*;
use fejer::{EvalOptions, Error};

fn o() -> EvalOptions {
    EvalOptions::default()
}

fn strip_time(mut r: InequalityReport) -> InequalityReport {
    r.elapsed_s = 0.0;
    r
}

#[test]
fn arccot_sweep_has_no_violations() {
    let grid = GridSpec::new(vec![
        Axis::integers("mu", 1, 50),
        Axis::linear("x", 0.01, PI - 0.01, 200),
    ]);
    let r = sweep(BoundId::ArccotEnvelope, &grid, &o()).unwrap();
    assert_eq!(r.samples, 10_000);
    assert_eq!(r.violations, 0);
    assert!(r.min_margin > 0.0);
}

#[test]
fn secant_sweep_at_figure_lambda() {
    let grid = GridSpec::new(vec![Axis::single("lambda", 12.0), Axis::open("x", 0.0, FRAC_PI_2, 500)]);
    let r = sweep(BoundId::SecEnvelope, &grid, &o()).unwrap();
    assert_eq!(r.violations, 0);
    assert!(r.max_path_gap.unwrap() < 1e-9);
}

#[test]
fn equality_point() {
    let grid = GridSpec::new(vec![Axis::single("mu", 4.0), Axis::single("x", 0.0)]);
    let r = sweep(BoundId::ArccotEnvelope, &grid, &o()).unwrap();
    assert!(r.min_margin.abs() < 1e-12);
    assert_eq!(r.violations, 0);
    assert_eq!(r.near_equalities, 1);
}

#[test]
fn inadmissible_grid_is_a_configuration_error() {
    let grid = GridSpec::new(vec![Axis::single("mu", -2.0), Axis::single("x", 1.0)]);
    assert!(matches!(sweep(BoundId::ArccotEnvelope, &grid, &o()), Err(Error::Config(_))));
    let bad_axis = GridSpec::new(vec![Axis::linear("x", 1.0, 0.0, 5)]);
    assert!(matches!(sweep(BoundId::MEnvelope, &bad_axis, &o()), Err(Error::Config(_))));
}

#[test]
fn reports_are_reproducible() {
    let pts = sample::fj_points(5, 300);
    let domain = || SampleDomain::Random {
        law: "fj".into(),
        seed: 5,
        count: 300,
    };
    let a = sweep_points(BoundId::MEnvelope, &pts, domain(), &o()).unwrap();
    let mut rev = pts.clone();
    rev.reverse();
    let b = sweep_points(BoundId::MEnvelope, &rev, domain(), &o()).unwrap();
    assert_eq!(a.min_margin, b.min_margin);
    assert_eq!(a.argmin, b.argmin);
    assert_eq!((a.violations, a.samples), (b.violations, b.samples));
    let c = sweep_points(BoundId::MEnvelope, &pts, domain(), &o()).unwrap();
    assert_eq!(strip_time(a), strip_time(c));
}

#[test]
fn argmin_reevaluates_to_min_margin() {
    let cases = [
        (
            BoundId::ArccotEnvelope,
            GridSpec::new(vec![Axis::integers("mu", 1, 8), Axis::open("x", 0.0, PI, 100)]),
        ),
        (
            BoundId::EbycosRhs,
            GridSpec::new(vec![Axis::values("lambda", vec![1.0, 7.0]), Axis::open("x", 0.0, FRAC_PI_2, 60)]),
        ),
        (
            BoundId::Koumandos2012,
            GridSpec::new(vec![Axis::integers("n", 1, 6), Axis::open("x", 0.0, PI, 80)]),
        ),
    ];
    for (b, grid) in cases {
        let r = sweep(b, &grid, &o()).unwrap();
        let s = evaluate_margin(b, &r.argmin, &o()).unwrap().unwrap();
        assert!((s.margin - r.min_margin).abs() <= 1e-14, "{b}");
    }
}

#[test]
fn thresholds() {
    let t0 = find_threshold(Threshold::T0, &o()).unwrap();
    let t1 = find_threshold(Threshold::T1, &o()).unwrap();
    assert!((t0.root - T0_PUBLISHED).abs() < 1e-8);
    assert!((t1.root - T1_PUBLISHED).abs() < 1e-8);
    assert!(t1.root < t0.root && t0.root < 1.0);
    assert!(t0.residual.abs() <= 1e-12 && t1.residual.abs() <= 1e-12);
}

#[test]
fn thresholds_stable_under_tightening() {
    for which in [Threshold::T0, Threshold::T1] {
        let loose = find_threshold(which, &EvalOptions::with_abs_tol(1e-10)).unwrap();
        let tight = find_threshold(which, &EvalOptions::with_abs_tol(1e-12)).unwrap();
        assert!((loose.root - tight.root).abs() < 1e-9);
    }
}

#[test]
fn identity_suite() {
    let rows = check_identities(&o()).unwrap();
    assert!(rows.len() >= 7);
    for r in rows {
        assert!(r.passed, "{r:?}");
        assert!(r.tolerance <= checks::IDENTITY_TOL || r.tolerance == checks::ODE_TOL);
    }
}

#[test]
fn limit_tables() {
    let tables = check_limits(&o()).unwrap();
    assert_eq!(tables.len(), 3);
    for t in tables {
        assert!(t.strictly_decreasing, "{t:?}");
        assert_eq!(t.scales, vec![10.0, 100.0, 1000.0]);
    }
}

#[test]
fn taylor_sweep_on_samples() {
    let pts = sample::taylor_points(3, 400);
    for b in [BoundId::TaylorSimple, BoundId::TaylorMp, BoundId::TaylorLog1z, BoundId::TaylorMhat] {
        let r = sweep_points(
            b,
            &pts,
            SampleDomain::Random {
                law: "taylor".into(),
                seed: 3,
                count: 400,
            },
            &o(),
        )
        .unwrap();
        assert_eq!(r.violations, 0, "{b}: {r:?}");
        assert_eq!(r.samples + r.skipped, 400);
    }
}
