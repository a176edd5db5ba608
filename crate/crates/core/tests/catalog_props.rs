use hyperval::hyperfun::hyp2f1;
use hyperval::identities::{self, lookup, registry, verify, verify_all, PlanContext};
use hyperval::numerics::{c, real, ComplexValue, DEFAULT_SIDE};
use hyperval::reductions::{self, check_reduction, reduction_registry, representation_formulas_check, MAP_TOL};
use hyperval::report::{EvalReport, Status};

fn lhs(r: &EvalReport) -> ComplexValue {
    r.lhs.into()
}

fn near(z: ComplexValue, w: ComplexValue, tol: f64) -> bool {
    (z - w).norm() <= tol * w.norm().max(1.0)
}

// High-precision reference values computed with mpmath (Euler integrals at 30 digits).
#[test]
fn frozen_oracles() {
    let cases: [(&str, ComplexValue); 7] = [
        ("bg00", real(0.467_394_035_108_484_75)),
        ("kummer(a=1,b=1/2)", real(0.785_398_163_397_448_31)),
        ("kummer(a=1/2,b=1/4)", real(0.927_037_338_650_685_96)),
        ("fd3-two", c(1.311_028_777_146_059_9, -1.311_028_777_146_059_9)),
        ("maier-g4", real(1.992_332_899_583_490_7)),
        ("idhermiteK", real(1.992_332_899_583_490_7)),
        ("pi-corollary", real(std::f64::consts::PI)),
    ];
    for (id, want) in cases {
        let r = verify(id, None).unwrap();
        assert!(near(lhs(&r), want, 1e-12), "{id}: {:?}", r.lhs);
    }
    let below = hyp2f1(real(0.5), real(0.5), real(1.0), real(2.0), DEFAULT_SIDE).unwrap();
    assert!(near(below, c(0.834_626_841_674_073_19, -0.834_626_841_674_073_19), 1e-12));
    let eq1 = hyp2f1(real(0.5), real(0.75), real(1.5), real(2.0), DEFAULT_SIDE).unwrap();
    assert!(near(eq1, c(0.927_037_338_650_685_96, -0.927_037_338_650_685_96), 1e-12));
    let dig = check_reduction("goursat-dig", None).unwrap();
    assert!(near(lhs(&dig), real(1.402_182_105_325_454_3), 1e-8));
    let b0 = check_reduction("hermite-b0(a=1)", None).unwrap();
    assert!(near(lhs(&b0), real(2.622_057_554_292_119_8), 1e-8));
}

#[test]
fn full_catalog_has_no_failures() {
    let reports = verify_all(None, None).unwrap();
    assert_eq!(reports.len(), registry().len());
    for r in &reports {
        assert!(!r.status.is_fail(), "{} failed: {:?}", r.id, r.note);
        assert!(r.elapsed_ms >= 0.0);
    }
}

#[test]
fn every_family_point_passes() {
    let families = ["kummer", "fdn", "even", "odd", "lunga", "effe1"];
    let reports = verify_all(None, None).unwrap();
    let mut seen = 0;
    for f in families {
        let points: Vec<&EvalReport> = reports.iter().filter(|r| r.id.starts_with(&format!("{f}("))).collect();
        assert!(points.len() >= 2, "{f}");
        for p in points {
            assert!(!p.status.is_fail(), "{}", p.id);
            seen += 1;
        }
    }
    assert!(seen >= 25);
}

#[test]
fn conjugation_symmetric_records_are_real() {
    let ctx = PlanContext::default();
    let mut n = 0;
    for rec in registry().iter().filter(|r| r.real_by_symmetry) {
        let v = (rec.lhs)(&ctx).unwrap();
        assert!(v.im.abs() < 1e-9 * (1.0 + v.norm()), "{}: {v}", rec.id);
        n += 1;
    }
    assert!(n >= 20, "{n}");
}

#[test]
fn verification_is_deterministic() {
    let a = verify_all(None, None).unwrap();
    let b = verify_all(None, None).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.id, y.id);
        assert_eq!(x.lhs.re.to_bits(), y.lhs.re.to_bits(), "{}", x.id);
        assert_eq!(x.lhs.im.to_bits(), y.lhs.im.to_bits(), "{}", x.id);
        assert_eq!(x.rhs.re.to_bits(), y.rhs.re.to_bits(), "{}", x.id);
        assert_eq!(x.rhs.im.to_bits(), y.rhs.im.to_bits(), "{}", x.id);
        assert_eq!(x.status, y.status);
    }
}

#[test]
fn seeded_erratum_is_a_factor_three() {
    let r = verify("bg00", None).unwrap();
    assert_eq!(r.status, Status::PassWithErratum);
    let e = r.erratum.unwrap();
    assert!((e.ratio.re - 3.0).abs() < 1e-6 && e.ratio.im.abs() < 1e-6);
    assert!(e.printed_rel_err > 0.5);
    for id in ["bg00a", "bg01", "laured"] {
        let r = verify(id, None).unwrap();
        assert_eq!(r.status, Status::Pass, "{id}");
        assert!(r.erratum.is_none());
    }
}

#[test]
fn tolerance_below_rounding_fails() {
    let reports = verify_all(Some("*"), Some(1e-15)).unwrap();
    assert!(reports.iter().any(|r| r.status.is_fail()));
    assert_eq!(reports.len(), registry().len());
}

#[test]
fn lookup_rules() {
    assert!(lookup("kummer").is_err());
    assert!(lookup("no-such-id").is_err());
    for base in identities::base_ids() {
        assert!(registry().iter().any(|r| r.base == base));
    }
}

#[test]
fn reductions_pass_at_their_tolerances() {
    let ctx = PlanContext::default();
    let reports = reductions::check_all(None, None, &ctx).unwrap();
    assert_eq!(reports.len(), reduction_registry().len());
    for r in &reports {
        assert_eq!(r.status, Status::Pass, "{}: {:?}", r.id, r.note);
    }
    for rec in reduction_registry() {
        let expected = if rec.lhs.is_semi_infinite() || rec.rhs.is_semi_infinite() { 1e-7 } else { 1e-8 };
        assert_eq!(rec.tolerance(), expected, "{}", rec.id);
        if let Some(s) = &rec.substitution {
            assert!(s.endpoint_error() <= MAP_TOL, "{}", rec.id);
        }
    }
}

#[test]
fn representation_formulas_hold() {
    let reps = representation_formulas_check().unwrap();
    assert_eq!(reps.len(), reductions::representation_ids().len());
    for r in &reps {
        assert!(!r.status.is_fail(), "{}: {:?}", r.id, r.note);
    }
}
