use hyperval::hyperfun::{
    appell_f1, fd_order_reduce, hyp2f1, hyp2f1_series, lauricella_fd, pfaff_fd, Evaluator, HyperSpec,
};
use hyperval::numerics::{c, real, BranchSide, ComplexValue, DEFAULT_SIDE};
use proptest::prelude::*;

fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
    (a - b).norm() / b.norm().max(1.0)
}

/// A point with `|x| <= r`.
fn disk(r: f64) -> impl Strategy<Value = ComplexValue> {
    (0.0..r, 0.0..std::f64::consts::TAU).prop_map(|(m, t)| ComplexValue::from_polar(m, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn one_variable_fd_is_gauss(a in -2.0f64..3.0, b in -2.0f64..3.0, cc in 0.3f64..4.0, x in disk(0.8)) {
        let spec = HyperSpec::new(real(a), vec![real(b)], real(cc), vec![x]).unwrap();
        let fd = lauricella_fd(&spec, DEFAULT_SIDE).unwrap();
        let g = hyp2f1(real(a), real(b), real(cc), x, DEFAULT_SIDE).unwrap();
        prop_assert!(rel(fd, g) < 1e-11);
    }

    #[test]
    fn appell_with_zero_b2_is_gauss(a in -2.0f64..3.0, b1 in -2.0f64..3.0, cc in 0.3f64..4.0, x1 in disk(0.8), x2 in disk(0.8)) {
        let f1 = appell_f1(real(a), real(b1), real(0.0), real(cc), x1, x2, DEFAULT_SIDE).unwrap();
        let g = hyp2f1(real(a), real(b1), real(cc), x1, DEFAULT_SIDE).unwrap();
        prop_assert!(rel(f1, g) < 1e-11, "{} vs {}", f1, g);
    }

    #[test]
    fn equal_arguments_collapse(a in 0.1f64..1.5, bs in prop::collection::vec(0.1f64..1.0, 3..=4), gap in 0.2f64..2.0, x in disk(0.8)) {
        let cc = a + gap;
        let n = bs.len();
        let spec = HyperSpec::new(real(a), bs.iter().map(|&b| real(b)).collect(), real(cc), vec![x; n]).unwrap();
        let fd = lauricella_fd(&spec, DEFAULT_SIDE).unwrap();
        let g = hyp2f1(real(a), real(bs.iter().sum()), real(cc), x, DEFAULT_SIDE).unwrap();
        prop_assert!(rel(fd, g) < 1e-11, "{} vs {}", fd, g);
    }

    #[test]
    fn appell_argument_symmetry(a in 0.1f64..2.0, b1 in -1.0f64..2.0, b2 in -1.0f64..2.0, gap in 0.2f64..2.0, x1 in disk(1.5), x2 in disk(1.5)) {
        prop_assume!(x1.im.abs() > 0.05 || x1.re < 0.9);
        prop_assume!(x2.im.abs() > 0.05 || x2.re < 0.9);
        let cc = a + gap;
        let f = appell_f1(real(a), real(b1), real(b2), real(cc), x1, x2, DEFAULT_SIDE).unwrap();
        let g = appell_f1(real(a), real(b2), real(b1), real(cc), x2, x1, DEFAULT_SIDE).unwrap();
        prop_assert!(rel(f, g) < 1e-11);
    }

    #[test]
    fn series_and_integral_agree(a in 0.1f64..2.0, b in -1.0f64..2.0, gap in 0.2f64..2.0, x in disk(0.8)) {
        let cc = a + gap;
        let s = hyp2f1_series(real(a), real(b), real(cc), x).unwrap();
        let spec = HyperSpec::new(real(a), vec![real(b)], real(cc), vec![x]).unwrap();
        let q = Evaluator::default().euler(&spec, DEFAULT_SIDE).unwrap().value;
        prop_assert!(rel(q, s) < 1e-11, "{} vs {}", q, s);
    }

    #[test]
    fn pfaff_consistency(a in 0.1f64..2.0, b1 in -1.0f64..2.0, b2 in -1.0f64..2.0, gap in 0.2f64..2.0, x1 in disk(3.0), x2 in disk(3.0)) {
        prop_assume!(x1.im.abs() > 0.05 || x1.re < 0.9);
        prop_assume!(x2.im.abs() > 0.05 || x2.re < 0.9);
        let spec = HyperSpec::new(real(a), vec![real(b1), real(b2)], real(a + gap), vec![x1, x2]).unwrap();
        let (t, pre) = pfaff_fd(&spec).unwrap();
        let direct = lauricella_fd(&spec, DEFAULT_SIDE).unwrap();
        let via = pre * lauricella_fd(&t, DEFAULT_SIDE).unwrap();
        prop_assert!(rel(via, direct) < 1e-10, "{} vs {}", via, direct);
    }

    #[test]
    fn order_reduction_consistency(a in 0.1f64..1.5, bs in prop::collection::vec(0.3f64..1.2, 3..=4), xs in prop::collection::vec(disk(0.9), 4)) {
        let n = bs.len();
        let cc: f64 = bs.iter().sum();
        prop_assume!(cc > a + 0.1);
        let spec = HyperSpec::new(real(a), bs.iter().map(|&b| real(b)).collect(), real(cc), xs[..n].to_vec()).unwrap();
        let (t, pre) = fd_order_reduce(&spec).unwrap();
        prop_assume!(t.xs.iter().all(|y| y.im.abs() > 1e-3 || y.re < 0.95));
        let direct = lauricella_fd(&spec, DEFAULT_SIDE).unwrap();
        let via = pre * lauricella_fd(&t, DEFAULT_SIDE).unwrap();
        prop_assert!(rel(via, direct) < 1e-10, "{} vs {}", via, direct);
    }

    #[test]
    fn conjugate_closed_arguments_give_real_values(a in 0.1f64..1.5, b in 0.1f64..1.0, r in -2.0f64..0.9, rb in 0.1f64..1.0, gap in 0.2f64..2.0, re in -2.0f64..2.0, im in 0.1f64..2.0) {
        let x = c(re, im);
        let spec = HyperSpec::new(real(a), vec![real(b), real(b), real(rb)], real(a + gap), vec![x, x.conj(), real(r)]).unwrap();
        let v = lauricella_fd(&spec, DEFAULT_SIDE).unwrap();
        prop_assert!(v.im.abs() < 1e-11 * v.norm().max(1.0), "{}", v);
    }

    #[test]
    fn sides_are_conjugate_on_the_cut(a in 0.1f64..1.5, b in 0.1f64..0.9, gap in 0.2f64..2.0, x in 1.05f64..6.0) {
        let below = hyp2f1(real(a), real(b), real(a + gap), real(x), BranchSide::Below).unwrap();
        let above = hyp2f1(real(a), real(b), real(a + gap), real(x), BranchSide::Above).unwrap();
        prop_assert!(rel(above, below.conj()) < 1e-10);
    }
}
