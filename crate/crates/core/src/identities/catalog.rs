use super::{plan, IdentityRecord, PlanContext};
use crate::elliptic::{complete_e, complete_k, incomplete_f};
use crate::hyperfun::HyperSpec;
use crate::numerics::{
    c, cos_pi, exp_i_pi, gamma_re, real, roots_of_unity, sin_pi, unit_partition_roots,
    ComplexValue,
};
use crate::report::EvalError;
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

type C = ComplexValue;
type R = Result<C, EvalError>;

fn g(x: f64) -> Result<f64, EvalError> {
    Ok(gamma_re(x)?)
}

fn k2() -> Result<f64, EvalError> {
    Ok(complete_k(FRAC_1_SQRT_2)?)
}

fn e2() -> Result<f64, EvalError> {
    Ok(complete_e(FRAC_1_SQRT_2)?)
}

fn k6() -> Result<f64, EvalError> {
    Ok(complete_k((6f64.sqrt() - SQRT_2) / 4.0)?)
}

fn k8() -> Result<f64, EvalError> {
    Ok(complete_k(SQRT_2 - 1.0)?)
}

fn s3() -> f64 {
    3f64.sqrt()
}

/// `F(arccos(2 - sqrt 3), (sqrt 6 + sqrt 2)/4)`.
fn f_bg() -> Result<f64, EvalError> {
    Ok(incomplete_f((2.0 - s3()).acos(), (6f64.sqrt() + SQRT_2) / 4.0)?)
}

/// `F(arccos((9 - 4 sqrt 2)/7), sqrt(8 + 5 sqrt 2)/4)`.
fn f_laured() -> Result<f64, EvalError> {
    Ok(incomplete_f(((9.0 - 4.0 * SQRT_2) / 7.0).acos(), (8.0 + 5.0 * SQRT_2).sqrt() / 4.0)?)
}

/// `G(1+a-b) G(1+a/n) / (G(1+a) G(1+a/n-b))`.
fn kummer_value(a: f64, b: f64, n: f64) -> R {
    Ok(real(g(1.0 + a - b)? * g(1.0 + a / n)? / (g(1.0 + a)? * g(1.0 + a / n - b)?)))
}

/// `G(a/n) G(nb) G((nb-a)/n) / (n G(a) G(b) G(nb-a))`.
fn even_value(a: f64, b: f64, n: f64) -> R {
    let nb = n * b;
    Ok(real(g(a / n)? * g(nb)? * g((nb - a) / n)? / (n * g(a)? * g(b)? * g(nb - a)?)))
}

/// `1 - e^(i pi k/m)` for `k = 1..2m-1`.
fn shifted_roots(m: usize) -> Vec<C> {
    (1..2 * m).map(|k| real(1.0) - exp_i_pi(k as f64 / m as f64)).collect()
}

/// `1/2 - (i/2) cot(k pi/n)` for `k = 1..n-1`.
fn pfaff_roots(n: usize) -> Vec<C> {
    (1..n)
        .map(|k| {
            let t = k as f64 / n as f64;
            c(0.5, -0.5 * cos_pi(t) / sin_pi(t))
        })
        .collect()
}

/// The Lauricella constants `H_1` (`which = 1`) and `H_2` (`which = 2`).
pub fn hermite_h(ctx: &PlanContext, which: u8) -> R {
    let s33 = 33f64.sqrt();
    let s6 = 6f64.sqrt();
    let num = 5.0 * (27.0 - 5.0 * s33);
    let xs = vec![
        real((3.0 - s33) / 10.0),
        real(num / (153.0 + 8.0 * s6 - 25.0 * s33)),
        real(num / (153.0 - 8.0 * s6 - 25.0 * s33)),
    ];
    let b1 = if which == 1 { -0.25 } else { 0.75 };
    ctx.fd_spec(&HyperSpec::new(real(1.0), vec![real(b1), real(0.5), real(0.5)], real(1.5), xs)?)
}

/// The Lauricella constants `L_1` (`which = 1`) and `L_2` (`which = 2`).
pub fn maier_l(ctx: &PlanContext, which: u8) -> R {
    let s22 = 22f64.sqrt();
    let xs = vec![
        real(5.0 / 567.0 * (23.0 - 16.0 * s22)),
        real(0.5 - 17.0 / (8.0 * s22)),
        real(16.0 * s22 - 75.0),
    ];
    let b1 = if which == 1 { 0.25 } else { -0.75 };
    ctx.fd_spec(&HyperSpec::new(real(0.5), vec![real(b1), real(0.5), real(0.5)], real(1.0), xs)?)
}

fn laured_lhs(ctx: &PlanContext) -> R {
    let (s3, s7) = (s3(), 7f64.sqrt());
    let xs = vec![real(-1.0), c(0.5, -s3 / 2.0), c(0.5, s3 / 2.0), real(-2.0), c(0.5, -s7 / 2.0), c(0.5, s7 / 2.0)];
    ctx.fd(2.0, 0.5, 3.0, xs)
}

fn appell_bg00(ctx: &PlanContext) -> R {
    ctx.appell_f1(2.0 / 3.0, 0.5, 0.5, 5.0 / 3.0, real(-2.0), real(-8.0))
}

fn appell_bg01(ctx: &PlanContext) -> R {
    ctx.appell_f1(1.0 / 3.0, 0.5, 0.5, 4.0 / 3.0, real(-0.5), real(-0.125))
}

const GRID3: [(f64, f64); 3] = [(0.5, 0.25), (1.0, 0.5), (1.5, 0.75)];
const GRID_N: [(f64, f64); 2] = [(1.0, 0.5), (1.5, 0.25)];
const GRID_EVEN: [(f64, f64); 2] = [(0.5, 0.5), (1.0, 0.75)];

fn ab(a: f64, b: f64) -> Vec<(&'static str, f64)> {
    vec![("a", a), ("b", b)]
}

pub(super) fn build() -> Vec<IdentityRecord> {
    let mut out = Vec::new();
    gauss_and_kummer(&mut out);
    roots_of_unity_families(&mut out);
    elliptic_values(&mut out);
    theorems(&mut out);
    out
}

fn gauss_and_kummer(out: &mut Vec<IdentityRecord>) {
    for (a, b) in [(0.5, 0.75), (1.5, 1.0)] {
        out.push(
            IdentityRecord::new(
                "lunga",
                "we proved that, if",
                plan(move |ctx| ctx.hyp2f1(2.0 * b - a, b, 2.0 * b, real(2.0))),
                plan(move |ctx| {
                    let pre = ctx.pow(c(0.0, -1.0), 2.0 * b - a)?;
                    let g = PI.sqrt() * g(b + 0.5)? / (g((a + 1.0) / 2.0)? * g((2.0 * b - a + 1.0) / 2.0)?);
                    Ok(pre * g)
                }),
            )
            .params(ab(a, b)),
        );
    }
    out.push(IdentityRecord::new(
        "enu5-1",
        "for instance, the first is",
        plan(|ctx| ctx.hyp2f1(0.5, 0.75, 1.5, real(2.0))),
        plan(|_| Ok(c(0.5, -0.5) * k2()?)),
    ));
    for (a, b) in [(1.0, 0.5), (0.5, 0.25), (1.5, 0.5), (2.0, 0.75), (1.0, 0.25), (1.5, 0.75)] {
        out.push(
            IdentityRecord::new(
                "kummer",
                "generalizing the Kummer identity",
                plan(move |ctx| ctx.hyp2f1(a, b, 1.0 + a - b, real(-1.0))),
                plan(move |_| kummer_value(a, b, 2.0)),
            )
            .tol(1e-10)
            .real()
            .params(ab(a, b)),
        );
    }
}

fn roots_of_unity_families(out: &mut Vec<IdentityRecord>) {
    for (a, b) in GRID3 {
        out.push(
            IdentityRecord::new(
                "effe1",
                "two-variable generalization of the Kummer identity",
                plan(move |ctx| {
                    let w = roots_of_unity(3);
                    ctx.appell_f1(a, b, b, 1.0 + a - b, w[0], w[1])
                }),
                plan(move |_| kummer_value(a, b, 3.0)),
            )
            .real()
            .params(ab(a, b)),
        );
        out.push(
            IdentityRecord::new(
                "effe1b",
                "using the Pfaff transformation",
                plan(move |ctx| {
                    let y = pfaff_roots(3);
                    ctx.appell_f1(1.0 - b, b, b, 1.0 + a - b, y[0], y[1])
                }),
                plan(move |_| Ok(kummer_value(a, b, 3.0)? * 3f64.powf(b))),
            )
            .real()
            .params(ab(a, b)),
        );
        out.push(
            IdentityRecord::new(
                "fd3",
                "Kummer-like formula for the Lauricella",
                plan(move |ctx| ctx.fd(a, b, 1.0 + a - b, roots_of_unity(4))),
                plan(move |_| kummer_value(a, b, 4.0)),
            )
            .real()
            .params(ab(a, b)),
        );
        out.push(
            IdentityRecord::new(
                "fd3b",
                "Kummer-like formula for the Lauricella",
                plan(move |ctx| ctx.fd(1.0 - b, b, 1.0 + a - b, vec![real(0.5), c(0.5, -0.5), c(0.5, 0.5)])),
                plan(move |_| Ok(kummer_value(a, b, 4.0)? * 4f64.powf(b))),
            )
            .real()
            .params(ab(a, b)),
        );
    }
    for n in [5usize, 6, 8] {
        for (a, b) in GRID_N {
            let nf = n as f64;
            let params = vec![("n", nf), ("a", a), ("b", b)];
            out.push(
                IdentityRecord::new(
                    "fdn",
                    "root of unity so that",
                    plan(move |ctx| ctx.fd(a, b, 1.0 + a - b, roots_of_unity(n))),
                    plan(move |_| kummer_value(a, b, nf)),
                )
                .real()
                .params(params.clone()),
            );
            out.push(
                IdentityRecord::new(
                    "fdnb",
                    "root of unity so that",
                    plan(move |ctx| ctx.fd(1.0 - b, b, 1.0 + a - b, pfaff_roots(n))),
                    plan(move |_| Ok(kummer_value(a, b, nf)? * nf.powf(b))),
                )
                .real()
                .params(params),
            );
        }
    }
    for m in [1usize, 2, 3] {
        for (a, b) in GRID_EVEN {
            let n = 2.0 * m as f64;
            let params = vec![("m", m as f64), ("a", a), ("b", b)];
            out.push(
                IdentityRecord::new(
                    "even",
                    "Assume that a>0, b>0, nb>a",
                    plan(move |ctx| ctx.fd(n * b - a, b, n * b, unit_partition_roots(2 * m))),
                    plan(move |_| even_value(a, b, n)),
                )
                .real()
                .params(params.clone()),
            );
            let big_a = n * b - a;
            out.push(
                IdentityRecord::new(
                    "even-reduced",
                    "to reduce the order of the Lauricella",
                    plan(move |ctx| ctx.fd(big_a, b, n * b, shifted_roots(m))),
                    plan(move |_| Ok(exp_i_pi(-big_a / n) * even_value(a, b, n)?)),
                )
                .printed(
                    plan(move |ctx| {
                        let w = -exp_i_pi(1.0 / n);
                        Ok(even_value(a, b, n)? / ctx.pow(w, big_a)?)
                    }),
                    "printed prefactor (-e^(i pi/2m))^(2bm-a) holds only when 2bm-a is an even integer; \
                     with the x - i0 continuation the prefactor is e^(i pi (2bm-a)/(2m))",
                )
                .params(params),
            );
        }
    }
    for m in [2usize, 3] {
        for (a, b) in GRID_EVEN {
            let n = 2.0 * m as f64 - 1.0;
            out.push(
                IdentityRecord::new(
                    "odd",
                    "Assume that a>0, b>0, nb>a",
                    plan(move |ctx| ctx.fd(n * b - a, b, n * b, unit_partition_roots(2 * m - 1))),
                    plan(move |_| even_value(a, b, n)),
                )
                .real()
                .params(vec![("m", m as f64), ("a", a), ("b", b)]),
            );
        }
    }
}

fn elliptic_values(out: &mut Vec<IdentityRecord>) {
    let s3 = s3();
    let start = "Starting with the following elliptic integrals";
    out.push(
        IdentityRecord::new(
            "k12rep",
            start,
            plan(|ctx| ctx.fd(1.0, 0.5, 2.0, unit_partition_roots(4))),
            plan(|_| Ok(real(k2()?))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "kr6r2rep",
            start,
            plan(move |ctx| ctx.appell_f1(1.0, 0.5, 0.5, 1.5, c(1.5, s3 / 2.0), c(1.5, -s3 / 2.0))),
            plan(|_| Ok(real(2.0 / 27f64.powf(0.25) * k6()?))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "fd3-two",
            "one of the variables is in the positive real axis",
            plan(|ctx| ctx.fd(1.0, 0.5, 2.0, vec![c(1.0, -1.0), real(2.0), c(1.0, 1.0)])),
            plan(|_| Ok(c(1.0, -1.0) * FRAC_1_SQRT_2 * k2()?)),
        )
        .printed(
            plan(|_| Ok(c(-1.0, 1.0) * FRAC_1_SQRT_2 * k2()?)),
            "printed sign is wrong on either side of the cut; the value is +(1-i)/sqrt2 K(1/sqrt2)",
        ),
    );
    out.push(
        IdentityRecord::new(
            "gr-3-183-2",
            "integral 3.183.2 p. 313",
            plan(|ctx| ctx.hyp2f1(1.0, 0.25, 1.75, real(-1.0))),
            plan(|_| Ok(real(0.75 * SQRT_2 * (2.0 * e2()? - k2()?)))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "gr-3-184-1",
            "entry 3.184.1 p. 314",
            plan(|ctx| ctx.hyp2f1(3.0, 0.25, 3.75, real(-1.0))),
            plan(|_| Ok(real(231.0 * SQRT_2 / 320.0 * (2.0 * e2()? - k2()?)))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "gr-3-185-2",
            "formula 3.185.2 p. 314",
            plan(|ctx| ctx.hyp2f1(1.0, 0.75, 1.25, real(-1.0))),
            plan(|_| Ok(real(SQRT_2 / 4.0 * k2()?))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "gr-3-185-4",
            "entry 3.185.4 p. 314",
            plan(|ctx| ctx.hyp2f1(3.0, 0.75, 3.25, real(-1.0))),
            plan(|_| Ok(real(15.0 / (32.0 * SQRT_2) * k2()?))),
        )
        .real(),
    );
    let bf = "entries 576.00 p. 256 and 578.00";
    out.push(
        IdentityRecord::new(
            "bf-576-00b",
            bf,
            plan(|ctx| ctx.fd(1.0, 0.5, 1.5, roots_of_unity(6))),
            plan(|_| Ok(real(k6()? / (2.0 * 3f64.powf(0.25))))),
        )
        .printed(
            plan(|_| Ok(real(k6()? / (4.0 * 3f64.powf(0.25))))),
            "printed constant 1/(4 3^(1/4)) is half the value; corrected 1/(2 3^(1/4))",
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "bf-578-00b",
            bf,
            plan(|ctx| ctx.fd(2.0, 0.5, 3.0, unit_partition_roots(6))),
            plan(|_| Ok(real(4.0 / 27f64.powf(0.25) * k6()?))),
        )
        .tol(1e-7)
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "serretprol",
            "when one of its arguments is 2",
            plan(|ctx| ctx.fd(2.0, 0.5, 3.0, shifted_roots(3))),
            plan(move |_| Ok(c(0.5, -s3 / 2.0) * (4.0 / 27f64.powf(0.25) * k6()?))),
        )
        .printed(
            plan(move |_| Ok(c(-s3 / 2.0, 0.5) * (4.0 / 27f64.powf(0.25) * k6()?))),
            "printed phase -sqrt3/2 + i/2 is i times the conjugate of the value; corrected 1/2 - i sqrt3/2",
        )
        .tol(1e-7),
    );
    out.push(
        IdentityRecord::new(
            "legendre-fd7",
            "p. 383, proved that",
            plan(|ctx| ctx.fd(1.0, 0.5, 1.5, roots_of_unity(8))),
            plan(|_| Ok(real(k8()? / (2.0 * SQRT_2)))),
        )
        .tol(1e-7)
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "richelot-fd7",
            "Richelot in [R] evaluated",
            plan(|ctx| ctx.fd(3.0, 0.5, 3.5, roots_of_unity(8))),
            plan(|_| Ok(real(15.0 / 16.0 * (1.0 - FRAC_1_SQRT_2) * k8()?))),
        )
        .printed(
            plan(|_| Ok(real(15.0 / 16.0 * (1.0 - 1.0 / (2.0 * SQRT_2)) * k8()?))),
            "printed factor 1 - 1/(2 sqrt2); corrected 1 - 1/sqrt2",
        )
        .tol(1e-7)
        .real(),
    );
    for (id, a) in [("fd8a", 3.0), ("fd8b", 1.0)] {
        out.push(
            IdentityRecord::new(
                id,
                "taking advantage of",
                plan(move |ctx| ctx.fd(a, 0.5, 4.0, unit_partition_roots(8))),
                plan(|_| Ok(real(3.0 * (2.0 - SQRT_2).sqrt() * k8()?))),
            )
            .tol(1e-7)
            .real(),
        );
    }
    let h = FRAC_1_SQRT_2;
    out.push(
        IdentityRecord::new(
            "fd7a",
            "some of the arguments lying in the positive real axis",
            plan(|ctx| ctx.fd(3.0, 0.5, 4.0, shifted_roots(4))),
            plan(move |_| Ok(c(3.0 * (1.0 - h), -3.0 * h) * k8()?)),
        )
        .printed(
            plan(move |_| Ok(c(-3.0 * h, 3.0 - 3.0 * h) * k8()?)),
            "printed value is i times the conjugate; corrected 3(1 - 1/sqrt2) - 3i/sqrt2",
        )
        .tol(1e-7),
    );
    out.push(
        IdentityRecord::new(
            "fd7b",
            "some of the arguments lying in the positive real axis",
            plan(|ctx| ctx.fd(1.0, 0.5, 4.0, shifted_roots(4))),
            plan(move |_| Ok(c(3.0 * h, -3.0 * (1.0 - h)) * k8()?)),
        )
        .printed(
            plan(move |_| Ok(c(3.0 * (h - 1.0), 3.0 * h) * k8()?)),
            "printed value is i times the conjugate; corrected 3/sqrt2 - 3i(1 - 1/sqrt2)",
        )
        .tol(1e-7),
    );
    out.push(
        IdentityRecord::new(
            "fd7c",
            "obtaining",
            plan(|ctx| ctx.fd(5.0, 0.5, 5.5, roots_of_unity(8))),
            plan(|_| Ok(real(315.0 * PI / (1024.0 * SQRT_2 * k8()?)))),
        )
        .tol(1e-7)
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "fd7d",
            "obtaining",
            plan(|ctx| ctx.fd(7.0, 0.5, 7.5, roots_of_unity(8))),
            plan(|_| Ok(real(1001.0 * (2.0 + SQRT_2) * PI / (16384.0 * k8()?)))),
        )
        .tol(1e-7)
        .real(),
    );
    let serret = |k: f64| -> Result<f64, EvalError> { Ok(4f64.powf(1.0 / 3.0) / 3f64.powf(0.25) * k) };
    out.push(
        IdentityRecord::new(
            "serret-fd6",
            "considered by Serret",
            plan(|ctx| ctx.fd(1.0, 1.0 / 3.0, 2.0, unit_partition_roots(6))),
            plan(move |_| Ok(real(serret(k6()?)?))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "serretprol2",
            "an evaluation of the analytic continuation of",
            plan(|ctx| ctx.fd(1.0, 1.0 / 3.0, 2.0, shifted_roots(3))),
            plan(move |_| Ok(c(s3 / 2.0, -0.5) * serret(k6()?)?)),
        )
        .printed(
            plan(move |_| Ok(c(-s3 / 2.0, 0.5) * serret(k6()?)?)),
            "printed sign is wrong; corrected sqrt3/2 - i/2",
        ),
    );
    let cap = || -> Result<f64, EvalError> { Ok(32f64.powf(1.0 / 3.0) / 2187f64.powf(0.25) * k6()?) };
    out.push(
        IdentityRecord::new(
            "capXXX205b",
            "Legendre evaluated an integral similar",
            plan(|ctx| ctx.fd(1.0, 1.0 / 3.0, 5.0 / 3.0, roots_of_unity(6))),
            plan(move |_| Ok(real(cap()?))),
        )
        .real(),
    );
    out.push(IdentityRecord::new(
        "capXXX205-fd4",
        "can also be used for an integral of the",
        plan(move |ctx| {
            let xs = vec![c(1.5, s3 / 2.0), c(1.0, s3), c(0.0, s3), c(-0.5, s3 / 2.0)];
            ctx.fd(1.0, 1.0 / 3.0, 5.0 / 3.0, xs)
        }),
        plan(move |_| Ok(c(0.5, s3 / 2.0) * cap()?)),
    ));
}

fn theorems(out: &mut Vec<IdentityRecord>) {
    let s3 = s3();
    let g13 = || -> Result<f64, EvalError> { g(1.0 / 3.0) };
    let bg = "new evaluation of the analytic continuation";
    out.push(
        IdentityRecord::new(
            "bg00",
            bg,
            plan(appell_bg00),
            plan(move |_| Ok(real(g13()?.powi(3) / (3.0 * PI * 16f64.cbrt() * s3)))),
        )
        .printed(
            plan(move |_| Ok(real(g13()?.powi(3) / (PI * 16f64.cbrt() * s3)))),
            "printed right side equals the full integral, three times the Appell value; \
             corrected G(1/3)^3/(3 pi 16^(1/3) sqrt3)",
        )
        .real(),
    );
    out.push(
        IdentityRecord::new("bg00a", bg, plan(appell_bg00), plan(|_| Ok(real(3f64.powf(-1.25) * f_bg()?)))).real(),
    );
    let bg1 = "a new evaluation of the Appell";
    out.push(
        IdentityRecord::new(
            "bg01",
            bg1,
            plan(appell_bg01),
            plan(move |_| Ok(real(g13()?.powi(3) / (PI * 27f64.sqrt() * 2f64.cbrt())))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "bg01-elliptic",
            bg1,
            plan(appell_bg01),
            plan(|_| Ok(real(2.0 / (3.0 * 3f64.powf(0.25)) * f_bg()?))),
        )
        .real(),
    );
    let lr = "We have the reduction";
    let s7 = 7f64.sqrt();
    out.push(
        IdentityRecord::new(
            "laured",
            lr,
            plan(laured_lhs),
            plan(move |ctx| {
                let al = c(-3.0 / 8.0, -s7 / 8.0);
                Ok(ctx.appell_f1(1.0, 0.5, 0.5, 1.5, al, al.conj())? * (2.0 / 3.0))
            }),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new("lauredb", lr, plan(laured_lhs), plan(|_| Ok(real(2f64.powf(0.25) / 3.0 * f_laured()?))))
            .real(),
    );
    out.push(
        IdentityRecord::new(
            "laured-fd5",
            lr,
            plan(laured_lhs),
            plan(move |ctx| {
                let xs = vec![
                    real(-0.5),
                    c(0.75, -s3 / 4.0),
                    c(0.75, s3 / 4.0),
                    c(0.75, -s7 / 4.0),
                    c(0.75, s7 / 4.0),
                ];
                Ok(ctx.fd(2.0, 0.5, 3.0, xs)? * 0.25)
            }),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "hermyF1",
            "linking the Appell function to the complete",
            plan(|ctx| ctx.appell_f1(0.25, 0.5, 0.5, 1.25, real(1.0 / 3.0), real(0.25))),
            plan(move |_| Ok(real(k2()? / s3))),
        )
        .real(),
    );
    let s21 = 21f64.sqrt();
    let her_xs = move || {
        vec![
            real((3.0 * s21 - 17.0) / 25.0),
            real((3.0 - s21) / 12.0),
            real((s21 - 3.0) / 3.0),
            real((11.0 - s21) / 25.0),
        ]
    };
    out.push(
        IdentityRecord::new(
            "her1876bth",
            "The hypergeometric approach through the integral representation",
            plan(move |_| {
                let r = (7.0f64 / 3.0).sqrt();
                let k = ((49.0 - 9.0 * s21) / 2.0).sqrt() / 7.0;
                Ok(real(5.0 / 14.0 * (7.0 / 3.0 + r).sqrt() * complete_k(k)?))
            }),
            plan(move |ctx| ctx.fd(0.5, 0.5, 1.5, her_xs())),
        )
        .printed(
            plan(move |ctx| ctx.fd(0.5, 0.5, 0.75, her_xs())),
            "printed lower parameter 3/4; the integral representation gives 3/2",
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "idhermiteK",
            "H_1 and H_2 are two Lauricella",
            plan(|ctx| {
                let (s33, s3, s11) = (33f64.sqrt(), 3f64.sqrt(), 11f64.sqrt());
                let c1 = (15625.0 * (1649.0 + 225.0 * s33) / 55296.0).powf(0.25);
                let c2 = (5.0 * (1552.0 * s3 + 816.0 * s11)).sqrt() / 96.0;
                Ok((hermite_h(ctx, 1)? * c1 - hermite_h(ctx, 2)? * c2) * (12.0f64 / 125.0).sqrt())
            }),
            plan(|_| Ok(real((4.0f64 / 3.0).powf(0.25) * k2()?))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "maier-g4",
            "L_1 and L_2 are two Lauricella",
            plan(|ctx| {
                let s22 = 22f64.sqrt();
                let c1 = 91.0 * PI / (6.0 * (264.0 * (169.0 + 36.0 * s22)).powf(0.25));
                let c2 = (113.0 - 20.0 * s22).powf(0.75) * PI
                    / (2.0 * 3f64.powf(0.25) * (176.0 + 38.0 * s22).sqrt());
                Ok(maier_l(ctx, 1)? * c1 - maier_l(ctx, 2)? * c2)
            }),
            plan(|_| Ok(real((4.0f64 / 3.0).powf(0.25) * k2()?))),
        )
        .real(),
    );
    out.push(
        IdentityRecord::new(
            "pi-corollary",
            "new formula for",
            plan(|ctx| {
                let s22 = 22f64.sqrt();
                let num = 12.0 * (22.0 * (9.0 + 2.0 * s22)).sqrt() * k2()?;
                let den = maier_l(ctx, 1)? * (91.0 * 22f64.powf(0.25))
                    - maier_l(ctx, 2)? * (21569.0 * s22 - 99440.0).sqrt();
                Ok(real(num) / den)
            }),
            plan(|_| Ok(real(PI))),
        )
        .real(),
    );
}
