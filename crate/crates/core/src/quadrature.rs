//! Double-exponential (tanh-sinh) quadrature of complex integrands on finite
//! intervals and on `[lo, inf)`.
//!
//! Integrands receive a [`Node`] rather than a bare abscissa. The node carries
//! the distances to the enclosing panel endpoints computed without
//! cancellation, so factors such as `(1 - u)^(-3/4)` stay accurate where `u`
//! itself rounds to 1.

use crate::numerics::{real, ComplexValue};
use std::f64::consts::FRAC_PI_2;
use thiserror::Error;

/// Largest level; the finest step is `2^-MAX_LEVEL`.
pub const MAX_LEVEL: u32 = 12;
const MIN_LEVEL: u32 = 3;
const T_MAX: f64 = 6.0;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadratureError {
    #[error("invalid interval [{lo}, {hi}]")]
    BadInterval { lo: f64, hi: f64 },
    #[error("tolerance {0} below the supported minimum 1e-13")]
    BadTolerance(f64),
    #[error("interior singularity {0} is not strictly inside the interval")]
    SingularityOutside(f64),
    #[error("interior singularities are not strictly increasing")]
    SingularitiesUnordered,
    #[error("endpoint exponent {0} <= -1 is not integrable")]
    NonIntegrable(f64),
    #[error("non-finite integrand at x = {x}")]
    NonFinite { x: f64 },
    #[error("no convergence: estimate {re} + {im}i, error {error:e} > tol {tol:e}")]
    NoConvergence { re: f64, im: f64, error: f64, tol: f64 },
    #[error("semi-infinite integral appears to diverge")]
    Divergent,
}

/// A quadrature abscissa together with its panel.
///
/// `dlo = x - lo` and `dhi = hi - x` are exact to rounding even when `x`
/// rounds onto an endpoint.
#[derive(Debug, Clone, Copy)]
pub struct Node {
    pub x: f64,
    pub lo: f64,
    pub hi: f64,
    pub dlo: f64,
    pub dhi: f64,
}

impl Node {
    /// `x - p`, exact when `p` is a panel endpoint.
    pub fn diff(&self, p: f64) -> f64 {
        if p == self.lo {
            self.dlo
        } else if p == self.hi {
            -self.dhi
        } else {
            self.x - p
        }
    }
}

/// An integrand with its known singular structure.
pub struct IntegrandSpec<'a> {
    evaluator: Box<dyn Fn(&Node) -> ComplexValue + Sync + 'a>,
    interior_singularities: Vec<f64>,
    endpoint_exponents: (f64, f64),
}

impl<'a> IntegrandSpec<'a> {
    pub fn new(f: impl Fn(&Node) -> ComplexValue + Sync + 'a) -> Self {
        IntegrandSpec {
            evaluator: Box::new(f),
            interior_singularities: Vec::new(),
            endpoint_exponents: (0.0, 0.0),
        }
    }

    /// Real-valued integrand of the abscissa alone (no endpoint information).
    pub fn from_fn(f: impl Fn(f64) -> f64 + Sync + 'a) -> Self {
        Self::new(move |n: &Node| real(f(n.x)))
    }

    pub fn with_singularities(mut self, points: Vec<f64>) -> Result<Self, QuadratureError> {
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(QuadratureError::SingularitiesUnordered);
        }
        self.interior_singularities = points;
        Ok(self)
    }

    pub fn with_endpoint_exponents(mut self, lo: f64, hi: f64) -> Result<Self, QuadratureError> {
        for e in [lo, hi] {
            if e <= -1.0 {
                return Err(QuadratureError::NonIntegrable(e));
            }
        }
        self.endpoint_exponents = (lo, hi);
        Ok(self)
    }

    pub fn interior_singularities(&self) -> &[f64] {
        &self.interior_singularities
    }

    pub fn endpoint_exponents(&self) -> (f64, f64) {
        self.endpoint_exponents
    }

    pub fn eval(&self, node: &Node) -> ComplexValue {
        (self.evaluator)(node)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: ComplexValue,
    pub error_estimate: f64,
    pub evaluations: usize,
}

struct Panel {
    lo: f64,
    hi: f64,
}

// Abscissa offset from the nearer endpoint (as a fraction of the half width)
// and the weight, for t = k h.
fn tanh_sinh_point(t: f64) -> (f64, f64) {
    let s = FRAC_PI_2 * t.sinh();
    let cosh_s = s.cosh();
    let comp = 2.0 / (1.0 + (2.0 * s.abs()).exp());
    let w = FRAC_PI_2 * t.cosh() / (cosh_s * cosh_s);
    (comp, w)
}

struct PanelSum {
    sum: ComplexValue,
    abs_sum: f64,
    evals: usize,
}

fn panel_points(
    f: &dyn Fn(&Node) -> Result<ComplexValue, QuadratureError>,
    panel: &Panel,
    h: f64,
    odd_only: bool,
) -> Result<PanelSum, QuadratureError> {
    let half = 0.5 * (panel.hi - panel.lo);
    let width = panel.hi - panel.lo;
    let mut acc = PanelSum { sum: real(0.0), abs_sum: 0.0, evals: 0 };
    let kmax = (T_MAX / h).floor() as i64;
    let mut k = if odd_only { 1 } else { 0 };
    let step = if odd_only { 2 } else { 1 };
    while k <= kmax {
        let t = k as f64 * h;
        let (comp, w) = tanh_sinh_point(t);
        let d = half * comp;
        if d <= 0.0 || !w.is_finite() || w == 0.0 {
            break;
        }
        let mut side = |node: Node| -> Result<(), QuadratureError> {
            let v = f(&node)?;
            acc.sum += v * w;
            acc.abs_sum += v.norm() * w;
            acc.evals += 1;
            Ok(())
        };
        if k == 0 {
            side(Node { x: panel.lo + half, lo: panel.lo, hi: panel.hi, dlo: half, dhi: half })?;
        } else {
            side(Node { x: panel.hi - d, lo: panel.lo, hi: panel.hi, dlo: width - d, dhi: d })?;
            side(Node { x: panel.lo + d, lo: panel.lo, hi: panel.hi, dlo: d, dhi: width - d })?;
        }
        k += step;
    }
    acc.sum *= half;
    acc.abs_sum *= half;
    Ok(acc)
}

fn integrate_panels(
    f: &dyn Fn(&Node) -> Result<ComplexValue, QuadratureError>,
    panels: &[Panel],
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    let mut sums: Vec<(ComplexValue, f64)> = Vec::with_capacity(panels.len());
    let mut evals = 0;
    let mut h = 1.0;
    for p in panels {
        let s = panel_points(f, p, h, false)?;
        evals += s.evals;
        sums.push((s.sum, s.abs_sum));
    }
    let total = |sums: &[(ComplexValue, f64)], h: f64| {
        let v: ComplexValue = sums.iter().map(|s| s.0).sum();
        let a: f64 = sums.iter().map(|s| s.1).sum();
        (v * h, a * h)
    };
    let (mut prev, _) = total(&sums, h);
    let mut last_err = f64::INFINITY;
    for level in 1..=MAX_LEVEL {
        h *= 0.5;
        for (p, s) in panels.iter().zip(sums.iter_mut()) {
            let add = panel_points(f, p, h, true)?;
            evals += add.evals;
            s.0 += add.sum;
            s.1 += add.abs_sum;
        }
        let (cur, abs) = total(&sums, h);
        let err = (cur - prev).norm();
        let scale = cur.norm().max(1e-3 * abs);
        last_err = err;
        if level >= MIN_LEVEL && err <= tol * scale {
            return Ok(QuadratureResult { value: cur, error_estimate: err / scale.max(f64::MIN_POSITIVE), evaluations: evals });
        }
        prev = cur;
    }
    Err(QuadratureError::NoConvergence { re: prev.re, im: prev.im, error: last_err, tol })
}

fn checked<'s>(
    spec: &'s IntegrandSpec<'_>,
) -> impl Fn(&Node) -> Result<ComplexValue, QuadratureError> + 's {
    move |node: &Node| {
        let v = spec.eval(node);
        if v.re.is_finite() && v.im.is_finite() {
            Ok(v)
        } else {
            Err(QuadratureError::NonFinite { x: node.x })
        }
    }
}

fn check_tol(tol: f64) -> Result<(), QuadratureError> {
    if !(tol >= 1e-13) {
        return Err(QuadratureError::BadTolerance(tol));
    }
    Ok(())
}

/// Integrates over `[lo, hi]`, splitting at the interior singularities.
///
/// `tol` is relative to the size of the result; `error_estimate` in the
/// result is reported on the same relative scale.
pub fn integrate(
    spec: &IntegrandSpec<'_>,
    lo: f64,
    hi: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    check_tol(tol)?;
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(QuadratureError::BadInterval { lo, hi });
    }
    let mut cuts = vec![lo];
    for &s in spec.interior_singularities() {
        if !(s > lo && s < hi) {
            return Err(QuadratureError::SingularityOutside(s));
        }
        cuts.push(s);
    }
    cuts.push(hi);
    let panels: Vec<Panel> = cuts.windows(2).map(|w| Panel { lo: w[0], hi: w[1] }).collect();
    integrate_panels(&checked(spec), &panels, tol)
}

/// Integrates over `[lo, inf)` through `t = lo + (1 - v)/v`, `v` in `(0, 1]`.
///
/// The integrand sees nodes in `t`; `dlo = t - lo` is formed from the exact
/// complement `1 - v`, and interior singularities become panel endpoints.
pub fn integrate_semi_infinite(
    spec: &IntegrandSpec<'_>,
    lo: f64,
    tol: f64,
) -> Result<QuadratureResult, QuadratureError> {
    check_tol(tol)?;
    if !lo.is_finite() {
        return Err(QuadratureError::BadInterval { lo, hi: f64::INFINITY });
    }
    // t breakpoints ascending: lo, s1, ..., inf; v breakpoints descending.
    let mut tcuts = vec![lo];
    for &s in spec.interior_singularities() {
        if !(s > lo && s.is_finite()) {
            return Err(QuadratureError::SingularityOutside(s));
        }
        tcuts.push(s);
    }
    let vcut = |t: f64| 1.0 / (1.0 + (t - lo));
    let mut vcuts: Vec<f64> = tcuts.iter().map(|&t| vcut(t)).collect();
    vcuts.push(0.0);
    tcuts.push(f64::INFINITY);
    vcuts.reverse();
    tcuts.reverse();
    // now vcuts ascending: 0, v(s_k) ..., 1 with matching tcuts inf, s_k, ..., lo
    let panels: Vec<Panel> = vcuts.windows(2).map(|w| Panel { lo: w[0], hi: w[1] }).collect();
    let checked = checked(spec);
    let mapped = |vn: &Node| -> Result<ComplexValue, QuadratureError> {
        let v = vn.x;
        let i = panels
            .iter()
            .position(|p| p.lo == vn.lo && p.hi == vn.hi)
            .expect("node from a known panel");
        let (t_hi, t_lo) = (tcuts[i], tcuts[i + 1]);
        let v_lo = vn.lo;
        let v_hi = vn.hi;
        // t - t_lo = 1/v - 1/v_hi = (v_hi - v)/(v v_hi)
        let dlo = vn.dhi / (v * v_hi);
        let dhi = if v_lo == 0.0 { f64::INFINITY } else { vn.dlo / (v * v_lo) };
        let t = if t_lo == lo { lo + dlo } else { lo + (1.0 - v) / v };
        let tn = Node { x: t, lo: t_lo, hi: t_hi, dlo, dhi };
        Ok(checked(&tn)? / v / v)
    };
    let res = integrate_panels(&mapped, &panels, tol)?;
    if !res.value.re.is_finite() || !res.value.im.is_finite() {
        return Err(QuadratureError::Divergent);
    }
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::c;
    use std::f64::consts::PI;

    #[test]
    fn inverse_sqrt_endpoint() {
        let spec = IntegrandSpec::new(|n: &Node| real(n.diff(0.0).powf(-0.5)));
        let r = integrate(&spec, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value - real(2.0)).norm() < 1e-12);
        assert!(r.error_estimate <= 1e-12);
    }

    #[test]
    fn cubic_radical() {
        let spec = IntegrandSpec::new(|n: &Node| {
            let x = n.x;
            let one_minus = -n.diff(1.0);
            real(1.0 / (one_minus * (1.0 + x + x * x)).sqrt())
        });
        let r = integrate(&spec, 0.0, 1.0, 1e-12).unwrap();
        // (1/3) B(1/3, 1/2)
        assert!((r.value.re - 1.402_182_105_325_451).abs() < 1e-12);
    }

    #[test]
    fn interior_split() {
        // B(1/2,1/4)/sqrt 2 + 2 sqrt 2 2F1(1/2,1/4;5/4;-1)
        let spec = IntegrandSpec::new(|n: &Node| {
            let u = n.diff(0.0);
            let d = (2.0 * n.diff(0.5)).abs();
            real(u.powf(-0.5) * d.powf(-0.75))
        })
        .with_singularities(vec![0.5])
        .unwrap();
        let r = integrate(&spec, 0.0, 1.0, 1e-12).unwrap();
        assert!((r.value.re - 6.330_206_908_894_864).abs() < 1e-10, "{}", r.value);
    }

    #[test]
    fn semi_infinite_basic() {
        let spec = IntegrandSpec::from_fn(|t| 1.0 / (1.0 + t * t));
        let r = integrate_semi_infinite(&spec, 0.0, 1e-12).unwrap();
        assert!((r.value.re - PI / 2.0).abs() < 1e-12);
        let spec = IntegrandSpec::from_fn(|t| 1.0 / (1.0 + t.powi(4)).sqrt());
        let r = integrate_semi_infinite(&spec, 0.0, 1e-12).unwrap();
        assert!((r.value.re - 1.854_074_677_301_372).abs() < 1e-11);
    }

    #[test]
    fn semi_infinite_endpoint_singularity() {
        let spec = IntegrandSpec::new(|n: &Node| {
            let x = n.x;
            let xm1 = n.diff(1.0);
            real(1.0 / (x * xm1 * (x * x + x + 1.0)).sqrt())
        });
        let r = integrate_semi_infinite(&spec, 1.0, 1e-11).unwrap();
        assert!((r.value.re - 1.402_182_105_325_451).abs() < 1e-10);
    }

    #[test]
    fn semi_infinite_interior_singularity() {
        // t^(-1/2) |t - 1|^(-1/2) / (1 + t): mpmath reference
        let spec = IntegrandSpec::new(|n: &Node| {
            let t = n.diff(0.0);
            real(t.powf(-0.5) * n.diff(1.0).abs().powf(-0.5) / (1.0 + t))
        })
        .with_singularities(vec![1.0])
        .unwrap();
        let r = integrate_semi_infinite(&spec, 0.0, 1e-11).unwrap();
        assert!((r.value.re - 3.467_891_949_359_633).abs() < 1e-9, "{}", r.value);
    }

    #[test]
    fn complex_integrand() {
        let spec = IntegrandSpec::new(|n: &Node| c(n.x.cos(), n.x.sin()));
        let r = integrate(&spec, 0.0, PI, 1e-12).unwrap();
        assert!((r.value - c(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn rejects_bad_input() {
        let spec = IntegrandSpec::from_fn(|x| x);
        assert!(integrate(&spec, 1.0, 0.0, 1e-10).is_err());
        assert!(integrate(&spec, 0.0, 1.0, 1e-14).is_err());
        let spec = IntegrandSpec::from_fn(|x| x).with_singularities(vec![2.0]).unwrap();
        assert!(integrate(&spec, 0.0, 1.0, 1e-10).is_err());
        assert!(IntegrandSpec::from_fn(|x| x).with_endpoint_exponents(-1.0, 0.0).is_err());
        assert!(IntegrandSpec::from_fn(|x| x).with_singularities(vec![0.5, 0.2]).is_err());
        let spec = IntegrandSpec::from_fn(|x| if x > 0.3 { f64::NAN } else { 1.0 });
        assert!(matches!(integrate(&spec, 0.0, 1.0, 1e-10), Err(QuadratureError::NonFinite { .. })));
    }
}
