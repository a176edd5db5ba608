//! Gauss 2F1, Appell F1 and Lauricella F_D evaluation.
//!
//! Inside the polydisk `max |x_k| <= 0.9` the series are summed directly;
//! elsewhere the one-dimensional Euler integral
//!
//! ```text
//! F_D(a; b; c | x) = G(c)/(G(a)G(c-a)) int_0^1 u^(a-1) (1-u)^(c-a-1) prod (1 - x_k u)^(-b_k) du
//! ```
//!
//! gives the continuation. Real arguments `x_k > 1` are taken as the limit
//! `x_k - i0` or `x_k + i0` according to [`BranchSide`].

use crate::numerics::{
    gamma, is_nonpositive_integer, principal_pow, real, real_pow, BranchSide, ComplexValue,
    NumericsError, DEFAULT_SIDE,
};
use crate::quadrature::{integrate, IntegrandSpec, Node, QuadratureError};
use thiserror::Error;

/// Series are used when every argument satisfies `|x| <= SERIES_RADIUS`.
pub const SERIES_RADIUS: f64 = 0.9;
/// Default relative tolerance handed to the quadrature.
pub const DEFAULT_QUAD_TOL: f64 = 1e-11;
const MAX_TERMS: usize = 100_000;
const TERM_TOL: f64 = 1e-16;
/// Arguments within this relative distance of the real axis, with real part
/// above 1, are treated as lying on the cut.
pub const REAL_AXIS_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HyperError {
    #[error("c = {0} is a non-positive integer")]
    CPole(ComplexValue),
    #[error("argument equal to 1 is not supported")]
    ArgumentIsOne,
    #[error("parameter lists have different lengths ({bs} b's, {xs} x's)")]
    LengthMismatch { bs: usize, xs: usize },
    #[error("at least one variable is required")]
    Empty,
    #[error("parameter domain: {0}")]
    ParameterDomain(String),
    #[error("series did not converge in {0} terms")]
    NoConvergence(usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

pub type Result<T> = std::result::Result<T, HyperError>;

/// Parameter bundle `(a; b_1..b_n; c | x_1..x_n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HyperSpec {
    pub a: ComplexValue,
    pub bs: Vec<ComplexValue>,
    pub c: ComplexValue,
    pub xs: Vec<ComplexValue>,
}

impl HyperSpec {
    pub fn new(
        a: ComplexValue,
        bs: Vec<ComplexValue>,
        c: ComplexValue,
        xs: Vec<ComplexValue>,
    ) -> Result<Self> {
        if bs.len() != xs.len() {
            return Err(HyperError::LengthMismatch { bs: bs.len(), xs: xs.len() });
        }
        if bs.is_empty() {
            return Err(HyperError::Empty);
        }
        if is_nonpositive_integer(c) {
            return Err(HyperError::CPole(c));
        }
        Ok(HyperSpec { a, bs, c, xs })
    }

    /// All `b_k` equal to `b`.
    pub fn uniform(a: f64, b: f64, c: f64, xs: Vec<ComplexValue>) -> Result<Self> {
        let bs = vec![real(b); xs.len()];
        HyperSpec::new(real(a), bs, real(c), xs)
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Series,
    Polynomial,
    Euler,
    PfaffSeries,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Series => "series",
            Method::Polynomial => "polynomial",
            Method::Euler => "euler-integral",
            Method::PfaffSeries => "pfaff-series",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperValue {
    pub value: ComplexValue,
    /// Absolute error estimate.
    pub error_estimate: f64,
    pub method: Method,
}

/// Evaluation settings shared by the dispatchers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluator {
    pub quad_tol: f64,
}

impl Default for Evaluator {
    fn default() -> Self {
        Evaluator { quad_tol: DEFAULT_QUAD_TOL }
    }
}

/// Real part of `x` when `x` sits on the cut `(1, inf)` up to rounding.
pub fn on_cut(x: ComplexValue) -> Option<f64> {
    if x.re > 1.0 && x.im.abs() <= REAL_AXIS_TOL * x.norm().max(1.0) {
        Some(x.re)
    } else {
        None
    }
}

fn is_one(x: ComplexValue) -> bool {
    (x - real(1.0)).norm() <= 4.0 * f64::EPSILON
}

fn check_not_one(xs: &[ComplexValue]) -> Result<()> {
    if xs.iter().any(|&x| is_one(x)) {
        Err(HyperError::ArgumentIsOne)
    } else {
        Ok(())
    }
}

fn gamma_ratio(a: ComplexValue, c: ComplexValue) -> Result<ComplexValue> {
    Ok(gamma(c)? / (gamma(a)? * gamma(c - a)?))
}

struct SeriesSum {
    value: ComplexValue,
    err: f64,
}

// Sum of (a)_m (b)_m / (c)_m x^m / m!, with no radius check.
fn series_2f1(a: ComplexValue, b: ComplexValue, c: ComplexValue, x: ComplexValue) -> Result<SeriesSum> {
    let mut term = real(1.0);
    let mut sum = real(1.0);
    let mut small = 0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        term *= (a + mf) * (b + mf) / ((c + mf) * (mf + 1.0)) * x;
        sum += term;
        if term.norm() <= TERM_TOL * sum.norm() {
            small += 1;
            if small == 2 {
                return Ok(SeriesSum { value: sum, err: term.norm() + TERM_TOL * sum.norm() * (m as f64 + 1.0).sqrt() });
            }
        } else {
            small = 0;
        }
    }
    Err(HyperError::NoConvergence(MAX_TERMS))
}

// F1 as sum over m of (a)_m (b1)_m / ((c)_m m!) x1^m 2F1(a+m, b2; c+m; x2).
fn series_f1(
    a: ComplexValue,
    b1: ComplexValue,
    b2: ComplexValue,
    c: ComplexValue,
    x1: ComplexValue,
    x2: ComplexValue,
) -> Result<SeriesSum> {
    let mut coef = real(1.0);
    let first = series_2f1(a, b2, c, x2)?;
    let mut sum = first.value;
    let mut err = first.err;
    let mut small = 0;
    for m in 0..MAX_TERMS {
        let mf = m as f64;
        coef *= (a + mf) * (b1 + mf) / ((c + mf) * (mf + 1.0)) * x1;
        if coef == real(0.0) {
            return Ok(SeriesSum { value: sum, err });
        }
        let inner = series_2f1(a + mf + 1.0, b2, c + mf + 1.0, x2)?;
        let term = coef * inner.value;
        sum += term;
        err += coef.norm() * inner.err;
        if term.norm() <= TERM_TOL * sum.norm() {
            small += 1;
            if small == 2 {
                return Ok(SeriesSum { value: sum, err: err + term.norm() });
            }
        } else {
            small = 0;
        }
    }
    Err(HyperError::NoConvergence(MAX_TERMS))
}

// Terminating F_D series for a = 0, -1, -2, ...; recursive in the variables.
fn polynomial_fd(a: ComplexValue, bs: &[ComplexValue], c: ComplexValue, xs: &[ComplexValue]) -> ComplexValue {
    if bs.is_empty() {
        return real(1.0);
    }
    let n_terms = (-a.re).round() as usize;
    let mut coef = real(1.0);
    let mut sum = real(0.0);
    for m in 0..=n_terms {
        let mf = m as f64;
        if m > 0 {
            coef *= (a + (mf - 1.0)) * (bs[0] + (mf - 1.0)) / ((c + (mf - 1.0)) * mf) * xs[0];
        }
        sum += coef * polynomial_fd(a + mf, &bs[1..], c + mf, &xs[1..]);
    }
    sum
}

fn series_value(s: SeriesSum, method: Method) -> HyperValue {
    HyperValue { value: s.value, error_estimate: s.err, method }
}

/// Gauss series, `|x| <= 0.9`.
pub fn hyp2f1_series(a: ComplexValue, b: ComplexValue, c: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    if is_nonpositive_integer(c) {
        return Err(HyperError::CPole(c));
    }
    if x.norm() > SERIES_RADIUS {
        return Err(HyperError::ParameterDomain(format!("|x| = {} exceeds the series radius {}", x.norm(), SERIES_RADIUS)));
    }
    Ok(series_2f1(a, b, c, x)?.value)
}

fn cpow_or_nan(base: ComplexValue, e: ComplexValue, side: BranchSide) -> ComplexValue {
    principal_pow(base, e, side).unwrap_or(ComplexValue::new(f64::NAN, f64::NAN))
}

enum Factor {
    Regular { x: ComplexValue, b: ComplexValue },
    OnCut { x: f64, s: f64, b: ComplexValue },
}

impl Evaluator {
    pub fn new(quad_tol: f64) -> Self {
        Evaluator { quad_tol }
    }

    /// Reason the Euler integral with first parameter `spec.a` is unusable.
    fn euler_obstacle(spec: &HyperSpec) -> Option<String> {
        let (a, c) = (spec.a, spec.c);
        if !(a.re > 0.0 && (c - a).re > 0.0) {
            return Some(format!("Euler integral needs Re c > Re a > 0 (a = {a}, c = {c})"));
        }
        let mut cut: Vec<(f64, f64)> = spec
            .xs
            .iter()
            .zip(&spec.bs)
            .filter_map(|(&x, &b)| on_cut(x).map(|r| (1.0 / r, b.re)))
            .collect();
        cut.sort_by(|p, q| p.0.total_cmp(&q.0));
        let mut i = 0;
        while i < cut.len() {
            let mut j = i;
            let mut e = 0.0;
            while j < cut.len() && cut[j].0 == cut[i].0 {
                e += cut[j].1;
                j += 1;
            }
            if e >= 1.0 {
                return Some(format!("non-integrable singularity of order {e} at u = {}", cut[i].0));
            }
            i = j;
        }
        None
    }

    /// The Euler integral with `spec.a` as the integration parameter.
    pub fn euler(&self, spec: &HyperSpec, side: BranchSide) -> Result<HyperValue> {
        check_not_one(&spec.xs)?;
        if let Some(why) = Self::euler_obstacle(spec) {
            return Err(HyperError::ParameterDomain(why));
        }
        let (a, c) = (spec.a, spec.c);
        let base_side = side.opposite();
        let factors: Vec<Factor> = spec
            .xs
            .iter()
            .zip(&spec.bs)
            .map(|(&x, &b)| match on_cut(x) {
                Some(r) => Factor::OnCut { x: r, s: 1.0 / r, b },
                None => Factor::Regular { x, b },
            })
            .collect();
        let mut splits: Vec<f64> = factors
            .iter()
            .filter_map(|f| match f {
                Factor::OnCut { s, .. } => Some(*s),
                _ => None,
            })
            .collect();
        splits.sort_by(f64::total_cmp);
        splits.dedup();
        let ea = a - 1.0;
        let ec = c - a - 1.0;
        let integrand = move |node: &Node| -> ComplexValue {
            let u = node.diff(0.0);
            let om = -node.diff(1.0);
            let mut v = real_pow(u, ea, side) * real_pow(om, ec, side);
            for f in &factors {
                match *f {
                    Factor::Regular { x, b } => v *= cpow_or_nan(real(1.0) - x * u, -b, base_side),
                    Factor::OnCut { x, s, b } => {
                        let base = -x * node.diff(s);
                        v *= if base == 0.0 { real(f64::NAN) } else { real_pow(base, -b, base_side) };
                    }
                }
            }
            v
        };
        let ispec = IntegrandSpec::new(integrand).with_singularities(splits)?;
        let q = integrate(&ispec, 0.0, 1.0, self.quad_tol)?;
        let pre = gamma_ratio(a, c)?;
        let value = pre * q.value;
        Ok(HyperValue { value, error_estimate: q.error_estimate * value.norm(), method: Method::Euler })
    }

    pub fn hyp2f1(
        &self,
        a: ComplexValue,
        b: ComplexValue,
        c: ComplexValue,
        x: ComplexValue,
        side: BranchSide,
    ) -> Result<HyperValue> {
        if is_nonpositive_integer(c) {
            return Err(HyperError::CPole(c));
        }
        if x.norm() <= SERIES_RADIUS {
            return Ok(series_value(series_2f1(a, b, c, x)?, Method::Series));
        }
        for p in [a, b] {
            if is_nonpositive_integer(p) {
                let v = polynomial_fd(p, &[if p == a { b } else { a }], c, &[x]);
                return Ok(HyperValue { value: v, error_estimate: 0.0, method: Method::Polynomial });
            }
        }
        check_not_one(&[x])?;
        let y = x / (x - 1.0);
        if y.norm() <= SERIES_RADIUS {
            let pre = principal_pow(real(1.0) - x, -b, side.opposite())?;
            let s = series_2f1(c - a, b, c, y)?;
            return Ok(HyperValue {
                value: pre * s.value,
                error_estimate: pre.norm() * s.err,
                method: Method::PfaffSeries,
            });
        }
        let mut reasons = Vec::new();
        for (ea, eb) in [(a, b), (b, a)] {
            let spec = HyperSpec::new(ea, vec![eb], c, vec![x])?;
            match Self::euler_obstacle(&spec) {
                None => return self.euler(&spec, side),
                Some(why) => reasons.push(why),
            }
        }
        Err(HyperError::ParameterDomain(reasons.join("; ")))
    }

    #[allow(clippy::too_many_arguments)]
    pub fn appell_f1(
        &self,
        a: ComplexValue,
        b1: ComplexValue,
        b2: ComplexValue,
        c: ComplexValue,
        x1: ComplexValue,
        x2: ComplexValue,
        side: BranchSide,
    ) -> Result<HyperValue> {
        let spec = HyperSpec::new(a, vec![b1, b2], c, vec![x1, x2])?;
        if x1.norm().max(x2.norm()) <= SERIES_RADIUS {
            return Ok(series_value(series_f1(a, b1, b2, c, x1, x2)?, Method::Series));
        }
        if is_nonpositive_integer(a) {
            let v = polynomial_fd(a, &spec.bs, c, &spec.xs);
            return Ok(HyperValue { value: v, error_estimate: 0.0, method: Method::Polynomial });
        }
        check_not_one(&spec.xs)?;
        let why = match Self::euler_obstacle(&spec) {
            None => return self.euler(&spec, side),
            Some(why) => why,
        };
        let (t, pre) = pfaff_fd_side(&spec, side)?;
        if t.xs.iter().all(|y| y.norm() <= SERIES_RADIUS) {
            let s = series_f1(t.a, t.bs[0], t.bs[1], t.c, t.xs[0], t.xs[1])?;
            return Ok(HyperValue { value: pre * s.value, error_estimate: pre.norm() * s.err, method: Method::PfaffSeries });
        }
        Err(HyperError::ParameterDomain(why))
    }

    pub fn lauricella_fd(&self, spec: &HyperSpec, side: BranchSide) -> Result<HyperValue> {
        if spec.xs.iter().all(|x| *x == real(0.0)) || spec.a == real(0.0) {
            return Ok(HyperValue { value: real(1.0), error_estimate: 0.0, method: Method::Series });
        }
        match spec.n() {
            1 => self.hyp2f1(spec.a, spec.bs[0], spec.c, spec.xs[0], side),
            2 => self.appell_f1(spec.a, spec.bs[0], spec.bs[1], spec.c, spec.xs[0], spec.xs[1], side),
            _ => {
                if is_nonpositive_integer(spec.a) {
                    let v = polynomial_fd(spec.a, &spec.bs, spec.c, &spec.xs);
                    return Ok(HyperValue { value: v, error_estimate: 0.0, method: Method::Polynomial });
                }
                self.euler(spec, side)
            }
        }
    }
}

/// `2F1(a, b; c | x)` with the default quadrature tolerance.
pub fn hyp2f1(a: ComplexValue, b: ComplexValue, c: ComplexValue, x: ComplexValue, side: BranchSide) -> Result<ComplexValue> {
    Ok(Evaluator::default().hyp2f1(a, b, c, x, side)?.value)
}

/// Appell `F1(a; b1, b2; c | x1, x2)`.
#[allow(clippy::too_many_arguments)]
pub fn appell_f1(
    a: ComplexValue,
    b1: ComplexValue,
    b2: ComplexValue,
    c: ComplexValue,
    x1: ComplexValue,
    x2: ComplexValue,
    side: BranchSide,
) -> Result<ComplexValue> {
    Ok(Evaluator::default().appell_f1(a, b1, b2, c, x1, x2, side)?.value)
}

/// Lauricella `F_D^(n)(a; b; c | x)`.
pub fn lauricella_fd(spec: &HyperSpec, side: BranchSide) -> Result<ComplexValue> {
    Ok(Evaluator::default().lauricella_fd(spec, side)?.value)
}

fn pfaff_fd_side(spec: &HyperSpec, side: BranchSide) -> Result<(HyperSpec, ComplexValue)> {
    check_not_one(&spec.xs)?;
    let mut pre = real(1.0);
    for (&x, &b) in spec.xs.iter().zip(&spec.bs) {
        pre *= principal_pow(real(1.0) - x, -b, side.opposite())?;
    }
    let xs = spec.xs.iter().map(|&x| x / (x - 1.0)).collect();
    Ok((HyperSpec::new(spec.c - spec.a, spec.bs.clone(), spec.c, xs)?, pre))
}

/// Pfaff transformation: `F_D(a; b; c | x) = pre * F_D(c - a; b; c | x/(x-1))`
/// with `pre = prod (1 - x_k)^(-b_k)`.
pub fn pfaff_fd(spec: &HyperSpec) -> Result<(HyperSpec, ComplexValue)> {
    pfaff_fd_side(spec, DEFAULT_SIDE)
}

/// Pfaff transformation of Appell `F1`.
pub fn pfaff_f1(
    a: ComplexValue,
    b1: ComplexValue,
    b2: ComplexValue,
    c: ComplexValue,
    x1: ComplexValue,
    x2: ComplexValue,
) -> Result<(HyperSpec, ComplexValue)> {
    pfaff_fd(&HyperSpec::new(a, vec![b1, b2], c, vec![x1, x2])?)
}

/// Order reduction for `c = b_1 + ... + b_n`:
/// `F_D^(n)(a; b; c | x) = pre * F_D^(n-1)(a; b_1..b_(n-1); c | (x_k - x_n)/(1 - x_n))`
/// with `pre = (1 - x_n)^(-a)`, on the principal sheet.
pub fn fd_order_reduce(spec: &HyperSpec) -> Result<(HyperSpec, ComplexValue)> {
    let n = spec.n();
    if n < 2 {
        return Err(HyperError::Precondition("order reduction needs n >= 2".into()));
    }
    let sum: ComplexValue = spec.bs.iter().sum();
    if (sum - spec.c).norm() > 1e-12 * spec.c.norm().max(1.0) {
        return Err(HyperError::Precondition(format!("c = {} differs from the sum of b's {}", spec.c, sum)));
    }
    let xn = spec.xs[n - 1];
    if is_one(xn) {
        return Err(HyperError::ArgumentIsOne);
    }
    let pre = principal_pow(real(1.0) - xn, -spec.a, DEFAULT_SIDE.opposite())?;
    let xs = spec.xs[..n - 1].iter().map(|&x| (x - xn) / (1.0 - xn)).collect();
    Ok((HyperSpec::new(spec.a, spec.bs[..n - 1].to_vec(), spec.c, xs)?, pre))
}

/// `A_n(a, b) = int_0^1 t^(a-1) (1 - t^n)^(-b) dt = G(a/n) G(1-b) / (n G(1 + a/n - b))`.
pub fn eulerian_a(n: u32, a: ComplexValue, b: ComplexValue) -> Result<ComplexValue> {
    if n == 0 || !(a.re > 0.0) || !(b.re < 1.0) {
        return Err(HyperError::ParameterDomain(format!("A_n needs n >= 1, Re a > 0, Re b < 1 (n = {n}, a = {a}, b = {b})")));
    }
    let nf = n as f64;
    Ok(gamma(a / nf)? * gamma(1.0 - b)? / (nf * gamma(1.0 + a / nf - b)?))
}

/// `B_n(a, b) = int_0^inf t^(a-1) (1 + t^n)^(-b) dt = G(a/n) G((nb - a)/n) / (n G(b))`.
pub fn eulerian_b(n: u32, a: ComplexValue, b: ComplexValue) -> Result<ComplexValue> {
    let nf = n as f64;
    if n == 0 || !(a.re > 0.0) || !(b.re > 0.0) || !(nf * b.re > a.re) {
        return Err(HyperError::ParameterDomain(format!("B_n needs a > 0, b > 0, nb > a (n = {n}, a = {a}, b = {b})")));
    }
    Ok(gamma(a / nf)? * gamma((nf * b - a) / nf)? / (nf * gamma(b)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elliptic::complete_k;
    use crate::numerics::{c, roots_of_unity};
    use std::f64::consts::{FRAC_1_SQRT_2, PI};

    fn close(a: ComplexValue, b: ComplexValue, tol: f64) -> bool {
        (a - b).norm() <= tol * b.norm().max(1e-300)
    }

    #[test]
    fn series_values() {
        assert_eq!(hyp2f1_series(real(0.3), real(1.7), real(2.2), real(0.0)).unwrap(), real(1.0));
        let z = 0.5f64.sqrt();
        let v = hyp2f1_series(real(1.0), real(0.5), real(1.5), real(-0.5)).unwrap();
        assert!(close(v, real(z.atan() / z), 1e-15));
        let v = hyp2f1_series(real(2.0), real(1.0), real(1.0), real(0.5)).unwrap();
        assert!(close(v, real(4.0), 1e-14));
        assert!(hyp2f1_series(real(1.0), real(1.0), real(1.0), real(0.95)).is_err());
        assert!(matches!(hyp2f1_series(real(1.0), real(1.0), real(-2.0), real(0.5)), Err(HyperError::CPole(_))));
    }

    #[test]
    fn kummer_quarter_pi() {
        let v = hyp2f1(real(1.0), real(0.5), real(1.5), real(-1.0), DEFAULT_SIDE).unwrap();
        assert!(close(v, real(PI / 4.0), 1e-12));
    }

    #[test]
    fn calibrated_continuation() {
        let v = hyp2f1(real(0.5), real(0.75), real(1.5), real(2.0), BranchSide::Below).unwrap();
        let k = complete_k(FRAC_1_SQRT_2).unwrap();
        assert!(close(v, c(0.5 * k, -0.5 * k), 1e-11), "{v}");
        assert!(v.im < 0.0);
        let w = hyp2f1(real(0.5), real(0.75), real(1.5), real(2.0), BranchSide::Above).unwrap();
        assert!(close(w, v.conj(), 1e-11));
    }

    #[test]
    fn swap_path_for_large_b() {
        // (2b - a, b; 2b | 2) at (a, b) = (3/2, 1): Euler in a is singular of order 1
        let e = Evaluator::default();
        let v = e.hyp2f1(real(0.5), real(1.0), real(2.0), real(2.0), DEFAULT_SIDE).unwrap();
        assert_eq!(v.method, Method::Euler);
        assert!(close(v.value, c(1.0, -1.0), 1e-11), "{}", v.value);
    }

    #[test]
    fn pfaff_fallback_and_errors() {
        let e = Evaluator::default();
        let v = e.hyp2f1(real(2.5), real(0.5), real(1.5), real(-4.0), DEFAULT_SIDE).unwrap();
        assert_eq!(v.method, Method::PfaffSeries);
        assert!(close(v.value, real(0.327_956_636_699_969_16), 1e-14));
        let v = e.hyp2f1(real(2.5), real(0.5), real(1.5), real(-12.0), DEFAULT_SIDE).unwrap();
        assert_eq!(v.method, Method::Euler);
        let v = e.hyp2f1(real(2.5), real(-0.5), real(1.5), real(-4.0), DEFAULT_SIDE).unwrap();
        assert_eq!(v.method, Method::PfaffSeries);
        assert!(close(v.value, real(5f64.sqrt() * (1.0 + 0.4 / 1.5)), 1e-14));
        assert!(e.hyp2f1(real(2.5), real(3.5), real(1.5), real(2.5), DEFAULT_SIDE).is_err());
        assert!(matches!(e.hyp2f1(real(0.5), real(0.5), real(1.5), real(1.0), DEFAULT_SIDE), Err(HyperError::ArgumentIsOne)));
    }

    #[test]
    fn polynomial_case() {
        // 2F1(-2, b; c | x) = 1 - 2bx/c + b(b+1)x^2/(c(c+1))
        let (b, cc, x) = (0.7, 1.3, 3.0);
        let expect = 1.0 - 2.0 * b * x / cc + b * (b + 1.0) * x * x / (cc * (cc + 1.0));
        let v = hyp2f1(real(-2.0), real(b), real(cc), real(x), DEFAULT_SIDE).unwrap();
        assert!(close(v, real(expect), 1e-14));
    }

    #[test]
    fn appell_values() {
        let one = appell_f1(real(0.3), real(1.0), real(2.0), real(1.5), real(0.0), real(0.0), DEFAULT_SIDE).unwrap();
        assert_eq!(one, real(1.0));
        let v = appell_f1(real(0.25), real(0.5), real(0.5), real(1.25), real(1.0 / 3.0), real(0.25), DEFAULT_SIDE).unwrap();
        let k = complete_k(FRAC_1_SQRT_2).unwrap();
        assert!(close(v, real(k / 3f64.sqrt()), 1e-12));
        let w = appell_f1(real(2.0 / 3.0), real(0.5), real(0.5), real(5.0 / 3.0), real(-2.0), real(-8.0), DEFAULT_SIDE).unwrap();
        // (1/3) int_0^1 dx / sqrt(1 - x^3)
        assert!(close(w, real(1.402_182_105_325_451 / 3.0), 1e-11));
        let z = appell_f1(real(0.0), real(1.0), real(1.0), real(2.0), real(0.3), real(0.4), DEFAULT_SIDE).unwrap();
        assert_eq!(z, real(1.0));
    }

    #[test]
    fn fd3_on_cut() {
        let spec = HyperSpec::uniform(1.0, 0.5, 2.0, vec![c(1.0, -1.0), real(2.0), c(1.0, 1.0)]).unwrap();
        let v = lauricella_fd(&spec, BranchSide::Below).unwrap();
        let k = complete_k(FRAC_1_SQRT_2).unwrap();
        let expect = c(1.0, -1.0) * FRAC_1_SQRT_2 * k;
        assert!(close(v, expect, 1e-10), "{v}");
    }

    #[test]
    fn fd_boundary_roots() {
        // Kummer-like value on the fourth roots of unity
        let spec = HyperSpec::uniform(1.0, 0.5, 1.5, roots_of_unity(4)).unwrap();
        let v = lauricella_fd(&spec, DEFAULT_SIDE).unwrap();
        let expect = gamma(real(1.5)).unwrap() * gamma(real(1.25)).unwrap() / (gamma(real(2.0)).unwrap() * gamma(real(0.75)).unwrap());
        assert!(close(v, expect, 1e-10));
        assert!(v.im.abs() < 1e-12);
    }

    #[test]
    fn transforms() {
        let (t, pre) = pfaff_f1(real(1.0), real(0.5), real(0.5), real(2.0), real(0.0), real(0.0)).unwrap();
        assert_eq!(t.xs, vec![real(0.0), real(0.0)]);
        assert_eq!(pre, real(1.0));
        let (t, pre) = pfaff_f1(real(1.0), real(0.5), real(0.5), real(2.0), real(-1.0), real(-1.0)).unwrap();
        assert!(close(t.xs[0], real(0.5), 1e-15) && close(t.xs[1], real(0.5), 1e-15));
        assert!(close(pre, real(0.5), 1e-15));
        let w = roots_of_unity(3);
        let (t, pre) = pfaff_f1(real(0.5), real(0.25), real(0.25), real(1.25), w[0], w[1]).unwrap();
        let s = 0.5 / 3f64.sqrt();
        assert!(close(t.xs[0], c(0.5, -s), 1e-15) && close(t.xs[1], c(0.5, s), 1e-15));
        assert!(close(pre, real(3f64.powf(-0.25)), 1e-15));
        assert!(pfaff_f1(real(1.0), real(0.5), real(0.5), real(2.0), real(1.0), real(0.0)).is_err());

        let spec = HyperSpec::new(real(0.7), vec![real(0.5), real(0.5)], real(1.0), vec![c(0.2, 0.1), real(0.0)]).unwrap();
        let (r, pre) = fd_order_reduce(&spec).unwrap();
        assert_eq!(r.xs, vec![c(0.2, 0.1)]);
        assert_eq!(pre, real(1.0));
        let bad = HyperSpec::new(real(0.7), vec![real(0.5), real(0.5)], real(1.5), vec![real(0.2), real(0.1)]).unwrap();
        assert!(fd_order_reduce(&bad).is_err());
    }

    #[test]
    fn eulerian_values() {
        assert!(close(eulerian_a(2, real(1.0), real(0.5)).unwrap(), real(PI / 2.0), 1e-14));
        let k = complete_k(FRAC_1_SQRT_2).unwrap();
        assert!(close(eulerian_b(4, real(1.0), real(0.5)).unwrap(), real(k), 1e-13));
        let k8 = complete_k(2f64.sqrt() - 1.0).unwrap();
        assert!(close(eulerian_a(8, real(5.0), real(0.5)).unwrap(), real(PI / 8.0 * 2f64.sqrt() / k8), 1e-13));
        assert!(eulerian_a(2, real(-1.0), real(0.5)).is_err());
        assert!(eulerian_b(2, real(3.0), real(1.0)).is_err());
    }
}
