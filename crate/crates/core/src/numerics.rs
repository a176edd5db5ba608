//! Complex scalars, Gamma and Pochhammer, branch-aware powers, and the root
//! families used to build identity arguments.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use thiserror::Error;

/// The universal scalar.
pub type ComplexValue = Complex64;

/// Side of the cut `(-inf, 0]` on which a logarithm limit is taken.
///
/// For a hypergeometric argument `x` on `[1, inf)`, `Below` means the limit
/// `x - i0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchSide {
    Above,
    Below,
}

impl BranchSide {
    pub fn opposite(self) -> Self {
        match self {
            BranchSide::Above => BranchSide::Below,
            BranchSide::Below => BranchSide::Above,
        }
    }

    /// Argument assigned to a point on the negative real axis.
    pub fn cut_arg(self) -> f64 {
        match self {
            BranchSide::Above => PI,
            BranchSide::Below => -PI,
        }
    }
}

/// Library-wide side convention, calibrated so that
/// `2F1(1/2, 3/4; 3/2 | 2) = (1 - i)/2 K(1/sqrt 2)`.
pub const DEFAULT_SIDE: BranchSide = BranchSide::Below;

/// Distance from a non-positive integer below which `gamma` reports a pole.
pub const POLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericsError {
    #[error("gamma pole at z = {re} + {im}i")]
    GammaPole { re: f64, im: f64 },
    #[error("power of zero with exponent real part {0} <= 0")]
    ZeroBase(f64),
}

pub fn c(re: f64, im: f64) -> ComplexValue {
    Complex64::new(re, im)
}

pub fn real(x: f64) -> ComplexValue {
    Complex64::new(x, 0.0)
}

/// `sin(pi x)` with exact zeros at the integers and exact units at half-integers.
pub fn sin_pi(x: f64) -> f64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 || r == 1.0 {
        return 0.0;
    }
    if r == 0.5 {
        return 1.0;
    }
    if r == 1.5 {
        return -1.0;
    }
    if r < 0.5 {
        (PI * r).sin()
    } else if r < 1.5 {
        -(PI * (r - 1.0)).sin()
    } else {
        (PI * (r - 2.0)).sin()
    }
}

/// `cos(pi x)`, exact at multiples of one half.
pub fn cos_pi(x: f64) -> f64 {
    sin_pi(x + 0.5)
}

/// `exp(i pi x)` computed through `sin_pi` / `cos_pi`.
pub fn exp_i_pi(x: f64) -> ComplexValue {
    c(cos_pi(x), sin_pi(x))
}

fn sin_pi_complex(z: ComplexValue) -> ComplexValue {
    let (s, co) = (sin_pi(z.re), cos_pi(z.re));
    let y = PI * z.im;
    c(s * y.cosh(), co * y.sinh())
}

/// True when `z` lies within `POLE_TOL` of 0, -1, -2, ...
pub fn is_nonpositive_integer(z: ComplexValue) -> bool {
    let n = z.re.round();
    n <= 0.0 && (z - real(n)).norm() < POLE_TOL
}

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos(z: ComplexValue) -> ComplexValue {
    // Gamma(z + 1) for Re z >= -1/2
    let mut sum = real(LANCZOS[0]);
    for (k, &p) in LANCZOS.iter().enumerate().skip(1) {
        sum += p / (z + k as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    let ln = (z + 0.5) * t.ln() - t;
    (2.0 * PI).sqrt() * ln.exp() * sum
}

/// Complex Gamma function (Lanczos, g = 7, with reflection for `Re z < 1/2`).
pub fn gamma(z: ComplexValue) -> Result<ComplexValue, NumericsError> {
    if is_nonpositive_integer(z) {
        return Err(NumericsError::GammaPole { re: z.re, im: z.im });
    }
    if z.im == 0.0 && z.re > 0.0 && z.re == z.re.round() && z.re <= 171.0 {
        let mut f = 1.0;
        for k in 2..(z.re as u32) {
            f *= k as f64;
        }
        return Ok(real(f));
    }
    if z.re < 0.5 {
        let g = lanczos(-z);
        Ok(PI / (sin_pi_complex(z) * g))
    } else {
        Ok(lanczos(z - 1.0))
    }
}

/// Real-argument convenience wrapper around [`gamma`].
pub fn gamma_re(x: f64) -> Result<f64, NumericsError> {
    gamma(real(x)).map(|g| g.re)
}

/// Rising factorial `a (a+1) ... (a+m-1)` by direct product.
pub fn pochhammer(a: ComplexValue, m: u32) -> ComplexValue {
    let mut p = real(1.0);
    for k in 0..m {
        p *= a + k as f64;
    }
    p
}

/// Principal logarithm with the cut `(-inf, 0]` resolved by `side`.
pub fn principal_log(z: ComplexValue, side: BranchSide) -> ComplexValue {
    if z.im == 0.0 && z.re < 0.0 {
        c((-z.re).ln(), side.cut_arg())
    } else {
        z.ln()
    }
}

/// `exp(e log base)` with the principal logarithm; points on the negative
/// real axis take argument `+pi` (above) or `-pi` (below).
pub fn principal_pow(
    base: ComplexValue,
    e: ComplexValue,
    side: BranchSide,
) -> Result<ComplexValue, NumericsError> {
    if e == real(0.0) {
        return Ok(real(1.0));
    }
    if e == real(1.0) {
        return Ok(base);
    }
    if base == real(0.0) {
        return if e.re > 0.0 {
            Ok(real(0.0))
        } else {
            Err(NumericsError::ZeroBase(e.re))
        };
    }
    if base.im == 0.0 && base.re > 0.0 && e.im == 0.0 {
        return Ok(real(base.re.powf(e.re)));
    }
    Ok((e * principal_log(base, side)).exp())
}

/// `(-inf, 0]`-aware power of a real base; `side` applies when `base < 0`.
pub fn real_pow(base: f64, e: ComplexValue, side: BranchSide) -> ComplexValue {
    if base > 0.0 {
        if e.im == 0.0 {
            real(base.powf(e.re))
        } else {
            (e * base.ln()).exp()
        }
    } else {
        let l = c((-base).ln(), side.cut_arg());
        (e * l).exp()
    }
}

/// The non-trivial n-th roots of unity `exp(2 pi i k / n)`, `k = 1..n-1`.
pub fn roots_of_unity(n: usize) -> Vec<ComplexValue> {
    assert!(n >= 2, "roots_of_unity needs n >= 2");
    (1..n).map(|k| exp_i_pi(2.0 * k as f64 / n as f64)).collect()
}

/// Reciprocals `x_k = 1 + exp(i (2k-1) pi / n)` of the roots of
/// `u^n + (1-u)^n = 0`, ascending in `k`; for odd `n = 2m - 1` the index
/// `k = m` is skipped.
pub fn unit_partition_roots(n: usize) -> Vec<ComplexValue> {
    assert!(n >= 2, "unit_partition_roots needs n >= 2");
    let skip = if n % 2 == 1 { Some((n + 1) / 2) } else { None };
    (1..=n)
        .filter(|&k| Some(k) != skip)
        .map(|k| real(1.0) + exp_i_pi((2 * k - 1) as f64 / n as f64))
        .collect()
}
