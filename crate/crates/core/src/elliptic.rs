//! Complete elliptic integrals K and E by the arithmetic-geometric mean, and
//! the incomplete integral F through Carlson's R_F.
//!
//! All functions take the modulus `k` (not the parameter `m = k^2`).

use std::f64::consts::{FRAC_PI_2, PI};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("modulus {0} outside [0, 1)")]
    Modulus(f64),
    #[error("amplitude {0} outside [0, pi/2]")]
    Amplitude(f64),
    #[error("R_F arguments must be non-negative with at most one zero")]
    CarlsonDomain,
}

/// Elliptic modulus `k` with `0 <= k < 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct EllipticModulus(f64);

impl EllipticModulus {
    pub fn new(k: f64) -> Result<Self, EllipticError> {
        if (0.0..1.0).contains(&k) {
            Ok(EllipticModulus(k))
        } else {
            Err(EllipticError::Modulus(k))
        }
    }

    pub fn k(self) -> f64 {
        self.0
    }

    /// `k' = sqrt(1 - k^2)`, formed as `sqrt((1-k)(1+k))`.
    pub fn complementary(self) -> f64 {
        ((1.0 - self.0) * (1.0 + self.0)).sqrt()
    }
}

impl TryFrom<f64> for EllipticModulus {
    type Error = EllipticError;
    fn try_from(k: f64) -> Result<Self, Self::Error> {
        EllipticModulus::new(k)
    }
}

fn agm_steps(k: EllipticModulus) -> (f64, f64) {
    // returns (AGM(1, k'), sum of 2^(n-1) c_n^2)
    let mut a = 1.0;
    let mut b = k.complementary();
    let mut sum = 0.5 * k.k() * k.k();
    let mut pow = 0.5;
    for _ in 0..64 {
        let c = 0.5 * (a - b);
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        pow *= 2.0;
        sum += pow * c * c;
        a = an;
        b = bn;
        if (a - b).abs() <= 4.0 * f64::EPSILON * a {
            break;
        }
    }
    (a, sum)
}

/// Complete elliptic integral of the first kind `K(k)`.
pub fn complete_k(k: f64) -> Result<f64, EllipticError> {
    let m = EllipticModulus::new(k)?;
    let (a, _) = agm_steps(m);
    Ok(PI / (2.0 * a))
}

/// Complete elliptic integral of the second kind `E(k)`.
pub fn complete_e(k: f64) -> Result<f64, EllipticError> {
    let m = EllipticModulus::new(k)?;
    let (a, sum) = agm_steps(m);
    Ok(PI / (2.0 * a) * (1.0 - sum))
}

/// Carlson's symmetric integral `R_F(x, y, z)` by duplication.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64, EllipticError> {
    let zeros = [x, y, z].iter().filter(|&&v| v == 0.0).count();
    if x < 0.0 || y < 0.0 || z < 0.0 || zeros > 1 {
        return Err(EllipticError::CarlsonDomain);
    }
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / 3.0;
    let mut a = a0;
    let q = (3.0 * f64::EPSILON).powf(-1.0 / 6.0)
        * (a0 - x).abs().max((a0 - y).abs()).max((a0 - z).abs());
    let mut scale = 1.0;
    while q * scale >= a.abs() {
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * sy + sy * sz + sz * sx;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
        a = 0.25 * (a + lambda);
        scale *= 0.25;
        if scale < 1e-300 {
            break;
        }
    }
    let dx = (a - x) / a;
    let dy = (a - y) / a;
    let dz = -(dx + dy);
    let e2 = dx * dy - dz * dz;
    let e3 = dx * dy * dz;
    Ok((1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) / a.sqrt())
}

/// Incomplete elliptic integral of the first kind `F(phi, k)`,
/// `0 <= phi <= pi/2`.
pub fn incomplete_f(phi: f64, k: f64) -> Result<f64, EllipticError> {
    let m = EllipticModulus::new(k)?;
    if !(0.0..=FRAC_PI_2 + 4.0 * f64::EPSILON).contains(&phi) {
        return Err(EllipticError::Amplitude(phi));
    }
    if phi == 0.0 {
        return Ok(0.0);
    }
    let (s, c) = phi.min(FRAC_PI_2).sin_cos();
    let c = c.max(0.0);
    let kk = m.k();
    let y = (1.0 - kk * s) * (1.0 + kk * s);
    Ok(s * carlson_rf(c * c, y, 1.0)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn k_values() {
        assert!(rel(complete_k(0.0).unwrap(), FRAC_PI_2) < 1e-15);
        assert!(rel(complete_k(0.5f64.sqrt()).unwrap(), 1.854_074_677_301_372) < 1e-14);
        assert!(rel(complete_k(2f64.sqrt() - 1.0).unwrap(), 1.645_568_395_293_458) < 1e-14);
        // parameter m = sqrt 2 - 1, i.e. modulus sqrt(sqrt 2 - 1)
        let k = (2f64.sqrt() - 1.0).sqrt();
        assert!(rel(complete_k(k).unwrap(), 1.787_507_282_746_47) < 1e-14);
    }

    #[test]
    fn e_values() {
        assert!(rel(complete_e(0.0).unwrap(), FRAC_PI_2) < 1e-15);
        let h = 0.5f64.sqrt();
        let e = complete_e(h).unwrap();
        assert!(rel(e, 1.350_643_881_047_675_5) < 1e-14);
        let comb = 2.0 * e - complete_k(h).unwrap();
        assert!((comb - 0.847_213_084_793_979).abs() < 1e-13);
    }

    #[test]
    fn f_values() {
        assert!((incomplete_f(0.7, 0.0).unwrap() - 0.7).abs() < 1e-15);
        for k in [0.1, 0.5, 0.9, 0.99] {
            assert!(rel(incomplete_f(FRAC_PI_2, k).unwrap(), complete_k(k).unwrap()) < 1e-13);
        }
        let phi = (2.0 - 3f64.sqrt()).acos();
        let k = (6f64.sqrt() + 2f64.sqrt()) / 4.0;
        assert!(rel(incomplete_f(phi, k).unwrap(), 1.845_375_430_245_845) < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(complete_k(1.0).is_err());
        assert!(complete_e(-0.1).is_err());
        assert!(incomplete_f(2.0, 0.5).is_err());
        assert!(carlson_rf(0.0, 0.0, 1.0).is_err());
    }
}
