//! Large-degree and large-parameter approximations, used as independent
//! predictions to check the computed zeros against.

use crate::classical;
use crate::family::{Family, FamilySpec};
use crate::poly::DensePoly;
use crate::Error;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    LargeNLaguerre,
    LargeNJacobi,
    LargeG,
    LargeH,
}

#[derive(Debug, Clone, Copy)]
pub struct AsymptoticEstimate {
    pub value: Complex64,
    pub regime: Regime,
}

fn on_laguerre_cut(eta: Complex64) -> bool {
    eta.im == 0.0 && eta.re >= 0.0
}

fn on_jacobi_cut(eta: Complex64) -> bool {
    eta.im == 0.0 && (-1.0..=1.0).contains(&eta.re)
}

/// Leading-order form of L_n^(alpha) off the positive real axis:
///
///   e^(eta/2) / (2 sqrt(pi)) * (-eta)^(-alpha/2-1/4) * n^(alpha/2-1/4)
///     * e^(2 sqrt(-n eta))
///
/// with principal branches. For real eta the sign is calibrated against a
/// direct extended-precision evaluation at the same point.
pub fn laguerre_perron(n: usize, alpha: f64, eta: Complex64) -> Result<AsymptoticEstimate, Error> {
    if n == 0 {
        return Err(Error::ParameterViolation(
            "asymptotic form needs degree >= 1".into(),
        ));
    }
    if on_laguerre_cut(eta) {
        return Err(Error::BranchCut(format!(
            "eta = {eta} lies on [0, inf)"
        )));
    }
    let nf = n as f64;
    let neg = -eta;
    let mut value = (eta * 0.5).exp() / (2.0 * std::f64::consts::PI.sqrt())
        * neg.powf(-alpha / 2.0 - 0.25)
        * nf.powf(alpha / 2.0 - 0.25)
        * ((neg * nf).sqrt() * 2.0).exp();
    if eta.im == 0.0 {
        let direct = classical::laguerre_value(n, alpha, eta);
        let sign = if direct.mantissa.re < 0.0 { -1.0 } else { 1.0 };
        value = Complex64::new(sign * value.norm(), 0.0);
    }
    Ok(AsymptoticEstimate {
        value,
        regime: Regime::LargeNLaguerre,
    })
}

/// Leading-order form of P_n^(alpha,beta) off [-1, 1]:
///
///   (eta-1)^(-alpha/2) (eta+1)^(-beta/2)
///     {sqrt(eta+1) + sqrt(eta-1)}^(alpha+beta)
///     * (eta^2-1)^(-1/4) / sqrt(2 pi n) * {eta + sqrt(eta^2-1)}^(n+1/2)
///
/// with the square root in the last factor taken on the branch that maps
/// outside the unit circle. For real eta inside the recurrence's validity
/// the sign is calibrated against a direct evaluation.
pub fn jacobi_asymptotic(
    n: usize,
    alpha: f64,
    beta: f64,
    eta: Complex64,
) -> Result<AsymptoticEstimate, Error> {
    if n == 0 {
        return Err(Error::ParameterViolation(
            "asymptotic form needs degree >= 1".into(),
        ));
    }
    if on_jacobi_cut(eta) {
        return Err(Error::BranchCut(format!("eta = {eta} lies on [-1, 1]")));
    }
    let nf = n as f64;
    let em1 = eta - 1.0;
    let ep1 = eta + 1.0;
    let s = (eta * eta - 1.0).sqrt();
    let w = if (eta + s).norm() >= (eta - s).norm() {
        eta + s
    } else {
        eta - s
    };
    let mut value = em1.powf(-alpha / 2.0)
        * ep1.powf(-beta / 2.0)
        * (ep1.sqrt() + em1.sqrt()).powf(alpha + beta)
        * (eta * eta - 1.0).powf(-0.25)
        / (2.0 * std::f64::consts::PI * nf).sqrt()
        * w.powf(nf + 0.5);
    if eta.im == 0.0 && alpha > -1.0 && beta > -1.0 {
        let direct = classical::jacobi_value(n, alpha, beta, eta)?;
        let sign = if direct.mantissa.re < 0.0 { -1.0 } else { 1.0 };
        value = Complex64::new(sign * value.norm(), 0.0);
    }
    Ok(AsymptoticEstimate {
        value,
        regime: Regime::LargeNJacobi,
    })
}

/// Measured |L_n^(alpha) / d/d.eta L_n^(alpha)| at real eta < 0, from
/// extended-precision point values and the derivative relation
/// d/d.eta L_n^(alpha) = -L_(n-1)^(alpha+1).
pub fn laguerre_ratio(n: usize, alpha: f64, eta: f64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::ParameterViolation(
            "ratio needs degree >= 1".into(),
        ));
    }
    if eta >= 0.0 {
        return Err(Error::BranchCut(format!("eta = {eta} lies on [0, inf)")));
    }
    let z = Complex64::new(eta, 0.0);
    let num = classical::laguerre_value(n, alpha, z);
    let den = classical::laguerre_value(n - 1, alpha + 1.0, z);
    Ok(num.ratio(den).norm())
}

/// Predicted |L_n / d L_n| ~ |(-eta)^(1/2) / sqrt(n)| for eta < 0.
pub fn laguerre_ratio_prediction(n: usize, eta: f64) -> Result<f64, Error> {
    if eta >= 0.0 {
        return Err(Error::BranchCut(format!("eta = {eta} lies on [0, inf)")));
    }
    Ok((-eta / n as f64).sqrt())
}

/// Measured |P_n^(alpha,beta) / d/d.eta P_n^(alpha,beta)| at real |eta| > 1,
/// using d P_n = (n+alpha+beta+1)/2 * P_(n-1)^(alpha+1,beta+1).
pub fn jacobi_ratio(n: usize, alpha: f64, beta: f64, eta: f64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::ParameterViolation(
            "ratio needs degree >= 1".into(),
        ));
    }
    if (-1.0..=1.0).contains(&eta) {
        return Err(Error::BranchCut(format!("eta = {eta} lies on [-1, 1]")));
    }
    let z = Complex64::new(eta, 0.0);
    let num = classical::jacobi_value(n, alpha, beta, z)?;
    let den = classical::jacobi_value(n - 1, alpha + 1.0, beta + 1.0, z)?;
    let scale = 0.5 * (n as f64 + alpha + beta + 1.0);
    Ok(num.ratio(den).norm() / scale)
}

/// Predicted |P_n / d P_n| at real |eta| > 1:
///
///   2/(n+alpha+beta+1) * sqrt((n-1)/n) * (eta^2-1)^(1/2)
///     * (eta + sqrt(eta^2-1)) / (sqrt(eta+1) + sqrt(eta-1))^2
///
/// On the real axis off the cut the last fraction has magnitude exactly
/// one half on consistent branches.
pub fn jacobi_ratio_prediction(n: usize, alpha: f64, beta: f64, eta: f64) -> Result<f64, Error> {
    if n == 0 {
        return Err(Error::ParameterViolation(
            "ratio needs degree >= 1".into(),
        ));
    }
    if (-1.0..=1.0).contains(&eta) {
        return Err(Error::BranchCut(format!("eta = {eta} lies on [-1, 1]")));
    }
    let nf = n as f64;
    let s = (eta * eta - 1.0).sqrt();
    Ok(2.0 / (nf + alpha + beta + 1.0) * ((nf - 1.0) / nf).sqrt() * s * 0.5)
}

/// Product polynomial each family approaches as its parameters grow large:
/// the first factor carries the extra zeros, the second the ordinary ones.
pub fn factorized_limit(spec: &FamilySpec) -> Result<DensePoly, Error> {
    spec.validate()?;
    let lf = spec.ell as f64;
    let g = spec.g;
    match spec.family {
        Family::L1 => {
            let extra = classical::laguerre(spec.ell, g + lf).reflect();
            let ordinary = classical::laguerre(spec.n, g + lf);
            Ok(extra.mul(&ordinary))
        }
        Family::L2 => {
            let extra = classical::laguerre(spec.ell, -g - lf);
            let ordinary = classical::laguerre(spec.n, g + lf);
            Ok(extra.mul(&ordinary))
        }
        Family::J2 => {
            let h = spec.h_value();
            let extra = classical::jacobi(spec.ell, -g - lf, h + lf)?;
            let ordinary = classical::jacobi(spec.n, g + lf, h + lf)?;
            Ok(extra.mul(&ordinary))
        }
        Family::J1 => Err(Error::ParameterViolation(
            "no direct large-parameter factorization for this family; apply mirror_map to its reflection partner".into(),
        )),
    }
}

/// Symmetric Hausdorff distance between two zero sets, normalized by the
/// mean zero magnitude.
pub fn zero_set_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.is_empty() || b.is_empty() {
        return if a.len() == b.len() { 0.0 } else { f64::INFINITY };
    }
    let one_sided = |from: &[Complex64], to: &[Complex64]| {
        from.iter()
            .map(|z| {
                to.iter()
                    .map(|w| (z - w).norm())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0f64, f64::max)
    };
    let hausdorff = one_sided(a, b).max(one_sided(b, a));
    let mean: f64 =
        a.iter().chain(b.iter()).map(|z| z.norm()).sum::<f64>() / (a.len() + b.len()) as f64;
    if mean == 0.0 {
        hausdorff
    } else {
        hausdorff / mean
    }
}
