//! Domain-aware zero extraction.
//!
//! Monomial coefficient vectors of these polynomials are unusable for the
//! ordinary zeros beyond degree ~35: on the oscillatory range the
//! coefficient-to-value cancellation grows like e^(2 sqrt(n x)) / e^(x/2),
//! which swamps even double-double. The two routes here avoid that wall:
//!
//! * ordinary zeros: sign scan + bisection of a stable recurrence-based
//!   evaluation, clustered grids matched to the zero density;
//! * extra zeros: Newton continuation in n, anchored at the shifted
//!   deforming polynomial's zeros (exact at n = 0) and stepped through an
//!   ascending n ladder. Off the orthogonality domain the coefficient form
//!   has no cancellation, so Newton on it is accurate at any degree here.

use crate::family::{deforming_poly, exceptional_poly, exceptional_value, FamilySpec};
use crate::poly::DensePoly;
use crate::roots::{find_roots, Precision, RootConfig};
use crate::{DdComplex, Error};
use num_complex::Complex64;

/// Greedy global nearest-neighbor bijection between equal-length sets:
/// repeatedly pair the closest unmatched points. Returns `sigma` with
/// `to[sigma[i]]` assigned to `from[i]`.
pub(crate) fn match_nearest(from: &[Complex64], to: &[Complex64]) -> Vec<usize> {
    let n = from.len();
    debug_assert_eq!(n, to.len());
    let mut sigma = vec![usize::MAX; n];
    let mut from_used = vec![false; n];
    let mut to_used = vec![false; n];
    for _ in 0..n {
        let mut best = (f64::INFINITY, usize::MAX, usize::MAX);
        for i in 0..n {
            if from_used[i] {
                continue;
            }
            for j in 0..n {
                if to_used[j] {
                    continue;
                }
                let d = (from[i] - to[j]).norm();
                if d < best.0 {
                    best = (d, i, j);
                }
            }
        }
        sigma[best.1] = best.2;
        from_used[best.1] = true;
        to_used[best.2] = true;
    }
    sigma
}

/// Grid over the ordinary domain whose point density follows the arcsine
/// zero density of the family, with `m` points.
fn domain_grid(spec: &FamilySpec, m: usize, stretch: f64) -> Vec<f64> {
    if spec.family.is_laguerre() {
        // largest Laguerre zero < 2(2n + alpha + 2); pad and map Chebyshev
        // points through x = B sin^2, which clusters near both ends
        let lf = spec.ell as f64;
        let alpha = spec.g + lf + 1.5; // upper bound across both Laguerre variants
        let b = stretch * 2.0 * (2.0 * (spec.n as f64 + 1.0) + alpha + 2.0) + 8.0;
        (0..m)
            .map(|j| {
                let t = (j as f64 + 0.5) / m as f64;
                let s = (0.5 * std::f64::consts::PI * t).sin();
                b * s * s
            })
            .collect()
    } else {
        (0..m)
            .map(|j| {
                let t = (j as f64 + 0.5) / m as f64;
                -(std::f64::consts::PI * t).cos()
            })
            .collect()
    }
}

fn sign_brackets(spec: &FamilySpec, grid: &[f64]) -> Result<Vec<(f64, f64)>, Error> {
    let mut brackets = Vec::new();
    let mut prev: Option<(f64, i32)> = None;
    for &x in grid {
        let s = exceptional_value(spec, x)?.signum();
        if let Some((px, ps)) = prev {
            if ps != 0 && s != 0 && ps != s {
                brackets.push((px, x));
            }
        }
        if s != 0 {
            prev = Some((x, s));
        }
    }
    Ok(brackets)
}

fn scan(spec: &FamilySpec) -> Result<Vec<(f64, f64)>, Error> {
    spec.validate()?;
    let base = 8 * (spec.n + spec.ell) + 32;
    let mut best: Option<Vec<(f64, f64)>> = None;
    for attempt in 0..3 {
        let m = base << attempt;
        let stretch = 1.0 + 0.25 * attempt as f64;
        let brackets = sign_brackets(spec, &domain_grid(spec, m, stretch))?;
        if brackets.len() == spec.n {
            return Ok(brackets);
        }
        // keep the attempt that saw the most crossings
        if best.as_ref().map_or(true, |b| brackets.len() > b.len()) {
            best = Some(brackets);
        }
    }
    Ok(best.unwrap_or_default())
}

/// Number of zeros strictly inside the orthogonality domain, counted by
/// sign changes of a stable evaluation. Reliable for every parameter range
/// used in the published tables (Laguerre n up to ~150, Jacobi any n here).
pub fn ordinary_zero_count(spec: &FamilySpec) -> Result<usize, Error> {
    Ok(scan(spec)?.len())
}

/// The ordinary zeros themselves, ascending, located by sign scan and
/// bisection on the stable evaluation. Errors with CountMismatch when the
/// scan does not resolve exactly n sign changes.
pub fn ordinary_zeros(spec: &FamilySpec) -> Result<Vec<f64>, Error> {
    let brackets = scan(spec)?;
    if brackets.len() != spec.n {
        return Err(Error::CountMismatch(format!(
            "sign scan found {} ordinary zeros, expected {}",
            brackets.len(),
            spec.n
        )));
    }
    let mut zeros = Vec::with_capacity(brackets.len());
    for (mut lo, mut hi) in brackets {
        let s_lo = exceptional_value(spec, lo)?.signum();
        for _ in 0..200 {
            if hi - lo <= 1e-15 * (1.0 + hi.abs()) {
                break;
            }
            let mid = 0.5 * (lo + hi);
            let s = exceptional_value(spec, mid)?.signum();
            if s == 0 {
                lo = mid;
                hi = mid;
                break;
            }
            if s == s_lo {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        zeros.push(0.5 * (lo + hi));
    }
    Ok(zeros)
}

fn newton_dd(p: &DensePoly, dp: &DensePoly, z0: Complex64) -> (Complex64, f64) {
    let mut z = DdComplex::from_c64(z0);
    let mut last_step = f64::INFINITY;
    for _ in 0..40 {
        // exponent-tracked Horner: raw accumulation overflows for the
        // largest published parameter sets near degree 200
        let (pm, pe) = crate::roots::eval_dd_scaled(p.coeffs(), z);
        let (dm, de) = crate::roots::eval_dd_scaled(dp.coeffs(), z);
        if dm.is_zero() {
            break;
        }
        let step = (pm / dm).ldexp(pe - de + p.exp2() - dp.exp2());
        let zn = z - step;
        if !zn.to_c64().re.is_finite() || !zn.to_c64().im.is_finite() {
            break;
        }
        last_step = step.to_c64().norm();
        z = zn;
        if last_step <= 1e-28 * (1.0 + z.to_c64().norm()) {
            break;
        }
    }
    (z.to_c64(), last_step)
}

/// The extra-zero flow of one parameter set across an ascending list of
/// degrees n.
#[derive(Debug, Clone)]
pub struct ExtraFlow {
    /// Zeros of the unshifted deforming polynomial (flow limits), sorted by
    /// (re, im).
    pub xi: Vec<Complex64>,
    /// Zeros of the shifted deforming polynomial (flow start points),
    /// index-aligned with `xi` by nearest-neighbor matching.
    pub xi_shifted: Vec<Complex64>,
    /// `beta[i][k]`: the extra zero at `n_list[i]` that started at
    /// `xi_shifted[k]` and flows toward `xi[k]`.
    pub beta: Vec<Vec<Complex64>>,
}

/// Track every extra zero of the family across the ascending degree ladder
/// `n_list` by Newton continuation in double-double, starting from the
/// shifted deforming polynomial's zeros. Each step must move less than half
/// the anchor separation, so a jump between flow lines is reported as
/// non-convergence rather than silently accepted.
pub fn extra_zero_flow(spec: &FamilySpec, n_list: &[usize]) -> Result<ExtraFlow, Error> {
    spec.validate()?;
    if n_list.is_empty() || n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::ParameterViolation(
            "n_list must be non-empty and strictly ascending".into(),
        ));
    }
    if spec.ell == 0 {
        // undeformed family: no extra zeros at any degree
        return Ok(ExtraFlow {
            xi: Vec::new(),
            xi_shifted: Vec::new(),
            beta: vec![Vec::new(); n_list.len()],
        });
    }
    let cfg = RootConfig {
        precision: Precision::Extended,
        ..RootConfig::default()
    };
    let mut xi = find_roots(&deforming_poly(spec, false)?, &cfg)?.roots;
    xi.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let xi_sh_raw = find_roots(&deforming_poly(spec, true)?, &cfg)?.roots;
    let sigma = match_nearest(&xi, &xi_sh_raw);
    let xi_shifted: Vec<Complex64> = sigma.iter().map(|&j| xi_sh_raw[j]).collect();

    // minimum separation among the anchors bounds the allowed step
    let ell = spec.ell;
    let mut min_sep = f64::INFINITY;
    for i in 0..ell {
        for j in i + 1..ell {
            min_sep = min_sep.min((xi_shifted[i] - xi_shifted[j]).norm());
        }
    }

    let mut cur = xi_shifted.clone();
    let mut beta = Vec::with_capacity(n_list.len());
    // walk a dense private ladder so each Newton start stays in its basin,
    // recording only the requested degrees
    let mut recorded_at = 0usize;
    let mut ladder: Vec<usize> = Vec::new();
    let mut prev = 0usize;
    for &n in n_list {
        let mut k = prev;
        while k < n {
            k = (k + 10).min(n);
            ladder.push(k);
        }
        prev = n;
    }
    if n_list[0] == 0 {
        beta.push(cur.clone());
        recorded_at = 1;
    }
    for &n in &ladder {
        let sp = FamilySpec { n, ..*spec };
        let p = exceptional_poly(&sp)?;
        let dp = p.derivative();
        let mut next = Vec::with_capacity(ell);
        for &z0 in cur.iter() {
            let (z, last_step) = newton_dd(&p, &dp, z0);
            let moved = (z - z0).norm();
            if last_step > 1e-9 * (1.0 + z.norm()) || (ell > 1 && moved > 0.5 * min_sep) {
                return Err(Error::NonConvergence {
                    worst_residual: last_step,
                    iterations: 40,
                    partial: Box::new(crate::roots::RootSet {
                        roots: next.clone(),
                        residuals: vec![f64::NAN; next.len()],
                        iterations: 40,
                        converged: false,
                        precision: Precision::Extended,
                    }),
                });
            }
            next.push(z);
        }
        cur = next;
        if recorded_at < n_list.len() && n == n_list[recorded_at] {
            beta.push(cur.clone());
            recorded_at += 1;
        }
    }
    Ok(ExtraFlow {
        xi,
        xi_shifted,
        beta,
    })
}

/// A-posteriori location-error estimate for an off-domain zero: the size of
/// one Newton correction |P(z)/P'(z)| / (1 + |z|) on the coefficient form.
/// Meaningless for ordinary zeros at high degree, where that form cancels.
pub fn newton_residual(spec: &FamilySpec, z: Complex64) -> Result<f64, Error> {
    let p = exceptional_poly(spec)?;
    let dp = p.derivative();
    let zd = DdComplex::from_c64(z);
    let (pm, pe) = crate::roots::eval_dd_scaled(p.coeffs(), zd);
    let (dm, de) = crate::roots::eval_dd_scaled(dp.coeffs(), zd);
    if dm.is_zero() {
        return Ok(f64::INFINITY);
    }
    let step = (pm / dm).ldexp(pe - de + p.exp2() - dp.exp2());
    Ok(step.abs().to_f64() / (1.0 + z.norm()))
}

/// The extra zeros of one spec, via continuation from n = 0 up to spec.n.
pub fn extra_zeros(spec: &FamilySpec) -> Result<Vec<Complex64>, Error> {
    let flow = extra_zero_flow(spec, &[spec.n.max(1)])?;
    if spec.n == 0 {
        Ok(flow.xi_shifted)
    } else {
        Ok(flow.beta.last().cloned().unwrap_or_default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Family;

    #[test]
    fn ordinary_count_matches_for_table_range_degrees() {
        for n in [0usize, 10, 30, 60] {
            let spec = FamilySpec::laguerre(Family::L1, 2.0, 5, n).unwrap();
            assert_eq!(ordinary_zero_count(&spec).unwrap(), n, "L1 n={n}");
            let spec = FamilySpec::jacobi(Family::J2, 3.0, 4.0, 4, n).unwrap();
            assert_eq!(ordinary_zero_count(&spec).unwrap(), n, "J2 n={n}");
        }
    }

    #[test]
    fn scanned_zeros_agree_with_the_rootfinder_at_low_degree() {
        let spec = FamilySpec::laguerre(Family::L2, 3.0, 4, 8).unwrap();
        let scanned = ordinary_zeros(&spec).unwrap();
        let cfg = RootConfig {
            precision: Precision::Extended,
            ..RootConfig::default()
        };
        let rs = find_roots(&exceptional_poly(&spec).unwrap(), &cfg).unwrap();
        let mut direct: Vec<f64> = rs
            .roots
            .iter()
            .filter(|z| z.im == 0.0 && z.re > 0.0)
            .map(|z| z.re)
            .collect();
        direct.sort_by(f64::total_cmp);
        assert_eq!(scanned.len(), direct.len());
        for (a, b) in scanned.iter().zip(direct) {
            assert!((a - b).abs() <= 1e-10 * (1.0 + b.abs()), "{a} vs {b}");
        }
    }

    #[test]
    fn scanned_zeros_interlace_at_high_degree() {
        // degree 65: far past where the coefficient route loses the real axis
        let spec = |n| FamilySpec::laguerre(Family::L1, 2.0, 5, n).unwrap();
        let a = ordinary_zeros(&spec(59)).unwrap();
        let b = ordinary_zeros(&spec(60)).unwrap();
        assert_eq!(a.len(), 59);
        assert_eq!(b.len(), 60);
        for k in 0..59 {
            assert!(b[k] < a[k] && a[k] < b[k + 1], "interlacing broke at {k}");
        }
    }

    #[test]
    fn flow_reaches_the_published_values() {
        // spot check against a published row: n = 60 extra zeros
        let spec = FamilySpec::jacobi(Family::J2, 3.0, 4.0, 4, 0).unwrap();
        let flow = extra_zero_flow(&spec, &[10, 60]).unwrap();
        let at60 = &flow.beta[1];
        let published = [
            Complex64::new(1.39615, 1.81046),
            Complex64::new(1.39615, -1.81046),
            Complex64::new(2.65907, 0.78869),
            Complex64::new(2.65907, -0.78869),
        ];
        for p in published {
            let d = at60.iter().map(|z| (z - p).norm()).fold(f64::INFINITY, f64::min);
            assert!(d < 1e-4, "missed published zero {p}: {d:.2e}");
        }
    }

    #[test]
    fn flow_rows_track_their_anchors() {
        let spec = FamilySpec::laguerre(Family::L2, 10.0, 5, 0).unwrap();
        let n_list = [0usize, 10, 20, 40, 80];
        let flow = extra_zero_flow(&spec, &n_list).unwrap();
        assert_eq!(flow.beta.len(), n_list.len());
        // row 0 is exactly the shifted anchors
        for (b, s) in flow.beta[0].iter().zip(&flow.xi_shifted) {
            assert_eq!(b, s);
        }
        // distances to the unshifted anchors decrease down each column
        for k in 0..5 {
            let d: Vec<f64> = flow
                .beta
                .iter()
                .map(|row| (row[k] - flow.xi[k]).norm())
                .collect();
            for w in d.windows(2) {
                assert!(w[1] < w[0], "column {k} not monotone: {d:?}");
            }
        }
    }

    #[test]
    fn malformed_ladders_are_rejected() {
        let spec = FamilySpec::laguerre(Family::L1, 2.0, 2, 0).unwrap();
        assert!(extra_zero_flow(&spec, &[]).is_err());
        assert!(extra_zero_flow(&spec, &[10, 10]).is_err());
        assert!(extra_zero_flow(&spec, &[20, 10]).is_err());
    }
}
