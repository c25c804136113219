//! The four exceptional families and their bilinear construction.
//!
//! Each family is defined by a degree-`ell` deforming polynomial (in a
//! shifted and an unshifted parameter version) combined bilinearly with a
//! classical Laguerre or Jacobi polynomial and its derivative. The result
//! `P_{ell,n}` has degree `ell + n`: `n` zeros inside the orthogonality
//! domain plus `ell` extra zeros outside it.

use crate::classical;
use crate::dd::Dd;
use crate::poly::DensePoly;
use crate::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    L1,
    L2,
    J1,
    J2,
}

impl Family {
    pub fn is_laguerre(self) -> bool {
        matches!(self, Family::L1 | Family::L2)
    }

    pub fn is_jacobi(self) -> bool {
        matches!(self, Family::J1 | Family::J2)
    }

    pub const ALL: [Family; 4] = [Family::L1, Family::L2, Family::J1, Family::J2];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::L1 => "L1",
            Family::L2 => "L2",
            Family::J1 => "J1",
            Family::J2 => "J2",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_uppercase().as_str() {
            "L1" => Ok(Family::L1),
            "L2" => Ok(Family::L2),
            "J1" => Ok(Family::J1),
            "J2" => Ok(Family::J2),
            other => Err(Error::ParameterViolation(format!(
                "unknown family {other:?}, expected one of L1, L2, J1, J2"
            ))),
        }
    }
}

/// A fully specified member of one of the four families.
///
/// `g` (and `h` for the Jacobi families) are the continuous parameters,
/// `ell` is the deformation degree, `n` the index within the family.
/// Parameter constraints: `g > 0` always; J1 needs `g > h > 0`, J2 needs
/// `h > g > 0`. `ell = 0` is allowed and reproduces the classical
/// polynomial up to a constant factor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub g: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub h: Option<f64>,
    pub ell: usize,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, g: f64, h: Option<f64>, ell: usize, n: usize) -> Result<Self, Error> {
        let spec = FamilySpec { family, g, h, ell, n };
        spec.validate()?;
        Ok(spec)
    }

    pub fn laguerre(family: Family, g: f64, ell: usize, n: usize) -> Result<Self, Error> {
        Self::new(family, g, None, ell, n)
    }

    pub fn jacobi(family: Family, g: f64, h: f64, ell: usize, n: usize) -> Result<Self, Error> {
        Self::new(family, g, Some(h), ell, n)
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !self.g.is_finite() || self.g <= 0.0 {
            return Err(Error::ParameterViolation(format!(
                "{}: g must be a positive finite real, got {}",
                self.family, self.g
            )));
        }
        match self.family {
            Family::L1 | Family::L2 => {
                if self.h.is_some() {
                    return Err(Error::ParameterViolation(format!(
                        "{}: h does not apply to Laguerre families",
                        self.family
                    )));
                }
            }
            Family::J1 | Family::J2 => {
                let h = self.h.ok_or_else(|| {
                    Error::ParameterViolation(format!("{}: h is required", self.family))
                })?;
                if !h.is_finite() || h <= 0.0 {
                    return Err(Error::ParameterViolation(format!(
                        "{}: h must be a positive finite real, got {h}",
                        self.family
                    )));
                }
                if self.family == Family::J1 && self.g <= h {
                    return Err(Error::ParameterViolation(format!(
                        "J1 requires g > h > 0, got g = {}, h = {h}",
                        self.g
                    )));
                }
                if self.family == Family::J2 && h <= self.g {
                    return Err(Error::ParameterViolation(format!(
                        "J2 requires h > g > 0, got g = {}, h = {h}",
                        self.g
                    )));
                }
            }
        }
        Ok(())
    }

    pub(crate) fn h_value(&self) -> f64 {
        self.h.unwrap_or(f64::NAN)
    }
}

/// The degree-`ell` deforming polynomial of the given family, in the base
/// parameters (`shifted = false`) or with the unit parameter shift applied
/// (`shifted = true`). The zeros of the shifted version are where the extra
/// zeros of `P_{ell,n}` start at n = 0; the zeros of the unshifted version
/// are where they converge as n grows.
pub fn deforming_poly(spec: &FamilySpec, shifted: bool) -> Result<DensePoly, Error> {
    spec.validate()?;
    let s = if shifted { 1.0 } else { 0.0 };
    let lf = spec.ell as f64;
    let g = spec.g + s;
    match spec.family {
        Family::L1 => Ok(classical::laguerre(spec.ell, g + lf - 1.5).reflect()),
        Family::L2 => Ok(classical::laguerre(spec.ell, -g - lf - 0.5)),
        Family::J1 => {
            let h = spec.h_value() + s;
            classical::jacobi(spec.ell, g + lf - 1.5, -h - lf - 0.5)
        }
        Family::J2 => {
            let h = spec.h_value() + s;
            classical::jacobi(spec.ell, -g - lf - 0.5, h + lf - 1.5)
        }
    }
}

/// The classical polynomial entering the bilinear form, with the family's
/// `ell`-dependent parameter offsets applied.
fn classical_part(spec: &FamilySpec) -> Result<DensePoly, Error> {
    let lf = spec.ell as f64;
    match spec.family {
        Family::L1 => Ok(classical::laguerre(spec.n, spec.g + lf - 1.5)),
        Family::L2 => Ok(classical::laguerre(spec.n, spec.g + lf + 0.5)),
        Family::J1 => classical::jacobi(spec.n, spec.g + lf - 1.5, spec.h_value() + lf + 0.5),
        Family::J2 => classical::jacobi(spec.n, spec.g + lf + 0.5, spec.h_value() + lf - 1.5),
    }
}

/// The exceptional polynomial `P_{ell,n}` of the given spec, as an exact
/// degree `ell + n` coefficient vector. Overall scalar normalization is not
/// meaningful; every consumer in this crate is zero-based.
pub fn exceptional_poly(spec: &FamilySpec) -> Result<DensePoly, Error> {
    spec.validate()?;
    let xi = deforming_poly(spec, false)?;
    let xi_sh = deforming_poly(spec, true)?;
    let p = classical_part(spec)?;
    let dp = p.derivative();

    let q = match spec.family {
        Family::L1 => xi_sh.mul(&p).sub(&xi.mul(&dp)),
        Family::L2 => xi_sh
            .mul(&p)
            .scale_f64(spec.g + 0.5)
            .add(&xi.mul(&dp).mul_x()),
        Family::J1 => {
            let one_plus = DensePoly::from_coeffs(&[1.0, 1.0]);
            xi_sh
                .mul(&p)
                .scale_f64(spec.h_value() + 0.5)
                .add(&xi.mul(&dp).mul(&one_plus))
        }
        Family::J2 => {
            let one_minus = DensePoly::from_coeffs(&[1.0, -1.0]);
            xi_sh
                .mul(&p)
                .scale_f64(spec.g + 0.5)
                .sub(&xi.mul(&dp).mul(&one_minus))
        }
    };

    let expected = spec.ell + spec.n;
    if q.degree() != Some(expected) {
        return Err(Error::DegenerateDegree { expected, poly: q });
    }
    Ok(q)
}

/// Value of `P_{ell,n}` at a real point, computed through the bilinear
/// construction with the classical factors evaluated by their three-term
/// recurrences. On the oscillatory range inside the orthogonality domain
/// this stays accurate at degrees where the coefficient vector of
/// [`exceptional_poly`] has already lost the value to cancellation, so it is
/// the evaluation route behind ordinary-zero scans. Matches
/// `exceptional_poly(spec).evaluate` including overall scale.
pub fn exceptional_value(spec: &FamilySpec, x: f64) -> Result<classical::ScaledReal, Error> {
    use classical::ScaledReal;

    spec.validate()?;
    let lf = spec.ell as f64;
    let xd = Dd::from_f64(x);
    let xi = deforming_poly(spec, false)?.evaluate_real_dd(xd);
    let xi_sh = deforming_poly(spec, true)?.evaluate_real_dd(xd);

    // classical factor and its derivative, both in scaled form
    let (p, dp): (ScaledReal, ScaledReal) = match spec.family {
        Family::L1 => {
            let a = spec.g + lf - 1.5;
            let p = classical::laguerre_real_value(spec.n, a, x);
            let dp = if spec.n == 0 {
                ScaledReal::ZERO
            } else {
                let v = classical::laguerre_real_value(spec.n - 1, a + 1.0, x);
                ScaledReal {
                    mantissa: -v.mantissa,
                    exp2: v.exp2,
                }
            };
            (p, dp)
        }
        Family::L2 => {
            let a = spec.g + lf + 0.5;
            let p = classical::laguerre_real_value(spec.n, a, x);
            let dp = if spec.n == 0 {
                ScaledReal::ZERO
            } else {
                let v = classical::laguerre_real_value(spec.n - 1, a + 1.0, x);
                ScaledReal {
                    mantissa: -v.mantissa,
                    exp2: v.exp2,
                }
            };
            (p, dp)
        }
        Family::J1 | Family::J2 => {
            let (a, b) = if spec.family == Family::J1 {
                (spec.g + lf - 1.5, spec.h_value() + lf + 0.5)
            } else {
                (spec.g + lf + 0.5, spec.h_value() + lf - 1.5)
            };
            let p = classical::jacobi_real_value(spec.n, a, b, x)?;
            let dp = if spec.n == 0 {
                ScaledReal::ZERO
            } else {
                let v = classical::jacobi_real_value(spec.n - 1, a + 1.0, b + 1.0, x)?;
                let nf = spec.n as f64;
                ScaledReal {
                    mantissa: v.mantissa * (0.5 * (nf + a + b + 1.0)),
                    exp2: v.exp2,
                }
            };
            (p, dp)
        }
    };

    // combine the two bilinear terms on a common exponent
    let combine = |m1: Dd, e1: i64, m2: Dd, e2: i64| -> ScaledReal {
        if m1.is_zero() {
            return ScaledReal {
                mantissa: m2,
                exp2: e2,
            };
        }
        if m2.is_zero() {
            return ScaledReal {
                mantissa: m1,
                exp2: e1,
            };
        }
        let e = e1.max(e2);
        ScaledReal {
            mantissa: m1.ldexp(e1 - e) + m2.ldexp(e2 - e),
            exp2: e,
        }
    };
    let q = match spec.family {
        Family::L1 => combine(xi_sh * p.mantissa, p.exp2, -(xi * dp.mantissa), dp.exp2),
        Family::L2 => combine(
            xi_sh * p.mantissa * (spec.g + 0.5),
            p.exp2,
            xd * xi * dp.mantissa,
            dp.exp2,
        ),
        Family::J1 => combine(
            xi_sh * p.mantissa * (spec.h_value() + 0.5),
            p.exp2,
            (xd + 1.0) * xi * dp.mantissa,
            dp.exp2,
        ),
        Family::J2 => combine(
            xi_sh * p.mantissa * (spec.g + 0.5),
            p.exp2,
            -((-xd + 1.0) * xi * dp.mantissa),
            dp.exp2,
        ),
    };
    Ok(q)
}

/// Reflection with the parity sign attached: `p(x) -> (-1)^ell p(-x)`.
/// Maps a J1 polynomial at parameters `(h, g)` onto the J2 polynomial at
/// `(g, h)` (use `ell + n` as the parity for full exceptional polynomials).
pub fn mirror_map(p: &DensePoly, ell: usize) -> DensePoly {
    let r = p.reflect();
    if ell % 2 == 1 {
        r.neg()
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lead_normalized(p: &DensePoly) -> DensePoly {
        let lead = *p.coeffs().last().expect("nonzero poly");
        p.scale(lead.recip())
    }

    fn l1(g: f64, ell: usize, n: usize) -> FamilySpec {
        FamilySpec::laguerre(Family::L1, g, ell, n).unwrap()
    }

    fn l2(g: f64, ell: usize, n: usize) -> FamilySpec {
        FamilySpec::laguerre(Family::L2, g, ell, n).unwrap()
    }

    fn j1(g: f64, h: f64, ell: usize, n: usize) -> FamilySpec {
        FamilySpec::jacobi(Family::J1, g, h, ell, n).unwrap()
    }

    fn j2(g: f64, h: f64, ell: usize, n: usize) -> FamilySpec {
        FamilySpec::jacobi(Family::J2, g, h, ell, n).unwrap()
    }

    #[test]
    fn parameter_constraints_are_enforced() {
        assert!(FamilySpec::laguerre(Family::L1, 0.0, 1, 1).is_err());
        assert!(FamilySpec::laguerre(Family::L1, -2.0, 1, 1).is_err());
        assert!(FamilySpec::new(Family::L2, 1.0, Some(2.0), 1, 1).is_err());
        assert!(FamilySpec::new(Family::J1, 3.0, None, 1, 1).is_err());
        assert!(FamilySpec::jacobi(Family::J1, 3.0, 4.0, 1, 1).is_err());
        assert!(FamilySpec::jacobi(Family::J1, 3.0, 3.0, 1, 1).is_err());
        assert!(FamilySpec::jacobi(Family::J2, 4.0, 3.0, 1, 1).is_err());
        assert!(FamilySpec::jacobi(Family::J2, 3.0, -1.0, 1, 1).is_err());
        assert!(FamilySpec::jacobi(Family::J1, 4.0, 3.0, 1, 1).is_ok());
        assert!(FamilySpec::jacobi(Family::J2, 3.0, 4.0, 1, 1).is_ok());
    }

    #[test]
    fn family_parses_and_prints() {
        for f in Family::ALL {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
        assert_eq!("j2".parse::<Family>().unwrap(), Family::J2);
        assert!("X3".parse::<Family>().is_err());
    }

    #[test]
    fn degree_one_deforming_polynomials_match_hand_expansion() {
        // L1: eta + g + 1/2; L2: -eta - g - 1/2;
        // J1: ((g-h) eta + g+h+1)/2; J2: ((h-g) eta - (g+h+1))/2.
        let p = deforming_poly(&l1(2.0, 1, 0), false).unwrap();
        assert!((p.coeff_value(0) / p.coeff_value(1) - 2.5).abs() < 1e-14);
        let p = deforming_poly(&l1(2.0, 1, 0), true).unwrap();
        assert!((p.coeff_value(0) / p.coeff_value(1) - 3.5).abs() < 1e-14);

        let p = deforming_poly(&l2(3.0, 1, 0), false).unwrap();
        assert!((p.coeff_value(0) / p.coeff_value(1) - 3.5).abs() < 1e-14);

        let p = deforming_poly(&j1(4.0, 3.0, 1, 0), false).unwrap();
        // root at -(g+h+1)/(g-h) = -8, left of the domain
        assert!((p.coeff_value(0) / p.coeff_value(1) - 8.0).abs() < 1e-13);

        let p = deforming_poly(&j2(3.0, 4.0, 1, 0), false).unwrap();
        // root at (g+h+1)/(h-g) = 8, right of the domain
        assert!((p.coeff_value(0) / p.coeff_value(1) + 8.0).abs() < 1e-13);
    }

    #[test]
    fn deforming_polynomials_have_degree_ell() {
        for ell in 0..=10 {
            for shifted in [false, true] {
                for spec in [
                    l1(2.0, ell, 0),
                    l2(3.0, ell, 0),
                    j1(4.0, 3.0, ell, 0),
                    j2(3.0, 4.0, ell, 0),
                ] {
                    let p = deforming_poly(&spec, shifted).unwrap();
                    assert_eq!(p.degree(), Some(ell), "{spec:?} shifted={shifted}");
                }
            }
        }
    }

    #[test]
    fn exceptional_degree_is_ell_plus_n() {
        for spec in [
            l1(2.0, 1, 0),
            l1(0.5, 5, 20),
            l2(3.0, 4, 7),
            l2(10.0, 5, 60),
            j1(4.0, 3.0, 2, 11),
            j2(3.0, 4.0, 5, 16),
            j2(8.0, 9.0, 3, 40),
        ] {
            let q = exceptional_poly(&spec).unwrap();
            assert_eq!(q.degree(), Some(spec.ell + spec.n), "{spec:?}");
        }
    }

    #[test]
    fn ell_zero_reduces_to_the_classical_polynomial() {
        for n in [1usize, 4, 9] {
            let q = exceptional_poly(&l1(2.0, 0, n)).unwrap();
            let c = classical::laguerre(n, 2.0 - 0.5);
            assert!(lead_normalized(&q).coeff_distance(&lead_normalized(&c)) < 1e-25);

            let q = exceptional_poly(&l2(3.0, 0, n)).unwrap();
            let c = classical::laguerre(n, 3.0 - 0.5);
            assert!(lead_normalized(&q).coeff_distance(&lead_normalized(&c)) < 1e-25);

            let q = exceptional_poly(&j1(4.0, 3.0, 0, n)).unwrap();
            let c = classical::jacobi(n, 4.0 - 0.5, 3.0 - 0.5).unwrap();
            assert!(lead_normalized(&q).coeff_distance(&lead_normalized(&c)) < 1e-25);

            let q = exceptional_poly(&j2(3.0, 4.0, 0, n)).unwrap();
            let c = classical::jacobi(n, 3.0 - 0.5, 4.0 - 0.5).unwrap();
            assert!(lead_normalized(&q).coeff_distance(&lead_normalized(&c)) < 1e-25);
        }
    }

    #[test]
    fn n_zero_member_is_proportional_to_shifted_deforming_poly() {
        for ell in 1..=6 {
            for spec in [
                l1(2.0, ell, 0),
                l2(3.0, ell, 0),
                j1(4.0, 3.0, ell, 0),
                j2(3.0, 4.0, ell, 0),
            ] {
                let q = exceptional_poly(&spec).unwrap();
                let xi_sh = deforming_poly(&spec, true).unwrap();
                let d = lead_normalized(&q).coeff_distance(&lead_normalized(&xi_sh));
                assert!(d < 1e-25, "{spec:?}: distance {d:e}");
            }
        }
    }

    #[test]
    fn pointwise_ratio_of_n_zero_member_is_constant() {
        // Same proportionality, measured the way the acceptance criterion
        // states it: ratio spread over sample points.
        use num_complex::Complex64;
        for ell in 1..=6 {
            let spec = j2(3.0, 4.0, ell, 0);
            let q = exceptional_poly(&spec).unwrap();
            let xi_sh = deforming_poly(&spec, true).unwrap();
            let mut ratios = Vec::new();
            for i in 0..10 {
                let z = Complex64::new(-3.0 + 0.7 * i as f64, 0.4);
                ratios.push(q.evaluate(z) / xi_sh.evaluate(z));
            }
            let mean = ratios.iter().sum::<Complex64>() / ratios.len() as f64;
            for r in ratios {
                assert!((r - mean).norm() <= 1e-9 * mean.norm());
            }
        }
    }

    #[test]
    fn l1_diagonal_member_is_even() {
        for ell in 1..=6 {
            let q = exceptional_poly(&l1(2.5, ell, ell)).unwrap();
            let max = q.max_abs_coeff().unwrap().to_f64();
            for k in (1..=2 * ell).step_by(2) {
                let odd = q.coeffs()[k].abs().to_f64();
                assert!(
                    odd <= 1e-10 * max,
                    "odd coefficient {k} of size {odd:e} at ell={ell}"
                );
            }
        }
    }

    #[test]
    fn mirror_map_is_an_involution() {
        let p = DensePoly::from_coeffs(&[3.0, -1.0, 2.0, 7.0]);
        for ell in [0usize, 1, 2, 3] {
            let twice = mirror_map(&mirror_map(&p, ell), ell);
            assert!(twice.coeff_distance(&p) == 0.0);
        }
    }

    #[test]
    fn mirror_map_sends_j1_deforming_polys_to_j2() {
        for ell in 1..=4 {
            for shifted in [false, true] {
                let a = deforming_poly(&j1(4.0, 3.0, ell, 0), shifted).unwrap();
                let b = deforming_poly(&j2(3.0, 4.0, ell, 0), shifted).unwrap();
                let d = mirror_map(&a, ell).coeff_distance(&b);
                assert!(d < 1e-25, "ell={ell} shifted={shifted}: {d:e}");
            }
        }
    }

    #[test]
    fn mirror_map_sends_j1_members_to_j2_members() {
        for (ell, n) in [(1usize, 2usize), (2, 3), (3, 5), (4, 1)] {
            let a = exceptional_poly(&j1(4.0, 3.0, ell, n)).unwrap();
            let b = exceptional_poly(&j2(3.0, 4.0, ell, n)).unwrap();
            let d = mirror_map(&a, ell + n).coeff_distance(&b);
            assert!(d < 1e-25, "ell={ell} n={n}: {d:e}");
        }
    }

    #[test]
    fn l2_degree_two_deforming_poly_matches_hand_expansion() {
        // L_2^{(a)}(x) = x^2/2 - (a+2)x + (a+1)(a+2)/2 with a = -g-ell-1/2.
        let p = deforming_poly(&l2(3.0, 2, 0), false).unwrap();
        let a = -3.0 - 2.0 - 0.5;
        assert!((p.coeff_value(2) - 0.5).abs() < 1e-15);
        assert!((p.coeff_value(1) + (a + 2.0)).abs() < 1e-14);
        assert!((p.coeff_value(0) - (a + 1.0) * (a + 2.0) / 2.0).abs() < 1e-13);
    }

    #[test]
    fn invalid_specs_are_rejected_by_operations_too() {
        let bad = FamilySpec {
            family: Family::J1,
            g: 2.0,
            h: Some(5.0),
            ell: 2,
            n: 1,
        };
        assert!(deforming_poly(&bad, false).is_err());
        assert!(exceptional_poly(&bad).is_err());
    }

    #[test]
    fn spec_serializes_round_trip() {
        let spec = j2(3.0, 4.0, 4, 10);
        let s = serde_json::to_string(&spec).unwrap();
        let back: FamilySpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, spec);
        let spec = l1(2.0, 5, 0);
        let s = serde_json::to_string(&spec).unwrap();
        assert!(!s.contains("\"h\""));
        let back: FamilySpec = serde_json::from_str(&s).unwrap();
        assert_eq!(back, spec);
    }

    #[test]
    fn point_evaluation_agrees_with_the_coefficient_form() {
        // modest degrees, where the monomial basis still evaluates cleanly
        let specs = [l1(2.0, 5, 12), l2(3.0, 4, 10), j1(4.0, 3.0, 3, 9), j2(3.0, 4.0, 4, 11)];
        for spec in specs {
            let p = exceptional_poly(&spec).unwrap();
            let pts: &[f64] = if spec.family.is_laguerre() {
                &[0.7, 3.3, 9.1, 21.0]
            } else {
                &[-0.83, -0.31, 0.27, 0.91]
            };
            for &x in pts {
                let direct = p.evaluate_real_dd(Dd::from_f64(x)).hi();
                let stable = exceptional_value(&spec, x).unwrap().value();
                assert!(
                    (stable - direct).abs() <= 1e-10 * (1.0 + direct.abs()),
                    "{:?} at x={x}: {stable} vs {direct}",
                    spec.family
                );
            }
        }
    }

    #[test]
    fn leading_coefficient_matches_closed_form_for_l2() {
        // Leading coefficient of L2 P_{ell,n} is
        // (-1)^{ell+n} (g + 1/2 + n) / (ell! n!) by direct expansion.
        let spec = l2(3.0, 3, 4);
        let q = exceptional_poly(&spec).unwrap();
        let mut expect = (3.0 + 0.5 + 4.0) / (6.0 * 24.0);
        if (spec.ell + spec.n) % 2 == 1 {
            expect = -expect;
        }
        let got = q.coeff_value(spec.ell + spec.n);
        assert!((got - expect).abs() < 1e-14 * expect.abs());
    }
}
