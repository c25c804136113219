//! Dense univariate polynomials with real coefficients.
//!
//! Coefficients are stored in ascending order of power as double-double
//! values, together with a shared power-of-two exponent: the polynomial is
//! `2^exp2 * sum coeffs[k] x^k`. The exponent is not a normalization choice
//! (zeros are unaffected by overall scale); it exists so that high-degree
//! classical polynomials remain representable. The standard normalization of
//! a degree-200 Laguerre polynomial spans ~380 orders of magnitude between
//! its largest and smallest coefficients, which only fits in f64 when the
//! span is centered. Low-degree polynomials keep `exp2 == 0`, so
//! coefficient-wise identities can be checked literally.
//!
//! The zero polynomial has an empty coefficient vector and `degree()` of
//! `None`, the in-Rust spelling of the degree −1 sentinel.

use num_complex::Complex64;

use crate::dd::{Dd, DdComplex};

/// When the midpoint of the coefficient-magnitude span (in bits) drifts
/// beyond `±RECENTER_LIMIT`, the shared exponent absorbs the excess. Centering
/// the span rather than the maximum matters: a degree-200 Laguerre polynomial
/// has a modest largest coefficient but a trailing coefficient of 1/200!,
/// which sits below the f64 underflow threshold unless the whole vector is
/// shifted up.
const RECENTER_LIMIT: i64 = 256;

#[derive(Clone, Debug, PartialEq)]
pub struct DensePoly {
    coeffs: Vec<Dd>,
    exp2: i64,
}

impl DensePoly {
    /// The zero polynomial (degree sentinel: `degree()` is `None`).
    pub fn zero() -> DensePoly {
        DensePoly {
            coeffs: Vec::new(),
            exp2: 0,
        }
    }

    pub fn one() -> DensePoly {
        DensePoly {
            coeffs: vec![Dd::ONE],
            exp2: 0,
        }
    }

    /// Builds from f64 coefficients in ascending order of power.
    pub fn from_coeffs(coeffs: &[f64]) -> DensePoly {
        let dd: Vec<Dd> = coeffs.iter().map(|&c| Dd::from_f64(c)).collect();
        DensePoly::from_dd(dd, 0)
    }

    /// Builds from double-double coefficients and a power-of-two scale.
    pub fn from_dd(coeffs: Vec<Dd>, exp2: i64) -> DensePoly {
        let mut p = DensePoly { coeffs, exp2 };
        p.trim();
        p.recenter();
        p
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
        if self.coeffs.is_empty() {
            self.exp2 = 0;
        }
    }

    /// Shifts the shared exponent so the coefficient-magnitude span is
    /// centered around 2^0. Power-of-two scaling is exact, so values are
    /// unchanged.
    fn recenter(&mut self) {
        let mut max_l = f64::NEG_INFINITY;
        let mut min_l = f64::INFINITY;
        for c in &self.coeffs {
            let a = c.hi().abs();
            if a > 0.0 && a.is_finite() {
                let l = a.log2();
                max_l = max_l.max(l);
                min_l = min_l.min(l);
            }
        }
        if !max_l.is_finite() {
            return;
        }
        let e = ((max_l + min_l) / 2.0).round() as i64;
        if e.abs() > RECENTER_LIMIT {
            for c in &mut self.coeffs {
                *c = c.ldexp(-e);
            }
            self.exp2 += e;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Raw coefficient mantissas (the shared exponent is *not* applied).
    pub fn coeffs(&self) -> &[Dd] {
        &self.coeffs
    }

    pub fn exp2(&self) -> i64 {
        self.exp2
    }

    /// Coefficient of `x^k` as an f64 value with the shared exponent applied.
    /// May overflow to infinity for extreme spans; use `coeffs()`/`exp2()`
    /// for scale-aware work.
    pub fn coeff_value(&self, k: usize) -> f64 {
        match self.coeffs.get(k) {
            Some(c) => crate::dd::ldexp(c.hi(), self.exp2),
            None => 0.0,
        }
    }

    pub fn leading(&self) -> Option<Dd> {
        self.coeffs.last().copied()
    }

    pub fn max_abs_coeff(&self) -> Option<Dd> {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .fold(None, |acc: Option<Dd>, c| match acc {
                Some(m) if m >= c => Some(m),
                _ => Some(c),
            })
    }

    /// Rescales both operands to a common exponent and hands the vectors to
    /// `f`. The common exponent is the larger one: mantissas of the smaller
    /// side shrink, which can only discard bits that are negligible relative
    /// to the other operand.
    fn aligned_with(&self, other: &DensePoly) -> (Vec<Dd>, Vec<Dd>, i64) {
        let e = self.exp2.max(other.exp2);
        let a = self.coeffs.iter().map(|c| c.ldexp(self.exp2 - e)).collect();
        let b = other
            .coeffs
            .iter()
            .map(|c| c.ldexp(other.exp2 - e))
            .collect();
        (a, b, e)
    }

    pub fn add(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let (a, b, e) = self.aligned_with(other);
        let mut out = vec![Dd::ZERO; a.len().max(b.len())];
        for (i, c) in a.iter().enumerate() {
            out[i] = *c;
        }
        for (i, c) in b.iter().enumerate() {
            out[i] += *c;
        }
        DensePoly::from_dd(out, e)
    }

    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> DensePoly {
        DensePoly {
            coeffs: self.coeffs.iter().map(|c| -*c).collect(),
            exp2: self.exp2,
        }
    }

    pub fn scale(&self, s: Dd) -> DensePoly {
        if s.is_zero() {
            return DensePoly::zero();
        }
        let coeffs = self.coeffs.iter().map(|c| *c * s).collect();
        DensePoly::from_dd(coeffs, self.exp2)
    }

    pub fn scale_f64(&self, s: f64) -> DensePoly {
        self.scale(Dd::from_f64(s))
    }

    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![Dd::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += *a * *b;
            }
        }
        DensePoly::from_dd(out, self.exp2 + other.exp2)
    }

    /// Multiplication by `x`: shifts all coefficients up one power.
    pub fn mul_x(&self) -> DensePoly {
        if self.is_zero() {
            return DensePoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Dd::ZERO);
        coeffs.extend_from_slice(&self.coeffs);
        DensePoly {
            coeffs,
            exp2: self.exp2,
        }
    }

    /// Coefficient-wise derivative. Empty input stays empty.
    pub fn derivative(&self) -> DensePoly {
        if self.coeffs.len() <= 1 {
            return DensePoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| *c * k as f64)
            .collect();
        DensePoly::from_dd(coeffs, self.exp2)
    }

    /// The reflection `p(x) -> p(-x)`: odd coefficients change sign.
    pub fn reflect(&self) -> DensePoly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -*c } else { *c })
            .collect();
        DensePoly {
            coeffs,
            exp2: self.exp2,
        }
    }

    /// Horner evaluation in complex double precision. The shared exponent is
    /// applied at the end and can overflow to infinity for extreme scales.
    pub fn evaluate(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_f64();
        }
        acc * crate::dd::ldexp(1.0, self.exp2)
    }

    /// Horner evaluation in double-double complex arithmetic.
    pub fn evaluate_dd(&self, z: DdComplex) -> DdComplex {
        let mut acc = DdComplex::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * z + DdComplex::new(*c, Dd::ZERO);
        }
        acc.ldexp(self.exp2)
    }

    /// Horner evaluation on the real line in double-double arithmetic.
    pub fn evaluate_real_dd(&self, x: Dd) -> Dd {
        let mut acc = Dd::ZERO;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + *c;
        }
        acc.ldexp(self.exp2)
    }

    /// Largest relative deviation between coefficients of `self` and `other`,
    /// measured against the largest coefficient magnitude of either. Returns
    /// infinity when exponents are too far apart to compare, 0 for two zero
    /// polynomials.
    pub fn coeff_distance(&self, other: &DensePoly) -> f64 {
        if self.is_zero() && other.is_zero() {
            return 0.0;
        }
        let (a, b, _) = self.aligned_with(other);
        let len = a.len().max(b.len());
        let mut scale = 0.0f64;
        let mut worst = 0.0f64;
        for k in 0..len {
            let x = a.get(k).copied().unwrap_or(Dd::ZERO);
            let y = b.get(k).copied().unwrap_or(Dd::ZERO);
            scale = scale.max(x.abs().to_f64()).max(y.abs().to_f64());
            worst = worst.max((x - y).abs().to_f64());
        }
        if scale == 0.0 {
            return f64::INFINITY;
        }
        worst / scale
    }
}
