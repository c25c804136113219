//! Double-double arithmetic.
//!
//! A [`Dd`] is an unevaluated sum of two `f64` values `hi + lo` with
//! `|lo| <= ulp(hi)/2`, giving roughly 32 significant decimal digits. This is
//! the extended-precision scalar used for coefficient construction and for
//! the root polishing passes. The exponent range is still that of `f64`;
//! range issues are handled separately by power-of-two scaling at the
//! polynomial level.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_complex::Complex64;

/// Exact sum: returns `(s, e)` with `s = fl(a + b)` and `a + b = s + e`.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Exact sum assuming `|a| >= |b|` (or either is zero).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// Exact product via fused multiply-add: `a * b = p + e`.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}

/// Multiply by a power of two. Exact whenever the result stays in the normal
/// range; large shifts are applied in chunks so intermediate factors stay
/// representable.
#[inline]
pub fn ldexp(x: f64, e: i64) -> f64 {
    if x == 0.0 || e == 0 {
        return x;
    }
    let mut v = x;
    let mut e = e;
    while e > 1000 {
        v *= 2f64.powi(1000);
        e -= 1000;
        if !v.is_finite() {
            return v;
        }
    }
    while e < -1000 {
        v *= 2f64.powi(-1000);
        e += 1000;
        if v == 0.0 {
            return v;
        }
    }
    v * 2f64.powi(e as i32)
}

/// Double-double scalar: `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Copy, Clone, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    /// Builds from two components, renormalizing.
    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn from_f64(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    /// The nearest `f64`. For a normalized double-double this is exactly `hi`.
    #[inline]
    pub fn to_f64(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.hi == 0.0 && self.lo == 0.0
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 || (self.hi == 0.0 && self.lo < 0.0) {
            -self
        } else {
            self
        }
    }

    /// Exact multiplication by a power of two (normal range).
    #[inline]
    pub fn ldexp(self, e: i64) -> Dd {
        Dd {
            hi: ldexp(self.hi, e),
            lo: ldexp(self.lo, e),
        }
    }

    pub fn sqrt(self) -> Dd {
        if self.is_zero() {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "sqrt of a negative double-double");
        // One Karp correction step on the f64 square root recovers nearly
        // full double-double accuracy.
        let y = self.hi.sqrt();
        let yd = Dd::from_f64(y);
        let d = self - yd * yd;
        let corr = d.hi / (2.0 * y);
        let (s, e) = quick_two_sum(y, corr);
        Dd { hi: s, lo: e }
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn powi(self, n: u32) -> Dd {
        let mut base = self;
        let mut exp = n;
        let mut acc = Dd::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Dd {
        Dd::from_f64(x)
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, other: Dd) -> Dd {
        let (s1, s2) = two_sum(self.hi, other.hi);
        let (t1, t2) = two_sum(self.lo, other.lo);
        let (s1, s2) = quick_two_sum(s1, s2 + t1);
        let (s1, s2) = quick_two_sum(s1, s2 + t2);
        Dd { hi: s1, lo: s2 }
    }
}

impl Add<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, other: f64) -> Dd {
        let (s1, s2) = two_sum(self.hi, other);
        let (s1, s2) = quick_two_sum(s1, s2 + self.lo);
        Dd { hi: s1, lo: s2 }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, other: Dd) -> Dd {
        self + (-other)
    }
}

impl Sub<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, other: f64) -> Dd {
        self + (-other)
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, other: Dd) -> Dd {
        let (p1, p2) = two_prod(self.hi, other.hi);
        let p2 = p2 + self.hi * other.lo + self.lo * other.hi;
        let (s, e) = quick_two_sum(p1, p2);
        Dd { hi: s, lo: e }
    }
}

impl Mul<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, other: f64) -> Dd {
        let (p1, p2) = two_prod(self.hi, other);
        let p2 = p2 + self.lo * other;
        let (s, e) = quick_two_sum(p1, p2);
        Dd { hi: s, lo: e }
    }
}

impl Div for Dd {
    type Output = Dd;
    fn div(self, other: Dd) -> Dd {
        let q1 = self.hi / other.hi;
        let r = self - other * q1;
        let q2 = r.hi / other.hi;
        let r = r - other * q2;
        let q3 = r.hi / other.hi;
        let (s, e) = quick_two_sum(q1, q2);
        Dd { hi: s, lo: e } + q3
    }
}

impl Div<f64> for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, other: f64) -> Dd {
        self / Dd::from_f64(other)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, other: Dd) {
        *self = *self + other;
    }
}

impl SubAssign for Dd {
    fn sub_assign(&mut self, other: Dd) {
        *self = *self - other;
    }
}

impl MulAssign for Dd {
    fn mul_assign(&mut self, other: Dd) {
        *self = *self * other;
    }
}

impl DivAssign for Dd {
    fn div_assign(&mut self, other: Dd) {
        *self = *self / other;
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Dd) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.hi)
    }
}

/// Complex number with double-double components, used by the extended
/// root-polishing pass.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct DdComplex {
    pub re: Dd,
    pub im: Dd,
}

impl DdComplex {
    pub const ZERO: DdComplex = DdComplex {
        re: Dd::ZERO,
        im: Dd::ZERO,
    };

    #[inline]
    pub fn new(re: Dd, im: Dd) -> DdComplex {
        DdComplex { re, im }
    }

    #[inline]
    pub fn from_c64(z: Complex64) -> DdComplex {
        DdComplex {
            re: Dd::from_f64(z.re),
            im: Dd::from_f64(z.im),
        }
    }

    #[inline]
    pub fn to_c64(self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }

    #[inline]
    pub fn norm_sqr(self) -> Dd {
        self.re * self.re + self.im * self.im
    }

    #[inline]
    pub fn abs(self) -> Dd {
        self.norm_sqr().sqrt()
    }

    #[inline]
    pub fn conj(self) -> DdComplex {
        DdComplex {
            re: self.re,
            im: -self.im,
        }
    }

    #[inline]
    pub fn scale(self, s: Dd) -> DdComplex {
        DdComplex {
            re: self.re * s,
            im: self.im * s,
        }
    }

    #[inline]
    pub fn ldexp(self, e: i64) -> DdComplex {
        DdComplex {
            re: self.re.ldexp(e),
            im: self.im.ldexp(e),
        }
    }

    pub fn is_zero(self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl Add for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn add(self, other: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re + other.re,
            im: self.im + other.im,
        }
    }
}

impl Sub for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn sub(self, other: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re - other.re,
            im: self.im - other.im,
        }
    }
}

impl Mul for DdComplex {
    type Output = DdComplex;
    #[inline]
    fn mul(self, other: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re * other.re - self.im * other.im,
            im: self.re * other.im + self.im * other.re,
        }
    }
}

impl Div for DdComplex {
    type Output = DdComplex;
    fn div(self, other: DdComplex) -> DdComplex {
        let den = other.norm_sqr();
        let num = self * other.conj();
        DdComplex {
            re: num.re / den,
            im: num.im / den,
        }
    }
}

impl Neg for DdComplex {
    type Output = DdComplex;
    fn neg(self) -> DdComplex {
        DdComplex {
            re: -self.re,
            im: -self.im,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn carries_more_than_thirty_digits() {
        let tiny = 1e-27;
        let x = Dd::from_f64(1.0) + tiny;
        let back = x - 1.0;
        assert!((back.to_f64() - tiny).abs() <= 1e-42);
    }

    #[test]
    fn division_inverts_multiplication() {
        let third = Dd::ONE / Dd::from_f64(3.0);
        let err = third * 3.0 - Dd::ONE;
        assert!(err.abs().to_f64() < 1e-31);
    }

    #[test]
    fn sqrt_squares_back() {
        let two = Dd::from_f64(2.0);
        let r = two.sqrt();
        let err = r * r - two;
        assert!(err.abs().to_f64() < 1e-30);
    }

    #[test]
    fn two_prod_captures_rounding() {
        let a = 1e8 + 1.0;
        let p = Dd::from_f64(a) * a;
        // (1e8 + 1)^2 = 1e16 + 2e8 + 1; the trailing 1 does not fit in the
        // f64 product and must land in the low component.
        assert_eq!(p.hi(), 1.00000002e16);
        assert_eq!(p.lo(), 1.0);
    }

    #[test]
    fn ldexp_is_exact_and_chunks_large_shifts() {
        // A shift larger than the chunk size, staying inside the f64 range
        // throughout: 2^-900 up to 2^900 and back.
        let x = Dd::new(1.5, 1.5e-17).ldexp(-900);
        let up = x.ldexp(1800);
        let down = up.ldexp(-900);
        assert_eq!(down.hi(), 1.5);
        assert_eq!(down.lo(), 1.5e-17);
        assert_eq!(ldexp(1.0, 3), 8.0);
    }

    #[test]
    fn ordering_uses_both_components() {
        let a = Dd::new(1.0, 1e-20);
        let b = Dd::new(1.0, 2e-20);
        assert!(a < b);
        assert!(a == a);
    }

    #[test]
    fn complex_division_round_trips() {
        let a = DdComplex::from_c64(Complex64::new(3.0, -4.0));
        let b = DdComplex::from_c64(Complex64::new(-1.5, 2.5));
        let q = a / b;
        let back = q * b - a;
        assert!(back.abs().to_f64() < 1e-30);
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let x = Dd::from_f64(1.0) + 1e-20;
        let mut acc = Dd::ONE;
        for _ in 0..7 {
            acc = acc * x;
        }
        let err = x.powi(7) - acc;
        assert!(err.abs().to_f64() < 1e-35);
    }
}
