//! Simultaneous polynomial root finding.
//!
//! Aberth-Ehrlich iteration over all roots at once, with initial guesses
//! placed on the annuli read off the Newton polygon of the coefficients,
//! exponent-tracked Horner evaluation (immune to overflow for wide
//! coefficient spans), conjugate pairing, and per-root Newton polish in f64
//! or double-double.

use crate::dd::{ldexp, Dd, DdComplex};
use crate::poly::DensePoly;
use crate::Error;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    /// f64 iteration and polish; double-double polish only for roots whose
    /// residual stagnates above tolerance.
    Standard,
    /// Always finish every root with a double-double Newton polish.
    Extended,
}

impl Default for Precision {
    fn default() -> Self {
        Precision::Standard
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RootConfig {
    /// Relative backward-error target: |p(z)| / sum_k |c_k||z|^k.
    pub tolerance: f64,
    pub max_iter: usize,
    pub precision: Precision,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig {
            tolerance: 1e-13,
            max_iter: 500,
            precision: Precision::Standard,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RootSet {
    /// All roots, sorted by (re, im); complex conjugates are exact mirrors.
    pub roots: Vec<Complex64>,
    /// Relative backward error of each root, same order as `roots`.
    pub residuals: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    pub precision: Precision,
}

/// Complex value scaled by a power of two, kept renormalized with mantissa
/// magnitude near one so products with large arguments never overflow.
#[derive(Debug, Clone, Copy)]
struct Sc {
    m: Complex64,
    e: i64,
}

impl Sc {
    const ZERO: Sc = Sc {
        m: Complex64::new(0.0, 0.0),
        e: 0,
    };

    fn from_f64(x: f64) -> Sc {
        Sc {
            m: Complex64::new(x, 0.0),
            e: 0,
        }
        .renorm()
    }

    fn renorm(mut self) -> Sc {
        let a = self.m.re.abs().max(self.m.im.abs());
        if a == 0.0 {
            return Sc::ZERO;
        }
        if !a.is_finite() {
            return self;
        }
        let l = a.log2().floor() as i64;
        if l != 0 {
            self.m = Complex64::new(ldexp(self.m.re, -l), ldexp(self.m.im, -l));
            self.e += l;
        }
        self
    }

    fn is_zero(self) -> bool {
        self.m.re == 0.0 && self.m.im == 0.0
    }

    /// a + b with exponents aligned to the larger side; the smaller side
    /// underflows harmlessly when the scales are too far apart.
    fn add(self, b: Sc) -> Sc {
        if self.is_zero() {
            return b;
        }
        if b.is_zero() {
            return self;
        }
        let (big, small) = if self.e >= b.e { (self, b) } else { (b, self) };
        let shift = small.e - big.e; // <= 0
        let sm = Complex64::new(ldexp(small.m.re, shift), ldexp(small.m.im, shift));
        Sc {
            m: big.m + sm,
            e: big.e,
        }
    }

    fn mul_c(self, z: Complex64) -> Sc {
        Sc {
            m: self.m * z,
            e: self.e,
        }
    }

    /// self / other as an ordinary complex number; saturates to infinity or
    /// zero when the exponent gap leaves f64 range.
    fn ratio(self, other: Sc) -> Complex64 {
        let q = self.m / other.m;
        let sh = self.e - other.e;
        Complex64::new(ldexp(q.re, sh), ldexp(q.im, sh))
    }
}

/// p(z), p'(z) and the backward-error scale sum_k |c_k| |z|^k.
fn eval_scaled(c: &[f64], z: Complex64) -> (Sc, Sc, Sc) {
    let az = Complex64::new(z.norm(), 0.0);
    let mut p = Sc::ZERO;
    let mut d = Sc::ZERO;
    let mut s = Sc::ZERO;
    for &ck in c.iter().rev() {
        d = d.mul_c(z).add(p).renorm();
        p = p.mul_c(z).add(Sc::from_f64(ck)).renorm();
        s = s.mul_c(az).add(Sc::from_f64(ck.abs())).renorm();
    }
    (p, d, s)
}

/// Relative backward error |p(z)| / s(z) from scaled evaluations.
fn rel_residual(p: Sc, s: Sc) -> f64 {
    if s.is_zero() {
        return if p.is_zero() { 0.0 } else { f64::INFINITY };
    }
    ldexp(p.m.norm() / s.m.re, p.e - s.e)
}

/// Initial guesses from the Newton polygon: the upper convex hull of
/// (k, log2 |c_k|) splits the degree into annuli; each hull segment of
/// horizontal extent m contributes m guesses on a circle whose radius is
/// given by the segment's slope, at fixed deterministic angles.
fn initial_guesses(c: &[f64]) -> Vec<Complex64> {
    let deg = c.len() - 1;
    let mut pts: Vec<(usize, f64)> = Vec::new();
    for (k, &ck) in c.iter().enumerate() {
        if ck != 0.0 {
            pts.push((k, ck.abs().log2()));
        }
    }
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &(k, l) in &pts {
        while hull.len() >= 2 {
            let (k1, l1) = hull[hull.len() - 2];
            let (k2, l2) = hull[hull.len() - 1];
            // pop k2 when it falls on or below the chord k1 -> k
            let cross = (k2 - k1) as f64 * (l - l1) - (k - k1) as f64 * (l2 - l1);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push((k, l));
    }
    let mut guesses = Vec::with_capacity(deg);
    for seg in hull.windows(2) {
        let (k1, l1) = seg[0];
        let (k2, l2) = seg[1];
        let m = k2 - k1;
        let radius = ((l1 - l2) / m as f64).exp2().clamp(1e-280, 1e280);
        for j in 0..m {
            let theta = 2.0 * std::f64::consts::PI * j as f64 / m as f64
                + 0.7
                + 0.3 * k1 as f64 / (deg as f64 + 1.0);
            guesses.push(Complex64::from_polar(radius, theta));
        }
    }
    debug_assert_eq!(guesses.len(), deg);
    guesses
}

/// Force the root multiset to be exactly closed under conjugation. Roots are
/// matched greedily from the largest |Im| down; a root whose best partner
/// under conjugation is itself gets snapped to the real axis, otherwise the
/// pair is averaged into exact mirror images. Returns (representative,
/// optional partner) index pairs.
fn pair_conjugates(roots: &mut [Complex64]) -> Vec<(usize, Option<usize>)> {
    let n = roots.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| {
        roots[b]
            .im
            .abs()
            .total_cmp(&roots[a].im.abs())
            .then(a.cmp(&b))
    });
    let mut used = vec![false; n];
    let mut pairs = Vec::new();
    for &i in &order {
        if used[i] {
            continue;
        }
        used[i] = true;
        if roots[i].im == 0.0 {
            pairs.push((i, None));
            continue;
        }
        let target = roots[i].conj();
        let mut best = i;
        let mut best_d = (roots[i] - target).norm();
        for (j, z) in roots.iter().enumerate() {
            if !used[j] {
                let dj = (z - target).norm();
                if dj < best_d {
                    best_d = dj;
                    best = j;
                }
            }
        }
        if best == i {
            roots[i] = Complex64::new(roots[i].re, 0.0);
            pairs.push((i, None));
        } else {
            used[best] = true;
            let avg = (roots[i] + roots[best].conj()) * 0.5;
            let avg = if avg.im < 0.0 { avg.conj() } else { avg };
            roots[i] = avg;
            roots[best] = avg.conj();
            pairs.push((i, Some(best)));
        }
    }
    pairs
}

fn polish_f64(c: &[f64], z0: Complex64) -> Complex64 {
    let mut z = z0;
    for _ in 0..3 {
        let (p, d, _) = eval_scaled(c, z);
        if d.is_zero() {
            break;
        }
        let step = p.ratio(d);
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
        if step.norm() <= 1e-17 * (1.0 + z.norm()) {
            break;
        }
    }
    if z.re.is_finite() && z.im.is_finite() {
        z
    } else {
        z0
    }
}

/// Exponent-tracked double-double Horner; the shared power-of-two exponent
/// of the polynomial cancels in Newton ratios and is ignored.
pub(crate) fn eval_dd_scaled(coeffs: &[Dd], z: DdComplex) -> (DdComplex, i64) {
    let mut m = DdComplex::ZERO;
    let mut e = 0i64;
    for c in coeffs.iter().rev() {
        m = m * z + DdComplex::new(*c, Dd::ZERO).ldexp(-e);
        let a = m.abs().to_f64();
        if a > 0.0 && a.is_finite() {
            let l = a.log2().floor() as i64;
            if l != 0 {
                m = m.ldexp(-l);
                e += l;
            }
        }
    }
    (m, e)
}

fn polish_dd(poly: &DensePoly, deriv: &DensePoly, z0: Complex64) -> Complex64 {
    let mut z = DdComplex::from_c64(z0);
    for _ in 0..4 {
        let (pm, pe) = eval_dd_scaled(poly.coeffs(), z);
        let (dm, de) = eval_dd_scaled(deriv.coeffs(), z);
        if dm.is_zero() || pm.is_zero() {
            break;
        }
        let step = (pm / dm).ldexp(pe - de + poly.exp2() - deriv.exp2());
        z = z - step;
        if step.abs().to_f64() <= 1e-30 * (1.0 + z.abs().to_f64()) {
            break;
        }
    }
    let out = z.to_c64();
    if out.re.is_finite() && out.im.is_finite() {
        out
    } else {
        z0
    }
}

/// All complex roots of `p`.
///
/// Returns them sorted by (re, im) with exact conjugate symmetry. Errors
/// with `DegreeZero` for constant or empty input and `NonConvergence`
/// (carrying the partial result) when the residual target cannot be met
/// within `config.max_iter` sweeps.
pub fn find_roots(p: &DensePoly, config: &RootConfig) -> Result<RootSet, Error> {
    match p.degree() {
        Some(d) if d >= 1 => {}
        other => return Err(Error::DegreeZero { degree: other }),
    }

    // Roots at the origin deflate exactly.
    let all: Vec<Dd> = p.coeffs().to_vec();
    let zero_roots = all.iter().take_while(|c| c.is_zero()).count();
    let inner = &all[zero_roots..];
    let mantissas: Vec<f64> = inner.iter().map(|c| c.hi()).collect();
    let d = mantissas.len() - 1;

    let mut roots: Vec<Complex64>;
    let mut iterations = 0usize;

    if d == 0 {
        roots = Vec::new();
    } else if d == 1 {
        let r = -(inner[0] / inner[1]);
        roots = vec![Complex64::new(r.to_f64(), 0.0)];
    } else if d == 2 {
        let (a, b, c0) = (inner[2], inner[1], inner[0]);
        let disc = b * b - a * c0 * 4.0;
        if disc.hi() >= 0.0 {
            let sq = disc.sqrt();
            let q = if b.hi() >= 0.0 { -(b + sq) } else { -(b - sq) } * 0.5;
            let (r1, r2) = if q.is_zero() {
                (Dd::ZERO, Dd::ZERO)
            } else {
                (q / a, c0 / q)
            };
            roots = vec![
                Complex64::new(r1.to_f64(), 0.0),
                Complex64::new(r2.to_f64(), 0.0),
            ];
        } else {
            let re = -(b / a).to_f64() * 0.5;
            let im = ((-disc).sqrt() / a.abs()).to_f64() * 0.5;
            roots = vec![Complex64::new(re, im), Complex64::new(re, -im)];
        }
    } else {
        roots = initial_guesses(&mantissas);
        let mut locked = vec![false; d];
        while iterations < config.max_iter {
            iterations += 1;
            let mut all_locked = true;
            for i in 0..d {
                if locked[i] {
                    continue;
                }
                let (pv, dv, sv) = eval_scaled(&mantissas, roots[i]);
                if rel_residual(pv, sv) <= config.tolerance {
                    locked[i] = true;
                    continue;
                }
                all_locked = false;
                let nudge = Complex64::new(1e-6 * (1.0 + roots[i].norm()), 1e-6);
                if dv.is_zero() {
                    roots[i] += nudge;
                    continue;
                }
                let newton = pv.ratio(dv);
                if !newton.re.is_finite() || !newton.im.is_finite() {
                    roots[i] += nudge;
                    continue;
                }
                let mut repulse = Complex64::new(0.0, 0.0);
                for j in 0..d {
                    if j != i {
                        let diff = roots[i] - roots[j];
                        let n2 = diff.norm_sqr();
                        if n2 > 0.0 {
                            repulse += diff.conj() / n2;
                        }
                    }
                }
                let denom = Complex64::new(1.0, 0.0) - newton * repulse;
                let step = if denom.norm_sqr() > 1e-60 {
                    newton / denom
                } else {
                    newton
                };
                let moved = roots[i] - step;
                if moved.re.is_finite() && moved.im.is_finite() {
                    roots[i] = moved;
                } else {
                    roots[i] = Complex64::from_polar(1.0 + roots[i].norm().min(1e100), 0.7 + i as f64);
                }
            }
            if all_locked {
                break;
            }
        }
    }

    for _ in 0..zero_roots {
        roots.push(Complex64::new(0.0, 0.0));
    }

    // Exact conjugate closure, then polish through one representative per
    // pair so the mirror symmetry survives the polish exactly.
    let pairs = pair_conjugates(&mut roots);
    let full_mantissas: Vec<f64> = all.iter().map(|c| c.hi()).collect();
    let deriv = p.derivative();
    for &(i, partner) in &pairs {
        if roots[i] == Complex64::new(0.0, 0.0) {
            continue; // deflated exactly
        }
        let mut z = polish_f64(&full_mantissas, roots[i]);
        if partner.is_none() {
            z = Complex64::new(z.re, 0.0);
        }
        let (pv, _, sv) = eval_scaled(&full_mantissas, z);
        let stagnant = rel_residual(pv, sv) > config.tolerance;
        if config.precision == Precision::Extended || stagnant {
            z = polish_dd(p, &deriv, z);
            if partner.is_none() {
                z = Complex64::new(z.re, 0.0);
            }
        }
        roots[i] = z;
        if let Some(j) = partner {
            roots[j] = z.conj();
        }
    }

    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));

    let mut residuals = Vec::with_capacity(roots.len());
    let mut worst = 0.0f64;
    for &z in &roots {
        let (pv, _, sv) = eval_scaled(&full_mantissas, z);
        let r = rel_residual(pv, sv);
        worst = worst.max(r);
        residuals.push(r);
    }
    let converged = worst <= config.tolerance;
    let set = RootSet {
        roots,
        residuals,
        iterations,
        converged,
        precision: config.precision,
    };
    if !converged {
        return Err(Error::NonConvergence {
            worst_residual: worst,
            iterations,
            partial: Box::new(set),
        });
    }
    Ok(set)
}
