//! Executable checks of the zero-behavior laws: counts, interlacing, flow
//! of the extra zeros in n and ell, large-parameter trends, factorization
//! limits, and clustering. Each check returns a structured report.

use crate::asymptotics::{factorized_limit, zero_set_distance};
use crate::classify::{classify_zeros, structure_signature, ClassifiedZeros, ClassifyConfig, Sides};
use crate::family::{deforming_poly, exceptional_poly, Family, FamilySpec};
use crate::roots::{find_roots, Precision, RootConfig};
use crate::zeros::{extra_zero_flow, extra_zeros, ordinary_zero_count, ordinary_zeros};
use crate::Error;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check_name: String,
    pub params: String,
    pub passed: bool,
    /// (description, measured value) pairs; for pass/fail sub-checks the
    /// value is the margin by which the property holds (negative = violated).
    pub evidence: Vec<(String, f64)>,
    pub tolerance_used: f64,
}

/// Accumulates evidence for one report; any failed sub-check flips `passed`.
struct Checker {
    report: VerificationReport,
}

impl Checker {
    fn new(check_name: &str, params: String, tolerance: f64) -> Checker {
        Checker {
            report: VerificationReport {
                check_name: check_name.into(),
                params,
                passed: true,
                evidence: Vec::new(),
                tolerance_used: tolerance,
            },
        }
    }

    fn note(&mut self, desc: String, value: f64) {
        self.report.evidence.push((desc, value));
    }

    /// Record a margin that must be strictly positive.
    fn require_margin(&mut self, desc: String, margin: f64) {
        if !(margin > 0.0) {
            self.report.passed = false;
        }
        self.report.evidence.push((desc, margin));
    }

    /// Record a value that must not exceed the report tolerance.
    fn require_within(&mut self, desc: String, value: f64) {
        if !(value <= self.report.tolerance_used) {
            self.report.passed = false;
        }
        self.report.evidence.push((desc, value));
    }

    fn require_count(&mut self, desc: String, got: usize, want: usize) {
        if got != want {
            self.report.passed = false;
        }
        self.report.evidence.push((desc, got as f64));
    }

    fn fail(&mut self, desc: String) {
        self.report.passed = false;
        self.report.evidence.push((desc, f64::NAN));
    }

    fn finish(self) -> VerificationReport {
        self.report
    }
}

fn extended() -> RootConfig {
    RootConfig {
        precision: Precision::Extended,
        ..RootConfig::default()
    }
}

fn classified_for(spec: &FamilySpec) -> Result<ClassifiedZeros, Error> {
    let p = exceptional_poly(spec)?;
    let rs = find_roots(&p, &extended())?;
    classify_zeros(&rs, spec, &ClassifyConfig::default())
}

fn deforming_zeros(spec: &FamilySpec, shifted: bool) -> Result<Vec<Complex64>, Error> {
    let p = deforming_poly(spec, shifted)?;
    Ok(find_roots(&p, &extended())?.roots)
}

fn with_n(spec: &FamilySpec, n: usize) -> FamilySpec {
    FamilySpec { n, ..*spec }
}

fn with_ell(spec: &FamilySpec, ell: usize) -> FamilySpec {
    FamilySpec { ell, ..*spec }
}

fn params_of(spec: &FamilySpec) -> String {
    match spec.h {
        Some(h) => format!(
            "{} g={} h={} ell={} n={}",
            spec.family, spec.g, h, spec.ell, spec.n
        ),
        None => format!("{} g={} ell={} n={}", spec.family, spec.g, spec.ell, spec.n),
    }
}

/// Exactly n ordinary zeros inside the domain (stable-evaluation sign scan)
/// and ell extra zeros outside it (anchored continuation). At degrees where
/// the coefficient-based rootfinder still resolves the real axis, the
/// classification route must agree with both.
pub fn verify_counts(spec: &FamilySpec) -> VerificationReport {
    let mut c = Checker::new("counts", params_of(spec), 0.0);
    match ordinary_zero_count(spec) {
        Ok(count) => c.require_count(format!("ordinary zeros (want {})", spec.n), count, spec.n),
        Err(e) => c.fail(format!("ordinary scan failed: {e}")),
    }
    match extra_zeros(spec) {
        Ok(extra) => {
            c.require_count(
                format!("extra zeros (want {})", spec.ell),
                extra.len(),
                spec.ell,
            );
            let (lo, hi) = if spec.family.is_laguerre() {
                (0.0, f64::INFINITY)
            } else {
                (-1.0, 1.0)
            };
            for z in &extra {
                let real = z.im.abs() <= 1e-8 * (1.0 + z.norm());
                if real && z.re > lo && z.re < hi {
                    c.fail(format!("extra zero {z} lies inside the domain"));
                }
            }
        }
        Err(e) => c.fail(format!("extra continuation failed: {e}")),
    }
    if spec.n + spec.ell <= 24 {
        match classified_for(spec) {
            Ok(cz) => {
                c.require_count(
                    "classified ordinary (cross-route)".into(),
                    cz.ordinary.len(),
                    spec.n,
                );
                c.require_count(
                    "classified extra (cross-route)".into(),
                    cz.extra.len(),
                    spec.ell,
                );
            }
            Err(e) => c.fail(format!("classification cross-route failed: {e}")),
        }
    }
    c.finish()
}

/// Ordinary zeros of consecutive n strictly interlace; the new zero enters
/// from the right and every old zero moves left.
pub fn verify_interlacing(spec: &FamilySpec, n_max: usize) -> VerificationReport {
    let base = with_n(spec, 0);
    let mut c = Checker::new(
        "interlacing",
        format!("{} n=0..{}", params_of(&base), n_max),
        0.0,
    );
    let mut prev: Option<Vec<f64>> = None;
    for n in 0..=n_max {
        let cur = match ordinary_zeros(&with_n(spec, n)) {
            Ok(z) => z,
            Err(e) => {
                c.fail(format!("n={n}: {e}"));
                return c.finish();
            }
        };
        if let Some(old) = prev {
            // old: n-1 zeros, cur: n zeros; need cur[k] < old[k] < cur[k+1]
            let mut margin = f64::INFINITY;
            for (k, x) in old.iter().enumerate() {
                margin = margin.min(x - cur[k]).min(cur[k + 1] - x);
            }
            if !old.is_empty() {
                c.require_margin(format!("n={} -> {}: interlacing margin", n - 1, n), margin);
            }
        }
        prev = Some(cur);
    }
    c.finish()
}

/// The extra zeros start at the shifted deforming polynomial's zeros,
/// drift monotonically toward the unshifted ones as n grows, stay inside
/// the sandwich between the two, and extrapolate to the unshifted zeros.
pub fn verify_extra_flow(spec: &FamilySpec, n_list: &[usize]) -> VerificationReport {
    let mut c = Checker::new(
        "extra-flow",
        format!("{} n={:?}", params_of(&with_n(spec, 0)), n_list),
        0.01,
    );
    if n_list.first() != Some(&0) || n_list.windows(2).any(|w| w[0] >= w[1]) {
        c.fail("n_list must be ascending and start at 0".into());
        return c.finish();
    }
    let flow = match extra_zero_flow(spec, n_list) {
        Ok(f) => f,
        Err(e) => {
            c.fail(format!("continuation failed: {e}"));
            return c.finish();
        }
    };
    let ell = spec.ell;
    for k in 0..ell {
        let start =
            (flow.beta[0][k] - flow.xi_shifted[k]).norm() / (1.0 + flow.xi_shifted[k].norm());
        if start > 1e-8 {
            c.fail(format!(
                "n=0 zero {k} differs from shifted anchor by {start:.3e}"
            ));
        }
        let width = (flow.xi[k] - flow.xi_shifted[k]).norm();
        let slack = 1e-9 * (1.0 + width);
        let d: Vec<f64> = flow
            .beta
            .iter()
            .map(|row| (row[k] - flow.xi[k]).norm())
            .collect();
        for (i, row) in flow.beta.iter().enumerate() {
            let to_start = (row[k] - flow.xi_shifted[k]).norm();
            if d[i] > width + slack || to_start > width + slack {
                c.fail(format!("n={} zero {k} left the sandwich", n_list[i]));
            }
        }
        let mut margin = f64::INFINITY;
        for w in d.windows(2) {
            margin = margin.min(w[0] - w[1] + 1e-9 * (1.0 + w[0]));
        }
        c.require_margin(format!("zero {k}: monotone approach margin"), margin);
    }
    // Two-point elimination of the leading error term c * n^(-p):
    // p = 1/2 for Laguerre, 1 for Jacobi (derivative-to-value ratios).
    let p = if spec.family.is_laguerre() { 0.5 } else { 1.0 };
    let positive: Vec<usize> = n_list.iter().copied().filter(|&n| n > 0).collect();
    if positive.len() >= 2 {
        let big = *positive.last().unwrap();
        let target = big as f64 / 4.0;
        let small = *positive[..positive.len() - 1]
            .iter()
            .min_by(|&&a, &&b| {
                (a as f64 - target)
                    .abs()
                    .total_cmp(&(b as f64 - target).abs())
            })
            .unwrap();
        let idx_big = n_list.iter().position(|&n| n == big).unwrap();
        let idx_small = n_list.iter().position(|&n| n == small).unwrap();
        let (wb, ws) = ((big as f64).powf(p), (small as f64).powf(p));
        for k in 0..ell {
            let bb = flow.beta[idx_big][k];
            let bs = flow.beta[idx_small][k];
            let est = (bb * wb - bs * ws) / (wb - ws);
            let rel = (est - flow.xi[k]).norm() / flow.xi[k].norm();
            c.require_within(format!("zero {k}: extrapolated limit error"), rel);
        }
    }
    c.finish()
}

/// Shape of the extra-zero set for each ell up to ell_max follows the
/// family rule: all real outside on one side, or conjugate pairs plus at
/// most one real sentinel beyond them.
pub fn verify_structure_rules(spec: &FamilySpec, ell_max: usize) -> VerificationReport {
    let mut c = Checker::new(
        "structure",
        format!("{} ell=1..{}", params_of(&with_ell(spec, 0)), ell_max),
        0.0,
    );
    for ell in 1..=ell_max {
        let cz = match classified_for(&with_ell(spec, ell)) {
            Ok(cz) => cz,
            Err(e) => {
                c.fail(format!("ell={ell}: {e}"));
                continue;
            }
        };
        let sig = structure_signature(&cz);
        let (want_real, want_pairs, want_sides) = match (spec.family, ell % 2) {
            (Family::L1, _) => (ell, 0, Sides::Left),
            (Family::L2, 0) | (Family::J2, 0) | (Family::J1, 0) => (0, ell / 2, Sides::None),
            (Family::L2, _) | (Family::J1, _) => (1, (ell - 1) / 2, Sides::Left),
            (Family::J2, _) => (1, (ell - 1) / 2, Sides::Right),
        };
        let ok_counts = sig.real_extra_count == want_real
            && sig.pair_count == want_pairs
            && sig.sides == want_sides;
        if !ok_counts {
            c.fail(format!(
                "ell={ell}: signature ({}, {}, {:?}) wanted ({}, {}, {:?})",
                sig.real_extra_count,
                sig.pair_count,
                sig.sides,
                want_real,
                want_pairs,
                want_sides
            ));
            continue;
        }
        c.note(format!("ell={ell}: real extra zeros"), want_real as f64);
        let pair_res: Vec<&Complex64> = cz.extra.iter().filter(|z| z.im != 0.0).collect();
        match spec.family {
            Family::J2 => {
                for z in &pair_res {
                    c.require_margin(format!("ell={ell}: pair real part positive"), z.re);
                }
                if ell % 2 == 1 {
                    let rightmost_pair = pair_res
                        .iter()
                        .map(|z| z.re)
                        .fold(f64::NEG_INFINITY, f64::max);
                    let sentinel = cz.extra_real[0];
                    c.require_margin(
                        format!("ell={ell}: real zero beyond the pairs"),
                        sentinel - rightmost_pair.max(1.0),
                    );
                }
            }
            Family::J1 => {
                for z in &pair_res {
                    c.require_margin(format!("ell={ell}: pair real part negative"), -z.re);
                }
                if ell % 2 == 1 {
                    let leftmost_pair =
                        pair_res.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
                    let sentinel = cz.extra_real[0];
                    c.require_margin(
                        format!("ell={ell}: real zero beyond the pairs"),
                        leftmost_pair.min(-1.0) - sentinel,
                    );
                }
            }
            Family::L2 => {
                if ell % 2 == 1 {
                    let leftmost_pair =
                        pair_res.iter().map(|z| z.re).fold(f64::INFINITY, f64::min);
                    let sentinel = cz.extra_real[0];
                    c.require_margin(
                        format!("ell={ell}: real zero left of the pairs"),
                        leftmost_pair.min(0.0) - sentinel,
                    );
                }
            }
            Family::L1 => {}
        }
    }
    c.finish()
}

fn upper_pairs(extra: &[Complex64]) -> Vec<Complex64> {
    let mut reps: Vec<Complex64> = extra.iter().copied().filter(|z| z.im > 0.0).collect();
    reps.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    reps
}

/// Flow of the zeros as ell grows at fixed n: the family's stated
/// monotonicity for ordinary zeros, the interleaving chain of shifted and
/// unshifted deforming zeros for the all-real family, and the per-ell
/// relations between the shifted and unshifted generations elsewhere.
pub fn verify_ell_flow(spec: &FamilySpec, ell_max: usize) -> VerificationReport {
    let mut c = Checker::new(
        "ell-flow",
        format!("{} ell=1..{}", params_of(&with_ell(spec, 0)), ell_max),
        0.0,
    );
    let mut prev_ordinary: Option<Vec<f64>> = None;
    let mut prev_xi: Option<Vec<f64>> = None;
    let mut prev_xi_sh: Option<Vec<f64>> = None;
    for ell in 1..=ell_max {
        let sp = with_ell(spec, ell);
        let cz = match classified_for(&sp) {
            Ok(cz) => cz,
            Err(e) => {
                c.fail(format!("ell={ell}: {e}"));
                return c.finish();
            }
        };
        let (xi, xi_sh) = match (deforming_zeros(&sp, false), deforming_zeros(&sp, true)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(e), _) | (_, Err(e)) => {
                c.fail(format!("ell={ell}: deforming zeros failed: {e}"));
                return c.finish();
            }
        };
        // ordinary-zero drift
        if let Some(old) = &prev_ordinary {
            match spec.family {
                Family::L1 | Family::L2 => {
                    let mut margin = f64::INFINITY;
                    for (a, b) in old.iter().zip(cz.ordinary.iter()) {
                        margin = margin.min(b - a);
                    }
                    c.require_margin(
                        format!("ell={} -> {}: ordinary zeros shift right", ell - 1, ell),
                        margin,
                    );
                }
                Family::J1 | Family::J2 => {
                    let mut margin = f64::INFINITY;
                    for (a, b) in old.iter().zip(cz.ordinary.iter()) {
                        margin = margin.min(a.abs() - b.abs());
                    }
                    c.require_margin(
                        format!("ell={} -> {}: ordinary zeros approach origin", ell - 1, ell),
                        margin,
                    );
                }
            }
        }
        prev_ordinary = Some(cz.ordinary.clone());

        match spec.family {
            Family::L1 => {
                // all deforming zeros real; chain Xi_k < xi_k < Xi_{k+1} < xi_{k+1}
                let xr: Vec<f64> = xi.iter().map(|z| z.re).collect();
                let sr: Vec<f64> = xi_sh.iter().map(|z| z.re).collect();
                let mut margin = f64::INFINITY;
                for k in 0..ell {
                    margin = margin.min(xr[k] - sr[k]);
                    if k + 1 < ell {
                        margin = margin.min(sr[k + 1] - xr[k]);
                    }
                }
                c.require_margin(format!("ell={ell}: shifted/unshifted chain margin"), margin);
                if let (Some(pxi), Some(pxs)) = (&prev_xi, &prev_xi_sh) {
                    let mut m = f64::INFINITY;
                    for k in 0..ell - 1 {
                        m = m.min(pxi[k] - xr[k]).min(pxs[k] - sr[k]);
                    }
                    c.require_margin(
                        format!("ell={} -> {}: deforming zeros move left", ell - 1, ell),
                        m,
                    );
                }
                prev_xi = Some(xr);
                prev_xi_sh = Some(sr);
            }
            Family::L2 | Family::J2 | Family::J1 => {
                // orientation: +1 when the extra zeros live right of the domain
                let toward = match spec.family {
                    Family::L2 | Family::J1 => -1.0,
                    _ => 1.0,
                };
                if ell == 1 {
                    let (x, s) = (xi[0], xi_sh[0]);
                    c.note("ell=1: unshifted real zero".into(), x.re);
                    let edge = match spec.family {
                        Family::L2 => 0.0,
                        Family::J2 => 1.0,
                        _ => -1.0,
                    };
                    c.require_margin(
                        "ell=1: shifted zero beyond unshifted".into(),
                        (s.re - x.re) * toward,
                    );
                    c.require_margin(
                        "ell=1: unshifted zero outside the domain".into(),
                        (x.re - edge) * toward,
                    );
                } else if ell % 2 == 0 {
                    let xp = upper_pairs(&xi);
                    let sp_ = upper_pairs(&xi_sh);
                    if xp.len() != ell / 2 || sp_.len() != ell / 2 {
                        c.fail(format!("ell={ell}: expected {} conjugate pairs", ell / 2));
                    } else {
                        for k in 0..ell / 2 {
                            c.require_margin(
                                format!("ell={ell}: pair {k} shifted further out (re)"),
                                (sp_[k].re - xp[k].re) * toward,
                            );
                            c.require_margin(
                                format!("ell={ell}: pair {k} shifted further out (im)"),
                                sp_[k].im - xp[k].im,
                            );
                        }
                    }
                }
            }
        }
    }
    // The imaginary parts of the paired extra zeros eventually shrink as
    // ell grows; only the late window is asserted.
    if spec.family == Family::J2 {
        let max_im = |ell: usize| -> Result<f64, Error> {
            let extras = extra_zeros(&with_ell(spec, ell))?;
            Ok(extras.iter().map(|z| z.im.abs()).fold(0.0, f64::max))
        };
        match (max_im(10), max_im(20)) {
            (Ok(a), Ok(b)) => {
                c.require_margin("extra |Im| decreases from ell=10 to ell=20".into(), a - b)
            }
            _ => c.fail("late-window imaginary comparison failed".into()),
        }
    }
    c.finish()
}

/// Large-parameter trends: every zero follows its family's stated drift as
/// the parameters grow, and at the top parameter the zero set matches the
/// factorized limit.
pub fn verify_large_param(spec: &FamilySpec, g_list: &[f64]) -> VerificationReport {
    let mut c = Checker::new(
        "large-param",
        format!("{} g={:?}", params_of(spec), g_list),
        1e-2,
    );
    if g_list.windows(2).any(|w| w[0] >= w[1]) || g_list.is_empty() {
        c.fail("g_list must be ascending and non-empty".into());
        return c.finish();
    }
    let gap = spec.h.map(|h| h - spec.g);
    let spec_at = |g: f64| -> Result<FamilySpec, Error> {
        FamilySpec::new(spec.family, g, gap.map(|d| g + d), spec.ell, spec.n)
    };
    let mut prev: Option<ClassifiedZeros> = None;
    for &g in g_list {
        let cz = match spec_at(g).and_then(|sp| classified_for(&sp)) {
            Ok(cz) => cz,
            Err(e) => {
                c.fail(format!("g={g}: {e}"));
                return c.finish();
            }
        };
        if let Some(old) = &prev {
            match spec.family {
                Family::L1 => {
                    let mut margin = f64::INFINITY;
                    for (a, b) in old
                        .ordinary
                        .iter()
                        .chain(old.extra_real.iter())
                        .zip(cz.ordinary.iter().chain(cz.extra_real.iter()))
                    {
                        margin = margin.min(b.abs() - a.abs());
                    }
                    c.require_margin(format!("g={g}: all |zeros| grew"), margin);
                }
                Family::L2 => {
                    let mut m = f64::INFINITY;
                    for (a, b) in old.ordinary.iter().zip(cz.ordinary.iter()) {
                        m = m.min(b - a);
                    }
                    c.require_margin(format!("g={g}: ordinary zeros grew"), m);
                    let mut m = f64::INFINITY;
                    for (a, b) in old.extra.iter().zip(cz.extra.iter()) {
                        m = m.min(a.re - b.re);
                    }
                    c.require_margin(format!("g={g}: extra real parts fell"), m);
                    let mut m = f64::INFINITY;
                    for (a, b) in upper_pairs(&old.extra).iter().zip(upper_pairs(&cz.extra)) {
                        m = m.min(b.im - a.im);
                    }
                    if m.is_finite() {
                        c.require_margin(format!("g={g}: extra |Im| grew"), m);
                    }
                }
                Family::J2 | Family::J1 => {
                    let away = if spec.family == Family::J2 { 1.0 } else { -1.0 };
                    let mut m = f64::INFINITY;
                    for (a, b) in old.ordinary.iter().zip(cz.ordinary.iter()) {
                        m = m.min(a.abs() - b.abs());
                    }
                    c.require_margin(format!("g={g}: ordinary zeros shrank"), m);
                    let mut m = f64::INFINITY;
                    for (a, b) in old.extra.iter().zip(cz.extra.iter()) {
                        m = m.min((b.re - a.re) * away);
                    }
                    c.require_margin(format!("g={g}: extra moved from the y-axis"), m);
                    let mut m = f64::INFINITY;
                    for (a, b) in upper_pairs(&old.extra).iter().zip(upper_pairs(&cz.extra)) {
                        m = m.min(b.im - a.im);
                    }
                    if m.is_finite() {
                        c.require_margin(format!("g={g}: extra moved from the x-axis"), m);
                    }
                }
            }
        }
        prev = Some(cz);
    }
    // factorized limit at the top parameter; the Jacobi limit needs the
    // second parameter to outgrow the first, so its gap is widened there
    let top = *g_list.last().unwrap();
    let fact_spec = match spec.family {
        Family::J2 => FamilySpec::new(spec.family, top, Some(2.0 * top), spec.ell, spec.n),
        Family::J1 => FamilySpec::new(spec.family, 2.0 * top, Some(top), spec.ell, spec.n),
        _ => spec_at(top),
    };
    let distance = fact_spec.and_then(|sp| {
        let exact = find_roots(&exceptional_poly(&sp)?, &extended())?.roots;
        let approx = find_roots(&factorized_limit(&sp)?, &extended())?.roots;
        Ok(zero_set_distance(&exact, &approx))
    });
    match distance {
        Ok(d) => c.require_within(format!("g={top}: distance to factorized limit"), d),
        Err(e) => c.fail(format!("factorized comparison failed: {e}")),
    }
    c.finish()
}

/// All zeros gather around eta = 1 as h outgrows g: the maximum distance
/// from 1 strictly shrinks along h_list.
pub fn verify_h_clustering(g: f64, h_list: &[f64], ell: usize, n: usize) -> VerificationReport {
    let mut c = Checker::new(
        "h-clustering",
        format!("J2 g={g} ell={ell} n={n} h={h_list:?}"),
        0.0,
    );
    if h_list.windows(2).any(|w| w[0] >= w[1]) || h_list.is_empty() {
        c.fail("h_list must be ascending and non-empty".into());
        return c.finish();
    }
    let mut prev: Option<f64> = None;
    for &h in h_list {
        let spread = FamilySpec::jacobi(Family::J2, g, h, ell, n).and_then(|sp| {
            let rs = find_roots(&exceptional_poly(&sp)?, &extended())?;
            Ok(rs
                .roots
                .iter()
                .map(|z| (z - Complex64::new(1.0, 0.0)).norm())
                .fold(0.0f64, f64::max))
        });
        match spread {
            Ok(s) => {
                c.note(format!("h={h}: max |z - 1|"), s);
                if let Some(p) = prev {
                    c.require_margin(format!("h={h}: spread shrank"), p - s);
                }
                prev = Some(s);
            }
            Err(e) => {
                c.fail(format!("h={h}: {e}"));
                return c.finish();
            }
        }
    }
    c.finish()
}

/// The published parameter sets, one per reproduction table.
pub fn golden_specs() -> Vec<FamilySpec> {
    vec![
        FamilySpec::laguerre(Family::L1, 2.0, 5, 0).unwrap(),
        FamilySpec::laguerre(Family::L1, 8.0, 5, 0).unwrap(),
        FamilySpec::laguerre(Family::L2, 3.0, 4, 0).unwrap(),
        FamilySpec::laguerre(Family::L2, 10.0, 5, 0).unwrap(),
        FamilySpec::jacobi(Family::J2, 3.0, 4.0, 4, 0).unwrap(),
        FamilySpec::jacobi(Family::J2, 3.0, 4.0, 5, 0).unwrap(),
        FamilySpec::jacobi(Family::J2, 8.0, 9.0, 3, 0).unwrap(),
    ]
}

/// Run one named suite of checks over the published parameter sets.
/// Suites: counts, interlacing, flow, structure, ell-flow, large-param,
/// clustering, all.
pub fn run_suite(suite: &str) -> Result<Vec<VerificationReport>, Error> {
    let mut reports = Vec::new();
    let known = [
        "counts",
        "interlacing",
        "flow",
        "structure",
        "ell-flow",
        "large-param",
        "clustering",
    ];
    if suite != "all" && !known.contains(&suite) {
        return Err(Error::ParameterViolation(format!(
            "unknown suite '{suite}'; expected one of {known:?} or 'all'"
        )));
    }
    let include = |name: &str| suite == "all" || suite == name;

    if include("counts") {
        for base in golden_specs() {
            for n in [0usize, 10, 30, 60] {
                reports.push(verify_counts(&with_n(&base, n)));
            }
        }
    }
    if include("interlacing") {
        let sets = [
            FamilySpec::laguerre(Family::L1, 0.5, 2, 0)?,
            FamilySpec::laguerre(Family::L2, 0.5, 3, 0)?,
            FamilySpec::jacobi(Family::J2, 3.0, 4.0, 3, 0)?,
        ];
        for s in sets {
            reports.push(verify_interlacing(&s, 15));
        }
    }
    if include("flow") {
        let n_list: Vec<usize> = (0..=20).map(|k| 10 * k).collect();
        for base in golden_specs() {
            reports.push(verify_extra_flow(&base, &n_list));
        }
    }
    if include("structure") {
        let sets = [
            FamilySpec::laguerre(Family::L1, 2.0, 1, 3)?,
            FamilySpec::laguerre(Family::L2, 3.0, 1, 3)?,
            FamilySpec::jacobi(Family::J2, 3.0, 4.0, 1, 3)?,
            FamilySpec::jacobi(Family::J1, 4.0, 3.0, 1, 3)?,
        ];
        for s in sets {
            reports.push(verify_structure_rules(&s, 6));
        }
    }
    if include("ell-flow") {
        let sets = [
            FamilySpec::laguerre(Family::L1, 0.5, 1, 2)?,
            FamilySpec::laguerre(Family::L2, 2.0, 1, 2)?,
            FamilySpec::jacobi(Family::J2, 3.0, 4.0, 1, 4)?,
        ];
        for s in sets {
            reports.push(verify_ell_flow(&s, 6));
        }
    }
    if include("large-param") {
        let sets = [
            FamilySpec::laguerre(Family::L1, 1.0, 2, 2)?,
            FamilySpec::laguerre(Family::L2, 1.0, 3, 2)?,
            FamilySpec::jacobi(Family::J2, 1.0, 2.0, 2, 2)?,
        ];
        for s in sets {
            reports.push(verify_large_param(&s, &[10.0, 100.0, 1000.0]));
        }
    }
    if include("clustering") {
        reports.push(verify_h_clustering(2.0, &[50.0, 100.0, 400.0], 10, 4));
    }
    reports.sort_by(|a, b| {
        a.check_name
            .cmp(&b.check_name)
            .then_with(|| a.params.cmp(&b.params))
    });
    Ok(reports)
}
