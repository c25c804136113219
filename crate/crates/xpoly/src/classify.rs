//! Splitting the zeros of an exceptional polynomial into ordinary zeros
//! (real, inside the weight's domain) and extra zeros (everything else).

use crate::family::{Family, FamilySpec};
use crate::roots::RootSet;
use crate::Error;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Where the weight function lives: ordinary zeros must fall strictly inside.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Domain {
    /// (0, oo) for the Laguerre families.
    PositiveHalfLine,
    /// (-1, 1) for the Jacobi families.
    OpenUnitInterval,
}

impl Domain {
    pub fn of(family: Family) -> Domain {
        if family.is_laguerre() {
            Domain::PositiveHalfLine
        } else {
            Domain::OpenUnitInterval
        }
    }

    /// Finite endpoints of the interval.
    pub fn endpoints(self) -> (f64, Option<f64>) {
        match self {
            Domain::PositiveHalfLine => (0.0, None),
            Domain::OpenUnitInterval => (-1.0, Some(1.0)),
        }
    }

    pub fn contains(self, x: f64) -> bool {
        let (lo, hi) = self.endpoints();
        x > lo && hi.map_or(true, |h| x < h)
    }
}

impl std::fmt::Display for Domain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Domain::PositiveHalfLine => write!(f, "(0, inf)"),
            Domain::OpenUnitInterval => write!(f, "(-1, 1)"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ClassifyConfig {
    /// A zero counts as real when |Im z| <= imag_eps * (1 + |z|).
    pub imag_eps: f64,
    /// A real zero this close to a domain endpoint is ambiguous and rejected.
    pub domain_eps: f64,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            imag_eps: 1e-8,
            domain_eps: 1e-10,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClassifiedZeros {
    /// Real zeros inside the domain, ascending.
    pub ordinary: Vec<f64>,
    /// Remaining zeros, sorted by (re, |im|) so conjugate mates are adjacent
    /// with the lower half-plane member first.
    pub extra: Vec<Complex64>,
    /// Real parts of the members of `extra` that are real.
    pub extra_real: Vec<f64>,
    pub domain: Domain,
}

/// Which side of the domain the real extra zeros sit on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sides {
    None,
    Left,
    Right,
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StructureSignature {
    pub real_extra_count: usize,
    pub pair_count: usize,
    pub sides: Sides,
}

/// Split a converged root set into `spec.n` ordinary and `spec.ell` extra
/// zeros.
///
/// Any other outcome is an error, never silently adjusted: a real zero
/// within `domain_eps` of a domain endpoint, a zero count that does not
/// match the degree, or ordinary/extra totals different from (n, ell) all
/// raise `CountMismatch`.
pub fn classify_zeros(
    rs: &RootSet,
    spec: &FamilySpec,
    config: &ClassifyConfig,
) -> Result<ClassifiedZeros, Error> {
    if !rs.converged {
        return Err(Error::ParameterViolation(
            "classify_zeros requires a converged root set".into(),
        ));
    }
    let expected = spec.ell + spec.n;
    if rs.roots.len() != expected {
        return Err(Error::CountMismatch(format!(
            "{} roots supplied, degree says {expected}",
            rs.roots.len()
        )));
    }
    let domain = Domain::of(spec.family);
    let (lo, hi) = domain.endpoints();

    let mut ordinary = Vec::new();
    let mut extra = Vec::new();
    let mut extra_real = Vec::new();
    for &z in &rs.roots {
        let is_real = z.im.abs() <= config.imag_eps * (1.0 + z.norm());
        if is_real {
            let near_edge = (z.re - lo).abs() <= config.domain_eps
                || hi.map_or(false, |h| (z.re - h).abs() <= config.domain_eps);
            if near_edge {
                return Err(Error::CountMismatch(format!(
                    "real zero {} within {} of a domain endpoint of {domain}",
                    z.re, config.domain_eps
                )));
            }
            if domain.contains(z.re) {
                ordinary.push(z.re);
            } else {
                extra.push(z);
                extra_real.push(z.re);
            }
        } else {
            extra.push(z);
        }
    }

    if ordinary.len() != spec.n || extra.len() != spec.ell {
        return Err(Error::CountMismatch(format!(
            "expected {} ordinary + {} extra zeros, found {} + {}",
            spec.n,
            spec.ell,
            ordinary.len(),
            extra.len()
        )));
    }

    ordinary.sort_by(f64::total_cmp);
    extra.sort_by(|a, b| {
        a.re.total_cmp(&b.re)
            .then(a.im.abs().total_cmp(&b.im.abs()))
            .then(a.im.total_cmp(&b.im))
    });
    extra_real.sort_by(f64::total_cmp);

    Ok(ClassifiedZeros {
        ordinary,
        extra,
        extra_real,
        domain,
    })
}

/// Shape summary of the extra zeros: how many are real, how many conjugate
/// pairs, and which side of the domain the real ones sit on.
pub fn structure_signature(cz: &ClassifiedZeros) -> StructureSignature {
    let real_extra_count = cz.extra_real.len();
    let pair_count = (cz.extra.len() - real_extra_count) / 2;
    let (lo, hi) = cz.domain.endpoints();
    let mut left = false;
    let mut right = false;
    for &x in &cz.extra_real {
        if x <= lo {
            left = true;
        } else if hi.map_or(false, |h| x >= h) {
            right = true;
        }
    }
    let sides = match (left, right) {
        (false, false) => Sides::None,
        (true, false) => Sides::Left,
        (false, true) => Sides::Right,
        (true, true) => Sides::Mixed,
    };
    StructureSignature {
        real_extra_count,
        pair_count,
        sides,
    }
}
