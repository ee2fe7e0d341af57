//! Counting nontrivial zeros of Dirichlet L-functions and quadratic
//! Dedekind zeta-functions in `|Im s| <= T` and checking the counts against
//! the explicit bounds.
//!
//! Zeros are counted as the winding number of the completed function
//! around the rectangle with corners `sigma1 +- iT`, `1 - sigma1 +- iT`.
//! The completed function is entire and free of trivial zeros, so no pole
//! or trivial-zero bookkeeping is needed. Left of the critical line it is
//! evaluated through the functional equation.

mod eval;
mod winding;

pub use eval::{eval_l, eval_xi_chi, eval_xi_quadratic};
pub use winding::{winding_count, WindingCount, WindingOptions};

use crate::characters::{gauss_sum, kronecker_character, CharacterSummary, DirichletCharacter};
use crate::constants::{TheoremOneConstants, TheoremTwoConstants};
use crate::error::{domain, Error, Result};
use crate::special::{ComplexPoint, EvalTolerance};

use eval::{dedekind_zeta, field_data, log_gamma_factor_chi, log_gamma_factor_field};
use serde::Serialize;
use std::f64::consts::{E, PI};

/// Perturbation applied to `T` when a zero sits on the contour.
pub const T_PERTURBATION: f64 = 1e-3;
/// Maximum number of perturbed retries.
pub const MAX_RETRIES: usize = 5;
/// Largest accepted distance of the winding number from an integer.
pub const RESIDUAL_LIMIT: f64 = 0.05;

/// Counting rectangle `[1 - sigma1, sigma1] x [-T, T]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Rectangle {
    pub sigma1: f64,
    #[serde(rename = "T")]
    pub t: f64,
}

impl Rectangle {
    pub const DEFAULT_SIGMA1: f64 = 2.0;

    pub fn new(sigma1: f64, t: f64) -> Result<Self> {
        if !(sigma1 > 1.0 && sigma1 <= 2.5) {
            return domain(format!("sigma1 must lie in (1, 2.5], got {sigma1}"));
        }
        if !(t >= 1.0 && t.is_finite()) {
            return domain(format!("T must be at least 1, got {t}"));
        }
        Ok(Self { sigma1, t })
    }

    pub fn with_height(t: f64) -> Result<Self> {
        Self::new(Self::DEFAULT_SIGMA1, t)
    }

    /// Corners in counter-clockwise order from the lower right.
    pub fn corners(&self) -> [ComplexPoint; 4] {
        let left = 1.0 - self.sigma1;
        [
            ComplexPoint::new(self.sigma1, -self.t),
            ComplexPoint::new(self.sigma1, self.t),
            ComplexPoint::new(left, self.t),
            ComplexPoint::new(left, -self.t),
        ]
    }
}

#[derive(Debug, Clone)]
enum Kind {
    Dirichlet {
        chi: DirichletCharacter,
        conj: DirichletCharacter,
        /// `log[tau(chi) / (i^a sqrt k)]`; `xi(s, chi)` equals this factor
        /// times `xi(1 - s, conj chi)`.
        log_reflection: ComplexPoint,
    },
    Field {
        disc: i64,
        chi: Option<DirichletCharacter>,
    },
}

/// What is being counted: a primitive nonprincipal Dirichlet character, or
/// `Q` / a quadratic field given by its discriminant.
#[derive(Debug, Clone)]
pub struct Subject {
    kind: Kind,
}

impl Subject {
    pub fn dirichlet(chi: DirichletCharacter) -> Result<Self> {
        if chi.is_principal() {
            return domain(format!("{chi} is principal"));
        }
        let tau = gauss_sum(&chi)?;
        let i_pow_a = if chi.parity() == 1 {
            ComplexPoint::new(0.0, 1.0)
        } else {
            ComplexPoint::new(1.0, 0.0)
        };
        let log_reflection = (tau / (i_pow_a * (chi.modulus() as f64).sqrt())).ln();
        Ok(Self {
            kind: Kind::Dirichlet {
                conj: chi.conj(),
                chi,
                log_reflection,
            },
        })
    }

    /// `d = 1` for `Q`, otherwise a fundamental discriminant.
    pub fn quadratic(disc: i64) -> Result<Self> {
        let chi = if disc == 1 {
            None
        } else {
            Some(kronecker_character(disc)?)
        };
        Ok(Self {
            kind: Kind::Field { disc, chi },
        })
    }

    pub fn is_dirichlet(&self) -> bool {
        matches!(self.kind, Kind::Dirichlet { .. })
    }

    pub fn descriptor(&self) -> String {
        match &self.kind {
            Kind::Dirichlet { chi, .. } => {
                format!("{chi} (mod {}, a={})", chi.modulus(), chi.parity())
            }
            Kind::Field { disc: 1, .. } => "Q".to_string(),
            Kind::Field { disc, .. } => {
                let radicand = if disc % 4 == 0 { disc / 4 } else { *disc };
                format!("Q(sqrt({radicand}))")
            }
        }
    }

    /// Degree `n_K` of the field (1 for Dirichlet subjects).
    pub fn degree(&self) -> u32 {
        match &self.kind {
            Kind::Dirichlet { .. } => 1,
            Kind::Field { disc, .. } => field_data(*disc).2,
        }
    }

    /// Modulus `k` or absolute discriminant `d_K`.
    pub fn conductor(&self) -> u64 {
        match &self.kind {
            Kind::Dirichlet { chi, .. } => chi.modulus(),
            Kind::Field { disc, .. } => field_data(*disc).3,
        }
    }

    pub fn character(&self) -> Option<&DirichletCharacter> {
        match &self.kind {
            Kind::Dirichlet { chi, .. } => Some(chi),
            Kind::Field { chi, .. } => chi.as_ref(),
        }
    }

    /// `log` of the completed function at `s`, right of the critical line
    /// by direct evaluation and left of it through the functional equation.
    pub fn log_completed(&self, s: ComplexPoint, tol: EvalTolerance) -> Result<ComplexPoint> {
        let reflect = s.re < 0.5;
        let w = if reflect { 1.0 - s } else { s };
        let value = match &self.kind {
            Kind::Dirichlet {
                chi,
                conj,
                log_reflection,
            } => {
                let target = if reflect { conj } else { chi };
                let l = eval_l(w, target, tol)?;
                let base = log_gamma_factor_chi(w, target)? + checked_ln(l, w)?;
                if reflect {
                    base + log_reflection
                } else {
                    base
                }
            }
            Kind::Field { disc, chi } => {
                log_gamma_factor_field(w, *disc)?
                    + checked_ln(dedekind_zeta(w, chi.as_ref(), tol)?, w)?
            }
        };
        Ok(value)
    }
}

fn checked_ln(v: ComplexPoint, s: ComplexPoint) -> Result<ComplexPoint> {
    if v.norm() == 0.0 || !v.norm().is_finite() {
        return Err(Error::BoundaryZero {
            t: s.im.abs(),
            detail: format!("completed function vanishes or overflows at {s}"),
        });
    }
    Ok(v.ln())
}

/// Settings for counting: series tolerance and contour sampling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CountOptions {
    pub tol: EvalTolerance,
    pub winding: WindingOptions,
}

impl Default for CountOptions {
    fn default() -> Self {
        Self {
            tol: EvalTolerance::new(1e-10, 100_000).expect("valid tolerance"),
            winding: WindingOptions::default(),
        }
    }
}

/// Number of zeros of the completed function inside `rect`, with winding
/// diagnostics. Fails with `BoundaryZero` when the phase cannot be
/// continued, or when the winding lands more than 0.05 from an integer.
pub fn count_zeros(subject: &Subject, rect: Rectangle) -> Result<WindingCount> {
    count_zeros_with(subject, rect, &CountOptions::default())
}

pub fn count_zeros_with(
    subject: &Subject,
    rect: Rectangle,
    opts: &CountOptions,
) -> Result<WindingCount> {
    let count = winding_count(
        |s| Ok(subject.log_completed(s, opts.tol)?.im),
        rect.sigma1,
        rect.t,
        &opts.winding,
    )?;
    if count.winding_residual >= RESIDUAL_LIMIT {
        return Err(Error::BoundaryZero {
            t: rect.t,
            detail: format!("winding residual {:.3}", count.winding_residual),
        });
    }
    Ok(count)
}

/// Count at `T`, retrying at `T + 1e-3, T + 2e-3, ...` (at most five
/// times) when a zero lies on the contour. Returns the height used.
pub fn count_zeros_perturbed(
    subject: &Subject,
    rect: Rectangle,
    opts: &CountOptions,
) -> Result<(f64, WindingCount)> {
    let mut last = None;
    for attempt in 0..=MAX_RETRIES {
        let t = rect.t + attempt as f64 * T_PERTURBATION;
        match count_zeros_with(subject, Rectangle { t, ..rect }, opts) {
            Ok(c) => return Ok((t, c)),
            Err(e @ Error::BoundaryZero { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// `(T/pi) log(kT / 2 pi e)`.
pub fn main_term_dirichlet(modulus: u64, t: f64) -> f64 {
    t / PI * (modulus as f64 * t / (2.0 * PI * E)).ln()
}

/// `(T/pi) log(d_K (T / 2 pi e)^{n_K})`.
pub fn main_term_dedekind(abs_disc: u64, degree: u32, t: f64) -> f64 {
    t / PI * ((abs_disc as f64).ln() + degree as f64 * (t / (2.0 * PI * E)).ln())
}

pub fn main_term(subject: &Subject, t: f64) -> f64 {
    match &subject.kind {
        Kind::Dirichlet { chi, .. } => main_term_dirichlet(chi.modulus(), t),
        Kind::Field { .. } => main_term_dedekind(subject.conductor(), subject.degree(), t),
    }
}

/// Which explicit bound a subject is checked against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TheoremBound {
    One(TheoremOneConstants),
    Two(TheoremTwoConstants),
}

impl TheoremBound {
    fn t0(&self) -> f64 {
        match self {
            TheoremBound::One(c) => c.params.t0,
            TheoremBound::Two(d) => d.params.t0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroCountReport {
    pub subject: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<CharacterSummary>,
    /// Requested height.
    #[serde(rename = "T")]
    pub t: f64,
    /// Height actually used after boundary-zero perturbation.
    #[serde(rename = "perturbed_T")]
    pub perturbed_t: f64,
    #[serde(rename = "N")]
    pub n: u64,
    pub main_term: f64,
    pub bound: f64,
    /// `bound - |N - main_term|`.
    pub slack: f64,
    pub winding_residual: f64,
    pub samples_used: usize,
    pub violated: bool,
}

pub fn verify(subject: &Subject, t: f64, bound: TheoremBound) -> Result<ZeroCountReport> {
    verify_with(subject, t, bound, &CountOptions::default())
}

pub fn verify_with(
    subject: &Subject,
    t: f64,
    bound: TheoremBound,
    opts: &CountOptions,
) -> Result<ZeroCountReport> {
    let floor = bound.t0().max(1.0);
    if !(t >= floor) {
        return domain(format!(
            "T = {t} is below the bound's validity floor {floor}"
        ));
    }
    let (used_t, count) = count_zeros_perturbed(subject, Rectangle::with_height(t)?, opts)?;
    let main = main_term(subject, used_t);
    let rhs = match (bound, subject.is_dirichlet()) {
        (TheoremBound::One(c), true) => c.bound(subject.conductor(), used_t),
        (TheoremBound::Two(d), false) => d.bound(subject.conductor(), subject.degree(), used_t),
        (TheoremBound::One(_), false) => {
            return domain("theorem 1 applies to Dirichlet characters")
        }
        (TheoremBound::Two(_), true) => return domain("theorem 2 applies to number fields"),
    };
    let slack = rhs - (count.n as f64 - main).abs();
    Ok(ZeroCountReport {
        subject: subject.descriptor(),
        character: subject.character().map(CharacterSummary::from),
        t,
        perturbed_t: used_t,
        n: count.n,
        main_term: main,
        bound: rhs,
        slack,
        winding_residual: count.winding_residual,
        samples_used: count.samples_used,
        violated: slack < 0.0,
    })
}
