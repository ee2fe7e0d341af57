//! Scalar special functions used by the constants and by the L-function
//! evaluators: real and Hurwitz zeta, complex log-gamma, and the explicit
//! Stirling-remainder and boundary terms that enter the error constants.

mod bounds;
mod gamma;
mod zeta;

pub use bounds::{
    big_f, big_g, boundary_weight, g_bound, stirling_im_loggamma, ImLogGammaSplit, WeightKind,
};
pub use gamma::log_gamma_complex;
pub use zeta::{hurwitz_constant_term, hurwitz_zeta, zeta_real};

use crate::error::{Error, Result};
use num_complex::Complex64;

/// A point `s = sigma + i t` of the complex plane.
pub type ComplexPoint = Complex64;

/// Absolute tolerance and term budget for series evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalTolerance {
    abs_tol: f64,
    max_terms: usize,
}

impl EvalTolerance {
    pub const MAX_TERMS_CAP: usize = 1_000_000;

    pub fn new(abs_tol: f64, max_terms: usize) -> Result<Self> {
        if !(abs_tol.is_finite() && abs_tol >= 10.0 * f64::EPSILON) {
            return Err(Error::Domain(format!(
                "abs_tol must be at least 10 machine epsilons, got {abs_tol}"
            )));
        }
        if max_terms == 0 || max_terms > Self::MAX_TERMS_CAP {
            return Err(Error::Domain(format!(
                "max_terms must lie in 1..={}, got {max_terms}",
                Self::MAX_TERMS_CAP
            )));
        }
        Ok(Self { abs_tol, max_terms })
    }

    pub fn abs_tol(&self) -> f64 {
        self.abs_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }
}

impl Default for EvalTolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-13,
            max_terms: 100_000,
        }
    }
}

pub(crate) fn ensure_finite(z: ComplexPoint, what: &'static str) -> Result<ComplexPoint> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Even-index Bernoulli numbers `B_2, B_4, ..., B_20`.
pub(crate) const BERNOULLI_EVEN: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];
