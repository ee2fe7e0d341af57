//! Closed-form pieces of the explicit bounds: the Stirling remainder
//! `g(a, T)`, the Gamma-factor argument bound `G(a, delta, t)`, the
//! Dedekind correction `F(delta, t)` and the boundary weights `w`, `w*`,
//! `w~`, `w~*` that appear under the Jensen-circle integrals.
//!
//! Every `theta` with `|theta| <= 1` is replaced by its worst case, so the
//! returned values are upper bounds.

use super::gamma::{log_gamma_complex, stirling_leading};
use super::ComplexPoint;
use crate::error::{domain, Result};

use serde::{Deserialize, Serialize};

fn check_parity(a: u8) -> Result<f64> {
    match a {
        0 | 1 => Ok(a as f64),
        _ => domain(format!("parity must be 0 or 1, got {a}")),
    }
}

fn check_height(t: f64) -> Result<()> {
    if t >= 1.0 && t.is_finite() {
        Ok(())
    } else {
        domain(format!("height must be a finite value >= 1, got {t}"))
    }
}

/// `Im log Gamma(1/4 + a/2 + iT/2)` split into the main term
/// `(T/2) log(T/2e)`, the two explicit Stirling terms, and the remainder
/// whose modulus is at most `1 / (3 |1/2 + a + iT|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImLogGammaSplit {
    pub main: f64,
    pub explicit: f64,
    pub remainder: f64,
    /// `1 / (3 |1/2 + a + iT|)`, the bound on `|remainder|`.
    pub remainder_bound: f64,
}

impl ImLogGammaSplit {
    pub fn value(&self) -> f64 {
        self.main + self.explicit + self.remainder
    }

    /// `g(a, T)` with the actual remainder in place of `theta`.
    pub fn g_part(&self) -> f64 {
        self.explicit + self.remainder
    }
}

fn explicit_stirling_terms(a: f64, t: f64) -> f64 {
    let c = 2.0 * a + 1.0;
    0.25 * t * (c * c / (4.0 * t * t)).ln_1p() + 0.25 * (2.0 * a - 1.0) * (2.0 * t / c).atan()
}

pub fn stirling_im_loggamma(a: u8, t: f64) -> Result<ImLogGammaSplit> {
    let af = check_parity(a)?;
    check_height(t)?;
    let z = ComplexPoint::new(0.25 + 0.5 * af, 0.5 * t);
    let remainder = (log_gamma_complex(z)? - stirling_leading(z)).im;
    Ok(ImLogGammaSplit {
        main: 0.5 * t * (t / (2.0 * std::f64::consts::E)).ln(),
        explicit: explicit_stirling_terms(af, t),
        remainder,
        remainder_bound: 1.0 / (3.0 * ComplexPoint::new(0.5 + af, t).norm()),
    })
}

/// Worst-case `g(a, T)`: for `a = 1` the value with `theta = +1`, for
/// `a = 0` the triangle-inequality bound on `|g(0, T)|`.
pub fn g_bound(a: u8, t: f64) -> Result<f64> {
    let af = check_parity(a)?;
    check_height(t)?;
    let theta_term = 1.0 / (3.0 * ComplexPoint::new(0.5 + af, t).norm());
    let explicit = explicit_stirling_terms(af, t);
    Ok(if a == 1 {
        explicit + theta_term
    } else {
        explicit.abs() + theta_term
    })
}

/// `G(a, delta, t)`, the bound on `|Delta_+ arg Gamma((s+a)/2) + Delta_- arg Gamma((s+a)/2)|`
/// across a horizontal segment of half-width `delta` centred on the
/// critical line at height `t`.
pub fn big_g(a: u8, delta: f64, t: f64) -> Result<f64> {
    let a = check_parity(a)?;
    check_height(t)?;
    if !(0.0..=3.0).contains(&delta) {
        return domain(format!("delta must lie in [0, 3], got {delta}"));
    }
    let c = a + 0.5;
    let h = a - 0.5;
    let arctan_terms = 0.5 * (h + delta) * ((c + delta) / t).atan()
        + 0.5 * (h - delta) * ((c - delta) / t).atan()
        - h * (c / t).atan();
    let d2 = delta * delta;
    let denom = t * t + c * c;
    let log_term = 0.25 * t * ((2.0 * d2 * (t * t - c * c) + d2 * d2) / (denom * denom)).ln_1p();
    let theta_terms = (1.0 / ComplexPoint::new(c + delta, t).norm()
        + 1.0 / ComplexPoint::new(c - delta, t).norm()
        + 2.0 / ComplexPoint::new(c, t).norm())
        / 3.0;
    Ok(arctan_terms - log_term + theta_terms)
}

/// `F(delta, t) = 2 atan(1/2t) - atan((1/2 + delta)/t) - atan((1/2 - delta)/t)`.
pub fn big_f(delta: f64, t: f64) -> Result<f64> {
    check_height(t)?;
    if !(0.0..3.5).contains(&delta) {
        return domain(format!("delta must lie in [0, 3.5), got {delta}"));
    }
    Ok(2.0 * (0.5 / t).atan() - ((0.5 + delta) / t).atan() - ((0.5 - delta) / t).atan())
}

/// Which boundary weight to evaluate. Each is tied to one quarter arc of
/// the Jensen circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WeightKind {
    /// `w`, used on `[pi/2, pi]`.
    W,
    /// `w*`, used on `[pi, 3pi/2]`.
    WStar,
    /// `w~`, used on `[0, pi/2]`.
    WTilde,
    /// `w~*`, used on `[-pi/2, 0]`.
    WTildeStar,
}

impl WeightKind {
    /// The arc on which the weight is meant to be used.
    pub fn arc(self) -> (f64, f64) {
        use std::f64::consts::{FRAC_PI_2, PI};
        match self {
            WeightKind::W => (FRAC_PI_2, PI),
            WeightKind::WStar => (PI, 1.5 * PI),
            WeightKind::WTilde => (0.0, FRAC_PI_2),
            WeightKind::WTildeStar => (-FRAC_PI_2, 0.0),
        }
    }
}

pub fn boundary_weight(kind: WeightKind, t: f64, phi: f64, eta: f64, r: f64) -> Result<f64> {
    check_height(t)?;
    if !(eta > 0.0 && eta <= 0.5) {
        return domain(format!("eta must lie in (0, 1/2], got {eta}"));
    }
    if !(r > 1.0 && r.is_finite()) {
        return domain(format!("r must exceed 1, got {r}"));
    }
    let radius = r * (0.5 + eta);
    let (offset, with_sine) = match kind {
        WeightKind::W => (2.0 + eta, true),
        WeightKind::WStar => (2.0 + eta, false),
        WeightKind::WTilde => (eta, true),
        WeightKind::WTildeStar => (eta, false),
    };
    let sine = if with_sine {
        2.0 * radius * phi.sin() / t
    } else {
        0.0
    };
    let quad = (radius * radius + offset * offset + 2.0 * radius * offset * phi.cos()) / (t * t);
    let radicand = 1.0 + sine + quad;
    if radicand <= 0.0 {
        return domain(format!(
            "non-positive radicand {radicand} for {kind:?} at phi = {phi}"
        ));
    }
    Ok(radicand.sqrt())
}
