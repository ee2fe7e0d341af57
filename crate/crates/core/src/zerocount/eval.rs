//! Dirichlet L-functions via Hurwitz zeta, and the completed functions
//! `xi(s, chi)` and `xi_K(s)` for `K = Q` or a quadratic field.

use crate::characters::{kronecker_character, DirichletCharacter};
use crate::error::{domain, Error, Result};
use crate::special::{
    ensure_finite, hurwitz_constant_term, hurwitz_zeta, log_gamma_complex, ComplexPoint,
    EvalTolerance,
};

use std::f64::consts::PI;

/// `L(s, chi) = k^{-s} sum_{a=1}^{k} chi(a) zeta(s, a/k)`. At `s = 1` the
/// poles cancel for nonprincipal `chi` and the constant Laurent terms are
/// summed instead.
pub fn eval_l(
    s: ComplexPoint,
    chi: &DirichletCharacter,
    tol: EvalTolerance,
) -> Result<ComplexPoint> {
    let k = chi.modulus();
    if s == ComplexPoint::new(1.0, 0.0) {
        if chi.is_principal() {
            return Err(Error::Pole(format!("L(s, {chi}) at s = 1")));
        }
        let mut acc = ComplexPoint::new(0.0, 0.0);
        for a in 1..=k {
            if chi.exponent(a as i64).is_some() {
                acc += chi.value(a as i64) * hurwitz_constant_term(a as f64 / k as f64, tol)?;
            }
        }
        return ensure_finite(acc / k as f64, "eval_l");
    }
    let mut acc = ComplexPoint::new(0.0, 0.0);
    for a in 1..=k {
        if chi.exponent(a as i64).is_none() {
            continue;
        }
        acc += chi.value(a as i64) * hurwitz_zeta(s, a as f64 / k as f64, tol)?;
    }
    ensure_finite(acc * (-s * (k as f64).ln()).exp(), "eval_l")
}

fn require_primitive_nonprincipal(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_principal() {
        return domain(format!("{chi} is principal"));
    }
    if !chi.is_primitive() {
        return Err(Error::NotPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    Ok(())
}

/// `log[(k/pi)^{(s+a)/2} Gamma((s+a)/2)]`.
pub(crate) fn log_gamma_factor_chi(
    s: ComplexPoint,
    chi: &DirichletCharacter,
) -> Result<ComplexPoint> {
    let half = (s + chi.parity() as f64) * 0.5;
    Ok(half * (chi.modulus() as f64 / PI).ln() + log_gamma_complex(half)?)
}

/// `xi(s, chi) = (k/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi)` for primitive
/// nonprincipal `chi`.
pub fn eval_xi_chi(
    s: ComplexPoint,
    chi: &DirichletCharacter,
    tol: EvalTolerance,
) -> Result<ComplexPoint> {
    require_primitive_nonprincipal(chi)?;
    let factor = log_gamma_factor_chi(s, chi)?.exp();
    ensure_finite(factor * eval_l(s, chi, tol)?, "eval_xi_chi")
}

/// Signature `(r1, r2)`, degree and absolute discriminant of the field
/// with discriminant `d` (`d = 1` stands for `Q`).
pub(crate) fn field_data(d: i64) -> (u32, u32, u32, u64) {
    match d {
        1 => (1, 0, 1, 1),
        d if d > 0 => (2, 0, 2, d as u64),
        d => (0, 1, 2, d.unsigned_abs()),
    }
}

/// `log` of `s(s-1) (d_K / (pi^n 2^{2 r2}))^{s/2} Gamma(s/2)^{r1} Gamma(s)^{r2}`.
pub(crate) fn log_gamma_factor_field(s: ComplexPoint, d: i64) -> Result<ComplexPoint> {
    let (r1, r2, n, dk) = field_data(d);
    let scale = (dk as f64).ln() - n as f64 * PI.ln() - 2.0 * r2 as f64 * 2f64.ln();
    let mut acc = (s * (s - 1.0)).ln() + s * 0.5 * scale;
    if r1 > 0 {
        acc += log_gamma_complex(s * 0.5)? * r1 as f64;
    }
    if r2 > 0 {
        acc += log_gamma_complex(s)? * r2 as f64;
    }
    Ok(acc)
}

/// `zeta_K(s) = zeta(s) L(s, chi_d)`, or `zeta(s)` when `chi` is `None`.
pub(crate) fn dedekind_zeta(
    s: ComplexPoint,
    chi: Option<&DirichletCharacter>,
    tol: EvalTolerance,
) -> Result<ComplexPoint> {
    let zeta = hurwitz_zeta(s, 1.0, tol)?;
    match chi {
        None => Ok(zeta),
        Some(chi) => Ok(zeta * eval_l(s, chi, tol)?),
    }
}

/// The completed Dedekind zeta-function of `Q` (`d = 1`) or of the quadratic
/// field of fundamental discriminant `d`.
pub fn eval_xi_quadratic(s: ComplexPoint, d: i64, tol: EvalTolerance) -> Result<ComplexPoint> {
    let chi = if d == 1 {
        None
    } else {
        Some(kronecker_character(d)?)
    };
    if s == ComplexPoint::new(1.0, 0.0) || s == ComplexPoint::new(0.0, 0.0) {
        return Err(Error::Pole(format!(
            "xi_K evaluated at removable point {s}"
        )));
    }
    let factor = log_gamma_factor_field(s, d)?.exp();
    ensure_finite(
        factor * dedekind_zeta(s, chi.as_ref(), tol)?,
        "eval_xi_quadratic",
    )
}
