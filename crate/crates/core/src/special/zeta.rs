use super::{ensure_finite, ComplexPoint, EvalTolerance, BERNOULLI_EVEN};
use crate::error::{domain, Error, Result};

/// Euler-Maclaurin correction terms kept: B_2 through B_12.
const EM_ORDER: usize = 6;

/// `|B_14| / 14!`, the coefficient of the first omitted correction term.
const OMITTED_COEF: f64 = (7.0 / 6.0) / 87_178_291_200.0;

/// Smallest cutoff `N` for which the first omitted Euler-Maclaurin term
/// at `N + a` falls below `tol`.
fn em_cutoff(s: ComplexPoint, a: f64, tol: &EvalTolerance) -> Result<usize> {
    let order = (2 * EM_ORDER + 1) as f64;
    let decay = s.re + order;
    if decay <= 1.0 {
        return domain(format!("Re(s) = {} too far left for Euler-Maclaurin", s.re));
    }
    let poch: f64 = (0..(2 * EM_ORDER + 1))
        .map(|i| (s + i as f64).norm())
        .product();
    let growth = ((s + order).norm() / decay).max(1.0);
    let lead = OMITTED_COEF * poch * growth;
    let x = (lead / tol.abs_tol()).powf(1.0 / decay);
    let n = (x - a).ceil().max(4.0);
    if !n.is_finite() || n > tol.max_terms() as f64 {
        return Err(Error::NonConvergence(format!(
            "Euler-Maclaurin cutoff {n} exceeds max_terms {} at s = {s}",
            tol.max_terms()
        )));
    }
    Ok(n as usize)
}

/// Hurwitz zeta `sum_{n>=0} (n+a)^{-s}`, continued to `Re s > -1` and beyond
/// by Euler-Maclaurin summation with corrections through `B_12`.
pub fn hurwitz_zeta(s: ComplexPoint, a: f64, tol: EvalTolerance) -> Result<ComplexPoint> {
    if !(a > 0.0 && a <= 1.0) {
        return domain(format!("Hurwitz parameter a = {a} not in (0, 1]"));
    }
    ensure_finite(s, "hurwitz_zeta input")?;
    if s.re == 1.0 && s.im == 0.0 {
        return Err(Error::Pole("s = 1".into()));
    }
    let n = em_cutoff(s, a, &tol)?;

    let mut head = ComplexPoint::new(0.0, 0.0);
    for k in (0..n).rev() {
        head += (-s * (k as f64 + a).ln()).exp();
    }

    let x = n as f64 + a;
    let ln_x = x.ln();
    let x_neg_s = (-s * ln_x).exp();
    let mut tail = x_neg_s * x / (s - 1.0) + x_neg_s * 0.5;

    // term_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * x^{-s-2j+1}
    let mut rising = s;
    let mut power = x_neg_s / x;
    let mut inv_fact = 0.5;
    let inv_x2 = 1.0 / (x * x);
    for j in 1..=EM_ORDER {
        tail += rising * power * (BERNOULLI_EVEN[j - 1] * inv_fact);
        let m = (2 * j) as f64;
        rising *= (s + (m - 1.0)) * (s + m);
        power *= inv_x2;
        inv_fact /= (m + 1.0) * (m + 2.0);
    }
    ensure_finite(head + tail, "hurwitz_zeta")
}

/// Constant term of the Laurent expansion of `zeta(s, a)` at `s = 1`,
/// `lim (zeta(s, a) - 1/(s - 1)) = -digamma(a)`.
pub fn hurwitz_constant_term(a: f64, tol: EvalTolerance) -> Result<f64> {
    if !(a > 0.0 && a <= 1.0) {
        return domain(format!("Hurwitz parameter a = {a} not in (0, 1]"));
    }
    let n = em_cutoff(ComplexPoint::new(1.0, 0.0), a, &tol)?;
    let head: f64 = (0..n).rev().map(|k| 1.0 / (k as f64 + a)).sum();
    let x = n as f64 + a;
    let mut tail = -x.ln() + 0.5 / x;
    let mut rising = 1.0;
    let mut power = 1.0 / (x * x);
    let mut inv_fact = 0.5;
    for j in 1..=EM_ORDER {
        tail += BERNOULLI_EVEN[j - 1] * inv_fact * rising * power;
        let m = (2 * j) as f64;
        rising *= m * (m + 1.0);
        power /= x * x;
        inv_fact /= (m + 1.0) * (m + 2.0);
    }
    Ok(head + tail)
}

/// Riemann zeta on the real axis right of the pole.
pub fn zeta_real(sigma: f64, tol: EvalTolerance) -> Result<f64> {
    if !(sigma > 1.0 + 1e-6) || !sigma.is_finite() {
        return domain(format!("zeta_real requires sigma > 1 + 1e-6, got {sigma}"));
    }
    let n = em_cutoff(ComplexPoint::new(sigma, 0.0), 1.0, &tol)?;

    let head: f64 = (1..=n).rev().map(|k| (k as f64).powf(-sigma)).sum();
    let x = (n + 1) as f64;
    let x_neg_s = x.powf(-sigma);
    let mut tail = x_neg_s * x / (sigma - 1.0) + 0.5 * x_neg_s;

    let mut rising = sigma;
    let mut power = x_neg_s / x;
    let mut inv_fact = 0.5;
    for j in 1..=EM_ORDER {
        tail += BERNOULLI_EVEN[j - 1] * inv_fact * rising * power;
        let m = (2 * j) as f64;
        rising *= (sigma + m - 1.0) * (sigma + m);
        power /= x * x;
        inv_fact /= (m + 1.0) * (m + 2.0);
    }
    Ok(head + tail)
}
