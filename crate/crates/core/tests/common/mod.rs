//! Independent reference computations shared by the integration tests and
//! the acceptance gate. Nothing here calls back into the routine it checks.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use zerobound::characters::DirichletCharacter;
use zerobound::special::{
    big_f, big_g, boundary_weight, g_bound, hurwitz_zeta, log_gamma_complex, stirling_im_loggamma,
    zeta_real, WeightKind,
};
use zerobound::zerocount::{
    count_zeros_with, eval_l, eval_xi_chi, eval_xi_quadratic, CountOptions, Rectangle, Subject,
};
use zerobound::{
    derive_params, enumerate_characters, gauss_sum, kronecker_character, EvalTolerance, PRule,
};

pub type Check = Result<String, String>;

pub fn tol() -> EvalTolerance {
    EvalTolerance::new(1e-13, 1_000_000).unwrap()
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn within(label: &str, got: f64, want: f64, tol: f64) -> Check {
    let err = (got - want).abs();
    if err <= tol {
        Ok(format!(
            "{label}: {got:.12} vs {want:.12} (err {err:.1e} <= {tol:.0e})"
        ))
    } else {
        Err(format!(
            "{label}: {got:.12} vs {want:.12} (err {err:.1e} > {tol:.0e})"
        ))
    }
}

pub fn within_c(label: &str, got: Complex64, want: Complex64, tol: f64) -> Check {
    let err = (got - want).norm();
    if err <= tol {
        Ok(format!("{label}: err {err:.1e} <= {tol:.0e}"))
    } else {
        Err(format!(
            "{label}: {got} vs {want} (err {err:.1e} > {tol:.0e})"
        ))
    }
}

pub fn within_rel(label: &str, got: f64, want: f64, rel: f64) -> Check {
    let err = (got - want).abs() / want.abs();
    if err <= rel {
        Ok(format!("{label}: rel err {err:.1e} <= {rel:.0e}"))
    } else {
        Err(format!(
            "{label}: {got} vs {want} (rel err {err:.1e} > {rel:.0e})"
        ))
    }
}

pub fn ensure(label: &str, ok: bool, detail: String) -> Check {
    if ok {
        Ok(format!("{label}: {detail}"))
    } else {
        Err(format!("{label}: {detail}"))
    }
}

/// Runs every check, returning the first failure or the joined successes.
pub fn all(checks: Vec<Check>) -> Check {
    let mut lines = Vec::new();
    for c in checks {
        lines.push(c?);
    }
    Ok(lines.join("; "))
}

// ---------------------------------------------------------------- oracles

/// `sum_{n <= N} n^{-sigma}` (summed smallest first) plus the midpoint
/// integral tail `(N + 1/2)^{1 - sigma} / (sigma - 1)`.
pub fn zeta_brute(sigma: f64, n: u64) -> f64 {
    let head: f64 = (1..=n).rev().map(|k| (k as f64).powf(-sigma)).sum();
    head + (n as f64 + 0.5).powf(1.0 - sigma) / (sigma - 1.0)
}

/// Hurwitz zeta by direct summation to `n` and a three-term
/// Euler-Maclaurin tail, with no shared code.
pub fn hurwitz_fixed_cutoff(s: Complex64, a: f64, n: u64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (0..n).rev() {
        acc += (-s * (k as f64 + a).ln()).exp();
    }
    let x = n as f64 + a;
    let xs = (-s * x.ln()).exp();
    acc += xs * x / (s - 1.0) + xs * 0.5;
    // B2/2!, B4/4!, B6/6!
    let coeffs = [1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0];
    let mut rising = s;
    let mut power = xs / x;
    for (j, coeff) in coeffs.iter().enumerate() {
        acc += rising * power * *coeff;
        let m = 2 * j as u32 + 1;
        rising = rising * (s + m as f64) * (s + (m + 1) as f64);
        power /= x * x;
    }
    acc
}

/// Riemann zeta at complex `s` by Borwein's alternating-series
/// acceleration with `n` terms. Accurate for moderate `|Im s|`.
pub fn zeta_borwein(s: Complex64, n: usize) -> Complex64 {
    let nf = n as f64;
    let mut d = Vec::with_capacity(n + 1);
    let mut term = 1.0;
    let mut partial = term;
    d.push(partial);
    for i in 0..n {
        let i = i as f64;
        term *= 4.0 * (nf + i) * (nf - i) / ((2.0 * i + 1.0) * (2.0 * i + 2.0));
        partial += term;
        d.push(partial);
    }
    let dn = d[n];
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, dk) in d.iter().take(n).enumerate() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign * (dk - dn) * (-s * ((k + 1) as f64).ln()).exp();
    }
    // 1 - 2^{1-s}
    let eta_factor = 1.0 - ((1.0 - s) * 2f64.ln()).exp();
    -acc / (dn * eta_factor)
}

/// `log Gamma(z) = log Gamma(z + m) - sum_{k < m} log(z + k)`, with the
/// right side's `log Gamma` evaluated where Stirling needs no shift.
pub fn log_gamma_shifted(z: Complex64, m: u32) -> Complex64 {
    let zm = z + m as f64;
    let lead = (zm - 0.5) * zm.ln() - zm + 0.5 * (2.0 * PI).ln();
    let inv = 1.0 / zm;
    let inv2 = inv * inv;
    let series =
        inv * (1.0 / 12.0 + inv2 * (-1.0 / 360.0 + inv2 * (1.0 / 1260.0 + inv2 * (-1.0 / 1680.0))));
    let mut acc = lead + series;
    for k in 0..m {
        acc -= (z + k as f64).ln();
    }
    acc
}

/// `sum_{n <= N} chi(n) n^{-s}` with the trivial partial-summation tail
/// bound `2 max|sum chi| N^{-sigma}`.
pub fn l_direct(s: Complex64, chi: &DirichletCharacter, n: u64) -> (Complex64, f64) {
    let mut acc = Complex64::new(0.0, 0.0);
    for m in (1..=n).rev() {
        let v = chi.value(m as i64);
        if v.norm() > 0.0 {
            acc += v * (-s * (m as f64).ln()).exp();
        }
    }
    let k = chi.modulus() as i64;
    let mut run = Complex64::new(0.0, 0.0);
    let mut max_partial: f64 = 0.0;
    for m in 1..=k {
        run += chi.value(m);
        max_partial = max_partial.max(run.norm());
    }
    (acc, 2.0 * max_partial * (n as f64).powf(-s.re))
}

/// `sum chi(n) n^{-s} phi(n / x)` with `phi = 1` on `[0,1]`, `0` beyond 2,
/// and a quintic smoothstep between; converges rapidly for nonprincipal
/// `chi` because the periodic coefficients have mean zero.
pub fn l_smoothed(s: Complex64, chi: &DirichletCharacter, x: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let end = (2.0 * x).ceil() as u64;
    for m in (1..=end).rev() {
        let u = m as f64 / x;
        let w = if u <= 1.0 {
            1.0
        } else if u >= 2.0 {
            0.0
        } else {
            let v = 2.0 - u;
            v * v * v * (10.0 - 15.0 * v + 6.0 * v * v)
        };
        let chi_m = chi.value(m as i64);
        if w > 0.0 && chi_m.norm() > 0.0 {
            acc += chi_m * w * (-s * (m as f64).ln()).exp();
        }
    }
    acc
}

/// `sum_{n < terms} (-1)^n / (2n+1)^2`, smallest terms first.
pub fn catalan(terms: u64) -> f64 {
    let mut acc = 0.0;
    for n in (0..terms).rev() {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc += sign / ((2 * n + 1) as f64).powi(2);
    }
    acc
}

/// Composite Simpson with `panels` (even) subintervals.
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let h = (b - a) / panels as f64;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        let x = a + i as f64 * h;
        acc += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
    }
    acc * h / 3.0
}

pub fn primitive_nonprincipal(max_k: u64) -> Vec<DirichletCharacter> {
    (3..=max_k)
        .flat_map(|k| enumerate_characters(k).unwrap())
        .filter(|c| c.is_primitive() && !c.is_principal())
        .collect()
}

// ------------------------------------------------- special-function checks

pub fn check_zeta_real_examples() -> Check {
    all(vec![
        within(
            "zeta(2)",
            zeta_real(2.0, tol()).unwrap(),
            PI * PI / 6.0,
            1e-12,
        ),
        within(
            "zeta(4)",
            zeta_real(4.0, tol()).unwrap(),
            PI.powi(4) / 90.0,
            1e-12,
        ),
    ])
}

pub fn check_zeta_brute_force() -> Check {
    within(
        "zeta(1.5) vs 1e6-term sum + tail",
        zeta_real(1.5, tol()).unwrap(),
        zeta_brute(1.5, 1_000_000),
        1e-10,
    )
}

pub fn check_hurwitz_examples() -> Check {
    all(vec![
        within_c(
            "zeta(2, 1)",
            hurwitz_zeta(c(2.0, 0.0), 1.0, tol()).unwrap(),
            c(PI * PI / 6.0, 0.0),
            1e-12,
        ),
        within_c(
            "zeta(2, 1/2)",
            hurwitz_zeta(c(2.0, 0.0), 0.5, tol()).unwrap(),
            c(PI * PI / 2.0, 0.0),
            1e-12,
        ),
    ])
}

/// The library chooses its own cutoff; the oracle sums directly to a
/// cutoff far beyond it.
pub fn check_hurwitz_refined_cutoff() -> Check {
    let s = c(0.5, 10.0);
    let a = 1.0 / 3.0;
    all(vec![
        within_c(
            "zeta(0.5+10i, 1/3) vs fixed cutoff 400",
            hurwitz_zeta(s, a, tol()).unwrap(),
            hurwitz_fixed_cutoff(s, a, 400),
            1e-8,
        ),
        within_c(
            "zeta(0.5+10i, 1/3) vs fixed cutoff 1600",
            hurwitz_zeta(s, a, tol()).unwrap(),
            hurwitz_fixed_cutoff(s, a, 1600),
            1e-8,
        ),
    ])
}

/// `hurwitz_zeta(s, 1)` against Borwein's series at 20 points.
pub fn check_hurwitz_vs_complex_zeta() -> Check {
    let mut r = rng(11);
    let mut checks = Vec::new();
    for i in 0..20 {
        let s = c(r.random_range(-0.5..3.0), r.random_range(-10.0..10.0));
        let s = if (s - 1.0).norm() < 0.1 { s + 0.5 } else { s };
        checks.push(within_c(
            &format!("zeta at point {i}"),
            hurwitz_zeta(s, 1.0, tol()).unwrap(),
            zeta_borwein(s, 60),
            1e-9,
        ));
    }
    all(checks).map(|_| "hurwitz(s, 1) = Borwein zeta(s) at 20 points within 1e-9".into())
}

pub fn check_log_gamma_examples() -> Check {
    all(vec![
        within_c(
            "logGamma(1/2)",
            log_gamma_complex(c(0.5, 0.0)).unwrap(),
            c(0.5 * PI.ln(), 0.0),
            1e-12,
        ),
        within_c(
            "logGamma(5)",
            log_gamma_complex(c(5.0, 0.0)).unwrap(),
            c(24f64.ln(), 0.0),
            1e-12,
        ),
    ])
}

pub fn check_log_gamma_shift() -> Check {
    let z = c(0.25, 7.5);
    within_c(
        "logGamma(0.25+7.5i) vs shift by 20",
        log_gamma_complex(z).unwrap(),
        log_gamma_shifted(z, 20),
        1e-10,
    )
}

pub fn check_stirling_examples() -> Check {
    let s1 = stirling_im_loggamma(1, 1.0).unwrap();
    let s0 = stirling_im_loggamma(0, 10.0).unwrap();
    let big = stirling_im_loggamma(1, 1e6).unwrap();
    all(vec![
        within(
            "Im logGamma(3/4 + i/2) split",
            s1.value(),
            log_gamma_shifted(c(0.75, 0.5), 20).im,
            1e-10,
        ),
        within(
            "Im logGamma(1/4 + 5i) split",
            s0.value(),
            log_gamma_shifted(c(0.25, 5.0), 20).im,
            1e-10,
        ),
        ensure(
            "Stirling remainder within its bound",
            s1.remainder.abs() <= s1.remainder_bound && s0.remainder.abs() <= s0.remainder_bound,
            format!("{:.2e} <= {:.2e}", s1.remainder.abs(), s1.remainder_bound),
        ),
        within("a=1, T=1e6 limit", big.value() - big.main, PI / 8.0, 1e-5),
    ])
}

/// `g(a, T)` re-evaluated from its three displayed terms.
pub fn g_bound_oracle(a: u8, t: f64) -> f64 {
    let a = a as f64;
    let first = t / 4.0 * (1.0 + (0.5 + a).powi(2) / (t * t)).ln();
    let second = (2.0 * a - 1.0) / 4.0 * (t / (0.5 + a)).atan();
    let third = 1.0 / (3.0 * ((0.5 + a).powi(2) + t * t).sqrt());
    (first + second).abs() + third
}

pub fn check_g_bound_examples() -> Check {
    all(vec![
        within("g(1,1)", g_bound(1, 1.0).unwrap(), 0.62656, 1e-4),
        within("g(0,1)", g_bound(0, 1.0).unwrap(), 0.51914, 1e-4),
        within(
            "g(1,1) oracle",
            g_bound(1, 1.0).unwrap(),
            g_bound_oracle(1, 1.0),
            1e-12,
        ),
        within(
            "g(0,1) oracle",
            g_bound(0, 1.0).unwrap(),
            g_bound_oracle(0, 1.0),
            1e-12,
        ),
        within("g(1,1e6)", g_bound(1, 1e6).unwrap(), PI / 8.0, 1e-5),
    ])
}

/// `G(a, delta, t)` with arctangents as arguments and the logarithm as a
/// ratio of squared moduli.
pub fn big_g_oracle(a: u8, delta: f64, t: f64) -> f64 {
    let cc = a as f64 + 0.5;
    let h = a as f64 - 0.5;
    let z = |x: f64| Complex64::new(t, x);
    let args = 0.5 * (h + delta) * z(cc + delta).arg() + 0.5 * (h - delta) * z(cc - delta).arg()
        - h * z(cc).arg();
    let sq = |x: f64| Complex64::new(x, t).norm_sqr();
    let log = t / 4.0 * (sq(cc + delta) * sq(cc - delta) / (sq(cc) * sq(cc))).ln();
    let theta =
        (1.0 / sq(cc + delta).sqrt() + 1.0 / sq(cc - delta).sqrt() + 2.0 / sq(cc).sqrt()) / 3.0;
    args - log + theta
}

pub fn check_big_g_examples() -> Check {
    let delta = 2f64.sqrt() * 0.75;
    all(vec![
        within("G(0,0,1)", big_g(0, 0.0, 1.0).unwrap(), 1.19257, 1e-5),
        within("G(1,0,2)", big_g(1, 0.0, 2.0).unwrap(), 0.53333, 1e-5),
        within(
            "G(0, 1.0607, 1) oracle",
            big_g(0, delta, 1.0).unwrap(),
            big_g_oracle(0, delta, 1.0),
            1e-10,
        ),
    ])
}

pub fn check_big_f_examples() -> Check {
    let delta = 2f64.sqrt() * 0.75;
    let oracle = Complex64::new(1.0, 0.5).arg() * 2.0
        - Complex64::new(1.0, 0.5 + delta).arg()
        - Complex64::new(1.0, 0.5 - delta).arg();
    all(vec![
        within("F(0,5)", big_f(0.0, 5.0).unwrap(), 0.0, 1e-15),
        within(
            "F(1.0607,1) oracle",
            big_f(delta, 1.0).unwrap(),
            oracle,
            1e-12,
        ),
        within("F(1,1e6)", big_f(1.0, 1e6).unwrap(), 0.0, 1e-5),
    ])
}

pub fn check_boundary_weight_examples() -> Check {
    let (eta, r) = (0.25, 1.714286);
    let radius = r * (0.5 + eta);
    let w_tilde = boundary_weight(WeightKind::WTilde, 2.0, PI / 2.0, eta, r).unwrap();
    // |eta + R e^{i phi} + iT| / T
    let oracle = (Complex64::new(eta, 2.0) + Complex64::from_polar(radius, PI / 2.0)).norm() / 2.0;
    all(vec![
        within(
            "w(1, pi)",
            boundary_weight(WeightKind::W, 1.0, PI, eta, r).unwrap(),
            1.38919,
            1e-4,
        ),
        within(
            "w(1, pi) arithmetic",
            boundary_weight(WeightKind::W, 1.0, PI, eta, r).unwrap(),
            (1.0 + (radius - 2.25f64).powi(2)).sqrt(),
            1e-12,
        ),
        within(
            "w*(1e6, 4)",
            boundary_weight(WeightKind::WStar, 1e6, 4.0, eta, r).unwrap(),
            1.0,
            1e-6,
        ),
        within("w~(2, pi/2) oracle", w_tilde, oracle, 1e-10),
    ])
}

// -------------------------------------------------------- quadrature checks

pub fn w_integrand(phi: f64) -> f64 {
    -phi.cos()
        * boundary_weight(WeightKind::W, 1.0, phi, 0.25, 1.714286)
            .unwrap()
            .ln()
}

pub fn check_quadrature_examples() -> Check {
    use zerobound::integrate;
    let cos = integrate(f64::cos, 0.0, PI / 2.0, 1e-10).unwrap();
    let log = integrate(f64::ln_1p, 0.0, 1.0, 1e-10).unwrap();
    let w = integrate(w_integrand, PI / 2.0, PI, 1e-9).unwrap();
    all(vec![
        within("int cos", cos.value, 1.0, 1e-10),
        within("int log(1+x)", log.value, 2.0 * 2f64.ln() - 1.0, 1e-9),
        within(
            "int (-cos) log w vs 1e4-panel Simpson",
            w.value,
            simpson(w_integrand, PI / 2.0, PI, 10_000),
            1e-8,
        ),
    ])
}

// --------------------------------------------------------- character checks

pub fn check_character_examples() -> Check {
    let k3 = enumerate_characters(3).unwrap();
    let k4 = enumerate_characters(4).unwrap();
    let k8 = enumerate_characters(8).unwrap();
    let nontrivial3: Vec<_> = k3.iter().filter(|c| !c.is_principal()).collect();
    let nontrivial4: Vec<_> = k4.iter().filter(|c| !c.is_principal()).collect();
    let tau3 = gauss_sum(nontrivial3[0]).unwrap();
    let tau4 = gauss_sum(nontrivial4[0]).unwrap();
    let tau5: Vec<_> = enumerate_characters(5)
        .unwrap()
        .into_iter()
        .filter(|c| c.is_primitive())
        .map(|c| gauss_sum(&c).unwrap().norm_sqr())
        .collect();
    let d5 = kronecker_character(5).unwrap();
    all(vec![
        ensure(
            "mod 3",
            k3.len() == 2
                && nontrivial3.len() == 1
                && nontrivial3[0].is_primitive()
                && nontrivial3[0].parity() == 1
                && nontrivial3[0].value(2) == c(-1.0, 0.0),
            "one odd primitive character".into(),
        ),
        ensure(
            "mod 4",
            k4.len() == 2 && nontrivial4[0].is_primitive() && nontrivial4[0].parity() == 1,
            "one odd primitive character".into(),
        ),
        ensure(
            "mod 8",
            k8.len() == 4 && k8.iter().filter(|c| c.conductor() == 8).count() == 2,
            "two of conductor 8".into(),
        ),
        within("Re tau mod 3", tau3.re, 0.0, 1e-12),
        within("|tau|^2 mod 3", tau3.norm_sqr(), 3.0, 1e-12),
        within("|tau| mod 4", tau4.norm(), 2.0, 1e-12),
        ensure(
            "|tau|^2 mod 5",
            tau5.len() == 3 && tau5.iter().all(|v| (v - 5.0).abs() < 1e-10),
            format!("{tau5:?}"),
        ),
        ensure(
            "chi_5",
            d5.parity() == 0
                && d5.value(2) == c(-1.0, 0.0)
                && d5.is_primitive()
                && d5.modulus() == 5,
            "even, chi(2) = -1".into(),
        ),
        ensure(
            "chi_-4, chi_-3",
            kronecker_character(-4).unwrap().value(3) == c(-1.0, 0.0)
                && kronecker_character(-3).unwrap().value(2) == c(-1.0, 0.0),
            "match the unique nontrivial characters".into(),
        ),
    ])
}

// ---------------------------------------------------------- L and xi checks

fn chi_mod(k: u64) -> DirichletCharacter {
    enumerate_characters(k)
        .unwrap()
        .into_iter()
        .find(|c| c.is_primitive() && !c.is_principal())
        .unwrap()
}

pub fn check_l_examples() -> Check {
    let chi4 = chi_mod(4);
    let chi3 = chi_mod(3);
    let (direct, tail) = l_direct(c(2.0, 0.0), &chi3, 100_000);
    let l3 = eval_l(c(2.0, 0.0), &chi3, tol()).unwrap();
    let mut checks = vec![
        within_c(
            "L(2, chi_4) = Catalan",
            eval_l(c(2.0, 0.0), &chi4, tol()).unwrap(),
            c(catalan(1_000_000), 0.0),
            1e-11,
        ),
        within_c("L(2, chi_3) vs 1e5-term series", l3, direct, 1e-9 + tail),
        within_c(
            "L(1, chi_4) = pi/4",
            eval_l(c(1.0, 0.0), &chi4, tol()).unwrap(),
            c(PI / 4.0, 0.0),
            1e-11,
        ),
        within_c(
            "L(1, chi_3) = pi/(3 sqrt 3)",
            eval_l(c(1.0, 0.0), &chi3, tol()).unwrap(),
            c(PI / (3.0 * 3f64.sqrt()), 0.0),
            1e-11,
        ),
    ];
    for chi in enumerate_characters(5)
        .unwrap()
        .into_iter()
        .filter(|c| c.is_primitive())
    {
        let s = c(1.5, 10.0);
        checks.push(within_c(
            &format!("L(1.5+10i, {chi}) vs smoothed series"),
            eval_l(s, &chi, tol()).unwrap(),
            l_smoothed(s, &chi, 200_000.0),
            1e-8,
        ));
    }
    all(checks)
}

pub fn check_xi_examples() -> Check {
    let chi3 = chi_mod(3);
    let chi4 = chi_mod(4);
    let chi5: Vec<_> = enumerate_characters(5)
        .unwrap()
        .into_iter()
        .filter(|c| c.is_primitive())
        .collect();
    let mut checks = Vec::new();
    for (s, chis) in [
        (c(0.3, 2.0), vec![chi3.clone()]),
        (c(0.7, 11.3), chi5.clone()),
    ] {
        for chi in chis {
            let left = eval_xi_chi(1.0 - s, &chi.conj(), tol()).unwrap().norm();
            let right = eval_xi_chi(s, &chi, tol()).unwrap().norm();
            checks.push(within_rel(
                &format!("|xi(1-s, conj chi)| = |xi(s, chi)|, {chi}, s={s}"),
                left,
                right,
                1e-8,
            ));
        }
    }
    // full identity xi(1-s, conj chi) = i^a sqrt(k) / tau(chi) * xi(s, chi)
    for chi in chi5.iter().chain([&chi3, &chi4]) {
        let s = c(0.7, 11.3);
        let ia = if chi.parity() == 1 {
            c(0.0, 1.0)
        } else {
            c(1.0, 0.0)
        };
        let factor = ia * (chi.modulus() as f64).sqrt() / gauss_sum(chi).unwrap();
        let lhs = eval_xi_chi(1.0 - s, &chi.conj(), tol()).unwrap();
        let rhs = factor * eval_xi_chi(s, chi, tol()).unwrap();
        checks.push(within_rel(
            &format!("functional equation, {chi}"),
            (lhs - rhs).norm() + rhs.norm(),
            rhs.norm(),
            1e-8,
        ));
    }
    // factor-by-factor: (4/pi)^{3/2} Gamma(3/2) L(2, chi_4)
    let direct = (4.0 / PI).powf(1.5) * (PI.sqrt() / 2.0) * catalan(1_000_000);
    checks.push(within_c(
        "xi(2, chi_4) factor product",
        eval_xi_chi(c(2.0, 0.0), &chi4, tol()).unwrap(),
        c(direct, 0.0),
        1e-9,
    ));
    all(checks)
}

pub fn check_xi_quadratic_examples() -> Check {
    let sym = |d: i64, s: Complex64| {
        let a = eval_xi_quadratic(s, d, tol()).unwrap();
        let b = eval_xi_quadratic(1.0 - s, d, tol()).unwrap();
        within_rel(
            &format!("xi_K(s) = xi_K(1-s), d={d}, s={s}"),
            (a - b).norm() + a.norm(),
            a.norm(),
            1e-8,
        )
    };
    // 2 * 3/(4 pi^2) * Gamma(2) * zeta(2) * L(2, chi_-3)
    let chi = kronecker_character(-3).unwrap();
    let (l, tail) = l_direct(c(2.0, 0.0), &chi, 100_000);
    let direct = 2.0 * 3.0 / (4.0 * PI * PI) * (PI * PI / 6.0) * l.re;
    let got = eval_xi_quadratic(c(2.0, 0.0), -3, tol()).unwrap();
    all(vec![
        sym(-4, c(0.3, 5.0)),
        sym(1, c(0.4, 20.0)),
        within_c(
            "xi_K(2), d=-3 factor product",
            got,
            c(direct, 0.0),
            1e-9 + tail,
        ),
    ])
}

// ------------------------------------------------------------ zero counts

pub fn count_with_density(subject: &Subject, t: f64, density: f64) -> u64 {
    let mut opts = CountOptions::default();
    opts.winding = opts.winding.denser(density);
    count_zeros_with(subject, Rectangle::with_height(t).unwrap(), &opts)
        .unwrap()
        .n
}

/// Count at default density and at four times the density.
pub fn check_count(label: &str, subject: &Subject, t: f64, expected: u64) -> Check {
    let base = count_with_density(subject, t, 1.0);
    let dense = count_with_density(subject, t, 4.0);
    ensure(
        label,
        base == expected && dense == expected,
        format!("N = {base}, 4x density N = {dense}, expected {expected}"),
    )
}

pub fn check_count_examples() -> Check {
    let zeta = Subject::quadratic(1).unwrap();
    let chi3 = Subject::dirichlet(chi_mod(3)).unwrap();
    all(vec![
        check_count("zeta, T=10", &zeta, 10.0, 0),
        check_count("zeta, T=15", &zeta, 15.0, 2),
        check_count("chi mod 3, T=5", &chi3, 5.0, 0),
    ])
}

pub fn check_tau_squared() -> Check {
    let mut worst: f64 = 0.0;
    for chi in (3..=30u64)
        .flat_map(|k| enumerate_characters(k).unwrap())
        .filter(|c| c.is_primitive())
    {
        let tau = gauss_sum(&chi).unwrap();
        worst = worst.max((tau.norm_sqr() - chi.modulus() as f64).abs());
    }
    ensure(
        "|tau|^2 = k, k <= 30",
        worst < 1e-10,
        format!("max deviation {worst:.1e}"),
    )
}

// ------------------------------------------------------------ inequalities

fn zeta_k_complex(s: Complex64, d: i64) -> Complex64 {
    let z = hurwitz_zeta(s, 1.0, tol()).unwrap();
    if d == 1 {
        z
    } else {
        z * eval_l(s, &kronecker_character(d).unwrap(), tol()).unwrap()
    }
}

fn zeta_k_real(sigma: f64, d: i64) -> f64 {
    zeta_k_complex(c(sigma, 0.0), d).re
}

fn random_heights(seed: u64, count: usize, max: f64) -> Vec<f64> {
    let mut r = rng(seed);
    (0..count).map(|_| r.random_range(0.0..max)).collect()
}

/// `zeta(2 sigma)/zeta(sigma) <= |L(sigma + it)| <= zeta(sigma)` for every
/// primitive nonprincipal character with modulus at most 12.
pub fn check_sandwich_dirichlet() -> Check {
    let heights = random_heights(5, 20, 50.0);
    let mut points = 0;
    for chi in primitive_nonprincipal(12) {
        for sigma in [1.2, 1.5, 2.0] {
            let upper = zeta_real(sigma, tol()).unwrap();
            let lower = zeta_real(2.0 * sigma, tol()).unwrap() / upper;
            for &t in &heights {
                let l = eval_l(c(sigma, t), &chi, tol()).unwrap().norm();
                if !(lower <= l && l <= upper) {
                    return Err(format!(
                        "{chi} at {sigma}+{t}i: {lower} <= {l} <= {upper} fails"
                    ));
                }
                points += 1;
            }
        }
    }
    Ok(format!("Dirichlet sandwich holds at {points} points"))
}

/// `zeta_K(2 sigma)/zeta_K(sigma) <= |zeta_K(sigma + it)| <= zeta(sigma)^n`.
pub fn check_sandwich_dedekind() -> Check {
    let heights = random_heights(6, 20, 50.0);
    let mut points = 0;
    for d in [-4i64, -3, 5] {
        for sigma in [1.2, 1.5, 2.0] {
            let upper = zeta_real(sigma, tol()).unwrap().powi(2);
            let lower = zeta_k_real(2.0 * sigma, d) / zeta_k_real(sigma, d);
            for &t in &heights {
                let z = zeta_k_complex(c(sigma, t), d).norm();
                if !(lower <= z && z <= upper) {
                    return Err(format!(
                        "d={d} at {sigma}+{t}i: {lower} <= {z} <= {upper} fails"
                    ));
                }
                points += 1;
            }
        }
    }
    Ok(format!("Dedekind sandwich holds at {points} points"))
}

/// `|L(s)| <= (k |s+1| / 2 pi)^{(1 + eta - sigma)/2} zeta(1 + eta)` on
/// `-eta <= sigma <= 1 + eta`, `|t| <= 30`, with `eta = 1/4`.
pub fn check_convexity_dirichlet() -> Check {
    let eta = 0.25;
    let zeta_eta = zeta_real(1.0 + eta, tol()).unwrap();
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for chi in primitive_nonprincipal(12) {
        let k = chi.modulus() as f64;
        for i in 0..=12 {
            let sigma = -eta + (1.0 + 2.0 * eta) * i as f64 / 12.0;
            for j in -30..=30 {
                let s = c(sigma, j as f64);
                let l = eval_l(s, &chi, tol()).unwrap().norm();
                let bound =
                    (k * (s + 1.0).norm() / (2.0 * PI)).powf((1.0 + eta - sigma) / 2.0) * zeta_eta;
                worst = worst.max(l / bound);
                points += 1;
            }
        }
    }
    ensure(
        "Dirichlet convexity",
        worst <= 1.0,
        format!("max |L|/bound = {worst:.3} over {points} points"),
    )
}

/// The Dedekind convexity bound for `a(s) = (s - 1) zeta_K(s)` with
/// `eta = 1/4`, `p = -eta/7`, on `p <= sigma <= 1 + eta`, `|t| <= 30`.
pub fn check_convexity_dedekind() -> Check {
    let eta: f64 = 0.25;
    let p = -eta / 7.0;
    let mut worst: f64 = 0.0;
    let mut points = 0;
    for d in [-4i64, 5] {
        let dk = d.unsigned_abs() as f64;
        let n = 2;
        let z_eta = zeta_k_real(1.0 + eta, d);
        let z_p = zeta_k_real(1.0 - p, d);
        for i in 0..=12 {
            let sigma = p + (1.0 + eta - p) * i as f64 / 12.0;
            for j in -30..=30 {
                let s = c(sigma, j as f64);
                let lhs = ((s - 1.0) * zeta_k_complex(s, d))
                    .norm()
                    .powf(1.0 + eta - p);
                let m = (s + 1.0).norm();
                let rhs = ((1.0 - p) / (1.0 + p)).powf(1.0 + eta - sigma)
                    * z_eta.powf(sigma - p)
                    * z_p.powf(1.0 + eta - sigma)
                    * m.powf(1.0 + eta - p)
                    * (dk * (m / (2.0 * PI)).powi(n)).powf((1.0 + eta - sigma) * (0.5 - p));
                worst = worst.max(lhs / rhs);
                points += 1;
            }
        }
    }
    ensure(
        "Dedekind convexity",
        worst <= 1.0,
        format!("max lhs/rhs = {worst:.3} over {points} points"),
    )
}

// ------------------------------------------------------------ monotonicity

/// `g(0,T) <= g(1,T)` and `g(1,T)` non-increasing on `T = 1, 1.5, ..., 100`.
pub fn check_g_bound_monotone() -> Check {
    let mut prev = f64::INFINITY;
    for i in 0..=198 {
        let t = 1.0 + 0.5 * i as f64;
        let g1 = g_bound(1, t).unwrap();
        let g0 = g_bound(0, t).unwrap();
        if g0 > g1 || g1 > prev {
            return Err(format!("g_bound ordering or monotonicity fails at T = {t}"));
        }
        prev = g1;
    }
    Ok("g_bound: 199 heights, ordered and non-increasing".into())
}

/// `G` non-increasing in `t`, non-decreasing in `delta`, and
/// `G(1, ., .) <= G(0, ., .)` on a 20 x 20 grid.
pub fn check_big_g_monotone() -> Check {
    let delta = |i: usize| 3.0 * i as f64 / 19.0;
    let height = |j: usize| 1.0 + 49.0 * j as f64 / 19.0;
    for a in [0, 1] {
        for i in 0..20 {
            for j in 0..20 {
                let v = big_g(a, delta(i), height(j)).unwrap();
                let down_t = j > 0 && v > big_g(a, delta(i), height(j - 1)).unwrap();
                let down_d = i > 0 && v < big_g(a, delta(i - 1), height(j)).unwrap();
                let order =
                    big_g(1, delta(i), height(j)).unwrap() > big_g(0, delta(i), height(j)).unwrap();
                if down_t || down_d || order {
                    return Err(format!(
                        "big_g claim fails at a={a}, delta={}, t={}",
                        delta(i),
                        height(j)
                    ));
                }
            }
        }
    }
    Ok("big_g: 800 grid points monotone, G(1) <= G(0)".into())
}

/// Each boundary weight is non-increasing in `T` on its arc, and the
/// starred weights dominate the unstarred ones on the starred arcs.
pub fn check_weights_monotone() -> Check {
    let kinds = [
        WeightKind::W,
        WeightKind::WStar,
        WeightKind::WTilde,
        WeightKind::WTildeStar,
    ];
    let mut points = 0;
    for eta in [0.05, 0.25, 0.5] {
        let r = derive_params(eta, PRule::EtaOver7, 1.0).unwrap().r;
        for kind in kinds {
            let (lo, hi) = kind.arc();
            for i in 0..=20 {
                let phi = lo + (hi - lo) * i as f64 / 20.0;
                let mut prev = f64::INFINITY;
                for j in 0..40 {
                    let t = 1.0 + 2.5 * j as f64;
                    let w = boundary_weight(kind, t, phi, eta, r).unwrap();
                    if w > prev + 1e-15 {
                        return Err(format!("{kind:?} increases at eta={eta}, phi={phi}, T={t}"));
                    }
                    prev = w;
                    points += 1;
                }
            }
        }
        for (plain, starred) in [
            (WeightKind::W, WeightKind::WStar),
            (WeightKind::WTilde, WeightKind::WTildeStar),
        ] {
            let (lo, hi) = starred.arc();
            for i in 0..=20 {
                let phi = lo + (hi - lo) * i as f64 / 20.0;
                for t in [1.0, 2.0, 10.0] {
                    if boundary_weight(plain, t, phi, eta, r).unwrap()
                        > boundary_weight(starred, t, phi, eta, r).unwrap() + 1e-15
                    {
                        return Err(format!(
                            "{starred:?} fails to dominate at eta={eta}, phi={phi}, T={t}"
                        ));
                    }
                }
            }
        }
    }
    Ok(format!(
        "boundary weights: {points} samples non-increasing in T, starred bounds hold"
    ))
}

// ------------------------------------------------------- published tables

pub const ETA_GRID: [f64; 10] = [0.05, 0.10, 0.15, 0.20, 0.25, 0.30, 0.35, 0.40, 0.45, 0.50];
pub const PUBLISHED_C1: [f64; 10] = [
    0.248, 0.265, 0.282, 0.300, 0.317, 0.334, 0.351, 0.369, 0.386, 0.403,
];
pub const PUBLISHED_C2_T1: [f64; 10] = [
    9.339, 8.015, 7.280, 6.778, 6.401, 6.101, 5.852, 5.640, 5.456, 5.294,
];
pub const PUBLISHED_C2_T10: [f64; 10] = [
    8.666, 7.311, 6.549, 6.021, 5.616, 5.288, 5.011, 4.770, 4.556, 4.363,
];
pub const PUBLISHED_D1: [f64; 10] = PUBLISHED_C1;
pub const PUBLISHED_D2_T1: [f64; 10] = [
    9.270, 7.947, 7.211, 6.710, 6.333, 6.032, 5.784, 5.572, 5.388, 5.225,
];
pub const PUBLISHED_D3_T1: [f64; 10] = [
    3.005, 3.121, 3.239, 3.359, 3.482, 3.607, 3.733, 3.860, 3.988, 4.116,
];
pub const PUBLISHED_D2_T10: [f64; 10] = [
    8.637, 7.288, 6.526, 5.997, 5.593, 5.265, 4.987, 4.746, 4.532, 4.339,
];
pub const PUBLISHED_D3_T10: [f64; 10] = [
    2.069, 2.083, 2.099, 2.116, 2.134, 2.153, 2.173, 2.193, 2.215, 2.238,
];
