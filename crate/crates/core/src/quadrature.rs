//! Adaptive Gauss-Kronrod (7, 15) quadrature on finite intervals.
//!
//! Panels are refined depth-first, left to right, until each panel's
//! Kronrod-minus-Gauss difference is below its share of the tolerance.
//! The traversal order is fixed so repeated runs are bit-identical.

use crate::error::{domain, Error, Result};

use serde::{Deserialize, Serialize};

/// Hard cap on the number of panels.
pub const MAX_PANELS: usize = 1 << 16;

const KRONROD_NODES: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const KRONROD_WEIGHTS: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_18,
    0.140_653_259_715_525_92,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_83,
];

/// Gauss weights for the odd-indexed Kronrod nodes (and the centre).
const GAUSS_WEIGHTS: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub est_error: f64,
    pub subdivisions: usize,
}

struct Panel {
    value: f64,
    error: f64,
    /// The Kronrod/Gauss gap is already at rounding level.
    limited: bool,
}

fn gauss_kronrod<F>(f: &mut F, lo: f64, hi: f64) -> Result<Panel>
where
    F: FnMut(f64) -> Result<f64>,
{
    let centre = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(centre)?;
    let mut kronrod = fc * KRONROD_WEIGHTS[7];
    let mut gauss = fc * GAUSS_WEIGHTS[3];
    let mut abs_sum = fc.abs() * KRONROD_WEIGHTS[7];
    for i in 0..7 {
        let dx = half * KRONROD_NODES[i];
        let pair = f(centre - dx)? + f(centre + dx)?;
        kronrod += KRONROD_WEIGHTS[i] * pair;
        abs_sum += KRONROD_WEIGHTS[i] * pair.abs();
        if i % 2 == 1 {
            gauss += GAUSS_WEIGHTS[i / 2] * pair;
        }
    }
    if !kronrod.is_finite() {
        return Err(Error::NonFinite("quadrature integrand"));
    }
    let roundoff = 50.0 * f64::EPSILON * abs_sum * half.abs();
    let gap = ((kronrod - gauss) * half).abs();
    Ok(Panel {
        value: kronrod * half,
        error: gap.max(roundoff),
        limited: gap <= roundoff,
    })
}

/// Integrate a fallible integrand; the first integrand error aborts.
pub fn try_integrate<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(a < b) || !a.is_finite() || !b.is_finite() {
        return domain(format!(
            "integration limits must satisfy a < b, got [{a}, {b}]"
        ));
    }
    if !(abs_tol > 0.0) {
        return domain(format!("abs_tol must be positive, got {abs_tol}"));
    }
    let width = b - a;
    let mut value = 0.0;
    let mut est_error = 0.0;
    let mut accepted = 0usize;
    let mut stack = vec![(a, b, gauss_kronrod(&mut f, a, b)?)];

    while let Some((lo, hi, panel)) = stack.pop() {
        let share = abs_tol * (hi - lo) / width;
        let mid = 0.5 * (lo + hi);
        let splittable = mid > lo && mid < hi;
        if panel.error <= share || panel.limited || !splittable {
            value += panel.value;
            est_error += panel.error;
            accepted += 1;
            continue;
        }
        if accepted + stack.len() + 2 > MAX_PANELS {
            return Err(Error::NonConvergence(format!(
                "quadrature on [{a}, {b}] hit the {MAX_PANELS}-panel cap"
            )));
        }
        let right = gauss_kronrod(&mut f, mid, hi)?;
        let left = gauss_kronrod(&mut f, lo, mid)?;
        stack.push((mid, hi, right));
        stack.push((lo, mid, left));
    }

    if est_error > abs_tol {
        return Err(Error::NonConvergence(format!(
            "quadrature on [{a}, {b}] reached error {est_error:e} > {abs_tol:e}"
        )));
    }
    Ok(QuadratureResult {
        value,
        est_error,
        subdivisions: accepted,
    })
}

/// Integrate `f` over `[a, b]` to absolute tolerance `abs_tol`.
pub fn integrate<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> f64,
{
    try_integrate(|x| Ok(f(x)), a, b, abs_tol)
}

/// Integrate at `abs_tol` and again at `abs_tol / 2`; fail if the two
/// runs disagree by more than `abs_tol`.
pub fn integrate_validated<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> Result<QuadratureResult>
where
    F: FnMut(f64) -> Result<f64>,
{
    let coarse = try_integrate(&mut f, a, b, abs_tol)?;
    let fine = try_integrate(&mut f, a, b, 0.5 * abs_tol)?;
    let gap = (coarse.value - fine.value).abs();
    if gap > abs_tol {
        return Err(Error::NonConvergence(format!(
            "quadrature validation on [{a}, {b}] moved by {gap:e}"
        )));
    }
    Ok(QuadratureResult {
        est_error: fine.est_error.max(gap),
        ..fine
    })
}
