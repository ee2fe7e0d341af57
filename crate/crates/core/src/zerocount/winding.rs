//! Argument-principle zero counting by adaptive phase continuation.

use crate::error::{Error, Result};
use crate::special::ComplexPoint;

use serde::Serialize;
use std::f64::consts::{FRAC_PI_2, PI, TAU};

/// Sampling controls for phase continuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WindingOptions {
    /// Largest spacing between initial samples along an edge.
    pub initial_step: f64,
    /// Bisection stops (and the count fails) below this spacing.
    pub min_step: f64,
}

impl Default for WindingOptions {
    fn default() -> Self {
        Self {
            initial_step: 0.25,
            min_step: 1e-9,
        }
    }
}

impl WindingOptions {
    /// Same options with the initial sampling density multiplied by `factor`.
    pub fn denser(self, factor: f64) -> Self {
        Self {
            initial_step: self.initial_step / factor,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WindingCount {
    /// Number of zeros enclosed.
    pub n: u64,
    /// Total change of argument around the closed contour, over `2 pi`.
    pub full_turns: f64,
    /// Change of argument along the right half of the contour, over `pi`.
    pub half_turns: f64,
    /// Distance of `full_turns` and `half_turns` from the integer `n`.
    pub winding_residual: f64,
    pub samples_used: usize,
}

fn wrap(x: f64) -> f64 {
    let y = x.rem_euclid(TAU);
    if y > PI {
        y - TAU
    } else {
        y
    }
}

/// Accumulated argument change of a phase function along the segment
/// `from -> to`. Consecutive accepted samples differ in phase by less than
/// `pi/2`; segments are bisected depth-first, left to right.
fn segment_phase_change<F>(
    phase: &mut F,
    from: ComplexPoint,
    to: ComplexPoint,
    opts: &WindingOptions,
    samples: &mut usize,
    height: f64,
) -> Result<f64>
where
    F: FnMut(ComplexPoint) -> Result<f64>,
{
    let length = (to - from).norm();
    let pieces = (length / opts.initial_step).ceil().max(1.0) as usize;
    let at = |u: f64| from + (to - from) * u;
    let min_du = opts.min_step / length;

    let mut total = 0.0;
    let mut u0 = 0.0;
    let mut ph0 = phase(at(0.0))?;
    *samples += 1;
    for i in 1..=pieces {
        let u1 = i as f64 / pieces as f64;
        let ph1 = phase(at(u1))?;
        *samples += 1;
        // stack of pending right endpoints; left endpoint is (u0, ph0)
        let mut pending = vec![(u1, ph1)];
        while let Some(&(ub, phb)) = pending.last() {
            let inc = wrap(phb - ph0);
            if inc.abs() < FRAC_PI_2 {
                total += inc;
                u0 = ub;
                ph0 = phb;
                pending.pop();
                continue;
            }
            if ub - u0 < min_du {
                return Err(Error::BoundaryZero {
                    t: height,
                    detail: format!(
                        "phase jump {inc:.3} unresolved near {}",
                        at(0.5 * (u0 + ub))
                    ),
                });
            }
            let um = 0.5 * (u0 + ub);
            let phm = phase(at(um))?;
            *samples += 1;
            pending.push((um, phm));
        }
    }
    Ok(total)
}

/// Count zeros of an entire function inside the rectangle with corners
/// `sigma1 +- iT`, `1 - sigma1 +- iT`, given a phase oracle `arg f(s)`
/// (any branch). The contour is split at `Re s = 1/2` on the horizontal
/// edges so that the right-half change can be read off separately.
pub fn winding_count<F>(
    mut phase: F,
    sigma1: f64,
    t: f64,
    opts: &WindingOptions,
) -> Result<WindingCount>
where
    F: FnMut(ComplexPoint) -> Result<f64>,
{
    let left = 1.0 - sigma1;
    let vertices = [
        ComplexPoint::new(0.5, -t),
        ComplexPoint::new(sigma1, -t),
        ComplexPoint::new(sigma1, t),
        ComplexPoint::new(0.5, t),
        ComplexPoint::new(left, t),
        ComplexPoint::new(left, -t),
        ComplexPoint::new(0.5, -t),
    ];
    let mut samples = 0;
    let mut changes = [0.0; 6];
    for (i, change) in changes.iter_mut().enumerate() {
        *change = segment_phase_change(
            &mut phase,
            vertices[i],
            vertices[i + 1],
            opts,
            &mut samples,
            t,
        )?;
    }
    let full_turns = changes.iter().sum::<f64>() / TAU;
    let half_turns = changes[..3].iter().sum::<f64>() / PI;
    let rounded = full_turns.round();
    let winding_residual = (full_turns - rounded)
        .abs()
        .max((half_turns - rounded).abs());
    if rounded < 0.0 {
        return Err(Error::NonConvergence(format!(
            "negative winding {full_turns} around an entire function"
        )));
    }
    Ok(WindingCount {
        n: rounded as u64,
        full_turns,
        half_turns,
        winding_residual,
        samples_used: samples,
    })
}
