use super::{ensure_finite, ComplexPoint, BERNOULLI_EVEN};
use crate::error::{Error, Result};

use std::f64::consts::PI;

/// Minimum modulus at which the Stirling series is summed.
const STIRLING_RADIUS: f64 = 15.0;

/// `(z - 1/2) log z - z + log(2 pi)/2`.
pub(crate) fn stirling_leading(z: ComplexPoint) -> ComplexPoint {
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln()
}

/// Asymptotic correction `sum B_2j / (2j (2j-1) z^{2j-1})`; accurate to
/// roughly 1e-22 once `|z| >= 15` and `Re z >= 0`.
fn stirling_correction(z: ComplexPoint) -> ComplexPoint {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut power = inv;
    let mut acc = ComplexPoint::new(0.0, 0.0);
    for (j, b) in BERNOULLI_EVEN.iter().enumerate() {
        let m = 2.0 * (j + 1) as f64;
        acc += power * (b / (m * (m - 1.0)));
        power *= inv2;
    }
    acc
}

fn is_pole(z: ComplexPoint) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal branch of `log Gamma(z)`: analytic on the plane cut along the
/// non-positive real axis, real for real `z > 0`.
///
/// The argument is pushed up by `log Gamma(z) = log Gamma(z + n) - sum log(z + k)`
/// until `|z + n| >= 15` with `Re(z + n) >= 0`, where the Stirling series
/// is summed through `B_20`.
pub fn log_gamma_complex(z: ComplexPoint) -> Result<ComplexPoint> {
    ensure_finite(z, "log_gamma_complex input")?;
    if is_pole(z) {
        return Err(Error::Pole(format!("Gamma has a pole at {}", z.re)));
    }
    let mut w = z;
    let mut shift = ComplexPoint::new(0.0, 0.0);
    while w.re < 0.0 || w.norm() < STIRLING_RADIUS {
        shift += w.ln();
        w += 1.0;
    }
    ensure_finite(
        stirling_leading(w) + stirling_correction(w) - shift,
        "log_gamma_complex",
    )
}
