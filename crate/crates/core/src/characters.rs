//! Dirichlet characters modulo small `k`.
//!
//! Characters are held exactly: `chi(n) = exp(2 pi i e(n) / order)` with
//! an integer exponent table, so multiplicativity and equality checks are
//! exact. Complex values are produced on demand.

use crate::error::{domain, Error, Result};
use crate::special::ComplexPoint;

use serde::Serialize;
use std::f64::consts::PI;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DirichletCharacter {
    modulus: u64,
    /// Order of the character; all exponents live in `0..order`.
    order: u64,
    /// `None` where `gcd(n, k) > 1`.
    exponents: Vec<Option<u64>>,
    conductor: u64,
    label: String,
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

fn multiplicative_order(g: u64, m: u64) -> u64 {
    let mut x = g % m;
    let mut ord = 1;
    while x != 1 {
        x = mul_mod(x, g, m);
        ord += 1;
    }
    ord
}

/// One cyclic factor of `(Z/kZ)^*`, given as discrete logarithms of every
/// residue mod `k` (or `None` for non-units).
struct CyclicFactor {
    order: u64,
    log: Vec<Option<u64>>,
}

/// Discrete logs to base `g` in `(Z/mZ)^*`, lifted to residues mod `k`.
fn lift_logs(k: u64, m: u64, g: u64, order: u64, reduce: impl Fn(u64) -> u64) -> Vec<Option<u64>> {
    let mut table = vec![None; m as usize];
    let mut x = 1 % m;
    for i in 0..order {
        table[x as usize].get_or_insert(i);
        x = mul_mod(x, g, m);
    }
    (0..k)
        .map(|n| {
            if gcd(n, k) != 1 {
                None
            } else {
                table[reduce(n) as usize]
            }
        })
        .collect()
}

fn cyclic_factors(k: u64) -> Vec<CyclicFactor> {
    let mut factors = Vec::new();
    for (p, e) in factorize(k) {
        let m = p.pow(e);
        if p == 2 {
            if e >= 2 {
                // -1 generates n mod 4
                let log = (0..k)
                    .map(|n| (gcd(n, k) == 1).then_some(if n % 4 == 1 { 0 } else { 1 }))
                    .collect();
                factors.push(CyclicFactor { order: 2, log });
            }
            if e >= 3 {
                let order = m / 4;
                let log = lift_logs(k, m, 5, order, |n| {
                    let r = n % m;
                    if r % 4 == 1 {
                        r
                    } else {
                        m - r
                    }
                });
                factors.push(CyclicFactor { order, log });
            }
        } else {
            let order = m / p * (p - 1);
            let g = (2..m)
                .find(|&g| gcd(g, p) == 1 && multiplicative_order(g, m) == order)
                .expect("odd prime powers have primitive roots");
            factors.push(CyclicFactor {
                order,
                log: lift_logs(k, m, g, order, |n| n % m),
            });
        }
    }
    factors
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl DirichletCharacter {
    /// Build from an exponent table over a common denominator, reducing to
    /// the character's own order.
    fn from_exponents(modulus: u64, denom: u64, raw: Vec<Option<u64>>, label: String) -> Self {
        let g = raw.iter().flatten().fold(denom, |acc, &e| gcd(acc, e));
        let order = denom / g;
        let exponents = raw
            .into_iter()
            .map(|e| e.map(|e| (e / g) % order))
            .collect();
        let mut chi = DirichletCharacter {
            modulus,
            order,
            exponents,
            conductor: modulus,
            label,
        };
        chi.conductor = chi.compute_conductor();
        chi
    }

    fn compute_conductor(&self) -> u64 {
        let k = self.modulus;
        (1..=k)
            .filter(|d| k.is_multiple_of(*d))
            .find(|&d| {
                (1..k)
                    .filter(|&n| n % d == 1 % d)
                    .all(|n| matches!(self.exponents[n as usize], Some(0) | None))
            })
            .unwrap_or(k)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.modulus
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    pub fn is_real(&self) -> bool {
        self.order <= 2
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `a = (1 - chi(-1)) / 2`.
    pub fn parity(&self) -> u8 {
        match self.exponent(self.modulus as i64 - 1) {
            Some(0) => 0,
            _ => 1,
        }
    }

    /// Exponent `e` with `chi(n) = exp(2 pi i e / order)`, or `None` when `chi(n) = 0`.
    pub fn exponent(&self, n: i64) -> Option<u64> {
        self.exponents[n.rem_euclid(self.modulus as i64) as usize]
    }

    pub fn value(&self, n: i64) -> ComplexPoint {
        match self.exponent(n) {
            None => ComplexPoint::new(0.0, 0.0),
            Some(0) => ComplexPoint::new(1.0, 0.0),
            Some(e) if 2 * e == self.order => ComplexPoint::new(-1.0, 0.0),
            Some(e) => ComplexPoint::from_polar(1.0, 2.0 * PI * e as f64 / self.order as f64),
        }
    }

    pub fn conj(&self) -> Self {
        let exponents = self
            .exponents
            .iter()
            .map(|e| e.map(|e| (self.order - e) % self.order))
            .collect();
        DirichletCharacter {
            exponents,
            label: format!("conj({})", self.label),
            ..self.clone()
        }
    }

    /// The primitive character mod the conductor that induces `self`, when
    /// the conductor is at least 3.
    pub fn primitive_core(&self) -> Option<DirichletCharacter> {
        let f = self.conductor;
        if f < 3 {
            return None;
        }
        let k = self.modulus;
        let raw = (0..f)
            .map(|m| {
                if gcd(m, f) != 1 {
                    return None;
                }
                let n = (0..k / f).map(|j| m + j * f).find(|&n| gcd(n, k) == 1)?;
                self.exponents[n as usize]
            })
            .collect();
        Some(Self::from_exponents(
            f,
            self.order,
            raw,
            format!("core({})", self.label),
        ))
    }
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// Serialized form of a character used in reports.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterSummary {
    pub label: String,
    pub modulus: u64,
    pub conductor: u64,
    pub parity: u8,
    pub order: u64,
}

impl From<&DirichletCharacter> for CharacterSummary {
    fn from(chi: &DirichletCharacter) -> Self {
        CharacterSummary {
            label: chi.label.clone(),
            modulus: chi.modulus,
            conductor: chi.conductor,
            parity: chi.parity(),
            order: chi.order,
        }
    }
}

/// All `phi(k)` characters mod `k`, ordered lexicographically by their
/// exponents on the generators of `(Z/kZ)^*` (the factor for 2 first).
pub fn enumerate_characters(k: u64) -> Result<Vec<DirichletCharacter>> {
    if k < 3 {
        return domain(format!("modulus must be at least 3, got {k}"));
    }
    let factors = cyclic_factors(k);
    let denom = factors.iter().fold(1, |acc, f| lcm(acc, f.order));
    let mut out = Vec::with_capacity(euler_phi(k) as usize);
    let mut digits = vec![0u64; factors.len()];
    loop {
        let raw = (0..k as usize)
            .map(|n| {
                factors.iter().zip(&digits).try_fold(0u64, |acc, (f, &c)| {
                    let ind = f.log[n]?;
                    Some((acc + c * ind % f.order * (denom / f.order)) % denom)
                })
            })
            .collect();
        let label = format!("chi_{k}{digits:?}");
        out.push(DirichletCharacter::from_exponents(k, denom, raw, label));

        // odometer, last digit fastest
        let mut i = factors.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < factors[i].order {
                break;
            }
            digits[i] = 0;
        }
    }
}

/// `tau(chi) = sum_{n=1}^{k} chi(n) exp(2 pi i n / k)` for primitive `chi`.
pub fn gauss_sum(chi: &DirichletCharacter) -> Result<ComplexPoint> {
    if !chi.is_primitive() {
        return Err(Error::NotPrimitive {
            modulus: chi.modulus,
            conductor: chi.conductor,
        });
    }
    let k = chi.modulus;
    Ok((1..=k)
        .map(|n| {
            chi.value(n as i64) * ComplexPoint::from_polar(1.0, 2.0 * PI * n as f64 / k as f64)
        })
        .sum())
}

fn is_squarefree(n: u64) -> bool {
    factorize(n).iter().all(|&(_, e)| e == 1)
}

pub fn is_fundamental_discriminant(d: i64) -> bool {
    if d == 0 || d == 1 {
        return false;
    }
    match d.rem_euclid(4) {
        1 => is_squarefree(d.unsigned_abs()),
        0 => {
            let m = d / 4;
            matches!(m.rem_euclid(4), 2 | 3) && is_squarefree(m.unsigned_abs())
        }
        _ => false,
    }
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
fn jacobi(a: i64, n: u64) -> i32 {
    debug_assert!(n % 2 == 1);
    let mut a = a.rem_euclid(n as i64) as u64;
    let mut n = n;
    let mut sign = 1;
    while a != 0 {
        while a.is_multiple_of(2) {
            a /= 2;
            if matches!(n % 8, 3 | 5) {
                sign = -sign;
            }
        }
        (a, n) = (n, a);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Kronecker symbol `(d / n)` for `n >= 1`.
fn kronecker(d: i64, mut n: u64) -> i32 {
    let mut sign = 1;
    while n.is_multiple_of(2) {
        n /= 2;
        match d.rem_euclid(8) {
            0 | 2 | 4 | 6 => return 0,
            1 | 7 => {}
            _ => sign = -sign,
        }
    }
    sign * jacobi(d, n)
}

/// The real primitive character `chi_d(n) = (d / n)` mod `|d|` attached to
/// the quadratic field of fundamental discriminant `d`.
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    if !is_fundamental_discriminant(d) {
        return Err(Error::NotFundamental(d));
    }
    let k = d.unsigned_abs();
    let raw = (0..k)
        .map(|n| match if n == 0 { 0 } else { kronecker(d, n) } {
            1 => Some(0),
            -1 => Some(1),
            _ => None,
        })
        .collect();
    let chi = DirichletCharacter::from_exponents(k, 2, raw, format!("chi_d({d})"));
    debug_assert!(chi.is_primitive());
    Ok(chi)
}
