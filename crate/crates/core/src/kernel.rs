//! Numeric kernel: `f(x) = x ln x`, its difference functions, `h` over
//! degree sequences, and the entropy `I = ln(2m) - h/(2m)`.
//!
//! All logarithms are natural. Reals are `f64`; exact tie decisions
//! between competing `h` values are made on integer data (degree
//! multisets or the product `Π dᵢ^dᵢ`), never by float proximity.

use crate::error::{Error, Result};
use num_bigint::BigUint;

/// `x ln x`, with `f(0) = 0`.
pub fn f(x: u64) -> f64 {
    if x == 0 {
        0.0
    } else {
        let xf = x as f64;
        xf * xf.ln()
    }
}

/// `Δ(x) = f(x) - f(x-1)` for `x ≥ 1`; strictly increasing and concave.
pub fn delta(x: u64) -> Result<f64> {
    if x == 0 {
        return Err(Error::Domain("delta requires x >= 1".into()));
    }
    Ok(f(x) - f(x - 1))
}

/// `Δ^ℓ(z) = f(z+ℓ) - f(z)` for `ℓ ≥ 1`.
pub fn delta_ell(z: u64, ell: u64) -> Result<f64> {
    if ell == 0 {
        return Err(Error::Domain("delta_ell requires ell >= 1".into()));
    }
    Ok(f(z + ell) - f(z))
}

/// A non-increasing sequence of non-negative vertex degrees.
///
/// Zeros are permitted (isolated vertices) and contribute nothing to `h`;
/// equality is modulo trailing zeros, so sequences that differ only in
/// isolated-vertex padding compare equal.
#[derive(Debug, Clone)]
pub struct DegreeSequence {
    degrees: Vec<u64>,
}

impl DegreeSequence {
    /// Builds a sequence from degrees in any order.
    pub fn new(mut degrees: Vec<u64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence { degrees }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// Degrees with isolated vertices stripped.
    pub fn nonzero(&self) -> &[u64] {
        let end = self.degrees.iter().position(|&d| d == 0).unwrap_or(self.degrees.len());
        &self.degrees[..end]
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.degrees.iter().sum()
    }

    /// `h = Σ f(dᵢ)`.
    pub fn h(&self) -> f64 {
        h_of_degrees(self)
    }

    /// Exact comparison key for `h`: the integer `Π dᵢ^dᵢ`.
    ///
    /// `h(a) ≤ h(b)` iff `a.h_key() ≤ b.h_key()`, with no rounding,
    /// since `h = ln Π dᵢ^dᵢ`.
    pub fn h_key(&self) -> BigUint {
        let mut prod = BigUint::from(1u32);
        for &d in self.nonzero() {
            if d > 1 {
                prod *= BigUint::from(d).pow(d as u32);
            }
        }
        prod
    }
}

impl PartialEq for DegreeSequence {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero() == other.nonzero()
    }
}

impl Eq for DegreeSequence {}

impl std::hash::Hash for DegreeSequence {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.nonzero().hash(state);
    }
}

impl std::fmt::Display for DegreeSequence {
    fn fmt(&self, fm: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.degrees.iter().map(|d| d.to_string()).collect();
        write!(fm, "{}", parts.join(","))
    }
}

/// `h(d) = Σ f(dᵢ)`; permutation invariant, zeros contribute 0.
pub fn h_of_degrees(d: &DegreeSequence) -> f64 {
    d.degrees().iter().map(|&x| f(x)).sum()
}

/// Entropy `I = ln(2m) - h/(2m)` of a graph whose degree sum is `2m`.
pub fn entropy(d: &DegreeSequence, m: u64) -> Result<f64> {
    if m == 0 {
        return Err(Error::Domain("entropy requires m >= 1".into()));
    }
    if d.total() != 2 * m {
        return Err(Error::Inconsistent(format!(
            "degree sum {} does not equal 2m = {}",
            d.total(),
            2 * m
        )));
    }
    let two_m = (2 * m) as f64;
    Ok(two_m.ln() - h_of_degrees(d) / two_m)
}
