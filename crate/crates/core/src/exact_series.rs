//! Binomial coefficients and dense integer polynomials.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `C(a, b)` as an exact integer.
///
/// Returns 0 whenever `b < 0`, `a < 0` or `a < b`, so callers can evaluate
/// dimensions of spaces of sections at negative twists without guarding.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 || a < 0 || a < b {
        return BigInt::zero();
    }
    let k = b.min(a - b);
    let mut acc = BigInt::one();
    // After step i, acc == C(a - k + i, i), so every division is exact.
    for i in 1..=k {
        acc *= a - k + i;
        acc /= i;
    }
    acc
}

/// Polynomial in one variable `t` with exact integer coefficients.
///
/// `coeffs[j]` is the coefficient of `t^j`. Trailing zeros are never stored;
/// the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![BigInt::one()] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `t^j`; zero past the degree.
    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let abs = c.abs();
            match (j, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}t")?,
                (_, true) => write!(f, "t^{j}")?,
                (_, false) => write!(f, "{abs}t^{j}")?,
            }
        }
        Ok(())
    }
}

/// Exact product of two polynomials (schoolbook convolution).
pub fn poly_mul(p: &IntPoly, q: &IntPoly) -> IntPoly {
    if p.is_zero() || q.is_zero() {
        return IntPoly::zero();
    }
    let mut out = vec![BigInt::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    IntPoly::new(out)
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        poly_mul(self, rhs)
    }
}

/// `1 + t + ... + t^(d-1)`, i.e. `(1 - t^d) / (1 - t)`.
pub fn all_ones_poly(d: i64) -> Result<IntPoly> {
    if d < 1 {
        return Err(Error::Domain(format!("all-ones polynomial needs d >= 1, got {d}")));
    }
    let len = usize::try_from(d).map_err(|_| Error::Domain(format!("d = {d} is too large")))?;
    Ok(IntPoly::new(vec![BigInt::one(); len]))
}
