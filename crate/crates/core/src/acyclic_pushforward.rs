//! Pushforward of a bundle with no cohomology along a finite map `φ: X -> P^1`.
//!
//! If `H^0(X, E) = 0 = H^1(X, E)` then `φ_* E ≅ O(-1)^N` with
//! `N = deg φ · rank E`. The numerical data cannot certify the vanishing; this
//! module only rejects inputs where it is impossible, i.e. `χ(E) ≠ 0`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ci_splitting::SplittingType;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcyclicSpec {
    pub cover_degree: u64,
    pub bundle_rank: u64,
    pub bundle_degree: i64,
    pub genus: u64,
}

impl AcyclicSpec {
    pub fn new(cover_degree: u64, bundle_rank: u64, bundle_degree: i64, genus: u64) -> Result<Self> {
        if cover_degree < 1 {
            return Err(Error::Domain("cover degree must be >= 1".into()));
        }
        if bundle_rank < 1 {
            return Err(Error::Domain("bundle rank must be >= 1".into()));
        }
        Ok(Self { cover_degree, bundle_rank, bundle_degree, genus })
    }

    pub fn euler_characteristic(&self) -> BigInt {
        euler_char(self.bundle_degree, self.bundle_rank, self.genus)
    }
}

/// Riemann-Roch on a curve of genus `g`: `χ(E) = deg E + rank E · (1 - g)`.
pub fn euler_char(bundle_degree: i64, bundle_rank: u64, genus: u64) -> BigInt {
    BigInt::from(bundle_degree) + BigInt::from(bundle_rank) * (BigInt::from(1) - BigInt::from(genus))
}

/// `φ_* E = O(-1)^{deg φ · rank E}`, assuming `E` has no cohomology.
pub fn pushforward_splitting(spec: &AcyclicSpec) -> Result<SplittingType> {
    let chi = spec.euler_characteristic();
    if !chi.is_zero() {
        return Err(Error::Inadmissible { chi: chi.to_string() });
    }
    let count = BigInt::from(spec.cover_degree) * BigInt::from(spec.bundle_rank);
    SplittingType::new(vec![BigInt::zero(), count])
}
