//! `Y = Div(s_1) ∩ Div(s_2)` in a `P^2`-bundle `φ: P(E) -> X`, `E` of rank three,
//! with `s_i` a section of `L_i = O_{P(E)}(n_i) ⊗ φ^*A_i`.
//!
//! The quotient `(f_* O_Y) / O_X` is the kernel of a surjection
//!
//! ```text
//! Sym^{n1+n2-3}(E^*) ⊗ (A_1 ⊗ A_2 ⊗ det E)^*
//!     -> Sym^{n1-3}(E^*) ⊗ (A_1 ⊗ det E)^*  ⊕  Sym^{n2-3}(E^*) ⊗ (A_2 ⊗ det E)^*
//! ```
//!
//! so its rank and degree follow by additivity. Only those two numbers are
//! produced here.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_series::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct RankDegree {
    pub rank: BigInt,
    pub degree: BigInt,
}

impl RankDegree {
    pub fn new(rank: impl Into<BigInt>, degree: impl Into<BigInt>) -> Self {
        Self { rank: rank.into(), degree: degree.into() }
    }

    /// Tensor with a line bundle of degree `twist`.
    fn twisted(self, twist: &BigInt) -> Self {
        let degree = self.degree + &self.rank * twist;
        Self { rank: self.rank, degree }
    }
}

/// Rank and degree of `Sym^j(V)` for `V` of rank `r` and degree `e`:
/// `(C(j + r - 1, r - 1), C(j + r - 1, r) e)`, and `(0, 0)` for `j < 0`.
pub fn sym_rank_deg(r: u32, e: i64, j: i64) -> Result<RankDegree> {
    if r < 1 {
        return Err(Error::Domain("bundle rank must be >= 1".into()));
    }
    if j < 0 {
        return Ok(RankDegree::default());
    }
    let r = i64::from(r);
    Ok(RankDegree {
        rank: binomial(j + r - 1, r - 1),
        degree: binomial(j + r - 1, r) * e,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TwoHypersurfaceSpec {
    pub n1: u32,
    pub n2: u32,
    pub alpha1: i64,
    pub alpha2: i64,
    /// `deg E`.
    pub e: i64,
}

impl TwoHypersurfaceSpec {
    pub fn new(n1: u32, n2: u32, alpha1: i64, alpha2: i64, e: i64) -> Result<Self> {
        if n1 < 1 || n2 < 1 {
            return Err(Error::Domain(format!("fiber degrees must be >= 1, got ({n1}, {n2})")));
        }
        Ok(Self { n1, n2, alpha1, alpha2, e })
    }

    pub fn swapped(&self) -> Self {
        Self { n1: self.n2, n2: self.n1, alpha1: self.alpha2, alpha2: self.alpha1, e: self.e }
    }
}

/// Source, the two target summands, and the kernel of the surjection.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KernelPresentation {
    pub source: RankDegree,
    pub targets: [RankDegree; 2],
    pub kernel: RankDegree,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KernelQuotient {
    Zero,
    Presentation(KernelPresentation),
}

impl KernelQuotient {
    pub fn presentation(&self) -> Option<&KernelPresentation> {
        match self {
            KernelQuotient::Zero => None,
            KernelQuotient::Presentation(p) => Some(p),
        }
    }
}

pub fn quotient_presentation(spec: &TwoHypersurfaceSpec) -> Result<KernelQuotient> {
    let (n1, n2) = (i64::from(spec.n1), i64::from(spec.n2));
    if n1 + n2 < 3 {
        return Ok(KernelQuotient::Zero);
    }
    // Sym^j(E^*) has rank 3 and degree C(j + 2, 3) * (-e).
    let dual = -spec.e;
    let source = sym_rank_deg(3, dual, n1 + n2 - 3)?
        .twisted(&-BigInt::from(spec.alpha1 + spec.alpha2 + spec.e));
    let target = |n: i64, alpha: i64| -> Result<RankDegree> {
        Ok(sym_rank_deg(3, dual, n - 3)?.twisted(&-BigInt::from(alpha + spec.e)))
    };
    let targets = [target(n1, spec.alpha1)?, target(n2, spec.alpha2)?];
    let kernel = RankDegree {
        rank: &source.rank - &targets[0].rank - &targets[1].rank,
        degree: &source.degree - &targets[0].degree - &targets[1].degree,
    };
    Ok(KernelQuotient::Presentation(KernelPresentation { source, targets, kernel }))
}
