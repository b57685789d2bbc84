//! Curves `Y ∈ |O_{P(E)}(n) ⊗ φ^*A|` on a ruled surface `φ: P(E) -> X` over a
//! curve, with `E` of rank two.
//!
//! For `n >= 2` the quotient `(f_* O_Y) / O_X` is `Sym^{n-2}(E^*) ⊗ A^* ⊗ det E^*`.
//! When `E` is unstable with maximal destabilizing `S ⊂ E`, its HN filtration is
//! induced from the one of `Sym^{n-2}(E^*)` and every graded piece is a line
//! bundle. When `E` is semistable the quotient is a single semistable block.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact_series::binomial;
use crate::hn_core::{polygon_from_pieces, GradedPiece, HNPolygon};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stability {
    /// `deg S = s > t = deg E/S`.
    Unstable { s: i64, t: i64 },
    /// `E` semistable (strongly semistable in positive characteristic) of degree `e`.
    Semistable { e: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Characteristic {
    #[default]
    Zero,
    Positive,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RuledSurfaceSpec {
    n: u32,
    alpha: i64,
    stability: Stability,
    characteristic: Characteristic,
}

impl RuledSurfaceSpec {
    pub fn new(n: u32, alpha: i64, stability: Stability, characteristic: Characteristic) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain("fiber degree n must be >= 1".into()));
        }
        if let Stability::Unstable { s, t } = stability {
            if s <= t {
                return Err(Error::Domain(format!(
                    "unstable E needs deg S > deg E/S, got s = {s}, t = {t}"
                )));
            }
        }
        Ok(Self { n, alpha, stability, characteristic })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn stability(&self) -> Stability {
        self.stability
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    /// `deg E`.
    pub fn bundle_degree(&self) -> i64 {
        match self.stability {
            Stability::Unstable { s, t } => s + t,
            Stability::Semistable { e } => e,
        }
    }
}

/// Result of [`direct_image_quotient_hn`]: the zero sheaf is kept apart from
/// any polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientHn {
    Zero,
    Polygon(HNPolygon),
}

impl QuotientHn {
    pub fn polygon(&self) -> Option<&HNPolygon> {
        match self {
            QuotientHn::Zero => None,
            QuotientHn::Polygon(p) => Some(p),
        }
    }
}

/// `base^{⊗exp}` with the conventions `x^{⊗1} = x`, `x^{⊗-1} = x^*`, and
/// `x^{⊗0}` dropped.
fn tensor_power(base: &str, exp: i64) -> Option<String> {
    match exp {
        0 => None,
        1 => Some(base.to_string()),
        -1 => Some(format!("{base}^*")),
        e if e < 0 => Some(format!("{base}^{{⊗−{}}}", -e)),
        e => Some(format!("{base}^{{⊗{e}}}")),
    }
}

fn tensor_word(factors: impl IntoIterator<Item = Option<String>>) -> String {
    let parts: Vec<String> = factors.into_iter().flatten().collect();
    if parts.is_empty() {
        "O".to_string()
    } else {
        parts.join(" ⊗ ")
    }
}

/// HN filtration of `Sym^m(B)` for an unstable rank-two `B` with maximal
/// destabilizing `A ⊂ B`, `deg A = s > t = deg B/A`.
///
/// The graded pieces are the line bundles `A^{⊗i} ⊗ (B/A)^{⊗(m-i)}` for
/// `i = m, ..., 0`, of degree `i s + (m - i) t`.
pub fn sym_power_hn(m: u32, s: i64, t: i64) -> Result<HNPolygon> {
    if m < 1 {
        return Err(Error::Domain("symmetric power m must be >= 1".into()));
    }
    if s <= t {
        return Err(Error::Domain(format!(
            "rank-two bundle is not unstable: deg A = {s} <= deg B/A = {t}"
        )));
    }
    let (s, t) = (BigInt::from(s), BigInt::from(t));
    let pieces = (0..=i64::from(m))
        .rev()
        .map(|i| {
            let degree = &s * i + &t * (i64::from(m) - i);
            let label = tensor_word([
                tensor_power("A", i),
                tensor_power("(B/A)", i64::from(m) - i),
            ]);
            GradedPiece::new(1, degree, label)
        })
        .collect::<Result<Vec<_>>>()?;
    polygon_from_pieces(pieces)
}

/// HN data of `(f_* O_Y) / O_X`.
///
/// * `n = 1`: the quotient vanishes.
/// * unstable `E`, `n >= 2`: `n - 1` line bundles
///   `(E/S)^{⊗(2-n+k)} ⊗ (S^*)^{⊗k} ⊗ A^* ⊗ det E^*`, `k = 0, ..., n - 2`,
///   maximal slope first.
/// * semistable `E` of degree `e`: one block of rank `n - 1` and degree
///   `-C(n-1, 2) e - (n - 1)(α + e)`.
pub fn direct_image_quotient_hn(spec: &RuledSurfaceSpec) -> Result<QuotientHn> {
    if spec.n == 1 {
        return Ok(QuotientHn::Zero);
    }
    let top = i64::from(spec.n) - 2;
    let alpha = BigInt::from(spec.alpha);
    match spec.stability {
        Stability::Unstable { s, t } => {
            let twist = -(&alpha + s + t);
            let pieces = (0..=top)
                .map(|k| {
                    // Index i = top - k counts the factors of (E/S)^* = E^*'s maximal piece.
                    let i = top - k;
                    let degree = BigInt::from(-i * t - k * s) + &twist;
                    let label = tensor_word([
                        tensor_power("(E/S)", -i),
                        match k {
                            0 => None,
                            1 => Some("S^*".to_string()),
                            k => Some(format!("(S^*)^{{⊗{k}}}")),
                        },
                        Some("A^*".to_string()),
                        Some("det E^*".to_string()),
                    ]);
                    GradedPiece::new(1, degree, label)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(QuotientHn::Polygon(polygon_from_pieces(pieces)?))
        }
        Stability::Semistable { e } => {
            let rank = i64::from(spec.n) - 1;
            let e = BigInt::from(e);
            let degree = -(binomial(rank, 2) * &e) - (&alpha + &e) * rank;
            let qualifier = match spec.characteristic {
                Characteristic::Zero => "semistable",
                Characteristic::Positive => "strongly semistable",
            };
            let sym = match top {
                0 => None,
                1 => Some("E^*".to_string()),
                k => Some(format!("Sym^{k}(E^*)")),
            };
            let label = format!(
                "{}, {qualifier}",
                tensor_word([sym, Some("A^*".into()), Some("det E^*".into())])
            );
            let piece = GradedPiece::new(rank, degree, label)?;
            Ok(QuotientHn::Polygon(polygon_from_pieces(vec![piece])?))
        }
    }
}
