//! Splitting type of `f_* O_X` for a complete intersection `X ⊂ P^n` of
//! multi-degree `(d_1, ..., d_r)` projected from a linear subspace onto `P^{n-r}`.
//!
//! The direct image is `⊕_j O(-j)^{a_j}`. The multiplicities are recovered from
//! the Hilbert functions `h_{i,j}` of the partial intersections
//! `X_i = H_1 ∩ ... ∩ H_i`:
//!
//! ```text
//! h_{0,j} = C(n + j, n)
//! h_{i,j} = h_{i-1,j} - h_{i-1,j-d_i}
//! h_{r,m} = Σ_{j=0}^{m} C(n - r + m - j, m - j) a_j      for all m >= 0
//! ```
//!
//! The last system is lower triangular with unit diagonal, so forward
//! substitution solves it without division.
//!
//! Two independent routes are kept alongside for verification: an
//! inclusion-exclusion closed form for `h_{r,j}` ([`hilbert_oracle`]) and the
//! generating function `Σ a_j t^j = Π_i (1 + t + ... + t^{d_i - 1})`
//! ([`splitting_product_oracle`]).

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact_series::{all_ones_poly, binomial, poly_mul, IntPoly};
use crate::hn_core::{line_bundle_label, polygon_from_splitting, HNPolygon};

/// Ambient dimension `n` and the degrees of the `r` cutting hypersurfaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CompleteIntersectionSpec {
    n: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersectionSpec {
    /// Requires `r >= 1`, every `d_i >= 1` and `r <= n`.
    ///
    /// A zero-dimensional intersection (`r == n`) is accepted here since its
    /// Hilbert functions are well defined; [`splitting_type`] additionally needs
    /// a positive-dimensional target.
    pub fn new(n: u32, degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::Domain("at least one hypersurface degree is required".into()));
        }
        if let Some(d) = degrees.iter().find(|&&d| d == 0) {
            return Err(Error::Domain(format!("hypersurface degrees must be >= 1, got {d}")));
        }
        if degrees.len() > n as usize {
            return Err(Error::Domain(format!(
                "codimension {} exceeds ambient dimension {n}",
                degrees.len()
            )));
        }
        Ok(Self { n, degrees })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Codimension `r`.
    pub fn codim(&self) -> usize {
        self.degrees.len()
    }

    /// Dimension `n - r` of the projection target.
    pub fn target_dim(&self) -> u32 {
        self.n - self.degrees.len() as u32
    }

    /// `Π d_i`, the degree of the finite cover.
    pub fn degree_product(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    /// `Σ (d_i - 1)`, the largest twist carrying a nonzero multiplicity.
    pub fn top_twist(&self) -> usize {
        self.degrees.iter().map(|&d| d as usize - 1).sum()
    }

    /// Truncation bound for the triangular solve: one past [`Self::top_twist`], so
    /// the trailing zero is verified.
    pub fn j_max(&self) -> usize {
        self.top_twist() + 1
    }
}

/// `h[i][j]` for `0 <= i <= r` and `0 <= j <= j_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertTable {
    rows: Vec<Vec<BigInt>>,
}

impl HilbertTable {
    pub fn compute(spec: &CompleteIntersectionSpec, j_max: usize) -> Self {
        let n = i64::from(spec.n);
        let first: Vec<BigInt> = (0..=j_max).map(|j| binomial(n + j as i64, n)).collect();
        let mut rows = vec![first];
        for &d in &spec.degrees {
            let d = d as usize;
            let prev = rows.last().expect("table starts with row 0");
            let next = (0..=j_max)
                .map(|j| if j >= d { &prev[j] - &prev[j - d] } else { prev[j].clone() })
                .collect();
            rows.push(next);
        }
        Self { rows }
    }

    /// `h_{i,j}`; zero for negative `j`, `None` past the computed range.
    pub fn get(&self, i: usize, j: i64) -> Option<BigInt> {
        let row = self.rows.get(i)?;
        if j < 0 {
            return Some(BigInt::zero());
        }
        row.get(j as usize).cloned()
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn levels(&self) -> usize {
        self.rows.len()
    }

    pub fn j_max(&self) -> usize {
        self.rows[0].len() - 1
    }
}

/// `h_{i,j} = dim H^0(X_i, O(j))` via the recurrence in `i`.
pub fn hilbert_function(spec: &CompleteIntersectionSpec, i: usize, j: i64) -> Result<BigInt> {
    if i > spec.codim() {
        return Err(Error::Domain(format!(
            "level {i} out of range 0..={}",
            spec.codim()
        )));
    }
    if j < 0 {
        return Ok(BigInt::zero());
    }
    let table = HilbertTable::compute(spec, j as usize);
    Ok(table.get(i, j).expect("table covers j"))
}

/// `h_{r,j}` by inclusion-exclusion over subsets `S` of the hypersurfaces:
/// `Σ_S (-1)^{|S|} C(n + j - Σ_{i∈S} d_i, n)`.
pub fn hilbert_oracle(spec: &CompleteIntersectionSpec, j: i64) -> BigInt {
    let n = i64::from(spec.n);
    let r = spec.codim();
    let mut total = BigInt::zero();
    for mask in 0u64..(1u64 << r) {
        let shift: i64 = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i64::from(spec.degrees[i]))
            .sum();
        let term = binomial(n + j - shift, n);
        if mask.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Multiplicities `(a_0, a_1, ...)` of `O(-j)` in a direct sum of line bundles.
///
/// Trailing zeros are trimmed; at least one multiplicity is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittingType {
    a: Vec<BigInt>,
}

impl SplittingType {
    pub fn new(mut a: Vec<BigInt>) -> Result<Self> {
        if let Some(neg) = a.iter().find(|x| x.is_negative()) {
            return Err(Error::Domain(format!("negative multiplicity {neg}")));
        }
        while a.last().is_some_and(Zero::is_zero) {
            a.pop();
        }
        if a.is_empty() {
            return Err(Error::Domain("splitting type of the zero sheaf".into()));
        }
        Ok(Self { a })
    }

    pub fn from_i64s(a: &[i64]) -> Result<Self> {
        Self::new(a.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn multiplicities(&self) -> &[BigInt] {
        &self.a
    }

    /// `a_j`; zero outside the stored support.
    pub fn get(&self, j: usize) -> BigInt {
        self.a.get(j).cloned().unwrap_or_default()
    }

    /// Largest `j` with `a_j != 0`.
    pub fn top_twist(&self) -> usize {
        self.a.len() - 1
    }

    /// `Σ a_j`.
    pub fn rank(&self) -> BigInt {
        self.a.iter().sum()
    }

    /// `Σ -j a_j`, the degree of the bundle.
    pub fn degree(&self) -> BigInt {
        -self
            .a
            .iter()
            .enumerate()
            .map(|(j, a)| a * BigInt::from(j))
            .sum::<BigInt>()
    }

    /// `true` when `a_0 = 1` and the multiplicities sum to `expected_rank`.
    pub fn is_normalized_with_rank(&self, expected_rank: &BigInt) -> bool {
        self.a[0].is_one() && &self.rank() == expected_rank
    }

    pub fn is_palindromic(&self) -> bool {
        self.a.iter().eq(self.a.iter().rev())
    }

    /// `O ⊕ O(−1)^{a_1} ⊕ ...`, skipping zero multiplicities.
    pub fn bundle_string(&self) -> String {
        self.a
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_positive())
            .map(|(j, a)| line_bundle_label(j, a))
            .collect::<Vec<_>>()
            .join(" ⊕ ")
    }

    pub fn as_poly(&self) -> IntPoly {
        IntPoly::new(self.a.clone())
    }
}

/// Solves `Σ_{j<=m} C(k + m - j, m - j) a_j = h_m` for `m = 0..h.len()` by
/// forward substitution. The diagonal is `C(k, 0) = 1`.
fn forward_substitute(target_dim: u32, h: &[BigInt]) -> Vec<BigInt> {
    let k = i64::from(target_dim);
    let mut a: Vec<BigInt> = Vec::with_capacity(h.len());
    for (m, hm) in h.iter().enumerate() {
        let mut acc = hm.clone();
        for (j, aj) in a.iter().enumerate() {
            if aj.is_zero() {
                continue;
            }
            let gap = (m - j) as i64;
            acc -= binomial(k + gap, gap) * aj;
        }
        a.push(acc);
    }
    a
}

/// The splitting type of `f_* O_X` on `P^{n-r}`.
pub fn splitting_type(spec: &CompleteIntersectionSpec) -> Result<SplittingType> {
    if spec.target_dim() < 1 {
        return Err(Error::Domain(format!(
            "projection target P^{} is not positive-dimensional (n = {}, r = {})",
            spec.target_dim(),
            spec.n,
            spec.codim()
        )));
    }
    let j_max = spec.j_max();
    let table = HilbertTable::compute(spec, j_max);
    let a = forward_substitute(spec.target_dim(), table.row(spec.codim()));
    if !a[j_max].is_zero() {
        return Err(Error::Inconsistent(format!(
            "a_{j_max} = {} is nonzero past the support bound",
            a[j_max]
        )));
    }
    if let Some((j, x)) = a.iter().enumerate().find(|(_, x)| x.is_negative()) {
        return Err(Error::Inconsistent(format!("a_{j} = {x} is negative")));
    }
    SplittingType::new(a)
}

/// `Σ_{j<=m} C(n - r + m - j, m - j) a_j`; equals `h_{r,m}` when `st` is the
/// splitting type of `spec`.
pub fn resubstitute(spec: &CompleteIntersectionSpec, st: &SplittingType, m: usize) -> BigInt {
    let k = i64::from(spec.target_dim());
    st.multiplicities()
        .iter()
        .enumerate()
        .take(m + 1)
        .map(|(j, a)| binomial(k + (m - j) as i64, (m - j) as i64) * a)
        .sum()
}

/// Coefficients of `Π_i (1 + t + ... + t^{d_i - 1})`.
pub fn splitting_product_oracle(degrees: &[u32]) -> Result<SplittingType> {
    let mut acc = IntPoly::one();
    for &d in degrees {
        acc = poly_mul(&acc, &all_ones_poly(i64::from(d))?);
    }
    SplittingType::new(acc.into_coeffs())
}

/// `χ` of `⊕ O(-j)^{a_j}` on the projective line: `Σ a_j (1 - j)`.
pub fn euler_characteristic(st: &SplittingType) -> BigInt {
    st.multiplicities()
        .iter()
        .enumerate()
        .map(|(j, a)| a * (1 - j as i64))
        .sum()
}

/// `χ(P^k, O(m))`, the polynomial `(m + 1)(m + 2)...(m + k) / k!` evaluated at `m`.
fn chi_projective(k: u32, m: i64) -> BigInt {
    let k = i64::from(k);
    if m >= 0 {
        binomial(m + k, k)
    } else if m >= -k {
        BigInt::zero()
    } else {
        let v = binomial(-m - 1, k);
        if k % 2 == 0 {
            v
        } else {
            -v
        }
    }
}

/// `χ` of `⊕ O(-j)^{a_j}` on `P^dim`. Agrees with [`euler_characteristic`] for
/// `dim == 1`.
pub fn euler_characteristic_on(st: &SplittingType, dim: u32) -> BigInt {
    st.multiplicities()
        .iter()
        .enumerate()
        .map(|(j, a)| a * chi_projective(dim, -(j as i64)))
        .sum()
}

/// Constant term `P(0)` of the Hilbert polynomial of `X_r`, i.e. `χ(O_X)`.
///
/// `P` has degree `n - r` and agrees with `h_{r,m}` for large `m`; it is
/// interpolated at `m_0, ..., m_0 + n - r` with `m_0 = Σ d_i + n` in Newton form:
/// `P(0) = Σ_i C(-m_0, i) Δ^i P(m_0)`, and `C(-m_0, i) = (-1)^i C(m_0 + i - 1, i)`
/// keeps everything integral.
pub fn hilbert_polynomial_constant(spec: &CompleteIntersectionSpec) -> BigInt {
    let k = spec.target_dim() as usize;
    let m0 = spec.degrees.iter().map(|&d| d as usize).sum::<usize>() + spec.n as usize;
    let table = HilbertTable::compute(spec, m0 + k);
    let mut diffs: Vec<BigInt> = table.row(spec.codim())[m0..=m0 + k].to_vec();
    let mut total = BigInt::zero();
    for i in 0..=k {
        let coeff = binomial((m0 + i) as i64 - 1, i as i64);
        if i % 2 == 0 {
            total += coeff * &diffs[0];
        } else {
            total -= coeff * &diffs[0];
        }
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    total
}

/// The direct image as a bundle string together with its HN polygon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushforwardDescription {
    pub splitting: SplittingType,
    pub bundle: String,
    pub polygon: HNPolygon,
}

pub fn pushforward_description(spec: &CompleteIntersectionSpec) -> Result<PushforwardDescription> {
    let splitting = splitting_type(spec)?;
    let bundle = splitting.bundle_string();
    let polygon = polygon_from_splitting(&splitting);
    Ok(PushforwardDescription { splitting, bundle, polygon })
}
