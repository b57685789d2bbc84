//! Graded pieces of Harder-Narasimhan filtrations and the polygon they span.
//!
//! Slopes are compared by cross-multiplication and never stored as fractions.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ci_splitting::SplittingType;
use crate::error::{Error, Result};

/// One successive quotient of a filtration: a semistable sheaf of the given rank
/// and degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedPiece {
    rank: BigInt,
    degree: BigInt,
    label: String,
}

impl GradedPiece {
    pub fn new(rank: impl Into<BigInt>, degree: impl Into<BigInt>, label: impl Into<String>) -> Result<Self> {
        let rank = rank.into();
        if !rank.is_positive() {
            return Err(Error::Domain(format!("graded piece must have rank >= 1, got {rank}")));
        }
        Ok(Self { rank, degree: degree.into(), label: label.into() })
    }

    pub fn rank(&self) -> &BigInt {
        &self.rank
    }

    pub fn degree(&self) -> &BigInt {
        &self.degree
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Slope `degree / rank` in lowest terms, denominator positive.
    pub fn slope(&self) -> (BigInt, BigInt) {
        let g = self.degree.gcd(&self.rank);
        (&self.degree / &g, &self.rank / &g)
    }

    /// Orders two pieces by slope: `d1 * r2` against `d2 * r1`.
    pub fn cmp_slope(&self, other: &Self) -> Ordering {
        (&self.degree * &other.rank).cmp(&(&other.degree * &self.rank))
    }
}

/// The Harder-Narasimhan polygon: graded pieces with strictly decreasing slopes,
/// maximal slope first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HNPolygon {
    pieces: Vec<GradedPiece>,
}

impl HNPolygon {
    pub fn pieces(&self) -> &[GradedPiece] {
        &self.pieces
    }

    pub fn into_pieces(self) -> Vec<GradedPiece> {
        self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    pub fn rank(&self) -> BigInt {
        self.pieces.iter().map(|p| &p.rank).sum()
    }

    pub fn degree(&self) -> BigInt {
        self.pieces.iter().map(|p| &p.degree).sum()
    }

    /// A single block means the whole sheaf is semistable.
    pub fn is_semistable(&self) -> bool {
        self.pieces.len() == 1
    }

    /// Cumulative `(rank, degree)` points, starting at the origin.
    pub fn vertices(&self) -> Vec<(BigInt, BigInt)> {
        let mut out = Vec::with_capacity(self.pieces.len() + 1);
        let (mut r, mut d) = (BigInt::zero(), BigInt::zero());
        out.push((r.clone(), d.clone()));
        for p in &self.pieces {
            r += &p.rank;
            d += &p.degree;
            out.push((r.clone(), d.clone()));
        }
        out
    }
}

/// Assembles pieces into a polygon.
///
/// Adjacent pieces of equal slope are merged into one semistable block. A piece
/// whose slope exceeds that of its predecessor is rejected.
pub fn polygon_from_pieces(pieces: Vec<GradedPiece>) -> Result<HNPolygon> {
    if pieces.is_empty() {
        return Err(Error::Domain("a filtration needs at least one graded piece".into()));
    }
    let mut merged: Vec<GradedPiece> = Vec::with_capacity(pieces.len());
    for (index, piece) in pieces.into_iter().enumerate() {
        let Some(last) = merged.last_mut() else {
            merged.push(piece);
            continue;
        };
        match piece.cmp_slope(last) {
            Ordering::Less => merged.push(piece),
            Ordering::Equal => {
                last.rank += piece.rank;
                last.degree += piece.degree;
                last.label = format!("{} ⊕ {}", last.label, piece.label);
            }
            Ordering::Greater => {
                return Err(Error::InvalidFiltration { prev: index - 1, index });
            }
        }
    }
    Ok(HNPolygon { pieces: merged })
}

/// `O(-j)^mult` in the notation used for bundle strings and labels.
pub(crate) fn line_bundle_label(j: usize, mult: &BigInt) -> String {
    let base = if j == 0 { "O".to_string() } else { format!("O(−{j})") };
    if mult.is_one() {
        base
    } else {
        format!("{base}^{mult}")
    }
}

/// Groups a sum of line bundles `⊕ O(-j)^{a_j}` by degree. Each nonzero `a_j`
/// becomes one block of rank `a_j` and degree `-j * a_j`.
pub fn polygon_from_splitting(st: &SplittingType) -> HNPolygon {
    let pieces = st
        .multiplicities()
        .iter()
        .enumerate()
        .filter(|(_, a)| a.is_positive())
        .map(|(j, a)| GradedPiece {
            rank: a.clone(),
            degree: -(a * BigInt::from(j)),
            label: line_bundle_label(j, a),
        })
        .collect();
    // Increasing j gives strictly decreasing slopes -j.
    HNPolygon { pieces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn piece(r: i64, d: i64) -> GradedPiece {
        GradedPiece::new(r, d, format!("({r},{d})")).unwrap()
    }

    fn shape(p: &HNPolygon) -> Vec<(i64, i64)> {
        p.pieces()
            .iter()
            .map(|q| (q.rank().try_into().unwrap(), q.degree().try_into().unwrap()))
            .collect()
    }

    #[test]
    fn three_step_polygon() {
        let p = polygon_from_pieces(vec![piece(1, 6), piece(1, 4), piece(1, 2)]).unwrap();
        assert_eq!(shape(&p), vec![(1, 6), (1, 4), (1, 2)]);
        let v: Vec<(i64, i64)> = p
            .vertices()
            .into_iter()
            .map(|(r, d)| (r.try_into().unwrap(), d.try_into().unwrap()))
            .collect();
        assert_eq!(v, vec![(0, 0), (1, 6), (2, 10), (3, 12)]);
    }

    #[test]
    fn single_piece() {
        let p = polygon_from_pieces(vec![piece(1, 0)]).unwrap();
        assert_eq!(p.vertices().len(), 2);
        assert!(p.is_semistable());
    }

    #[test]
    fn equal_slopes_merge() {
        let p = polygon_from_pieces(vec![piece(1, 0), piece(1, 0)]).unwrap();
        assert_eq!(shape(&p), vec![(2, 0)]);
        assert_eq!(p.pieces()[0].label(), "(1,0) ⊕ (1,0)");
        // Equal slope with different ranks: 2/2 == 1/1.
        let p = polygon_from_pieces(vec![piece(2, 2), piece(1, 1), piece(1, -5)]).unwrap();
        assert_eq!(shape(&p), vec![(3, 3), (1, -5)]);
    }

    #[test]
    fn increasing_slope_rejected() {
        let err = polygon_from_pieces(vec![piece(1, 0), piece(2, -1), piece(1, 3)]).unwrap_err();
        assert_eq!(err, Error::InvalidFiltration { prev: 1, index: 2 });
        assert!(polygon_from_pieces(vec![]).is_err());
        assert!(GradedPiece::new(0, 1, "x").is_err());
    }

    #[test]
    fn slope_in_lowest_terms() {
        assert_eq!(piece(4, -6).slope(), (BigInt::from(-3), BigInt::from(2)));
        assert_eq!(piece(3, 0).slope(), (BigInt::from(0), BigInt::from(1)));
    }

    #[test]
    fn from_splitting_groups_by_degree() {
        let st = SplittingType::from_i64s(&[1, 2, 2, 1]).unwrap();
        let p = polygon_from_splitting(&st);
        assert_eq!(shape(&p), vec![(1, 0), (2, -2), (2, -4), (1, -3)]);
        let labels: Vec<&str> = p.pieces().iter().map(|q| q.label()).collect();
        assert_eq!(labels, vec!["O", "O(−1)^2", "O(−2)^2", "O(−3)"]);
        assert_eq!(polygon_from_pieces(p.pieces().to_vec()).unwrap(), p);

        let p = polygon_from_splitting(&SplittingType::from_i64s(&[1]).unwrap());
        assert_eq!(shape(&p), vec![(1, 0)]);

        let p = polygon_from_splitting(&SplittingType::from_i64s(&[1, 1, 1, 1]).unwrap());
        let slopes: Vec<_> = p.pieces().iter().map(|q| q.slope().0).collect();
        assert_eq!(slopes, [0, -1, -2, -3].map(BigInt::from).to_vec());

        // Zero multiplicities are skipped.
        let p = polygon_from_splitting(&SplittingType::from_i64s(&[0, 6]).unwrap());
        assert_eq!(shape(&p), vec![(6, -6)]);
    }

    fn pieces_strategy() -> impl Strategy<Value = Vec<GradedPiece>> {
        prop::collection::vec((1i64..6, -30i64..30), 1..8).prop_map(|v| {
            let mut ps: Vec<GradedPiece> = v.into_iter().map(|(r, d)| piece(r, d)).collect();
            ps.sort_by(|a, b| b.cmp_slope(a));
            ps
        })
    }

    proptest! {
        #[test]
        fn merging_conserves_rank_and_degree(ps in pieces_strategy()) {
            let r: BigInt = ps.iter().map(|p| p.rank().clone()).sum();
            let d: BigInt = ps.iter().map(|p| p.degree().clone()).sum();
            let poly = polygon_from_pieces(ps).unwrap();
            prop_assert_eq!(poly.rank(), r);
            prop_assert_eq!(poly.degree(), d);
            for w in poly.pieces().windows(2) {
                prop_assert_eq!(w[0].cmp_slope(&w[1]), Ordering::Greater);
            }
        }

        #[test]
        fn construction_is_idempotent(ps in pieces_strategy()) {
            let poly = polygon_from_pieces(ps).unwrap();
            prop_assert_eq!(polygon_from_pieces(poly.pieces().to_vec()).unwrap(), poly);
        }

        #[test]
        fn slope_order_is_cross_multiplication(r1 in 1i64..50, d1 in -50i64..50, r2 in 1i64..50, d2 in -50i64..50) {
            let expected = (d1 * r2).cmp(&(d2 * r1));
            prop_assert_eq!(piece(r1, d1).cmp_slope(&piece(r2, d2)), expected);
        }

        #[test]
        fn vertices_are_concave(ps in pieces_strategy()) {
            let poly = polygon_from_pieces(ps).unwrap();
            let v = poly.vertices();
            for w in v.windows(3) {
                // Cross product of consecutive edges is negative for a right turn.
                let (ax, ay) = (&w[1].0 - &w[0].0, &w[1].1 - &w[0].1);
                let (bx, by) = (&w[2].0 - &w[1].0, &w[2].1 - &w[1].1);
                prop_assert!(ax * by - ay * bx < BigInt::zero());
            }
        }
    }
}
