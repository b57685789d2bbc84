//! Exact computation of splitting types and Harder-Narasimhan data for direct
//! images of structure sheaves under a handful of finite maps:
//!
//!  - projections of complete intersections in `P^n` to `P^{n-r}` ([`ci_splitting`]),
//!  - curves cut out by a divisor in a ruled surface `P(E) -> X` ([`ruled_surface`]),
//!  - intersections of two hypersurfaces in a `P^2`-bundle ([`two_hypersurfaces`]),
//!  - pushforwards to `P^1` of bundles without cohomology ([`acyclic_pushforward`]).
//!
//! Only numerical invariants (ranks, degrees, dimensions of spaces of sections) are
//! modelled. Every quantity is an exact [`BigInt`]; there is no floating point in
//! the library.

pub mod acyclic_pushforward;
pub mod ci_splitting;
pub mod error;
pub mod exact_series;
pub mod hn_core;
pub mod ruled_surface;
pub mod two_hypersurfaces;

pub use num_bigint::BigInt;

pub use acyclic_pushforward::{euler_char, pushforward_splitting, AcyclicSpec};
pub use ci_splitting::{
    euler_characteristic, euler_characteristic_on, hilbert_function, hilbert_oracle,
    hilbert_polynomial_constant, pushforward_description, resubstitute, splitting_product_oracle,
    splitting_type, CompleteIntersectionSpec, HilbertTable, PushforwardDescription,
    SplittingType,
};
pub use error::{Error, Result};
pub use exact_series::{all_ones_poly, binomial, poly_mul, IntPoly};
pub use hn_core::{polygon_from_pieces, polygon_from_splitting, GradedPiece, HNPolygon};
pub use ruled_surface::{
    direct_image_quotient_hn, sym_power_hn, Characteristic, QuotientHn, RuledSurfaceSpec,
    Stability,
};
pub use two_hypersurfaces::{
    quotient_presentation, sym_rank_deg, KernelPresentation, KernelQuotient, RankDegree,
    TwoHypersurfaceSpec,
};
