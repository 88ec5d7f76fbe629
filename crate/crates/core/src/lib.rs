//! Combinatorics of handsaw quiver varieties and finite W-algebras of type A.
//!
//! Torus fixed points are tuples of Young diagrams ([`diagrams`]); their
//! tangent characters and cell dimensions ([`geometry`]) give Poincaré
//! polynomials of central fibers ([`betti`]). Graded versions of the same
//! fixed points produce ℓ-weights, Gelfand-Tsetlin characters and strata
//! ([`graded`]), and Kazhdan-Lusztig polynomials turn strata into
//! composition multiplicities of Verma modules ([`kl`]).
//!
//! All arithmetic is exact.

pub mod algebra;
pub mod betti;
pub mod diagrams;
pub mod error;
pub mod geometry;
pub mod graded;
pub mod kl;
pub mod oracle;
pub mod pyramid;

pub use algebra::{IntRootedRational, LaurentPolynomial, TruncatedSeries};
pub use betti::{kostant_q_oracle, poincare_from_fixed_points, poincare_product, verify_betti, BettiReport};
pub use diagrams::{
    enumerate_fixed_points, for_each_fixed_point, Cell, DimensionVector, FixedPointTuple, FramingVector, LineIndex,
    YoungDiagram,
};
pub use error::{Error, Result};
pub use geometry::{
    attracting_dimensions, base_point, dim_q, stratum_dimension, tangent_character, verify_smallness, AttractingDims,
    CharacterSum, SmallnessReport, TangentTerm,
};
pub use graded::{
    ell_weight, graded_dimensions, gt_character, is_ell_dominant, regrade, split_by_coset, strata, EllWeight,
    GradedDimVector, PrimedGrading, RationalSpectralData, SpectralData, Stratum,
};
pub use kl::{
    bruhat_le, composition_multiplicity, decomposition_matrix, kl_polynomial, longest_double_coset_rep, multisegments,
    weights_from_drinfeld, IntegerWeight, KLCache, Multisegment, Permutation, Segment,
};
pub use pyramid::{Pyramid, ShiftMatrix};
