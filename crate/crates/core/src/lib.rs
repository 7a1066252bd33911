//! Construction, validation, and exhaustive enumeration of integral regular
//! truncated pyramids with rectangular bases.
//!
//! An *integral* frustum has integer lengths for all twelve edges, an
//! integer height, and an integer volume. The library provides:
//!
//! * [`exactmath`]: checked 64-bit integers, gcd, integer square root, and
//!   exact rationals;
//! * [`frustum`]: the candidate validator, the volume computed three
//!   algebraically independent ways, apex heights, and the lowest-terms
//!   base decomposition;
//! * [`diophantine`]: parametric solvers and brute-force enumerators for
//!   `t^2 = x^2 + y^2 + z^2` and `Z^2 = X^2 + 2Y^2`;
//! * [`families`]: the general seed assembly plus the two published
//!   parametric families (non-square and square-base);
//! * [`search`]: bounded exhaustive enumeration and the oracle cross-check
//!   certifying the condition-driven generator against a literal scan.
//!
//! ```
//! use frusta::{validate, SearchBounds, enumerate_integral};
//!
//! let report = validate(15, 5, 3, 1, 3, 7).unwrap();
//! assert!(report.overall_integral());
//! assert_eq!(report.derived.unwrap().volume.to_string(), "93");
//!
//! let bounds = SearchBounds::with_d_max(7, 1).unwrap();
//! let found = enumerate_integral(&bounds).unwrap();
//! assert!(found.iter().any(|(f, _)| f.as_array() == [15, 5, 3, 1, 3, 7]));
//! ```

pub mod diophantine;
pub mod exactmath;
pub mod families;
pub mod frustum;
pub mod search;

pub use diophantine::{
    enumerate_three_squares, enumerate_two_square, find_params_for, three_squares_from_params,
    three_squares_subfamily, two_square_from_params, DiophantineError, ThreeSquaresParams,
    ThreeSquaresSolution, ThreeSquaresWitness, TwoSquareParams, TwoSquareSolution,
};
pub use exactmath::{gcd, integer_sqrt, CheckedInt, ExactMathError, Rational};
pub use families::{
    build_general, build_prop2, build_prop3, prop2_admissible, FamilyError, GeneralSeed,
    ModThreeBranch, Prop2Admissibility, Prop2Seed, Prop3Seed,
};
pub use frustum::{
    apex_heights, decompose, integrality_criterion, validate, volume, volume_via_apex,
    volume_via_offsets, DerivedQuantities, Frustum, FrustumError, RatioDecomposition,
    ValidationReport,
};
pub use search::{
    brute_force_oracle, cross_check, enumerate_geometric, enumerate_integral, CrossCheckReport,
    Mismatch, MismatchSide, SearchBounds, SearchError, WORK_LIMIT,
};
