//! Exact counting of sum-product growth quantities over ℚ and ℚ(i).
//!
//! The crate computes, with arbitrary-precision exact arithmetic, the
//! combinatorial quantities that drive sum-product growth estimates:
//! multiplicative energies, the six-variable solution count Q and its
//! exact partition, shifted-energy sums and pinned product-set
//! certificates, cross-ratio sets, collinear-triple and rich-line counts
//! on planar grids, and rectangle pseudo-distance sets. Fast counting
//! paths (multiplicity maps, line spectra) are cross-validated against
//! independent brute-force oracles, and a CLI harness runs parameterized
//! set families, emitting deterministic JSON/CSV reports.
//!
//! Scalar text encoding: rationals are written `p/q` (reduced, `q > 0`);
//! Gaussian rationals are written `p/q+r/si` with the sign of the
//! imaginary part folded into the separator. Parsers also accept the
//! integer shorthand `p` for `p/1`.

pub mod decimal;
pub mod error;
pub mod gauss;
pub mod growth;
pub mod incidence;
pub mod report;
pub mod scalar;
pub mod set;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Field, FieldTag, GaussianRational, Rational, Scalar};
pub use set::{FiniteScalarSet, PlanarPointSet, TaggedSet};
