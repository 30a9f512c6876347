//! Enumeration of permutations avoiding three patterns of length four.
//!
//! Counting is done on the generating tree of avoiders. Generating functions
//! are truncated power series over an exact field, either the rationals or
//! the quadratic extension by `sqrt(5)`.

pub mod cases;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod forest;
pub mod formulas;
pub mod perm;
pub mod scalar;
pub mod series;
pub mod symmetry;
pub mod verify;

pub use error::Error;
pub use perm::{PatternTriple, Perm};
pub use scalar::{QuadExt, Scalar};
pub use series::Series;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub type Rational = BigRational;
pub type Sqrt5 = QuadExt<Rational, 5>;
pub type RatSeries = Series<Rational>;
pub type Sqrt5Series = Series<Sqrt5>;
pub type FloatSeries = Series<f64>;

/// Default truncation order of generating functions.
pub const DEFAULT_ORDER: usize = 16;
