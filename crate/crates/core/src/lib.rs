//! Exact-arithmetic noncommutative biorthogonal polynomials over concrete
//! division rings.
//!
//! The crate provides:
//!
//! - [`ring`]: exact rationals and rational quaternions behind the
//!   [`ring::DivisionRing`] trait;
//! - [`poly`]: one-sided polynomials R\[x\] (left coefficients) and R\[y\]
//!   (right coefficients), plus central-coefficient kernel polynomials;
//! - [`pairing`]: bimoment tables and the biadditive pairing they define;
//! - [`linalg`]: dense exact matrices, division-ring Gaussian elimination
//!   and quasideterminants;
//! - [`banded`]: truncated infinite matrices with certified band intervals
//!   and truncation-exactness bookkeeping;
//! - [`biortho`]: quasideterminant construction of monic and biorthonormal
//!   biorthogonal systems from a bimoment table, with exact verification;
//! - [`recurrence`]: kernel-condition checking and synthesis, the X/Y/A/B
//!   recurrence operators and exact verification of the banded recurrences;
//! - [`favard`]: the inverse construction of the unique bimoment table
//!   making two prescribed polynomial sequences biorthogonal;
//! - [`json`]: the exact JSON encodings shared with the CLI;
//! - [`gen`]: seeded random generators for generic test data.
//!
//! Everything is exact: scalars are arbitrary-precision rationals or
//! rational quaternions, equalities in every verification are structural,
//! and there is no floating point anywhere.

pub mod banded;
pub mod biortho;
pub mod error;
pub mod favard;
pub mod gen;
pub mod json;
pub mod linalg;
pub mod pairing;
pub mod poly;
pub mod recurrence;
pub mod ring;

pub use banded::{band_infer, Band, BandLimit, BandedMatrix};
pub use biortho::{BiorthoSystem, GramReport, Normalization};
pub use error::{Error, Result};
pub use favard::FavardInput;
pub use linalg::DenseMatrix;
pub use pairing::{pair, pair_vec, pair_vec_right, BimomentTable};
pub use poly::{CentralPoly, LeftPoly, RightPoly};
pub use recurrence::{KernelData, RecurrenceOps, RecurrenceReport};
pub use ring::{DivisionRing, Quat, Rat, RingTag};
