//! Invariants of 3-dimensional Besse contact manifolds from their Seifert data.
//!
//! The crate covers the classical invariants (Euler number, orbifold Euler
//! characteristic, integral and mod-2 homology), the first Chern class of the
//! Besse contact structure, the classification of `c1 = 0` data, the
//! Robbin-Salamon indices of closed Reeb orbits and the `E1` page of the
//! Morse-Bott spectral sequence for positive symplectic homology.
//!
//! All arithmetic is exact. The linear algebra and index routines are generic
//! over the integer type through [`ExactInt`]; the aliases below fix the
//! arbitrary-precision instantiation used by the topology layer.

pub mod chern;
pub mod classify;
pub mod error;
pub mod exactalg;
pub mod homology;
pub mod index;
pub mod morse_bott;
pub mod scalar;
pub mod seifert;

pub use error::{Error, Result};
pub use scalar::ExactInt;

/// Arbitrary-precision integer used by the topology layer.
pub type Int = num_bigint::BigInt;
/// Exact rational number, always reduced with a positive denominator.
pub type Rational = num_rational::Ratio<Int>;
/// Dense integer matrix over [`Int`].
pub type IntMatrix = exactalg::Matrix<Int>;
/// Smith decomposition over [`Int`].
pub type SmithDecomposition = exactalg::Smith<Int>;

pub use chern::{ChernReport, TrivializationLedger};
pub use classify::{ClassificationResult, Family};
pub use homology::{Coefficients, CwComplex, HomologyGroups};
pub use index::{OrbitId, OrbitKind};
pub use morse_bott::{E1Page, MorseBottStratum, ShResult, StratumKind, Verdict};
pub use seifert::{AdeType, Pair, SeifertData, ZeroBForm};
