//! Exact intersection theory on the toric limit of a Bott-Samelson variety.
//!
//! Everything is computed from a Cartan matrix and a word of simple
//! reflections: expansions of torus-invariant curves in the Schubert-line
//! basis, the extremal-ray basis of the curve cone, canonical degrees, Mori
//! rays and the Fano criterion, and ampleness of divisors in the boundary and
//! Lauritzen-Thomsen bases. A brute-force enumeration of fixed points and
//! invariant curves cross-checks the structural results.
//!
//! Positions in a word and simple-root indices are 1-based throughout the
//! public API.
//!
//! Coefficient arithmetic is generic over [`Scalar`] and always checked;
//! overflow surfaces as [`Error::Overflow`]. The aliases below fix the
//! scalar to `i64` (the common case) or to `BigInt` (never overflows).

pub mod chow;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod intersect;
pub mod rootsys;
pub mod scalar;
pub mod word;

pub use chow::Method;
pub use error::{Error, ErrorKind, Result};
pub use extremal::Algorithm;
pub use rootsys::{Family, RootSystem};
pub use scalar::Scalar;
pub use word::{AdmissibleSeq, Side, Word};

pub use num_bigint::BigInt;

pub type Coroot = rootsys::Coroot<i64>;
pub type CurveClass = chow::CurveClass<i64>;
pub type DivisorClass = intersect::DivisorClass<i64>;
pub type ExtremalBasis = extremal::ExtremalBasis<i64>;

pub type BigCoroot = rootsys::Coroot<BigInt>;
pub type BigCurveClass = chow::CurveClass<BigInt>;
pub type BigDivisorClass = intersect::DivisorClass<BigInt>;
pub type BigExtremalBasis = extremal::ExtremalBasis<BigInt>;
