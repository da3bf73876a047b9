//! Exact arithmetic for continued fraction expansions of generating functions.
//!
//! This crate builds generalized continued fractions attached to several
//! classical number families (Bernoulli, Cauchy, Euler, harmonic, and zeta
//! partial sums), entirely over arbitrary-precision rationals:
//!
//! - [`numerics`], [`poly`], [`series`]: rationals, dense polynomials, and
//!   truncated power series with exact coefficients;
//! - [`sequences`]: factorial-type helpers, hypergeometric-style coefficient
//!   streams, named number sequences, and a Mobius sieve;
//! - [`cf`]: the fraction representation, convergent recurrences via 2x2
//!   step matrices, contact-order defects, and the determinant identity;
//! - [`families`]: the catalog of built-in expansions and their targets;
//! - [`transform`]: linear fractional maps applied level-wise to a fraction;
//! - [`series2cf`]: extraction of a continued fraction from a raw series,
//!   with exact reconstruction as the inverse direction.
//!
//! Every computation is exact; decimal output is produced only at the edge,
//! with correctly truncated digits.

pub mod cf;
pub mod error;
pub mod families;
pub mod numerics;
pub mod poly;
pub mod sequences;
pub mod series;
pub mod series2cf;
pub mod transform;

pub use cf::{CFExpansion, ConvergentPair, DefectContract, DisplaySign, PartialTerm};
pub use error::{Error, Result};
pub use families::{build, target_series, FamilyId};
pub use numerics::{Integer, Rational};
pub use poly::Poly;
pub use series::{Series, Valuation};
