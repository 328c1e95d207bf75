//! Exact computation of the intersection Poincaré polynomial of the
//! moduli space of rank-2 Higgs bundles with trivial determinant over a
//! genus-`g` curve, for any `g >= 2`.
//!
//! The computation runs entirely in exact integer arithmetic; all values
//! are immutable and all operations are pure functions, so different
//! genera can be evaluated concurrently without shared state. Two
//! independent routes produce the final polynomial of degree `6g - 6`:
//! a step-by-step assembly of blowing-up corrections following the
//! Kirwan desingularization, and a monolithic closed formula kept as a
//! validation target. Both must agree coefficientwise; every
//! intermediate quantity carries its own cross-checks (closed-form
//! comparisons, positivity, integrality, degree bounds).
//!
//! Module layout:
//! - [`polyring`]: dense `BigInt` polynomials, unreduced rational
//!   functions, Z2-split series; exact division as the central
//!   self-diagnostic.
//! - [`spaces`]: Poincaré series of the building-block spaces.
//! - [`blowup`]: cone truncation and the shifted Z2-Künneth corrections.
//! - [`equivariant`]: the equivariant series of the Kirwan stages.
//! - [`engine`]: final assembly, reference tables and the per-genus
//!   verification suite.

pub mod blowup;
pub mod engine;
pub mod equivariant;
pub mod error;
pub mod polyring;
pub mod spaces;

pub use error::{Error, Result};
pub use polyring::{Degree, Polynomial, RationalFunction, SplitSeries};
pub use spaces::Genus;
