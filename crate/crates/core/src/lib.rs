//! Exact computational algebra for the rational Cherednik (symplectic reflection) algebra
//! of the wreath product S_n ≀ C_ℓ and the representation geometry of the cyclic quiver.
//!
//! Modules:
//! - [`scalars`]: rationals, the cyclotomic field Q(η_ℓ), truncated power series
//! - [`wreath`]: the group Γ_n = S_n ≀ C_ℓ, its symplectic reflections, group algebra,
//!   symmetrising idempotent and Molien series
//! - [`sra`]: PBW normal forms in H_{k,c}, relation and associativity checks, the
//!   spherical subalgebra eH_{k,c}e and its graded dimensions
//! - [`quiver`]: representations of the cyclic quiver and its framed double, moment
//!   maps, regular locus, trace-cycle invariants and invariant dimensions of fibres
//! - [`characters`]: the characters χ_{k,c}, twist exponents, determinant characters,
//!   and the parameter shift k ↦ k+1
//! - [`radial`]: differential operators on the regular locus, the Γ_n action on them,
//!   and conjugation by the twist δ_{k,c}
//! - [`harness`]: the verification suites behind the `verify` binary
//!
//! All arithmetic is exact; nothing here uses floating point.

pub mod characters;
pub mod error;
pub mod harness;
pub mod linalg;
pub mod poly;
pub mod quiver;
pub mod radial;
pub mod sample;
pub mod scalars;
pub mod sra;
pub mod wreath;

pub use error::{Error, Result};
pub use scalars::{Cyclotomic, Field, Rational, TruncSeries};
