//! Exact scalars: rationals, the cyclotomic field Q(η_ℓ), and truncated power series.
//!
//! Everything downstream (group algebra, PBW normal forms, quiver linear algebra,
//! differential operators) computes over [`Cyclotomic`]. [`Rational`] is the coordinate
//! ring of the cyclotomic basis and the coefficient type of Hilbert/Molien series.

mod cyclotomic;
mod parse;
mod rational;
mod series;

pub use cyclotomic::{cyc_arith, cyc_inv, euler_phi, CycOp, Cyclotomic};
pub use parse::{parse_cyclotomic, parse_cyclotomic_list};
pub use rational::Rational;
pub use series::{series_op, SeriesOp, TruncSeries};

use std::fmt;

use crate::error::Result;

/// Minimal field interface used by the generic linear algebra and series code.
///
/// Method names avoid clashing with `std::ops` so that both can be in scope.
pub trait Field: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negate(&self) -> Self;
    fn try_inv(&self) -> Result<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}
