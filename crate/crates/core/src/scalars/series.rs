use std::fmt;

use serde::Serialize;

use super::{Field, Rational};
use crate::error::{Error, Result};

/// Power series truncated after degree `cap`.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct TruncSeries<F: Field = Rational> {
    cap: usize,
    coeffs: Vec<F>,
}

impl<F: Field> TruncSeries<F> {
    /// Builds a series from leading coefficients; missing degrees are zero and
    /// degrees above `cap` are dropped.
    pub fn new(cap: usize, zero: &F, coeffs: impl IntoIterator<Item = F>) -> Self {
        let mut c: Vec<F> = coeffs.into_iter().take(cap + 1).collect();
        c.resize(cap + 1, zero.zero_like());
        TruncSeries { cap, coeffs: c }
    }

    pub fn constant(cap: usize, value: F) -> Self {
        let zero = value.zero_like();
        Self::new(cap, &zero, [value])
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> &F {
        &self.coeffs[d]
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.cap != other.cap {
            return Err(Error::CapMismatch(self.cap, other.cap));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(TruncSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.cap + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.cap + 1 - i) {
                if !b.is_zero() {
                    out[i + j] = out[i + j].plus(&a.times(b));
                }
            }
        }
        Ok(TruncSeries {
            cap: self.cap,
            coeffs: out,
        })
    }

    /// `self / other`; requires a nonzero constant term in `other`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let inv0 = other.coeffs[0].try_inv()?;
        let mut out: Vec<F> = Vec::with_capacity(self.cap + 1);
        for d in 0..=self.cap {
            let mut acc = self.coeffs[d].clone();
            for j in 1..=d {
                if !other.coeffs[j].is_zero() {
                    acc = acc.minus(&other.coeffs[j].times(&out[d - j]));
                }
            }
            out.push(acc.times(&inv0));
        }
        Ok(TruncSeries {
            cap: self.cap,
            coeffs: out,
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        TruncSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(|c| c.times(s)).collect(),
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TruncSeries<G> {
        TruncSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Option<G>) -> Option<TruncSeries<G>> {
        Some(TruncSeries {
            cap: self.cap,
            coeffs: self.coeffs.iter().map(f).collect::<Option<Vec<_>>>()?,
        })
    }
}

impl TruncSeries<Rational> {
    pub fn from_ints(cap: usize, coeffs: &[i64]) -> Self {
        Self::new(cap, &Rational::zero(), coeffs.iter().map(|&c| Rational::from_int(c)))
    }
}

impl<F: Field> fmt::Display for TruncSeries<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{d}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.cap + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Div,
}

pub fn series_op<F: Field>(a: &TruncSeries<F>, b: &TruncSeries<F>, which: SeriesOp) -> Result<TruncSeries<F>> {
    match which {
        SeriesOp::Add => a.add(b),
        SeriesOp::Mul => a.mul(b),
        SeriesOp::Div => a.div(b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        let one = TruncSeries::from_ints(3, &[1]);
        let den = TruncSeries::from_ints(3, &[1, -1]);
        assert_eq!(
            series_op(&one, &den, SeriesOp::Div).unwrap(),
            TruncSeries::from_ints(3, &[1, 1, 1, 1])
        );
    }

    #[test]
    fn difference_of_squares() {
        let a = TruncSeries::from_ints(2, &[1, 1]);
        let b = TruncSeries::from_ints(2, &[1, -1]);
        assert_eq!(
            series_op(&a, &b, SeriesOp::Mul).unwrap(),
            TruncSeries::from_ints(2, &[1, 0, -1])
        );
    }

    #[test]
    fn molien_shaped_quotient() {
        // (1+t²)/(1−t²)² = (1+t²)·Σ(m+1)t^{2m} = 1 + 3t² + 5t⁴ + ...
        let num = TruncSeries::from_ints(4, &[1, 0, 1]);
        let base = TruncSeries::from_ints(4, &[1, 0, -1]);
        let den = base.mul(&base).unwrap();
        assert_eq!(num.div(&den).unwrap(), TruncSeries::from_ints(4, &[1, 0, 3, 0, 5]));
    }

    #[test]
    fn division_by_nonunit_fails() {
        let a = TruncSeries::from_ints(3, &[1]);
        let b = TruncSeries::from_ints(3, &[0, 1]);
        assert_eq!(a.div(&b), Err(Error::DivisionByZero));
        let c = TruncSeries::from_ints(2, &[1]);
        assert_eq!(a.add(&c), Err(Error::CapMismatch(3, 2)));
    }

    #[test]
    fn truncation_respected() {
        let a = TruncSeries::from_ints(1, &[1, 1, 1, 1]);
        assert_eq!(a.coeffs().len(), 2);
        let sq = a.mul(&a).unwrap();
        assert_eq!(sq, TruncSeries::from_ints(1, &[1, 2]));
    }
}
