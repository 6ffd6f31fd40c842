//! Residues of rational functions `P(x)/Q(x)` with exact rational coefficients.
//!
//! Only the two evaluations the Chern computations need are provided: simple
//! poles in the finite plane, and the point at infinity through `x = 1/u`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::series::{Rational, TruncatedSeries};

/// Dense polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: Rational, c1: Rational) -> Self {
        Self::new(vec![c0, c1])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Rational::zero(); k + 1];
        c[k] = Rational::one();
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has none.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `x^deg * P(1/x)`: the coefficient sequence reversed.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Power series of this polynomial truncated at `order`.
    pub fn to_series(&self, order: usize) -> TruncatedSeries {
        let c = self.coeffs.iter().take(order + 1).cloned().collect();
        TruncatedSeries::new(order, c).expect("truncated to fit")
    }
}

/// The rational function `numerator / denominator`.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
}

impl RationalFunction {
    pub fn new(numerator: Polynomial, denominator: Polynomial) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Self {
            numerator,
            denominator,
        })
    }

    /// Residue at a simple pole `x0`: `P(x0) / Q'(x0)`. Fails unless `x0` is a
    /// simple zero of the denominator.
    pub fn residue_simple_pole(&self, x0: &Rational) -> Result<Rational> {
        if !self.denominator.eval(x0).is_zero() {
            return Err(Error::Domain(format!("{x0} is not a pole")));
        }
        let dq = self.denominator.derivative().eval(x0);
        if dq.is_zero() {
            return Err(Error::Domain(format!("pole at {x0} is not simple")));
        }
        Ok(self.numerator.eval(x0) / dq)
    }

    /// Residue at infinity, i.e. the residue at `u = 0` of
    /// `-u^{-2} f(1/u)`.
    ///
    /// With `p = deg P`, `q = deg Q` we have
    /// `f(1/u) = u^{q-p} rev(P)(u) / rev(Q)(u)` where `rev(Q)(0) != 0`, so the
    /// residue is minus the coefficient of `u^{1+p-q}` in the power series
    /// `rev(P) / rev(Q)` (zero when that index is negative).
    pub fn residue_at_infinity(&self) -> Result<Rational> {
        let Some(p) = self.numerator.degree() else {
            return Ok(Rational::zero());
        };
        let q = self.denominator.degree().expect("nonzero denominator");
        let index = 1 + p as i64 - q as i64;
        if index < 0 {
            return Ok(Rational::zero());
        }
        let order = index as usize;
        let num = self.numerator.reversed().to_series(order);
        let den = self.denominator.reversed().to_series(order);
        let quotient = num.mul(&den.inverse()?)?;
        Ok(-quotient.coefficient(order)?.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn poly(c: &[i64]) -> Polynomial {
        Polynomial::new(c.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn polynomial_basics() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(poly(&[1, 1]).pow(3), poly(&[1, 3, 3, 1]));
        assert_eq!(poly(&[5, 3, 2]).derivative(), poly(&[3, 4]));
        assert_eq!(poly(&[1, 1, 1]).eval(&rat(2)), rat(7));
        assert_eq!(poly(&[0, 0, 3, 1]).reversed(), poly(&[1, 3]));
    }

    #[test]
    fn simple_pole_of_one_over_x_squared_minus_one() {
        let f = RationalFunction::new(Polynomial::one(), poly(&[-1, 0, 1])).unwrap();
        assert_eq!(
            f.residue_simple_pole(&rat(1)).unwrap(),
            Rational::new(1.into(), 2.into())
        );
        assert_eq!(
            f.residue_simple_pole(&rat(-1)).unwrap(),
            Rational::new((-1).into(), 2.into())
        );
        // both finite residues cancel, so infinity contributes 0
        assert_eq!(f.residue_at_infinity().unwrap(), rat(0));
        assert!(f.residue_simple_pole(&rat(3)).is_err());
    }

    #[test]
    fn double_pole_is_rejected() {
        let f = RationalFunction::new(Polynomial::one(), poly(&[0, 0, 1])).unwrap();
        assert!(f.residue_simple_pole(&rat(0)).is_err());
    }

    #[test]
    fn infinity_of_one_over_x() {
        // 1/x has residue 1 at 0 and -1 at infinity
        let f = RationalFunction::new(Polynomial::one(), Polynomial::monomial(1)).unwrap();
        assert_eq!(f.residue_at_infinity().unwrap(), rat(-1));
        // x^2/(x-1) = x + 1 + 1/(x-1): residue at infinity is -1
        let g = RationalFunction::new(poly(&[0, 0, 1]), poly(&[-1, 1])).unwrap();
        assert_eq!(g.residue_at_infinity().unwrap(), rat(-1));
    }
}
