//! Exact rationals and truncated power series in the hyperplane class `h`.
//!
//! A [`TruncatedSeries`] of order `N` stores exactly `N + 1` coefficients and
//! represents `c_0 + c_1 h + ... + c_N h^N  (mod h^{N+1})`. Every binary
//! operation requires both operands to have the same order; nothing is
//! silently truncated or padded.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision exact fraction, kept in lowest terms with a positive
/// denominator after every operation.
pub type Rational = num_rational::BigRational;

/// Converts a machine integer into a [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series of the given order from leading coefficients; missing
    /// coefficients are zero. Fails if more than `order + 1` are supplied.
    pub fn new(order: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() > order + 1 {
            return Err(Error::Mismatch(format!(
                "{} coefficients do not fit order {order}",
                coeffs.len()
            )));
        }
        let mut coeffs = coeffs;
        coeffs.resize(order + 1, Rational::zero());
        Ok(Self { coeffs })
    }

    pub fn from_ints(order: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(order, coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, Rational::one())
    }

    pub fn constant(order: usize, c: Rational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The series `1 + a h`. A zero slope gives the constant series 1.
    pub fn linear(order: usize, a: &BigInt) -> Self {
        let mut s = Self::one(order);
        if order >= 1 && !a.is_zero() {
            s.coeffs[1] = Rational::from_integer(a.clone());
        }
        s
    }

    /// `(1 + a h)^e` for any integer `e`, from the generalized binomial
    /// recurrence `c_k = c_{k-1} * a * (e - k + 1) / k`. Linear in the order.
    pub fn linear_power(order: usize, a: &BigInt, e: i64) -> Self {
        let mut s = Self::one(order);
        if a.is_zero() || e == 0 {
            return s;
        }
        let a = Rational::from_integer(a.clone());
        for k in 1..=order {
            let factor = &a * rat(e - k as i64 + 1) / rat(k as i64);
            s.coeffs[k] = &s.coeffs[k - 1] * factor;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The coefficient of `h^k`.
    pub fn coefficient(&self, k: usize) -> Result<&Rational> {
        self.coeffs.get(k).ok_or(Error::Index {
            index: k,
            order: self.order(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Mismatch(format!(
                "truncation orders {} and {} differ",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { coeffs })
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Schoolbook Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse via `t_0 = 1/c_0`,
    /// `t_k = -(1/c_0) * sum_{j=1..k} c_j t_{k-j}`.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv_c0 = c0.recip();
        let n = self.order();
        let mut t = Self::zero(n);
        t.coeffs[0] = inv_c0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let cj = &self.coeffs[j];
                if !cj.is_zero() {
                    acc += cj * &t.coeffs[k - j];
                }
            }
            t.coeffs[k] = -(acc * &inv_c0);
        }
        Ok(t)
    }

    /// `self^k` by repeated squaring; negative exponents invert first.
    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq)?;
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq)?;
            }
        }
        Ok(acc)
    }

    /// Multiplies by `1 + a h` in linear time.
    pub fn mul_linear(&self, a: &BigInt) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let a = Rational::from_integer(a.clone());
        let mut coeffs = self.coeffs.clone();
        for k in (1..coeffs.len()).rev() {
            let shifted = &self.coeffs[k - 1] * &a;
            coeffs[k] += shifted;
        }
        Self { coeffs }
    }

    /// Divides by `1 + a h` in linear time: `t_k = s_k - a t_{k-1}`.
    pub fn div_linear(&self, a: &BigInt) -> Self {
        if a.is_zero() {
            return self.clone();
        }
        let a = Rational::from_integer(a.clone());
        let mut coeffs = self.coeffs.clone();
        for k in 1..coeffs.len() {
            let prev = &coeffs[k - 1] * &a;
            coeffs[k] -= prev;
        }
        Self { coeffs }
    }
}

const SUPERSCRIPTS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];

fn superscript(k: usize) -> String {
    k.to_string()
        .chars()
        .map(|c| SUPERSCRIPTS[c.to_digit(10).unwrap() as usize])
        .collect()
}

/// Renders as `1 + 3h + 5h²`, skipping zero terms.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = match k {
                0 => String::new(),
                1 => "h".to_string(),
                _ => format!("h{}", superscript(k)),
            };
            if k == 0 || !mag.is_one() {
                if mag.is_integer() || k == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            f.write_str(&var)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn s(order: usize, c: &[i64]) -> TruncatedSeries {
        TruncatedSeries::from_ints(order, c).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(s(1, &[1, 1]).add(&s(1, &[1, -1])).unwrap(), s(1, &[2]));
        let x = s(2, &[1, 2, 3]);
        assert_eq!(x.add(&TruncatedSeries::zero(2)).unwrap(), x);
        assert_eq!(x.add(&s(2, &[0, 1, 1])).unwrap(), s(2, &[1, 3, 4]));
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let err = s(1, &[1, 1]).add(&s(2, &[1])).unwrap_err();
        assert!(matches!(err, Error::Mismatch(_)));
        assert!(matches!(
            s(1, &[1]).mul(&s(3, &[1])),
            Err(Error::Mismatch(_))
        ));
        assert!(TruncatedSeries::from_ints(1, &[1, 2, 3]).is_err());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            s(2, &[1, 1]).mul(&s(2, &[1, -1])).unwrap(),
            s(2, &[1, 0, -1])
        );
        assert_eq!(s(2, &[1, 1]).mul(&s(2, &[1, 1])).unwrap(), s(2, &[1, 2, 1]));
        let a = s(4, &[1, 2]);
        assert_eq!(
            a.mul(&a.inverse().unwrap()).unwrap(),
            TruncatedSeries::one(4)
        );
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(s(3, &[1, 2]).inverse().unwrap(), s(3, &[1, -2, 4, -8]));
        assert_eq!(s(3, &[1]).inverse().unwrap(), s(3, &[1]));
        assert_eq!(s(3, &[1, -1]).inverse().unwrap(), s(3, &[1, 1, 1, 1]));
        assert_eq!(s(2, &[0, 1]).inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn pow_examples() {
        assert_eq!(s(2, &[1, 1]).pow(4).unwrap(), s(2, &[1, 4, 6]));
        assert_eq!(s(2, &[3, 1, 7]).pow(0).unwrap(), s(2, &[1]));
        assert_eq!(s(2, &[1, 1]).pow(-1).unwrap(), s(2, &[1, -1, 1]));
        assert_eq!(s(2, &[0, 1]).pow(-2), Err(Error::NotInvertible));
        // h^3 vanishes at order 2
        assert_eq!(s(2, &[0, 1]).pow(3).unwrap(), s(2, &[]));
    }

    #[test]
    fn coefficient_examples() {
        let x = s(2, &[1, 4, 6]);
        assert_eq!(x.coefficient(2).unwrap(), &rat(6));
        assert_eq!(x.coefficient(0).unwrap(), &rat(1));
        assert_eq!(x.coefficient(3), Err(Error::Index { index: 3, order: 2 }));

        // (1+h)^4 (1+2h)^{-1} (1-h)^{-1} = (1+4h+6h²)(1-2h+4h²)(1+h+h²): h² coefficient
        // 6 - 8 + 4 + (4 - 2) + 1 = 5.
        let p = s(2, &[1, 1])
            .pow(4)
            .unwrap()
            .mul(&s(2, &[1, 2]).inverse().unwrap())
            .unwrap()
            .mul(&s(2, &[1, -1]).inverse().unwrap())
            .unwrap();
        assert_eq!(p.coefficient(2).unwrap(), &rat(5));
    }

    #[test]
    fn linear_fast_paths_agree_with_ring_ops() {
        for a in -4i64..=4 {
            let ab = BigInt::from(a);
            let lin = TruncatedSeries::linear(6, &ab);
            for e in -5i64..=5 {
                assert_eq!(
                    TruncatedSeries::linear_power(6, &ab, e),
                    lin.pow(e).unwrap()
                );
            }
            let x = s(6, &[3, -1, 4, 1, -5, 9, 2]);
            assert_eq!(x.mul_linear(&ab), x.mul(&lin).unwrap());
            assert_eq!(x.div_linear(&ab), x.mul(&lin.inverse().unwrap()).unwrap());
        }
    }

    #[test]
    fn display() {
        assert_eq!(s(2, &[1, 3, 5]).to_string(), "1 + 3h + 5h²");
        assert_eq!(s(3, &[1, -2, 4, -8]).to_string(), "1 - 2h + 4h² - 8h³");
        assert_eq!(s(2, &[0, -1]).to_string(), "-h");
        assert_eq!(TruncatedSeries::zero(3).to_string(), "0");
        let half =
            TruncatedSeries::new(1, vec![rat(0), Rational::new(1.into(), 2.into())]).unwrap();
        assert_eq!(half.to_string(), "(1/2)h");
        assert_eq!(superscript(12), "¹²");
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn arb_series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
        proptest::collection::vec(arb_rational(), order + 1)
            .prop_map(move |c| TruncatedSeries::new(order, c).unwrap())
    }

    fn arb_triple() -> impl Strategy<Value = (TruncatedSeries, TruncatedSeries, TruncatedSeries)> {
        (0usize..6).prop_flat_map(|n| (arb_series(n), arb_series(n), arb_series(n)))
    }

    fn is_canonical(c: &Rational) -> bool {
        let mut r = c.clone();
        r = Rational::new(r.numer().clone(), r.denom().clone());
        r.numer() == c.numer() && r.denom() == c.denom() && c.denom().is_positive()
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            let prod = a.mul(&b).unwrap();
            prop_assert!(prod.coefficients().iter().all(is_canonical));
        }

        #[test]
        fn inverse_is_two_sided(a in (0usize..8).prop_flat_map(arb_series)) {
            prop_assume!(!a.coefficients()[0].is_zero());
            let inv = a.inverse().unwrap();
            let one = TruncatedSeries::one(a.order());
            prop_assert_eq!(a.mul(&inv).unwrap(), one.clone());
            prop_assert_eq!(inv.mul(&a).unwrap(), one);
            prop_assert!(inv.coefficients().iter().all(is_canonical));
        }

        #[test]
        fn pow_is_additive_in_exponent(
            a in (0usize..6).prop_flat_map(arb_series),
            e1 in -4i64..=4,
            e2 in -4i64..=4,
        ) {
            prop_assume!(!a.coefficients()[0].is_zero());
            let lhs = a.pow(e1 + e2).unwrap();
            let rhs = a.pow(e1).unwrap().mul(&a.pow(e2).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
