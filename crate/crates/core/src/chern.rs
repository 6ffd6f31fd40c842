//! Chern classes of twisted cotangent bundles of smooth complete intersections.
//!
//! For `X` of dimension `n` cut out by equations of degrees `d_1..d_p` in
//! `P^{n+p}`, the Euler sequence twisted by `O(t)` and the conormal sequence
//! give
//!
//! ```text
//! c(Ω¹_X(t)) = (1 + (t-1)h)^{n+p+1} / ((1 + t h) · Π (1 + (t - d_i) h))
//! ```
//!
//! and `c_n(Ω¹_X(t))` is `deg X` times the coefficient of `h^n`.
//!
//! The obstruction compares `c_n(Ω¹_X(2))` against `2^n deg X`: a polarized
//! endomorphism (`f*O(1) = O(m)`, `m >= 2`) can only exist when the Chern
//! number does not exceed that bound.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::residue::{Polynomial, RationalFunction};
use crate::series::{rat, Rational, TruncatedSeries};

/// A smooth complete intersection, described by its dimension and multidegree.
/// Degrees are kept in non-increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CompleteIntersection {
    dimension: u32,
    degrees: Vec<u32>,
}

impl CompleteIntersection {
    pub fn new(dimension: u32, mut degrees: Vec<u32>) -> Result<Self> {
        if dimension == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        if degrees.is_empty() {
            return Err(Error::Domain("at least one degree is required".into()));
        }
        if degrees.contains(&0) {
            return Err(Error::Domain("degrees must be at least 1".into()));
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { dimension, degrees })
    }

    pub fn hypersurface(dimension: u32, degree: u32) -> Result<Self> {
        Self::new(dimension, vec![degree])
    }

    pub fn dimension(&self) -> u32 {
        self.dimension
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn codimension(&self) -> usize {
        self.degrees.len()
    }

    pub fn ambient_dimension(&self) -> u32 {
        self.dimension + self.degrees.len() as u32
    }

    /// `deg X = Π d_i`.
    pub fn total_degree(&self) -> BigInt {
        self.degrees.iter().map(|&d| BigInt::from(d)).product()
    }

    pub fn is_hypersurface(&self) -> bool {
        self.degrees.len() == 1
    }
}

impl fmt::Display for CompleteIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(u32::to_string).collect();
        write!(f, "X(n={}; {})", self.dimension, degs.join(","))
    }
}

/// Total Chern class of `Ω¹_X(t)`, truncated at `h^n`.
pub fn twisted_cotangent_chern_series(x: &CompleteIntersection, t: i64) -> TruncatedSeries {
    let n = x.dimension as usize;
    let rank = x.ambient_dimension() as i64 + 1;
    let t_big = BigInt::from(t);
    let mut series = TruncatedSeries::linear_power(n, &(&t_big - 1), rank).div_linear(&t_big);
    for &d in &x.degrees {
        // a zero slope (t = d) is the constant factor 1
        series = series.div_linear(&(&t_big - d));
    }
    series
}

/// `c_n(Ω¹_X(t)) = deg X · [h^n] c(Ω¹_X(t))`.
pub fn chern_number(x: &CompleteIntersection, t: i64) -> Result<BigInt> {
    let series = twisted_cotangent_chern_series(x, t);
    let top = series.coefficient(x.dimension as usize)?;
    let value = top * Rational::from_integer(x.total_degree());
    if !value.is_integer() {
        return Err(Error::Internal(format!(
            "c_{}(Ω¹(t={t})) of {x} came out as {value}",
            x.dimension
        )));
    }
    Ok(value.to_integer())
}

fn require_pole_separation(n: u32, d: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    if d <= 2 {
        return Err(Error::Domain(format!(
            "degree {d}: the poles at x = 1/(d-2) and infinity collide for d <= 2; \
             use the series path for quadrics and hyperplanes"
        )));
    }
    Ok(())
}

/// `(2(d-1)^{n+2} - d + (-1)^n (d-2)) / (2(d-2))`, the closed form of
/// `c_n(Ω¹_X(2))` for a hypersurface of degree `d >= 3`.
pub fn closed_form_c_n(n: u32, d: u32) -> Result<Rational> {
    require_pole_separation(n, d)?;
    let d = BigInt::from(d);
    let sign = if n.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let num = BigInt::from(2) * Pow::pow(&d - 1u32, n + 2) - &d + sign * (&d - 2u32);
    Ok(Rational::new(num, BigInt::from(2) * (&d - 2u32)))
}

/// Residues of `ω = (1+x)^{n+2} / (x^{n+1} (1+2x) (1+(2-d)x))` at its four
/// poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueBundle {
    pub at_zero: Rational,
    pub at_minus_half: Rational,
    pub at_inv_d_minus_2: Rational,
    pub at_infinity: Rational,
}

impl ResidueBundle {
    pub fn sum(&self) -> Rational {
        &self.at_zero + &self.at_minus_half + &self.at_inv_d_minus_2 + &self.at_infinity
    }
}

/// Computes the four residues of `ω` directly from the rational function:
/// `Res_0` by series coefficient extraction, the two simple poles by
/// `P(x0)/Q'(x0)`, and infinity by the substitution `x = 1/u`.
pub fn residue_bundle(n: u32, d: u32) -> Result<ResidueBundle> {
    require_pole_separation(n, d)?;
    let order = n as usize;
    let slope = 2 - d as i64;

    let numerator_series = TruncatedSeries::from_ints(order, &[1, 1])?.pow(n as i64 + 2)?;
    let at_zero = numerator_series
        .mul(&TruncatedSeries::from_ints(order, &[1, 2])?.inverse()?)?
        .mul(&TruncatedSeries::from_ints(order, &[1, slope])?.inverse()?)?
        .coefficient(order)?
        .clone();

    let numerator = Polynomial::linear(rat(1), rat(1)).pow(n + 2);
    let denominator = Polynomial::monomial(n as usize + 1)
        .mul(&Polynomial::linear(rat(1), rat(2)))
        .mul(&Polynomial::linear(rat(1), rat(slope)));
    let omega = RationalFunction::new(numerator, denominator)?;

    Ok(ResidueBundle {
        at_zero,
        at_minus_half: omega.residue_simple_pole(&Rational::new((-1).into(), 2.into()))?,
        at_inv_d_minus_2: omega.residue_simple_pole(&Rational::new(1.into(), (d - 2).into()))?,
        at_infinity: omega.residue_at_infinity()?,
    })
}

/// The residues in closed form: `Res_0 = c_n / d`,
/// `Res_{-1/2} = (-1)^{n+1}/(2d)`, `Res_{1/(d-2)} = -(d-1)^{n+2}/(d(d-2))`,
/// `Res_∞ = 1/(2(d-2))`.
pub fn closed_form_residues(n: u32, d: u32) -> Result<ResidueBundle> {
    let c_n = closed_form_c_n(n, d)?;
    let db = BigInt::from(d);
    let sign = if n % 2 == 1 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    Ok(ResidueBundle {
        at_zero: c_n / Rational::from_integer(db.clone()),
        at_minus_half: Rational::new(sign, BigInt::from(2) * &db),
        at_inv_d_minus_2: Rational::new(-Pow::pow(&db - 1u32, n + 2), &db * (&db - 2u32)),
        at_infinity: Rational::new(BigInt::one(), BigInt::from(2) * (&db - 2u32)),
    })
}

/// Checks `c_n(Ω¹_X(2)) > d (d-1)^n >= d 2^n` exactly, with `c_n` from the
/// closed form.
pub fn theorem_inequality_chain(n: u32, d: u32) -> Result<bool> {
    if n < 2 || d < 3 {
        return Err(Error::Domain(format!(
            "inequality chain needs n >= 2 and d >= 3, got n={n}, d={d}"
        )));
    }
    let c_n = closed_form_c_n(n, d)?;
    let db = BigInt::from(d);
    let middle = &db * Pow::pow(&db - 1u32, n);
    let lower = &db * Pow::pow(BigInt::from(2), n);
    Ok(c_n > Rational::from_integer(middle.clone()) && middle >= lower)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Verdict {
    /// `c_n(Ω¹_X(2)) > 2^n deg X`: the endomorphisms in scope cannot exist.
    Obstructed,
    /// The bound holds; nothing is concluded either way.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Obstructed => "Obstructed",
            Verdict::Inconclusive => "Inconclusive",
        })
    }
}

/// Which endomorphisms a verdict speaks about, plus the quadric remark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReportNote {
    /// Hypersurface of dimension >= 3: `b_2 = 1`, so every endomorphism of
    /// degree > 1 is polarized and the obstruction covers all of them.
    AllEndomorphisms,
    /// Only endomorphisms with `f*O(1) = O(m)`, `m >= 2`, are excluded.
    PolarizedOnly,
    /// Quadric hypersurface: the bound is never exceeded; quadrics are
    /// classified separately as homogeneous spaces.
    QuadricHypersurface,
    /// The bound holds and the variety is not a quadric.
    BoundNotExceeded,
}

impl ReportNote {
    pub fn as_str(&self) -> &'static str {
        match self {
            ReportNote::AllEndomorphisms => "excludes all endomorphisms of degree > 1",
            ReportNote::PolarizedOnly => {
                "excludes endomorphisms with f*O(1) = O(m), m >= 2; the unpolarized case stays open"
            }
            ReportNote::QuadricHypersurface => {
                "quadric hypersurface: bound not exceeded; quadrics are settled by the classification of self-maps of homogeneous spaces"
            }
            ReportNote::BoundNotExceeded => "bound not exceeded; no conclusion",
        }
    }

    pub fn from_str_exact(s: &str) -> Option<Self> {
        [
            ReportNote::AllEndomorphisms,
            ReportNote::PolarizedOnly,
            ReportNote::QuadricHypersurface,
            ReportNote::BoundNotExceeded,
        ]
        .into_iter()
        .find(|n| n.as_str() == s)
    }
}

impl fmt::Display for ReportNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionReport {
    pub variety: CompleteIntersection,
    /// `c_n(Ω¹_X(2))`.
    pub chern_number: BigInt,
    /// `2^n deg X`.
    pub bound: BigInt,
    pub verdict: Verdict,
    /// True when the verdict speaks about every endomorphism of degree > 1,
    /// not only polarized ones.
    pub excludes_all: bool,
    pub note: ReportNote,
}

/// Compares `c_n(Ω¹_X(2))` with `2^n deg X`.
pub fn arv_obstruction(x: &CompleteIntersection) -> Result<ObstructionReport> {
    if x.dimension < 2 {
        return Err(Error::Domain(format!(
            "obstruction needs dimension >= 2, got {}",
            x.dimension
        )));
    }
    let chern_number = chern_number(x, 2)?;
    let bound = Pow::pow(BigInt::from(2), x.dimension) * x.total_degree();
    let verdict = if chern_number > bound {
        Verdict::Obstructed
    } else {
        Verdict::Inconclusive
    };
    let b2_is_one = x.is_hypersurface() && x.dimension >= 3;
    let note = match verdict {
        Verdict::Obstructed if b2_is_one => ReportNote::AllEndomorphisms,
        Verdict::Obstructed => ReportNote::PolarizedOnly,
        Verdict::Inconclusive if x.degrees == [2] => ReportNote::QuadricHypersurface,
        Verdict::Inconclusive => ReportNote::BoundNotExceeded,
    };
    Ok(ObstructionReport {
        variety: x.clone(),
        chern_number,
        bound,
        verdict,
        excludes_all: verdict == Verdict::Obstructed && b2_is_one,
        note,
    })
}

/// `c_n(Ω¹_X(2m))` for `m = 1..=n+1`.
pub fn twist_values(x: &CompleteIntersection) -> Result<Vec<BigInt>> {
    (1..=x.dimension as i64 + 1)
        .map(|m| chern_number(x, 2 * m))
        .collect()
}

/// Leading coefficient of the degree-`n` polynomial `m ↦ c_n(Ω¹_X(2m))`,
/// recovered as the `n`-th finite difference of its values at
/// `m = 1..=n+1` divided by `n!`. Equals `lim m^{-n} c_n(Ω¹_X(2m))`.
pub fn twist_leading_coefficient(x: &CompleteIntersection) -> Result<Rational> {
    let mut diffs = twist_values(x)?;
    for _ in 0..x.dimension {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let factorial: BigInt = (1..=x.dimension).map(BigInt::from).product();
    Ok(Rational::new(diffs[0].clone(), factorial))
}

/// `2^n deg X`, the expected limit.
pub fn obstruction_bound(x: &CompleteIntersection) -> BigInt {
    Pow::pow(BigInt::from(2), x.dimension) * x.total_degree()
}
