//! Picard lattice of `P^2` blown up at `r <= 8` points.
//!
//! Sign convention: a class is written `a·H - Σ b_i·E_i` and stored as
//! `(a, b_1..b_r)`. The intersection form is `a·a' - Σ b_i·b_i'`, so
//! `H² = 1`, `E_i² = -1`, and the canonical class `K = -3H + ΣE_i` is stored
//! as `a = -3`, `b_i = -1`. Every formula below depends on this convention.

mod matrix;
mod toric;

use std::fmt;

use num_integer::{Integer, Roots};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::series::Rational;

pub use matrix::{pullback_pushforward_check, IntMatrix};
pub use toric::{
    coordinate_blowup_fan, is_fan_morphism, product_of_lines_fan, toric_power_map, Fan2D,
    LatticeMap, PowerMapCertificate,
};

/// Largest number of blown-up points for which `-K` is ample.
pub const MAX_BLOWUPS: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PicardClass {
    pub a: i64,
    pub b: Vec<i64>,
}

impl PicardClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        Self { a, b }
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    /// The pullback `H` of a line.
    pub fn hyperplane(r: usize) -> Self {
        Self::new(1, vec![0; r])
    }

    /// The exceptional curve `E_i` (0-based index).
    pub fn exceptional(r: usize, i: usize) -> Self {
        let mut b = vec![0; r];
        b[i] = -1;
        Self::new(0, b)
    }

    pub fn canonical(r: usize) -> Self {
        Self::new(-3, vec![-1; r])
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(k * self.a, self.b.iter().map(|v| k * v).collect())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self, other)?;
        Ok(Self::new(
            self.a + other.a,
            self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect(),
        ))
    }

    /// Coordinates `(a, b_1..b_r)`.
    pub fn coordinates(&self) -> Vec<i64> {
        std::iter::once(self.a)
            .chain(self.b.iter().copied())
            .collect()
    }
}

impl fmt::Display for PicardClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        match self.a {
            0 => {}
            1 => terms.push("H".to_string()),
            -1 => terms.push("-H".to_string()),
            a => terms.push(format!("{a}H")),
        }
        for (i, &bi) in self.b.iter().enumerate() {
            let coeff = -bi;
            if coeff == 0 {
                continue;
            }
            let sign = if coeff < 0 {
                "-"
            } else if terms.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = coeff.abs();
            let body = if mag == 1 {
                format!("E{}", i + 1)
            } else {
                format!("{mag}E{}", i + 1)
            };
            if terms.is_empty() {
                terms.push(format!("{sign}{body}"));
            } else {
                terms.push(format!("{sign} {body}"));
            }
        }
        if terms.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&terms.join(" "))
        }
    }
}

fn check_rank(c1: &PicardClass, c2: &PicardClass) -> Result<()> {
    if c1.rank() != c2.rank() {
        return Err(Error::Mismatch(format!(
            "classes live in Z^(1,{}) and Z^(1,{})",
            c1.rank(),
            c2.rank()
        )));
    }
    Ok(())
}

/// `a₁a₂ - Σ b_{1,i} b_{2,i}`.
pub fn intersect(c1: &PicardClass, c2: &PicardClass) -> Result<i64> {
    check_rank(c1, c2)?;
    Ok(c1.a * c2.a - c1.b.iter().zip(&c2.b).map(|(x, y)| x * y).sum::<i64>())
}

fn check_blowups(r: usize) -> Result<()> {
    if r > MAX_BLOWUPS {
        return Err(Error::Domain(format!(
            "{r} blow-ups: -K is not ample beyond {MAX_BLOWUPS} points"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelPezzoLattice {
    r: usize,
}

impl DelPezzoLattice {
    pub fn new(r: usize) -> Result<Self> {
        check_blowups(r)?;
        Ok(Self { r })
    }

    pub fn blowups(&self) -> usize {
        self.r
    }

    pub fn canonical_class(&self) -> PicardClass {
        PicardClass::canonical(self.r)
    }

    /// `K²`, computed with the pairing; always `9 - r`.
    pub fn degree(&self) -> i64 {
        let k = self.canonical_class();
        let d = intersect(&k, &k).expect("same rank");
        debug_assert_eq!(d, 9 - self.r as i64);
        d
    }
}

/// Inclusive coordinate bounds containing every exceptional class.
///
/// Write `E = (-K)/k + v` with `k = 9 - r` and `v ⊥ K`. The form is negative
/// definite on `K⊥`, and `E² = -1` gives `|v|² = 1 + 1/k`. Likewise
/// `H = 3(-K)/k + w` with `|w|² = r/k` and `E_i = (-K)/k + u_i` with
/// `|u_i|² = 1 + 1/k`. Cauchy-Schwarz on `E·H = 3/k + v·w` and
/// `E·E_i = b_i = 1/k + v·u_i` then bounds `a` by `(3 ± √((k+1)r))/k` and
/// `b_i` by `[-1, 1 + 2/k]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBox {
    pub a_min: i64,
    pub a_max: i64,
    pub b_min: i64,
    pub b_max: i64,
}

impl SearchBox {
    pub fn for_blowups(r: usize) -> Self {
        let k = 9 - r as i64;
        let radicand = (k + 1) * r as i64;
        let mut root = radicand.sqrt();
        if root * root < radicand {
            root += 1;
        }
        Self {
            a_min: Integer::div_ceil(&(3 - root), &k),
            a_max: Integer::div_floor(&(3 + root), &k),
            b_min: -1,
            b_max: 1 + Integer::div_floor(&2i64, &k),
        }
    }

    fn contains(&self, c: &PicardClass) -> bool {
        (self.a_min..=self.a_max).contains(&c.a)
            && c.b.iter().all(|b| (self.b_min..=self.b_max).contains(b))
    }

    fn widened(&self, margin: i64) -> Self {
        Self {
            a_min: self.a_min - margin,
            a_max: self.a_max + margin,
            b_min: self.b_min - margin,
            b_max: self.b_max + margin,
        }
    }
}

/// All classes with `E² = -1` and `E·K = -1`, sorted by `(a, b)`.
///
/// The search runs over the proven [`SearchBox`] widened by one unit on every
/// side; any solution outside the proven box is reported as an internal error.
pub fn enumerate_exceptional(r: usize) -> Result<Vec<PicardClass>> {
    check_blowups(r)?;
    let proven = SearchBox::for_blowups(r);
    let search = proven.widened(1);
    let mut found = Vec::new();
    let mut b = vec![0i64; r];
    for a in search.a_min..=search.a_max {
        // E² = -1  <=>  Σ b_i² = a² + 1;  E·K = -1  <=>  Σ b_i = 3a - 1
        dfs(&search, &mut b, 0, 3 * a - 1, a * a + 1, &mut |b| {
            found.push(PicardClass::new(a, b.to_vec()))
        });
    }
    if let Some(bad) = found.iter().find(|c| !proven.contains(c)) {
        return Err(Error::Internal(format!(
            "exceptional class {bad} lies outside the proven search box {proven:?}"
        )));
    }
    found.sort();
    Ok(found)
}

fn dfs(
    bounds: &SearchBox,
    b: &mut [i64],
    pos: usize,
    sum_left: i64,
    squares_left: i64,
    emit: &mut impl FnMut(&[i64]),
) {
    let remaining = (b.len() - pos) as i64;
    if remaining == 0 {
        if sum_left == 0 && squares_left == 0 {
            emit(b);
        }
        return;
    }
    // Cauchy-Schwarz: (Σ b)² <= len · Σ b²
    if squares_left < 0 || sum_left * sum_left > remaining * squares_left {
        return;
    }
    for v in bounds.b_min..=bounds.b_max {
        let sq = v * v;
        if sq > squares_left {
            continue;
        }
        b[pos] = v;
        dfs(bounds, b, pos + 1, sum_left - v, squares_left - sq, emit);
    }
    b[pos] = 0;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DelPezzoVerdict {
    /// No obstruction from the lattice; for `r <= 3` the toric power maps
    /// give endomorphisms of every square degree.
    PossiblyAdmits,
    /// `K² < Card(E)` with the exceptional classes spanning `Pic`.
    NoEndomorphism,
}

impl fmt::Display for DelPezzoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DelPezzoVerdict::PossiblyAdmits => "PossiblyAdmits",
            DelPezzoVerdict::NoEndomorphism => "NoEndomorphism",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoFeasibility {
    pub blowups: usize,
    pub degree: i64,
    pub exceptional_count: usize,
    pub verdict: DelPezzoVerdict,
    /// Whether the exceptional classes span the Picard lattice (`r >= 2`).
    pub spanning: bool,
    /// Power-map certificate on the toric model, present for `r <= 3`.
    pub toric_witness: Option<PowerMapCertificate>,
}

/// Sample exponent for the power-map certificate attached to feasibility
/// reports.
pub const WITNESS_POWER: i64 = 2;

/// Decides whether the degree `9 - r` Del Pezzo surface can carry an
/// endomorphism of degree > 1.
///
/// When the exceptional classes span `Pic` an endomorphism forces
/// `f*K = δK`, `R = (δ-1)(-K)`, and hence `K² >= Card(E)`. For `r <= 1` the
/// classes do not span and the verdict rests on the power maps alone.
pub fn feasibility(r: usize) -> Result<EndoFeasibility> {
    let lattice = DelPezzoLattice::new(r)?;
    let degree = lattice.degree();
    let exceptional_count = enumerate_exceptional(r)?.len();
    let spanning = r >= 2;
    let verdict = if spanning && exceptional_count as i64 > degree {
        DelPezzoVerdict::NoEndomorphism
    } else {
        DelPezzoVerdict::PossiblyAdmits
    };
    let toric_witness = if r <= 3 {
        let blown: Vec<bool> = (0..3).map(|i| i < r).collect();
        Some(toric_power_map(
            &coordinate_blowup_fan(&blown)?,
            WITNESS_POWER,
        )?)
    } else {
        None
    };
    Ok(EndoFeasibility {
        blowups: r,
        degree,
        exceptional_count,
        verdict,
        spanning,
        toric_witness,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamificationCheck {
    Consistent,
    /// `δ ∤ d`, so `f*F = (d/δ)E` is not an integral class.
    NotDivisible {
        self_intersection: Rational,
    },
    /// `F² = -d/δ² ≠ -1`, so `F` cannot be exceptional.
    NotExceptional {
        self_intersection: Rational,
    },
}

impl fmt::Display for RamificationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RamificationCheck::Consistent => f.write_str("Consistent"),
            RamificationCheck::NotDivisible { self_intersection } => write!(
                f,
                "Inconsistent: delta does not divide d (F² would be {self_intersection})"
            ),
            RamificationCheck::NotExceptional { self_intersection } => {
                write!(f, "Inconsistent: F² = {self_intersection}, not -1")
            }
        }
    }
}

/// For an endomorphism of degree `d` restricting to degree `δ` on an
/// exceptional curve `E` with image `F`: `f_*E = δF`, `f*F = (d/δ)E`,
/// hence `F² = -d/δ²`, which must be `-1`.
pub fn ramification_arithmetic(d: u64, delta: u64) -> Result<RamificationCheck> {
    if d < 2 || delta < 1 {
        return Err(Error::Domain(format!(
            "need d >= 2 and delta >= 1, got d={d}, delta={delta}"
        )));
    }
    let self_intersection = Rational::new(
        -num_bigint::BigInt::from(d),
        num_bigint::BigInt::from(delta) * delta,
    );
    if !d.is_multiple_of(delta) {
        return Ok(RamificationCheck::NotDivisible { self_intersection });
    }
    if d != delta * delta {
        return Ok(RamificationCheck::NotExceptional { self_intersection });
    }
    Ok(RamificationCheck::Consistent)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamificationReport {
    /// `R = (δ-1)(-K)`.
    pub class: PicardClass,
    /// `-K·R`, equal to `(δ-1)K²`.
    pub anticanonical_degree: i64,
    pub exceptional_count: usize,
    /// Whether `-K·R >= (δ-1)·Card(E)`.
    pub inequality_holds: bool,
}

/// The ramification divisor class forced by `f*K = δK` and the Hurwitz
/// formula, with the lower bound coming from ramification along every
/// exceptional curve.
pub fn ramification_divisor_class(r: usize, delta: i64) -> Result<RamificationReport> {
    let lattice = DelPezzoLattice::new(r)?;
    if delta < 2 {
        return Err(Error::Domain(format!(
            "delta must be at least 2, got {delta}"
        )));
    }
    let minus_k = lattice.canonical_class().scale(-1);
    let class = minus_k.scale(delta - 1);
    let anticanonical_degree = intersect(&minus_k, &class)?;
    if anticanonical_degree != (delta - 1) * lattice.degree() {
        return Err(Error::Internal(format!(
            "-K·R = {anticanonical_degree} differs from (δ-1)K²"
        )));
    }
    let exceptional_count = enumerate_exceptional(r)?.len();
    Ok(RamificationReport {
        class,
        anticanonical_degree,
        exceptional_count,
        inequality_holds: anticanonical_degree >= (delta - 1) * exceptional_count as i64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(r: usize, i: usize) -> PicardClass {
        PicardClass::exceptional(r, i)
    }

    #[test]
    fn pairing_examples() {
        let h = PicardClass::hyperplane(3);
        assert_eq!(intersect(&h, &h).unwrap(), 1);
        assert_eq!(intersect(&e(3, 0), &e(3, 0)).unwrap(), -1);
        let k = PicardClass::canonical(3);
        assert_eq!(intersect(&k, &k).unwrap(), 6);
        assert!(matches!(
            intersect(&PicardClass::hyperplane(2), &h),
            Err(Error::Mismatch(_))
        ));
    }

    #[test]
    fn lattice_degree() {
        for r in 0..=8 {
            assert_eq!(DelPezzoLattice::new(r).unwrap().degree(), 9 - r as i64);
        }
        assert!(DelPezzoLattice::new(9).is_err());
    }

    #[test]
    fn search_box_for_eight_points() {
        let b = SearchBox::for_blowups(8);
        assert_eq!((b.a_min, b.a_max, b.b_min, b.b_max), (-1, 7, -1, 3));
    }

    #[test]
    fn exceptional_at_three_points() {
        let h = PicardClass::hyperplane(3);
        let line = |i: usize, j: usize| {
            h.add(&e(3, i).scale(-1))
                .unwrap()
                .add(&e(3, j).scale(-1))
                .unwrap()
        };
        let mut expected = vec![
            e(3, 0),
            e(3, 1),
            e(3, 2),
            line(0, 1),
            line(0, 2),
            line(1, 2),
        ];
        expected.sort();
        assert_eq!(enumerate_exceptional(3).unwrap(), expected);
        assert!(enumerate_exceptional(0).unwrap().is_empty());
        assert_eq!(enumerate_exceptional(6).unwrap().len(), 27);
        assert!(enumerate_exceptional(9).is_err());
    }

    #[test]
    fn display_uses_sign_convention() {
        let c = PicardClass::new(2, vec![1, 1, 0, -1]);
        assert_eq!(c.to_string(), "2H - E1 - E2 + E4");
        assert_eq!(e(2, 1).to_string(), "E2");
        assert_eq!(PicardClass::canonical(2).to_string(), "-3H + E1 + E2");
    }

    #[test]
    fn feasibility_examples() {
        let f4 = feasibility(4).unwrap();
        assert_eq!(
            (f4.degree, f4.exceptional_count, f4.verdict),
            (5, 10, DelPezzoVerdict::NoEndomorphism)
        );
        let f3 = feasibility(3).unwrap();
        assert_eq!(
            (f3.degree, f3.exceptional_count, f3.verdict),
            (6, 6, DelPezzoVerdict::PossiblyAdmits)
        );
        assert_eq!(f3.toric_witness.unwrap().degree, 4);
        let f8 = feasibility(8).unwrap();
        assert_eq!(
            (f8.degree, f8.exceptional_count, f8.verdict),
            (1, 240, DelPezzoVerdict::NoEndomorphism)
        );
        assert!(f8.toric_witness.is_none());
        let f0 = feasibility(0).unwrap();
        assert!(!f0.spanning);
        assert_eq!(f0.verdict, DelPezzoVerdict::PossiblyAdmits);
    }

    #[test]
    fn ramification_examples() {
        assert_eq!(
            ramification_arithmetic(4, 2).unwrap(),
            RamificationCheck::Consistent
        );
        assert_eq!(
            ramification_arithmetic(8, 2).unwrap(),
            RamificationCheck::NotExceptional {
                self_intersection: Rational::from_integer((-2).into())
            }
        );
        assert_eq!(
            ramification_arithmetic(4, 1).unwrap(),
            RamificationCheck::NotExceptional {
                self_intersection: Rational::from_integer((-4).into())
            }
        );
        assert!(matches!(
            ramification_arithmetic(6, 4).unwrap(),
            RamificationCheck::NotDivisible { .. }
        ));
        assert!(ramification_arithmetic(1, 1).is_err());
    }

    #[test]
    fn ramification_class_examples() {
        let r3 = ramification_divisor_class(3, 2).unwrap();
        assert_eq!(r3.class, PicardClass::new(3, vec![1, 1, 1]));
        assert_eq!((r3.anticanonical_degree, r3.exceptional_count), (6, 6));
        assert!(r3.inequality_holds);

        let r4 = ramification_divisor_class(4, 2).unwrap();
        assert_eq!((r4.anticanonical_degree, r4.exceptional_count), (5, 10));
        assert!(!r4.inequality_holds);

        for p in 2..=6 {
            let r0 = ramification_divisor_class(0, p).unwrap();
            assert_eq!(r0.anticanonical_degree, (p - 1) * 9);
            assert_eq!(r0.exceptional_count, 0);
            assert!(r0.inequality_holds);
        }
        assert!(ramification_divisor_class(3, 1).is_err());
    }
}
