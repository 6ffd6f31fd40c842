//! Complete two-dimensional fans and lattice maps between them.
//!
//! A linear map of `Z²` sending every cone of one fan into some cone of
//! another induces a toric morphism. Multiplication by `p` fixes every cone,
//! so it is an endomorphism of any complete toric surface, of degree `p²`.

use std::cmp::Ordering;

use num_integer::Integer;

use crate::error::{Error, Result};

pub type Ray = (i64, i64);

fn det(u: Ray, v: Ray) -> i64 {
    u.0 * v.1 - u.1 * v.0
}

/// 0 for the half-plane `y > 0` together with the positive x-axis, 1 otherwise.
fn half(v: Ray) -> u8 {
    if v.1 > 0 || (v.1 == 0 && v.0 > 0) {
        0
    } else {
        1
    }
}

fn angular_cmp(u: Ray, v: Ray) -> Ordering {
    half(u).cmp(&half(v)).then_with(|| 0.cmp(&det(u, v)))
}

/// A complete fan in `R²`: rays in counter-clockwise order, each adjacent
/// pair (cyclically) spanning a strictly convex cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan2D {
    rays: Vec<Ray>,
}

impl Fan2D {
    pub fn new(mut rays: Vec<Ray>) -> Result<Self> {
        if rays.len() < 3 {
            return Err(Error::Input(
                "a complete fan needs at least three rays".into(),
            ));
        }
        for &(x, y) in &rays {
            if x.gcd(&y) != 1 {
                return Err(Error::Input(format!("ray ({x}, {y}) is not primitive")));
            }
        }
        rays.sort_by(|&u, &v| angular_cmp(u, v));
        let n = rays.len();
        for i in 0..n {
            let (u, v) = (rays[i], rays[(i + 1) % n]);
            if u == v {
                return Err(Error::Input(format!("duplicate ray {u:?}")));
            }
            if det(u, v) <= 0 {
                return Err(Error::Input(format!(
                    "rays {u:?} and {v:?} do not bound a strictly convex cone"
                )));
            }
        }
        Ok(Self { rays })
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    /// Two-dimensional cones as adjacent ray pairs `(u, v)` with `det(u, v) > 0`.
    pub fn cones(&self) -> Vec<(Ray, Ray)> {
        let n = self.rays.len();
        (0..n)
            .map(|i| (self.rays[i], self.rays[(i + 1) % n]))
            .collect()
    }

    fn cone_containing(&self, u: Ray, v: Ray) -> bool {
        self.cones().into_iter().any(|(a, b)| {
            let inside = |w: Ray| det(a, w) >= 0 && det(w, b) >= 0;
            inside(u) && inside(v)
        })
    }
}

/// Toric model of `P²` blown up at a subset of the three coordinate points.
///
/// `P²` has rays `(1,0)`, `(0,1)`, `(-1,-1)` and the ray `e_i` corresponds to
/// the line `x_i = 0`. Blowing up `(1,0,0)`, `(0,1,0)` or `(0,0,1)` inserts the
/// sum of the two rays whose lines meet there: `(-1,0)`, `(0,-1)` or `(1,1)`.
pub fn coordinate_blowup_fan(blown_up: &[bool]) -> Result<Fan2D> {
    if blown_up.len() > 3 {
        return Err(Error::Input("P² has only three coordinate points".into()));
    }
    let mut rays = vec![(1, 0), (0, 1), (-1, -1)];
    let extra = [(-1, 0), (0, -1), (1, 1)];
    for (flag, ray) in blown_up.iter().zip(extra) {
        if *flag {
            rays.push(ray);
        }
    }
    Fan2D::new(rays)
}

/// Fan of `P¹ × P¹`.
pub fn product_of_lines_fan() -> Fan2D {
    Fan2D::new(vec![(1, 0), (0, 1), (-1, 0), (0, -1)]).expect("valid fan")
}

/// Integer 2×2 matrix acting on column vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeMap(pub [[i64; 2]; 2]);

impl LatticeMap {
    pub fn scalar(p: i64) -> Self {
        Self([[p, 0], [0, p]])
    }

    pub fn apply(&self, v: Ray) -> Ray {
        let m = &self.0;
        (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1)
    }

    pub fn determinant(&self) -> i64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }
}

/// Whether `map` sends every cone of `source` into a single cone of `target`.
pub fn is_fan_morphism(source: &Fan2D, target: &Fan2D, map: &LatticeMap) -> bool {
    source
        .cones()
        .into_iter()
        .all(|(u, v)| target.cone_containing(map.apply(u), map.apply(v)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PowerMapCertificate {
    pub power: i64,
    /// `|det(p·Id)| = p²`.
    pub degree: i64,
}

/// Certifies that `(X, Y, Z) ↦ (X^p, Y^p, Z^p)` is an endomorphism of the
/// toric surface of `fan` and returns its degree.
pub fn toric_power_map(fan: &Fan2D, p: i64) -> Result<PowerMapCertificate> {
    if p < 1 {
        return Err(Error::Domain(format!("power must be at least 1, got {p}")));
    }
    let map = LatticeMap::scalar(p);
    if !is_fan_morphism(fan, fan, &map) {
        return Err(Error::Internal(format!(
            "multiplication by {p} does not preserve the fan"
        )));
    }
    Ok(PowerMapCertificate {
        power: p,
        degree: map.determinant().abs(),
    })
}
