//! Four-vectors, pure boosts and the frame representation of the
//! angular-momentum tensor.
//!
//! Natural units (c = 1), signature (+, -, -, -).
//!
//! A [`Boost`] with velocity `u` maps quantities into the frame that moves
//! with velocity `u` relative to the current one (a passive transformation):
//! a particle at rest with four-momentum `(m, 0)` is seen there with
//! `(γm, -γm u)`. Every boost in this crate follows that convention.

use nalgebra::Vector3;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vec3 = Vector3<f64>;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FourVector {
    /// Time-like component (energy, time, ...).
    pub t: f64,
    #[serde(with = "crate::serde_vec3")]
    pub spatial: Vec3,
}

impl FourVector {
    pub fn new(t: f64, x: f64, y: f64, z: f64) -> Self {
        FourVector {
            t,
            spatial: Vec3::new(x, y, z),
        }
    }

    pub fn from_parts(t: f64, spatial: Vec3) -> Self {
        FourVector { t, spatial }
    }

    pub fn zero() -> Self {
        Self::from_parts(0.0, Vec3::zeros())
    }

    /// Minkowski inner product.
    pub fn dot(&self, other: &FourVector) -> f64 {
        self.t * other.t - self.spatial.dot(&other.spatial)
    }

    /// `t² - |spatial|²`.
    pub fn norm(&self) -> f64 {
        minkowski_norm(self)
    }

    pub fn boost(&self, b: &Boost) -> FourVector {
        boost_four_vector(self, b)
    }

    pub fn scale(&self, s: f64) -> FourVector {
        FourVector::from_parts(self.t * s, self.spatial * s)
    }
}

pub fn minkowski_norm(v: &FourVector) -> f64 {
    v.t * v.t - v.spatial.norm_squared()
}

/// Pure Lorentz boost, `|velocity| < 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Boost {
    velocity: Vec3,
    gamma: f64,
}

impl Boost {
    pub fn new(velocity: Vec3) -> Result<Self> {
        let speed_sq = velocity.norm_squared();
        if !speed_sq.is_finite() || speed_sq >= 1.0 {
            return Err(Error::InvalidBoost { speed: speed_sq.sqrt() });
        }
        Ok(Boost {
            velocity,
            gamma: 1.0 / (1.0 - speed_sq).sqrt(),
        })
    }

    pub fn along(axis: Vec3, speed: f64) -> Result<Self> {
        let n = axis
            .try_normalize(0.0)
            .ok_or_else(|| Error::InvalidParameter("boost axis must be non-zero".to_string()))?;
        Self::new(n * speed)
    }

    pub fn identity() -> Self {
        Boost {
            velocity: Vec3::zeros(),
            gamma: 1.0,
        }
    }

    pub fn velocity(&self) -> Vec3 {
        self.velocity
    }

    pub fn speed(&self) -> f64 {
        self.velocity.norm()
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn is_identity(&self) -> bool {
        self.velocity == Vec3::zeros()
    }

    /// The boost that undoes this one.
    pub fn inverse(&self) -> Boost {
        Boost {
            velocity: -self.velocity,
            gamma: self.gamma,
        }
    }

    /// Splits `v` into the parts parallel and perpendicular to the velocity.
    fn split(&self, v: &Vec3) -> (Vec3, Vec3) {
        let u2 = self.velocity.norm_squared();
        let par = self.velocity * (v.dot(&self.velocity) / u2);
        (par, v - par)
    }
}

pub fn boost_four_vector(v: &FourVector, b: &Boost) -> FourVector {
    if b.is_identity() {
        return *v;
    }
    let u = b.velocity;
    let g = b.gamma;
    let (par, perp) = b.split(&v.spatial);
    FourVector {
        t: g * (v.t - u.dot(&v.spatial)),
        spatial: (par - u * v.t) * g + perp,
    }
}

/// Antisymmetric tensor `J^{μν}` in a frame: `j^i = ε_ijk J^{jk}/2`,
/// `k^i = J^{0i}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AmTensor {
    #[serde(with = "crate::serde_vec3")]
    pub j: Vec3,
    #[serde(with = "crate::serde_vec3")]
    pub k: Vec3,
}

impl AmTensor {
    pub fn new(j: Vec3, k: Vec3) -> Self {
        AmTensor { j, k }
    }

    /// The two boost-invariant scalars `(j·k, |j|² - |k|²)`.
    pub fn invariants(&self) -> (f64, f64) {
        (self.j.dot(&self.k), self.j.norm_squared() - self.k.norm_squared())
    }

    pub fn boost(&self, b: &Boost) -> AmTensor {
        boost_am_tensor(self, b)
    }
}

pub fn boost_am_tensor(t: &AmTensor, b: &Boost) -> AmTensor {
    if b.is_identity() {
        return *t;
    }
    let u = b.velocity;
    let g = b.gamma;
    let (j_par, j_perp) = b.split(&t.j);
    let (k_par, k_perp) = b.split(&t.k);
    // u×K and u×J are already perpendicular to u.
    AmTensor {
        j: j_par + (j_perp - u.cross(&t.k)) * g,
        k: k_par + (k_perp + u.cross(&t.j)) * g,
    }
}

/// `W^μ = ½ ε_{μνρσ} J^{νρ} p^σ` in 3+1 form: `(p·J, E J - p×K)`.
pub fn pl_from_tensor(t: &AmTensor, p: &FourVector) -> FourVector {
    FourVector {
        t: p.spatial.dot(&t.j),
        spatial: t.j * p.t - p.spatial.cross(&t.k),
    }
}
