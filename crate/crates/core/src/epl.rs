//! Expectation Pauli-Lubanski vector and the intrinsic/extrinsic split.
//!
//! `𝒲 = (⟨p⟩·⟨J⟩, ⟨E⟩⟨J⟩ - ⟨p⟩×⟨K⟩)` is built from expectation values, not
//! the expectation of the PL operator. Its spatial part over `⟨E⟩` is the
//! angular momentum about the energy centroid, which is what [`decompose`]
//! checks by computing it both ways.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::minkowski::{pl_from_tensor, Boost, FourVector, Vec3};
use crate::observables::{effective_mass, ExpectationSet};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EplVector {
    pub w: FourVector,
    pub frame: String,
}

impl EplVector {
    pub fn norm(&self) -> f64 {
        self.w.norm()
    }

    pub fn in_frame(mut self, frame: impl Into<String>) -> Self {
        self.frame = frame.into();
        self
    }
}

pub fn epl_vector(exp: &ExpectationSet) -> EplVector {
    EplVector {
        w: pl_from_tensor(&exp.am_tensor(), &exp.four_momentum()),
        frame: "lab".to_string(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionResult {
    #[serde(with = "crate::serde_vec3")]
    pub j_ext: Vec3,
    /// `⟨J⟩ - R_E × ⟨p⟩`.
    #[serde(with = "crate::serde_vec3")]
    pub j_int: Vec3,
    /// `𝓦 / ⟨E⟩`, the same quantity by the second route.
    #[serde(with = "crate::serde_vec3")]
    pub j_int_epl: Vec3,
    /// `𝓦 / ⟨E₀⟩`.
    #[serde(with = "crate::serde_vec3")]
    pub j_int_cov: Vec3,
    /// Largest component of `j_int - j_int_epl`.
    pub residual: f64,
    pub m_eff: f64,
    pub rest_energy: f64,
    #[serde(with = "crate::serde_vec3")]
    pub rest_velocity: Vec3,
    pub epl_norm: f64,
    pub epl_norm_abs: f64,
}

pub fn decompose(exp: &ExpectationSet) -> Result<DecompositionResult> {
    let p = exp.four_momentum();
    let n = p.norm();
    if !(n > 0.0) || p.t <= 0.0 {
        return Err(Error::NotTimelike { norm: n });
    }
    let m_eff = effective_mass(&p)?;
    let w = epl_vector(exp).w;
    let j_ext = exp.energy_centroid().cross(&exp.momentum());
    let j_int = exp.total_am() - j_ext;
    let j_int_epl = w.spatial / p.t;
    Ok(DecompositionResult {
        j_ext,
        j_int,
        j_int_epl,
        j_int_cov: w.spatial / m_eff,
        residual: (j_int - j_int_epl).amax(),
        m_eff,
        rest_energy: m_eff,
        rest_velocity: p.spatial / p.t,
        epl_norm: w.norm(),
        epl_norm_abs: w.norm().abs(),
    })
}

/// Moves a set into the frame moving with velocity `b` relative to the
/// current one. The new time is that of the centroid event, and the
/// centroid is re-derived from `K' = t'p' - R'_E E'`. The spin/orbit split
/// is not carried over.
pub fn transport(exp: &ExpectationSet, b: &Boost) -> Result<ExpectationSet> {
    if b.is_identity() {
        return Ok(exp.clone());
    }
    let p = exp.four_momentum().boost(b);
    let am = exp.am_tensor().boost(b);
    let time = b.gamma() * (exp.time() - b.velocity().dot(&exp.energy_centroid()));
    ExpectationSet::from_tensor(p, am, time, exp.norm())
}

/// Boost into the zero-momentum frame, `u = ⟨p⟩/⟨E⟩`.
pub fn rest_frame(exp: &ExpectationSet) -> Result<(Boost, ExpectationSet)> {
    let p = exp.four_momentum();
    if !(p.norm() > 0.0) || p.t <= 0.0 {
        return Err(Error::NotTimelike { norm: p.norm() });
    }
    let b = Boost::new(p.spatial / p.t)?;
    Ok((b, transport(exp, &b)?))
}

fn shell_check(p: &FourVector, m: f64) -> Result<()> {
    let n = p.norm();
    let scale = (p.t * p.t).max(1.0);
    if (n - m * m).abs() > 1e-10 * scale {
        return Err(Error::OffShell {
            norm: n,
            mass_sq: m * m,
        });
    }
    Ok(())
}

/// Spin of a massive plane wave with rest-frame spin `s0`: returns the
/// covariant spin `s` and the frame spin `S = W/E`.
pub fn pl_spin_massive(p: &FourVector, s0: Vec3, m: f64) -> Result<(Vec3, Vec3)> {
    if !(m > 0.0) {
        return Err(Error::InvalidParameter(format!("mass must be > 0, got {m}")));
    }
    shell_check(p, m)?;
    let (e, k) = (p.t, p.spatial);
    let s = s0 + k * (k.dot(&s0) / (m * (e + m)));
    let frame = s0 * (m / e) + k * (k.dot(&s0) / (e * (e + m)));
    Ok((s, frame))
}

/// Spin of a massless plane wave of helicity `lambda`.
pub fn pl_spin_massless(p: &FourVector, lambda: f64) -> Result<Vec3> {
    shell_check(p, 0.0)?;
    let n = p.spatial.norm();
    if n == 0.0 {
        return Err(Error::InvalidParameter("massless momentum must be nonzero".to_string()));
    }
    Ok(p.spatial * (lambda / n))
}
