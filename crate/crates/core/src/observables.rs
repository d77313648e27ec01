//! First moments of a spectrum in its current frame.
//!
//! With the invariant measure `dμ = d³k / 2ω` and normalisation
//! `N = ∫dμ |a|²` the moments are
//!
//! ```text
//! ⟨E⟩   = ∫dμ ω |a|² / N            ⟨p⟩ = ∫dμ k |a|² / N
//! ⟨L⟩   = ∫dμ Re a*(-i k×∇_k) a / N
//! ⟨rE⟩  = ∫dμ ω Re a*(i∇_k) a / N     (the Hermitian-symmetrised r E)
//! ⟨K⟩   = t⟨p⟩ - R_E⟨E⟩,             R_E = ⟨rE⟩ / ⟨E⟩
//! ```
//!
//! These follow from the scalar Klein-Gordon stress tensor of the field
//! `ψ = ∫dμ a e^{i(k·r - ωt)}`, which is what [`crate::synthesis`] evaluates
//! in real space. Phase derivatives need a structured spectrum; clouds only
//! support energy, momentum and spin.

use serde::ser::{Serialize, SerializeMap, Serializer};

use crate::error::{Error, Result};
use crate::minkowski::{AmTensor, FourVector, Vec3};
use crate::numeric::{pairwise_sum, pairwise_sum_vec3};
use crate::spectrum::{common_mass, GridSpectrum, PlaneWaveComponent, RingSpectrum, Spectrum};

/// All first moments of a state in one frame.
///
/// `J = L + S` whenever the spin-orbit split is known, and
/// `K = t p - R_E E` always holds by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct ExpectationSet {
    energy: f64,
    momentum: Vec3,
    total_am: Vec3,
    boost_momentum: Vec3,
    energy_centroid: Vec3,
    time: f64,
    norm: f64,
    spin: Option<Vec3>,
}

impl ExpectationSet {
    /// Builds the set from `⟨p^μ⟩` and `(⟨J⟩, ⟨K⟩)`; the centroid follows
    /// from `K = t p - R_E E`.
    pub fn from_tensor(p: FourVector, am: AmTensor, time: f64, norm: f64) -> Result<Self> {
        check_energy(p.t)?;
        let centroid = (p.spatial * time - am.k) / p.t;
        Ok(ExpectationSet {
            energy: p.t,
            momentum: p.spatial,
            total_am: am.j,
            boost_momentum: am.k,
            energy_centroid: centroid,
            time,
            norm,
            spin: None,
        })
    }

    /// Builds the set from `⟨p^μ⟩`, `⟨J⟩` and the energy centroid at `time`.
    pub fn from_centroid(p: FourVector, total_am: Vec3, centroid: Vec3, time: f64, norm: f64) -> Result<Self> {
        check_energy(p.t)?;
        Ok(ExpectationSet {
            energy: p.t,
            momentum: p.spatial,
            total_am,
            boost_momentum: p.spatial * time - centroid * p.t,
            energy_centroid: centroid,
            time,
            norm,
            spin: None,
        })
    }

    /// A packet at rest with its energy centroid at the origin at `t = 0`.
    pub fn at_rest(energy: f64, total_am: Vec3) -> Result<Self> {
        Self::from_centroid(
            FourVector::from_parts(energy, Vec3::zeros()),
            total_am,
            Vec3::zeros(),
            0.0,
            1.0,
        )
    }

    /// Attaches the spin part of `⟨J⟩`.
    pub fn with_spin(mut self, spin: Vec3) -> Self {
        self.spin = Some(spin);
        self
    }

    pub fn without_spin(mut self) -> Self {
        self.spin = None;
        self
    }

    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn momentum(&self) -> Vec3 {
        self.momentum
    }

    pub fn four_momentum(&self) -> FourVector {
        FourVector::from_parts(self.energy, self.momentum)
    }

    pub fn total_am(&self) -> Vec3 {
        self.total_am
    }

    pub fn spin(&self) -> Option<Vec3> {
        self.spin
    }

    pub fn orbital(&self) -> Option<Vec3> {
        self.spin.map(|s| self.total_am - s)
    }

    pub fn boost_momentum(&self) -> Vec3 {
        self.boost_momentum
    }

    pub fn am_tensor(&self) -> AmTensor {
        AmTensor::new(self.total_am, self.boost_momentum)
    }

    pub fn energy_centroid(&self) -> Vec3 {
        self.energy_centroid
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// The same state at another time: the centroid moves with `p/E`, the
    /// conserved moments stay.
    pub fn at_time(&self, time: f64) -> ExpectationSet {
        let dt = time - self.time;
        ExpectationSet {
            energy_centroid: self.energy_centroid + self.momentum * (dt / self.energy),
            time,
            ..self.clone()
        }
    }
}

fn check_energy(e: f64) -> Result<()> {
    if !(e > 0.0 && e.is_finite()) {
        return Err(Error::InvalidParameter(format!("mean energy must be > 0, got {e}")));
    }
    Ok(())
}

/// Flat JSON object with keys `E, p, S, L, J, K, R_E, t, norm`; vectors are
/// `[x, y, z]` arrays, and `S`/`L` are `null` when the split is unknown.
impl Serialize for ExpectationSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let arr = |v: Vec3| [v.x, v.y, v.z];
        let mut m = s.serialize_map(Some(9))?;
        m.serialize_entry("E", &self.energy)?;
        m.serialize_entry("p", &arr(self.momentum))?;
        m.serialize_entry("S", &self.spin.map(arr))?;
        m.serialize_entry("L", &self.orbital().map(arr))?;
        m.serialize_entry("J", &arr(self.total_am))?;
        m.serialize_entry("K", &arr(self.boost_momentum))?;
        m.serialize_entry("R_E", &arr(self.energy_centroid))?;
        m.serialize_entry("t", &self.time)?;
        m.serialize_entry("norm", &self.norm)?;
        m.end()
    }
}

fn checked_components(spec: &Spectrum) -> Result<(Vec<PlaneWaveComponent>, f64)> {
    let comps = spec.components();
    if comps.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    common_mass(&comps)?;
    let norm = pairwise_sum(comps.iter().map(|c| c.intensity()));
    if !(norm > 0.0) {
        return Err(Error::ZeroNorm);
    }
    Ok((comps, norm))
}

pub fn four_momentum_expect(spec: &Spectrum) -> Result<FourVector> {
    let (comps, norm) = checked_components(spec)?;
    Ok(four_momentum_of(&comps, norm))
}

fn four_momentum_of(comps: &[PlaneWaveComponent], norm: f64) -> FourVector {
    let e = pairwise_sum(comps.iter().map(|c| c.intensity() * c.omega()));
    let p = pairwise_sum_vec3(comps.iter().map(|c| c.k * c.intensity()));
    FourVector::from_parts(e / norm, p / norm)
}

/// Spin of one plane-wave sample: `σ k̂` when massless, otherwise the
/// frame spin of a particle whose rest-frame spin is `σ ẑ`.
pub fn component_spin(c: &PlaneWaveComponent) -> Result<Vec3> {
    if c.mass == 0.0 {
        let n = c.k.norm();
        if n == 0.0 {
            return Err(Error::InvalidParameter("massless sample with k = 0".to_string()));
        }
        Ok(c.k * (c.spin_label / n))
    } else {
        let s0 = Vec3::z() * c.spin_label;
        let e = c.omega();
        Ok(s0 * (c.mass / e) + c.k * (c.k.dot(&s0) / (e * (e + c.mass))))
    }
}

pub fn spin_expect(spec: &Spectrum) -> Result<Vec3> {
    let (comps, norm) = checked_components(spec)?;
    spin_of(&comps, norm)
}

fn spin_of(comps: &[PlaneWaveComponent], norm: f64) -> Result<Vec3> {
    let terms = comps
        .iter()
        .filter(|c| c.intensity() != 0.0)
        .map(|c| component_spin(c).map(|s| s * c.intensity()))
        .collect::<Result<Vec<_>>>()?;
    Ok(pairwise_sum_vec3(terms) / norm)
}

/// Orbital angular momentum about the origin.
///
/// A ring is an eigenstate of `J_z` with eigenvalue `ℓ + σ`, so its orbital
/// part is `(ℓ + σ)ẑ - ⟨S⟩` plus the lever arm `d × ⟨p⟩` of its centre.
/// Grids use central differences of the amplitude array.
pub fn orbital_am_expect(spec: &Spectrum) -> Result<Vec3> {
    match spec {
        Spectrum::Ring(r) => {
            let (comps, norm) = checked_components(spec)?;
            Ok(ring_total_am(r, &comps, norm) - spin_of(&comps, norm)?)
        }
        Spectrum::Grid(g) => {
            let (_, norm) = checked_components(spec)?;
            Ok(grid_orbital(g, norm))
        }
        Spectrum::Cloud(_) => Err(Error::UnsupportedRepresentation {
            operation: "orbital angular momentum",
        }),
    }
}

fn ring_total_am(r: &RingSpectrum, comps: &[PlaneWaveComponent], norm: f64) -> Vec3 {
    let p = four_momentum_of(comps, norm).spatial;
    Vec3::z() * (r.winding as f64 + r.spin_label) + r.center.cross(&p)
}

fn grid_orbital(g: &GridSpectrum, norm: f64) -> Vec3 {
    let grad = g.gradient();
    let amps = g.amplitudes();
    let terms = (0..g.len()).map(|i| {
        let k = g.k_at(i);
        let d = &grad[i];
        let a = amps[i].conj();
        // Re[a* (-i) (k × ∇a)] = Im[a* (k × ∇a)]
        let cx = (a * (d[2] * k.y - d[1] * k.z)).im;
        let cy = (a * (d[0] * k.z - d[2] * k.x)).im;
        let cz = (a * (d[1] * k.x - d[0] * k.y)).im;
        Vec3::new(cx, cy, cz) * g.weight_at(i)
    });
    pairwise_sum_vec3(terms) / norm
}

/// `⟨rE⟩` at `t = 0`, per unit norm.
fn energy_moment(spec: &Spectrum) -> Result<Vec3> {
    match spec {
        Spectrum::Ring(r) => {
            let (comps, norm) = checked_components(spec)?;
            let kr = r.k_r();
            let ell = r.winding as f64;
            // Re[a* i∇a] = d - (ℓ / k_r) φ̂ on the ring
            let terms = comps.iter().enumerate().map(|(j, c)| {
                let phi = r.azimuth(j);
                let phi_hat = Vec3::new(-phi.sin(), phi.cos(), 0.0);
                (r.center - phi_hat * (ell / kr)) * (c.intensity() * c.omega())
            });
            Ok(pairwise_sum_vec3(terms) / norm)
        }
        Spectrum::Grid(g) => {
            let (_, norm) = checked_components(spec)?;
            let grad = g.gradient();
            let amps = g.amplitudes();
            let terms = (0..g.len()).map(|i| {
                let a = amps[i].conj();
                let d = &grad[i];
                // Re[a* i ∂a] = -Im[a* ∂a]
                let v = Vec3::new(-(a * d[0]).im, -(a * d[1]).im, -(a * d[2]).im);
                v * (g.weight_at(i) * g.omega_at(i))
            });
            Ok(pairwise_sum_vec3(terms) / norm)
        }
        Spectrum::Cloud(_) => Err(Error::UnsupportedRepresentation {
            operation: "energy centroid",
        }),
    }
}

/// Energy centroid `R_E` at `time`.
pub fn energy_centroid(spec: &Spectrum, time: f64) -> Result<Vec3> {
    let moment = energy_moment(spec)?;
    let p = four_momentum_expect(spec)?;
    Ok((moment + p.spatial * time) / p.t)
}

/// Boost momentum `K = t⟨p⟩ - R_E⟨E⟩`; conserved, so independent of `time`
/// up to rounding.
pub fn boost_momentum_expect(spec: &Spectrum, time: f64) -> Result<Vec3> {
    let p = four_momentum_expect(spec)?;
    let centroid = energy_centroid(spec, time)?;
    Ok(p.spatial * time - centroid * p.t)
}

/// Every moment of a structured spectrum at `time`.
pub fn expectation_set(spec: &Spectrum, time: f64) -> Result<ExpectationSet> {
    let (comps, norm) = checked_components(spec)?;
    let p = four_momentum_of(&comps, norm);
    let spin = spin_of(&comps, norm)?;
    let total = match spec {
        Spectrum::Ring(r) => ring_total_am(r, &comps, norm),
        Spectrum::Grid(g) => grid_orbital(g, norm) + spin,
        Spectrum::Cloud(_) => {
            return Err(Error::UnsupportedRepresentation {
                operation: "expectation set",
            })
        }
    };
    let centroid = (energy_moment(spec)? + p.spatial * time) / p.t;
    Ok(ExpectationSet::from_centroid(p, total, centroid, time, norm)?.with_spin(spin))
}

/// `√(⟨p^μ⟩⟨p_μ⟩)`. Rounding-level negative norms of null vectors map to 0.
pub fn effective_mass(p4: &FourVector) -> Result<f64> {
    let n = p4.norm();
    if n >= 0.0 {
        Ok(n.sqrt())
    } else if -n <= 1e-12 * p4.t * p4.t {
        Ok(0.0)
    } else {
        Err(Error::NotTimelike { norm: n })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PointParticle {
    pub position: Vec3,
    pub velocity: Vec3,
    pub mass: f64,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassicalDecomposition {
    pub total: Vec3,
    pub intrinsic: Vec3,
    pub extrinsic: Vec3,
    pub center_of_mass: Vec3,
    pub momentum: Vec3,
}

/// Non-relativistic split of `Σ r × m v` about the centre of mass.
pub fn classical_decompose(particles: &[PointParticle]) -> Result<ClassicalDecomposition> {
    let total_mass = pairwise_sum(particles.iter().map(|p| p.mass));
    if !(total_mass > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "total mass must be > 0, got {total_mass}"
        )));
    }
    let momentum = pairwise_sum_vec3(particles.iter().map(|p| p.velocity * p.mass));
    let total = pairwise_sum_vec3(particles.iter().map(|p| p.position.cross(&(p.velocity * p.mass))));
    let center_of_mass = pairwise_sum_vec3(particles.iter().map(|p| p.position * p.mass)) / total_mass;
    let extrinsic = center_of_mass.cross(&momentum);
    Ok(ClassicalDecomposition {
        total,
        intrinsic: total - extrinsic,
        extrinsic,
        center_of_mass,
        momentum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::{make_gaussian_ring_grid, make_ring, make_two_wave, SampleCloud};
    use num_complex::Complex64;
    use std::f64::consts::FRAC_PI_2;

    fn sin04() -> f64 {
        0.4f64.asin()
    }

    #[test]
    fn two_wave_four_momentum_and_spin() {
        let s: Spectrum = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap().into();
        let p = four_momentum_expect(&s).unwrap();
        assert!((p.t - 1.0).abs() < 1e-15);
        assert!((p.spatial - Vec3::new(0.0, 0.0, 0.8)).amax() < 1e-15);
        let spin = spin_expect(&s).unwrap();
        assert!((spin - Vec3::new(-0.6, 0.0, 0.0)).amax() < 1e-15);
        assert!((effective_mass(&p).unwrap() - 0.6).abs() < 1e-14);
    }

    #[test]
    fn single_plane_waves() {
        let c = PlaneWaveComponent::new(Vec3::z() * 2.0, 0.0, Complex64::new(0.3, 0.4), 1.0, 0.7).unwrap();
        let s: Spectrum = SampleCloud::new(vec![c]).unwrap().into();
        let p = four_momentum_expect(&s).unwrap();
        assert_eq!(p, FourVector::new(2.0, 0.0, 0.0, 2.0));
        assert_eq!(spin_expect(&s).unwrap(), Vec3::z());
        assert_eq!(effective_mass(&p).unwrap(), 0.0);

        let rest = PlaneWaveComponent::new(Vec3::zeros(), 1.0, Complex64::new(1.0, 0.0), 0.5, 1.0).unwrap();
        let s: Spectrum = SampleCloud::new(vec![rest]).unwrap().into();
        assert_eq!(spin_expect(&s).unwrap(), Vec3::z() * 0.5);
        assert_eq!(effective_mass(&four_momentum_expect(&s).unwrap()).unwrap(), 1.0);
    }

    #[test]
    fn massive_spin_along_momentum_is_unchanged() {
        let c = PlaneWaveComponent::new(Vec3::z() * 0.75, 1.0, Complex64::new(1.0, 0.0), 0.5, 1.0).unwrap();
        assert!((component_spin(&c).unwrap() - Vec3::z() * 0.5).amax() < 1e-15);
    }

    #[test]
    fn rest_frame_ring_has_no_momentum() {
        let r: Spectrum = make_ring(1.0, FRAC_PI_2, 2.0, 0.0, 0.0, 256).unwrap().into();
        let p = four_momentum_expect(&r).unwrap();
        assert!(p.spatial.amax() < 1e-15);
        assert!((p.t - 1.0).abs() < 1e-15);
    }

    #[test]
    fn ring_orbital_am() {
        let r: Spectrum = make_ring(1.0, sin04(), 2.0, 0.0, 0.0, 256).unwrap().into();
        assert!((orbital_am_expect(&r).unwrap() - Vec3::z() * 2.0).amax() < 1e-14);
        let r0: Spectrum = make_ring(1.0, sin04(), 0.0, 0.0, 0.0, 256).unwrap().into();
        assert!(orbital_am_expect(&r0).unwrap().amax() < 1e-15);
    }

    #[test]
    fn ring_with_helicity_keeps_total_am() {
        let ring = make_ring(1.0, sin04(), 2.0, 1.0, 0.0, 256).unwrap();
        let cos = ring.k_z();
        let e = expectation_set(&ring.into(), 0.0).unwrap();
        assert!((e.total_am() - Vec3::z() * 3.0).amax() < 1e-14);
        assert!((e.spin().unwrap() - Vec3::z() * cos).amax() < 1e-14);
        assert!((e.orbital().unwrap() - Vec3::z() * (3.0 - cos)).amax() < 1e-14);
    }

    #[test]
    fn clouds_have_no_orbital_am() {
        let s: Spectrum = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap().into();
        assert!(matches!(
            orbital_am_expect(&s),
            Err(Error::UnsupportedRepresentation { .. })
        ));
        assert!(matches!(
            energy_centroid(&s, 0.0),
            Err(Error::UnsupportedRepresentation { .. })
        ));
        assert!(expectation_set(&s, 0.0).is_err());
    }

    #[test]
    fn centered_ring_has_no_boost_momentum() {
        let r: Spectrum = make_ring(1.0, sin04(), 2.0, 0.0, 0.0, 256).unwrap().into();
        assert!(boost_momentum_expect(&r, 0.0).unwrap().amax() < 1e-15);
        assert!(energy_centroid(&r, 0.0).unwrap().amax() < 1e-15);
    }

    #[test]
    fn displaced_ring_centroid() {
        let d = Vec3::new(0.3, -1.2, 0.5);
        let r: Spectrum = make_ring(1.0, sin04(), 2.0, 0.0, 0.0, 256)
            .unwrap()
            .with_center(d)
            .into();
        assert!((energy_centroid(&r, 0.0).unwrap() - d).amax() < 1e-14);
        // the centroid drifts with p/E and K stays put
        let p = four_momentum_expect(&r).unwrap();
        let later = energy_centroid(&r, 2.0).unwrap();
        assert!((later - d - p.spatial * (2.0 / p.t)).amax() < 1e-14);
        let k0 = boost_momentum_expect(&r, 0.0).unwrap();
        let k2 = boost_momentum_expect(&r, 2.0).unwrap();
        assert!((k0 - k2).amax() < 1e-14);
    }

    #[test]
    fn grid_orbital_am_close_to_winding() {
        let g: Spectrum = make_gaussian_ring_grid(1.0, sin04(), 2.0, 0.1, 0.0, 512)
            .unwrap()
            .into();
        let l = orbital_am_expect(&g).unwrap();
        assert!((l - Vec3::z() * 2.0).amax() < 1e-3, "{l:?}");
        let g0: Spectrum = make_gaussian_ring_grid(1.0, sin04(), 0.0, 0.05, 0.0, 64)
            .unwrap()
            .into();
        assert!(orbital_am_expect(&g0).unwrap().amax() < 1e-12);
        // the |a|² centroid of an untwisted ring is the k_⊥ origin
        let p = four_momentum_expect(&g0).unwrap();
        assert!(p.spatial.x.abs() < 1e-14 && p.spatial.y.abs() < 1e-14);
    }

    #[test]
    fn grid_orbital_am_converges_at_second_order() {
        let err = |n| {
            let g: Spectrum = make_gaussian_ring_grid(1.0, sin04(), 2.0, 0.05, 0.0, n).unwrap().into();
            (orbital_am_expect(&g).unwrap().z - 2.0).abs()
        };
        let (e1, e2) = (err(96), err(192));
        let slope = (e1 / e2).log2();
        assert!((slope - 2.0).abs() < 0.2, "slope {slope}, errors {e1:e} {e2:e}");
    }

    #[test]
    fn thin_gaussian_ring_approaches_ring_moments() {
        let ring: Spectrum = make_ring(1.0, sin04(), 2.0, 0.0, 0.0, 1024).unwrap().into();
        let pr = four_momentum_expect(&ring).unwrap();
        let mut last = f64::INFINITY;
        for w in [0.08, 0.04, 0.02] {
            let g: Spectrum = make_gaussian_ring_grid(1.0, sin04(), 2.0, w, 0.0, 256).unwrap().into();
            let pg = four_momentum_expect(&g).unwrap();
            let dev = (pg.t - pr.t).abs() + (pg.spatial - pr.spatial).amax();
            assert!(dev < last);
            last = dev;
        }
        assert!(last < 1e-3);
    }

    #[test]
    fn grid_slice_momentum_is_longitudinal() {
        let g: Spectrum = make_gaussian_ring_grid(1.0, sin04(), 2.0, 0.05, 0.0, 128)
            .unwrap()
            .into();
        let p = four_momentum_expect(&g).unwrap();
        assert!(p.spatial.x.abs() < 1e-14 && p.spatial.y.abs() < 1e-14);
        assert!((p.spatial.z - 0.84f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn displaced_grid_centroid_and_am_shift() {
        let base = make_gaussian_ring_grid(1.0, sin04(), 2.0, 0.1, 0.5, 256).unwrap();
        let d = Vec3::new(1.5, -2.0, 0.0);
        let shifted: Spectrum = base.displaced(d).into();
        let base: Spectrum = base.into();
        let r = energy_centroid(&shifted, 0.0).unwrap();
        assert!((r - d).amax() < 2e-3 * d.norm(), "{r:?}");
        let e0 = expectation_set(&base, 0.0).unwrap();
        let e1 = expectation_set(&shifted, 0.0).unwrap();
        let expected = e0.total_am() + d.cross(&e0.momentum());
        assert!(
            (e1.total_am() - expected).amax() < 2e-3 * expected.norm(),
            "{:?} vs {expected:?}",
            e1.total_am()
        );
    }

    #[test]
    fn effective_masses() {
        let ring: Spectrum = make_ring(1.0, sin04(), 2.0, 0.0, 0.0, 256).unwrap().into();
        let m = effective_mass(&four_momentum_expect(&ring).unwrap()).unwrap();
        assert!((m - 0.4).abs() < 1e-12);
        assert!(matches!(
            effective_mass(&FourVector::new(1.0, 2.0, 0.0, 0.0)),
            Err(Error::NotTimelike { .. })
        ));
    }

    #[test]
    fn expectation_set_relations_hold() {
        let r: Spectrum = make_ring(1.3, 0.6, 1.0, 0.5, 0.7, 64)
            .unwrap()
            .with_center(Vec3::new(0.2, 0.1, -0.4))
            .into();
        let e = expectation_set(&r, 0.9).unwrap();
        let k = e.momentum() * e.time() - e.energy_centroid() * e.energy();
        assert!((k - e.boost_momentum()).amax() < 1e-14);
        assert_eq!(e.orbital().unwrap() + e.spin().unwrap(), e.total_am());
        let json = serde_json::to_value(&e).unwrap();
        for key in ["E", "p", "S", "L", "J", "K", "R_E", "t", "norm"] {
            assert!(json.get(key).is_some(), "{key}");
        }
    }

    fn counter_orbit() -> Vec<PointParticle> {
        vec![
            PointParticle {
                position: Vec3::new(1.0, 0.0, 0.0),
                velocity: Vec3::new(0.0, 1.0, 0.0),
                mass: 1.0,
            },
            PointParticle {
                position: Vec3::new(-1.0, 0.0, 0.0),
                velocity: Vec3::new(0.0, -1.0, 0.0),
                mass: 1.0,
            },
        ]
    }

    #[test]
    fn classical_rest_system_is_intrinsic() {
        let d = classical_decompose(&counter_orbit()).unwrap();
        assert_eq!(d.extrinsic, Vec3::zeros());
        assert_eq!(d.intrinsic, d.total);
        assert_eq!(d.total, Vec3::new(0.0, 0.0, 2.0));
    }

    #[test]
    fn classical_moving_frame_keeps_intrinsic_part() {
        let u = Vec3::new(0.3, 0.0, 0.1);
        let shift = Vec3::new(0.0, 2.0, 0.0);
        let rest: Vec<_> = counter_orbit()
            .into_iter()
            .map(|p| PointParticle {
                position: p.position + shift,
                ..p
            })
            .collect();
        let moving: Vec<_> = rest
            .iter()
            .map(|p| PointParticle {
                velocity: p.velocity - u,
                ..*p
            })
            .collect();
        let a = classical_decompose(&rest).unwrap();
        let b = classical_decompose(&moving).unwrap();
        assert!((a.intrinsic - b.intrinsic).amax() < 1e-15);
        assert!((b.extrinsic - b.center_of_mass.cross(&b.momentum)).amax() < 1e-15);
        assert!((b.momentum + u * 2.0).amax() < 1e-15);
    }

    #[test]
    fn classical_single_particle_at_origin() {
        let d = classical_decompose(&[PointParticle {
            position: Vec3::zeros(),
            velocity: Vec3::x(),
            mass: 2.0,
        }])
        .unwrap();
        assert_eq!(d.extrinsic, Vec3::zeros());
        assert!(classical_decompose(&[]).is_err());
    }
}
