//! Plane-wave spectra: rings, Cartesian k-grids and unstructured sample
//! clouds.
//!
//! Every sample carries an invariant quadrature weight with the meaning of
//! `d³k / 2ω`. Under a boost the weight and the amplitude of a sample are
//! untouched and only its four-momentum `(ω, k)` moves, so weighted sums of
//! `k^μ` transform as four-vectors.

mod csv;
mod grid;

use std::f64::consts::{FRAC_PI_2, TAU};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::minkowski::{boost_four_vector, Boost, FourVector, Vec3};

pub use self::csv::{read_csv, write_csv, CSV_HEADER};
pub use self::grid::{make_gaussian_ring_grid, GaussianRing, GridAxis, GridSpectrum};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PlaneWaveComponent {
    pub k: Vec3,
    pub mass: f64,
    pub amplitude: Complex64,
    /// Helicity for massless samples, rest-frame `s_z` for massive ones.
    pub spin_label: f64,
    pub weight: f64,
}

impl PlaneWaveComponent {
    pub fn new(k: Vec3, mass: f64, amplitude: Complex64, spin_label: f64, weight: f64) -> Result<Self> {
        if !(mass >= 0.0 && mass.is_finite()) {
            return Err(Error::InvalidParameter(format!("mass must be >= 0, got {mass}")));
        }
        if !(weight > 0.0 && weight.is_finite()) {
            return Err(Error::InvalidParameter(format!("weight must be > 0, got {weight}")));
        }
        if !(k.iter().all(|c| c.is_finite()) && amplitude.is_finite() && spin_label.is_finite()) {
            return Err(Error::InvalidParameter("non-finite sample".to_string()));
        }
        Ok(PlaneWaveComponent {
            k,
            mass,
            amplitude,
            spin_label,
            weight,
        })
    }

    pub fn omega(&self) -> f64 {
        (self.mass * self.mass + self.k.norm_squared()).sqrt()
    }

    pub fn four_momentum(&self) -> FourVector {
        FourVector::from_parts(self.omega(), self.k)
    }

    /// `w |a|²`, the sample's share of the norm.
    pub fn intensity(&self) -> f64 {
        self.weight * self.amplitude.norm_sqr()
    }
}

/// Plane waves on a cone of half-angle `cone_angle` around `ẑ`, with
/// azimuthal phase winding `e^{iℓφ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct RingSpectrum {
    pub k_magnitude: f64,
    pub cone_angle: f64,
    pub winding: i32,
    pub spin_label: f64,
    pub mass: f64,
    pub n_samples: usize,
    /// Centroid offset `d`, applied as the phase `e^{-ik·d}`.
    pub center: Vec3,
}

impl RingSpectrum {
    pub fn k_z(&self) -> f64 {
        if self.is_transverse() {
            0.0
        } else {
            self.k_magnitude * self.cone_angle.cos()
        }
    }

    pub fn k_r(&self) -> f64 {
        if self.is_transverse() {
            self.k_magnitude
        } else {
            self.k_magnitude * self.cone_angle.sin()
        }
    }

    pub fn omega(&self) -> f64 {
        (self.mass * self.mass + self.k_magnitude * self.k_magnitude).sqrt()
    }

    fn is_transverse(&self) -> bool {
        (self.cone_angle - FRAC_PI_2).abs() < 1e-15
    }

    pub fn with_center(mut self, center: Vec3) -> Self {
        self.center = center;
        self
    }

    pub fn azimuth(&self, j: usize) -> f64 {
        TAU * j as f64 / self.n_samples as f64
    }

    pub fn components(&self) -> Vec<PlaneWaveComponent> {
        let (kz, kr) = (self.k_z(), self.k_r());
        let w = 1.0 / self.n_samples as f64;
        (0..self.n_samples)
            .map(|j| {
                let phi = self.azimuth(j);
                let k = Vec3::new(kr * phi.cos(), kr * phi.sin(), kz);
                let phase = self.winding as f64 * phi - k.dot(&self.center);
                PlaneWaveComponent {
                    k,
                    mass: self.mass,
                    amplitude: Complex64::from_polar(1.0, phase),
                    spin_label: self.spin_label,
                    weight: w,
                }
            })
            .collect()
    }
}

pub fn make_ring(k: f64, theta: f64, ell: f64, sigma: f64, m: f64, n: usize) -> Result<RingSpectrum> {
    if ell.fract() != 0.0 || !ell.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "winding must be an integer, got {ell}"
        )));
    }
    if n < 8 {
        return Err(Error::InvalidParameter(format!(
            "ring needs at least 8 samples, got {n}"
        )));
    }
    if !(theta > 0.0 && theta <= FRAC_PI_2 + 1e-15) {
        return Err(Error::InvalidParameter(format!(
            "cone angle must lie in (0, π/2], got {theta}"
        )));
    }
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidParameter(format!("|k| must be > 0, got {k}")));
    }
    if !(m >= 0.0 && m.is_finite()) {
        return Err(Error::InvalidParameter(format!("mass must be >= 0, got {m}")));
    }
    Ok(RingSpectrum {
        k_magnitude: k,
        cone_angle: theta.min(FRAC_PI_2),
        winding: ell as i32,
        spin_label: sigma,
        mass: m,
        n_samples: n,
        center: Vec3::zeros(),
    })
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SampleCloud {
    pub components: Vec<PlaneWaveComponent>,
}

impl SampleCloud {
    pub fn new(components: Vec<PlaneWaveComponent>) -> Result<Self> {
        let cloud = SampleCloud { components };
        if cloud.components.is_empty() {
            return Err(Error::EmptySpectrum);
        }
        if cloud.total_weight() <= 0.0 {
            return Err(Error::ZeroNorm);
        }
        Ok(cloud)
    }

    pub fn total_weight(&self) -> f64 {
        crate::numeric::pairwise_sum(self.components.iter().map(|c| c.intensity()))
    }
}

/// Two massless waves `k_z ẑ ± k_x x̂` with equal weights.
pub fn make_two_wave(k_z: f64, k_x: f64, lambda1: f64, lambda2: f64) -> Result<SampleCloud> {
    if !(k_x > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "transverse split k_x must be > 0, got {k_x}"
        )));
    }
    if !(k_z >= 0.0) {
        return Err(Error::InvalidParameter(format!("k_z must be >= 0, got {k_z}")));
    }
    let one = Complex64::new(1.0, 0.0);
    SampleCloud::new(vec![
        PlaneWaveComponent::new(Vec3::new(k_x, 0.0, k_z), 0.0, one, lambda1, 0.5)?,
        PlaneWaveComponent::new(Vec3::new(-k_x, 0.0, k_z), 0.0, one, lambda2, 0.5)?,
    ])
}

#[derive(Clone, Debug, PartialEq)]
pub enum Spectrum {
    Ring(RingSpectrum),
    Grid(GridSpectrum),
    Cloud(SampleCloud),
}

impl From<RingSpectrum> for Spectrum {
    fn from(r: RingSpectrum) -> Self {
        Spectrum::Ring(r)
    }
}

impl From<GridSpectrum> for Spectrum {
    fn from(g: GridSpectrum) -> Self {
        Spectrum::Grid(g)
    }
}

impl From<SampleCloud> for Spectrum {
    fn from(c: SampleCloud) -> Self {
        Spectrum::Cloud(c)
    }
}

impl Spectrum {
    /// Flattened samples in a fixed order.
    pub fn components(&self) -> Vec<PlaneWaveComponent> {
        match self {
            Spectrum::Ring(r) => r.components(),
            Spectrum::Grid(g) => g.components(),
            Spectrum::Cloud(c) => c.components.clone(),
        }
    }

    pub fn total_weight(&self) -> f64 {
        crate::numeric::pairwise_sum(self.components().iter().map(|c| c.intensity()))
    }

    /// The common particle mass; spectra mixing species are rejected.
    pub fn mass(&self) -> Result<f64> {
        match self {
            Spectrum::Ring(r) => Ok(r.mass),
            Spectrum::Grid(g) => Ok(g.mass),
            Spectrum::Cloud(c) => common_mass(&c.components),
        }
    }

    pub fn is_structured(&self) -> bool {
        !matches!(self, Spectrum::Cloud(_))
    }
}

pub(crate) fn common_mass(components: &[PlaneWaveComponent]) -> Result<f64> {
    let first = components.first().ok_or(Error::EmptySpectrum)?.mass;
    for c in components {
        if (c.mass - first).abs() > 1e-12 * first.max(1.0) {
            return Err(Error::MixedMass(first, c.mass));
        }
    }
    Ok(first)
}

/// Boosts every sample's `(ω, k)`; amplitudes, spin labels and weights are
/// carried over unchanged.
pub fn boost_spectrum(spec: &Spectrum, b: &Boost) -> SampleCloud {
    let components = spec
        .components()
        .into_iter()
        .map(|c| {
            let p = boost_four_vector(&c.four_momentum(), b);
            PlaneWaveComponent { k: p.spatial, ..c }
        })
        .collect();
    SampleCloud { components }
}

/// Rescales amplitudes so that `Σ w|a|² = 1`.
pub fn normalize(spec: &Spectrum) -> Result<Spectrum> {
    let total = spec.total_weight();
    if !(total > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let s = 1.0 / total.sqrt();
    Ok(match spec {
        // Rings carry unit norm by construction.
        Spectrum::Ring(r) => Spectrum::Ring(r.clone()),
        Spectrum::Grid(g) => Spectrum::Grid(g.scaled(s)),
        Spectrum::Cloud(c) => Spectrum::Cloud(SampleCloud {
            components: c
                .components
                .iter()
                .map(|p| PlaneWaveComponent {
                    amplitude: p.amplitude * s,
                    ..*p
                })
                .collect(),
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_04() -> RingSpectrum {
        make_ring(1.0, 0.4f64.asin(), 2.0, 0.0, 0.0, 256).unwrap()
    }

    #[test]
    fn ring_geometry() {
        let r = ring_04();
        assert!((r.k_z() - 0.84f64.sqrt()).abs() < 1e-15);
        assert!((r.k_z() - 0.9165).abs() < 1e-4);
        for (j, c) in r.components().iter().enumerate() {
            assert!((c.k.z - r.k_z()).abs() < 1e-15);
            let phi = TAU * j as f64 / 256.0;
            let expected = Complex64::from_polar(1.0, 2.0 * phi);
            assert!((c.amplitude - expected).norm() < 1e-13);
            assert_eq!(c.weight, 1.0 / 256.0);
        }
    }

    #[test]
    fn untwisted_ring_has_constant_phase() {
        let r = make_ring(1.0, 0.3, 0.0, 0.0, 0.0, 32).unwrap();
        assert!(r.components().iter().all(|c| c.amplitude == Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn transverse_ring_lies_in_plane() {
        let r = make_ring(1.0, FRAC_PI_2, 1.0, 0.0, 0.0, 64).unwrap();
        assert!(r.components().iter().all(|c| c.k.z == 0.0));
    }

    #[test]
    fn ring_rejects_bad_input() {
        assert!(make_ring(1.0, 0.3, 1.5, 0.0, 0.0, 64).is_err());
        assert!(make_ring(1.0, 0.3, 1.0, 0.0, 0.0, 4).is_err());
        assert!(make_ring(1.0, 0.0, 1.0, 0.0, 0.0, 64).is_err());
        assert!(make_ring(1.0, 2.0, 1.0, 0.0, 0.0, 64).is_err());
    }

    #[test]
    fn two_wave_components() {
        let c = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap();
        assert_eq!(c.components.len(), 2);
        for p in &c.components {
            assert!((p.omega() - 1.0).abs() < 1e-15);
            assert_eq!(p.weight, 0.5);
        }
        let standing = make_two_wave(0.0, 0.6, -1.0, 1.0).unwrap();
        assert_eq!(standing.components[0].k, -standing.components[1].k);
        assert!(make_two_wave(0.8, 0.0, -1.0, 1.0).is_err());
    }

    #[test]
    fn two_wave_boost_to_rest_frame() {
        let c: Spectrum = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap().into();
        let b = Boost::new(Vec3::new(0.0, 0.0, 0.8)).unwrap();
        let rest = boost_spectrum(&c, &b);
        let expected = [Vec3::new(0.6, 0.0, 0.0), Vec3::new(-0.6, 0.0, 0.0)];
        for (p, e) in rest.components.iter().zip(expected) {
            assert!((p.omega() - 0.6).abs() < 1e-14);
            assert!((p.k - e).amax() < 1e-14);
        }
        assert_eq!(rest.components[0].spin_label, -1.0);
        assert_eq!(rest.components[1].spin_label, 1.0);
    }

    #[test]
    fn identity_boost_keeps_cloud() {
        let c: Spectrum = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap().into();
        let same = boost_spectrum(&c, &Boost::new(Vec3::zeros()).unwrap());
        assert_eq!(Spectrum::Cloud(same), c);
    }

    #[test]
    fn ring_boost_to_rest_frame_flattens_cone() {
        let r = ring_04();
        let b = Boost::new(Vec3::new(0.0, 0.0, r.k_z() / r.omega())).unwrap();
        let rest = boost_spectrum(&r.into(), &b);
        assert!(rest.components.iter().all(|c| c.k.z.abs() < 1e-14));
    }

    #[test]
    fn normalization() {
        let c = make_two_wave(0.8, 0.6, -1.0, 1.0).unwrap();
        let n = normalize(&c.clone().into()).unwrap();
        assert_eq!(n, Spectrum::Cloud(c.clone()));

        let doubled = SampleCloud {
            components: c
                .components
                .iter()
                .map(|p| PlaneWaveComponent {
                    amplitude: p.amplitude * 2.0,
                    ..*p
                })
                .collect(),
        };
        let n2 = normalize(&doubled.into()).unwrap();
        assert_eq!(n2, n);

        let r = ring_04();
        let nr = normalize(&r.into()).unwrap();
        for c in nr.components() {
            assert!((c.intensity() - 1.0 / 256.0).abs() < 1e-16);
        }
    }

    #[test]
    fn mixed_masses_are_reported() {
        let one = Complex64::new(1.0, 0.0);
        let cloud = SampleCloud::new(vec![
            PlaneWaveComponent::new(Vec3::x(), 0.0, one, 0.0, 1.0).unwrap(),
            PlaneWaveComponent::new(Vec3::y(), 1.0, one, 0.0, 1.0).unwrap(),
        ])
        .unwrap();
        assert!(matches!(Spectrum::Cloud(cloud).mass(), Err(Error::MixedMass(..))));
    }

    #[test]
    fn empty_or_zero_clouds_are_rejected() {
        assert!(matches!(SampleCloud::new(vec![]), Err(Error::EmptySpectrum)));
        let zero = PlaneWaveComponent::new(Vec3::x(), 0.0, Complex64::new(0.0, 0.0), 0.0, 1.0).unwrap();
        assert!(matches!(SampleCloud::new(vec![zero]), Err(Error::ZeroNorm)));
    }
}
