//! Real-space Klein-Gordon fields synthesised from spectra.
//!
//! `ψ(r, t) = Σ w a e^{i(k·r - ωt)}` is summed directly over the samples, so
//! boosted clouds need no resampling. `∂ₜψ` and `∇ψ` come out of the same
//! sum analytically. The scalar stress tensor
//!
//! ```text
//! T⁰⁰ = |∂ₜψ|² + |∇ψ|² + m²|ψ|²      P = -2 Re(∂ₜψ* ∇ψ)      ρ = -2 Im(ψ* ∂ₜψ)
//! ```
//!
//! then gives density moments normalised by the charge `∫ρ`, which match the
//! spectral moments of [`crate::observables`] for localized packets.
//!
//! Every grid point sums its samples in a fixed order, so results do not
//! depend on the number of rayon workers.

use std::f64::consts::TAU;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::minkowski::Vec3;
use crate::numeric::{pairwise_sum, pairwise_sum_vec3};
use crate::spectrum::{PlaneWaveComponent, Spectrum};

/// Largest `|ψ|` allowed on the grid boundary, relative to its maximum,
/// before moments are refused.
pub const LEAKAGE_LIMIT: f64 = 1e-4;

/// Evenly spaced nodes from `min` to `max` inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Axis {
    pub min: f64,
    pub max: f64,
    pub n: usize,
}

impl Axis {
    pub fn new(min: f64, max: f64, n: usize) -> Result<Self> {
        if n < 2 || !(max > min) || !min.is_finite() || !max.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "axis needs n >= 2 and min < max, got [{min}, {max}] with n = {n}"
            )));
        }
        Ok(Axis { min, max, n })
    }

    pub fn symmetric(half_width: f64, n: usize) -> Result<Self> {
        Self::new(-half_width, half_width, n)
    }

    pub fn step(&self) -> f64 {
        (self.max - self.min) / (self.n - 1) as f64
    }

    pub fn value(&self, i: usize) -> f64 {
        if i + 1 == self.n {
            self.max
        } else {
            self.min + i as f64 * self.step()
        }
    }

    pub fn values(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.value(i)).collect()
    }
}

/// Where to evaluate the field: an `x-y` plane at `plane_z`, or a volume.
#[derive(Clone, Debug, PartialEq)]
pub struct GridConfig {
    axes: Vec<Axis>,
    plane_z: f64,
}

impl GridConfig {
    pub fn plane(x: Axis, y: Axis) -> Self {
        GridConfig {
            axes: vec![x, y],
            plane_z: 0.0,
        }
    }

    /// Square plane `[-half, half]²` with `n` nodes per side.
    pub fn square(half: f64, n: usize) -> Result<Self> {
        let a = Axis::symmetric(half, n)?;
        Ok(Self::plane(a, a))
    }

    pub fn volume(x: Axis, y: Axis, z: Axis) -> Self {
        GridConfig {
            axes: vec![x, y, z],
            plane_z: 0.0,
        }
    }

    pub fn at_z(mut self, z: f64) -> Self {
        self.plane_z = z;
        self
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }
}

/// Field samples on a grid, flattened with `x` fastest:
/// `flat = ix + nx (iy + ny iz)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid {
    axes: Vec<Axis>,
    plane_z: f64,
    time: f64,
    psi: Vec<Complex64>,
    dpsi_dt: Vec<Complex64>,
    grad: Vec<[Complex64; 3]>,
}

impl FieldGrid {
    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn psi(&self) -> &[Complex64] {
        &self.psi
    }

    pub fn dpsi_dt(&self) -> &[Complex64] {
        &self.dpsi_dt
    }

    /// The analytic gradient.
    pub fn gradient(&self) -> &[[Complex64; 3]] {
        &self.grad
    }

    pub fn len(&self) -> usize {
        self.psi.len()
    }

    pub fn is_empty(&self) -> bool {
        self.psi.is_empty()
    }

    fn index3(&self, flat: usize) -> [usize; 3] {
        let nx = self.axes[0].n;
        let ny = self.axes[1].n;
        [flat % nx, (flat / nx) % ny, flat / (nx * ny)]
    }

    pub fn position(&self, flat: usize) -> Vec3 {
        let [ix, iy, iz] = self.index3(flat);
        let z = match self.axes.get(2) {
            Some(a) => a.value(iz),
            None => self.plane_z,
        };
        Vec3::new(self.axes[0].value(ix), self.axes[1].value(iy), z)
    }

    pub fn cell_volume(&self) -> f64 {
        self.axes.iter().map(Axis::step).product()
    }

    fn on_boundary(&self, flat: usize) -> bool {
        let idx = self.index3(flat);
        self.axes.iter().zip(idx).any(|(a, i)| i == 0 || i + 1 == a.n)
    }
}

/// Synthesises `ψ`, `∂ₜψ` and `∇ψ` at `time`.
pub fn synthesize(spec: &Spectrum, config: &GridConfig, time: f64) -> Result<FieldGrid> {
    synthesize_components(&spec.components(), config, time)
}

pub fn synthesize_components(comps: &[PlaneWaveComponent], config: &GridConfig, time: f64) -> Result<FieldGrid> {
    if comps.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let axes = config.axes.clone();
    let xs = axes[0].values();
    let ys = axes[1].values();
    let zs = match axes.get(2) {
        Some(a) => a.values(),
        None => vec![config.plane_z],
    };
    let (nx, ny, nz) = (xs.len(), ys.len(), zs.len());
    let ns = comps.len();

    let table = |coord: &[f64], pick: fn(&Vec3) -> f64| -> Vec<Complex64> {
        let mut t = Vec::with_capacity(ns * coord.len());
        for c in comps {
            let k = pick(&c.k);
            t.extend(coord.iter().map(|&x| Complex64::from_polar(1.0, k * x)));
        }
        t
    };
    let tx = table(&xs, |k| k.x);
    let ty = table(&ys, |k| k.y);
    let tz = table(&zs, |k| k.z);
    let coef: Vec<Complex64> = comps
        .iter()
        .map(|c| c.amplitude * c.weight * Complex64::from_polar(1.0, -c.omega() * time))
        .collect();
    let omega: Vec<f64> = comps.iter().map(PlaneWaveComponent::omega).collect();

    // per row: ψ, Σωb, Σk b
    let rows: Vec<[Vec<Complex64>; 5]> = (0..ny * nz)
        .into_par_iter()
        .map(|row| {
            let (iy, iz) = (row % ny, row / ny);
            let mut acc: [Vec<Complex64>; 5] = std::array::from_fn(|_| vec![Complex64::new(0.0, 0.0); nx]);
            for j in 0..ns {
                let q = coef[j] * ty[j * ny + iy] * tz[j * nz + iz];
                let (w, k) = (omega[j], comps[j].k);
                let xrow = &tx[j * nx..(j + 1) * nx];
                let [psi, sw, sx, sy, sz] = &mut acc;
                for ix in 0..nx {
                    let b = q * xrow[ix];
                    psi[ix] += b;
                    sw[ix] += b * w;
                    sx[ix] += b * k.x;
                    sy[ix] += b * k.y;
                    sz[ix] += b * k.z;
                }
            }
            acc
        })
        .collect();

    let i = Complex64::i();
    let total = nx * ny * nz;
    let mut psi = Vec::with_capacity(total);
    let mut dpsi_dt = Vec::with_capacity(total);
    let mut grad = Vec::with_capacity(total);
    for [p, sw, sx, sy, sz] in rows {
        psi.extend_from_slice(&p);
        dpsi_dt.extend(sw.iter().map(|s| -i * s));
        grad.extend((0..nx).map(|ix| [i * sx[ix], i * sy[ix], i * sz[ix]]));
    }
    Ok(FieldGrid {
        axes,
        plane_z: config.plane_z,
        time,
        psi,
        dpsi_dt,
        grad,
    })
}

/// ψ at arbitrary points, for probes that need finer sampling than a grid.
pub fn sample_field(comps: &[PlaneWaveComponent], points: &[Vec3], time: f64) -> Vec<Complex64> {
    points
        .par_iter()
        .map(|r| {
            comps.iter().fold(Complex64::new(0.0, 0.0), |acc, c| {
                acc + c.amplitude * c.weight * Complex64::from_polar(1.0, c.k.dot(r) - c.omega() * time)
            })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GradientMode {
    /// The gradient summed with the field.
    #[default]
    Analytic,
    /// Second-order differences along the grid axes. The out-of-plane
    /// derivative of a planar grid stays analytic.
    CentralDifference,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Densities {
    pub energy: Vec<f64>,
    pub momentum: Vec<Vec3>,
    pub charge: Vec<f64>,
}

pub fn densities(f: &FieldGrid, m: f64) -> Densities {
    densities_with(f, m, GradientMode::Analytic)
}

pub fn densities_with(f: &FieldGrid, m: f64, mode: GradientMode) -> Densities {
    let grad = match mode {
        GradientMode::Analytic => f.grad.clone(),
        GradientMode::CentralDifference => difference_gradient(f),
    };
    let n = f.len();
    let mut energy = Vec::with_capacity(n);
    let mut momentum = Vec::with_capacity(n);
    let mut charge = Vec::with_capacity(n);
    for ((&psi, &dt), g) in f.psi.iter().zip(&f.dpsi_dt).zip(&grad) {
        let g2: f64 = g.iter().map(Complex64::norm_sqr).sum();
        energy.push(dt.norm_sqr() + g2 + m * m * psi.norm_sqr());
        let c = dt.conj();
        momentum.push(Vec3::new((c * g[0]).re, (c * g[1]).re, (c * g[2]).re) * -2.0);
        charge.push(-2.0 * (psi.conj() * dt).im);
    }
    Densities {
        energy,
        momentum,
        charge,
    }
}

fn difference_gradient(f: &FieldGrid) -> Vec<[Complex64; 3]> {
    let nx = f.axes[0].n;
    let ny = f.axes[1].n;
    let strides = [1, nx, nx * ny];
    let mut out = f.grad.clone();
    for (axis, a) in f.axes.iter().enumerate() {
        let h = a.step();
        let stride = strides[axis];
        for (flat, g) in out.iter_mut().enumerate() {
            let i = f.index3(flat)[axis];
            let at = |d: isize| f.psi[(flat as isize + d * stride as isize) as usize];
            g[axis] = if i == 0 {
                (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h)
            } else if i + 1 == a.n {
                (3.0 * at(0) - 4.0 * at(-1) + at(-2)) / (2.0 * h)
            } else {
                (at(1) - at(-1)) / (2.0 * h)
            };
        }
    }
    out
}

/// Real-space counterparts of the spectral moments, per unit charge.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityMoments {
    #[serde(rename = "E")]
    pub energy: f64,
    #[serde(rename = "p", with = "crate::serde_vec3")]
    pub momentum: Vec3,
    #[serde(rename = "J", with = "crate::serde_vec3")]
    pub total_am: Vec3,
    #[serde(rename = "R_E", with = "crate::serde_vec3")]
    pub energy_centroid: Vec3,
    pub norm: f64,
}

/// Integrates the densities of `f`; refuses fields that have not decayed by
/// the grid boundary.
pub fn moments_from_field(f: &FieldGrid, m: f64) -> Result<DensityMoments> {
    let peak = f.psi.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if !(peak > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let edge = (0..f.len())
        .filter(|&i| f.on_boundary(i))
        .map(|i| f.psi[i].norm())
        .fold(0.0, f64::max);
    let ratio = edge / peak;
    if ratio > LEAKAGE_LIMIT {
        return Err(Error::BoundaryLeakage {
            ratio,
            limit: LEAKAGE_LIMIT,
        });
    }
    let d = densities(f, m);
    let dv = f.cell_volume();
    let norm = pairwise_sum(d.charge.iter().copied()) * dv;
    if !(norm > 0.0) {
        return Err(Error::ZeroNorm);
    }
    let e = pairwise_sum(d.energy.iter().copied()) * dv;
    let p = pairwise_sum_vec3(d.momentum.iter().copied()) * dv;
    let j = pairwise_sum_vec3((0..f.len()).map(|i| f.position(i).cross(&d.momentum[i]))) * dv;
    let re = pairwise_sum_vec3((0..f.len()).map(|i| f.position(i) * d.energy[i])) * dv;
    Ok(DensityMoments {
        energy: e / norm,
        momentum: p / norm,
        total_am: j / norm,
        energy_centroid: re / e,
        norm,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldFormat {
    Csv,
    Ppm,
}

impl FieldFormat {
    pub fn from_path(path: &Path) -> Result<Self> {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => Ok(FieldFormat::Csv),
            Some(e) if e.eq_ignore_ascii_case("ppm") => Ok(FieldFormat::Ppm),
            _ => Err(Error::UnknownFormat(path.to_path_buf())),
        }
    }
}

/// Writes a planar field as CSV or PPM, chosen by the file extension.
pub fn emit_field(f: &FieldGrid, m: f64, path: &Path) -> Result<()> {
    let format = FieldFormat::from_path(path)?;
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    match format {
        FieldFormat::Csv => write_field_csv(&mut w, f, m),
        FieldFormat::Ppm => write_ppm(&mut w, f, m),
    }
    .and_then(|_| w.flush())
    .map_err(|e| Error::io(path, e))
}

fn require_plane(f: &FieldGrid) -> std::io::Result<()> {
    if f.axes.len() != 2 {
        return Err(std::io::Error::new(
            std::io::ErrorKind::InvalidInput,
            "only planar fields can be emitted",
        ));
    }
    Ok(())
}

/// Columns `x,y,re,im,T00`, `x` varying fastest.
pub fn write_field_csv<W: Write>(mut w: W, f: &FieldGrid, m: f64) -> std::io::Result<()> {
    require_plane(f)?;
    let d = densities(f, m);
    writeln!(w, "x,y,re,im,T00")?;
    for i in 0..f.len() {
        let r = f.position(i);
        writeln!(w, "{},{},{},{},{}", r.x, r.y, f.psi[i].re, f.psi[i].im, d.energy[i])?;
    }
    Ok(())
}

/// Binary P6 image, top row at the largest `y`. Brightness is `T⁰⁰` over
/// its maximum in this frame; hue is `arg ψ`.
pub fn write_ppm<W: Write>(mut w: W, f: &FieldGrid, m: f64) -> std::io::Result<()> {
    require_plane(f)?;
    let d = densities(f, m);
    let peak = d.energy.iter().cloned().fold(0.0, f64::max);
    let (nx, ny) = (f.axes[0].n, f.axes[1].n);
    write!(w, "P6\n{nx} {ny}\n255\n")?;
    let mut buf = Vec::with_capacity(3 * nx * ny);
    for iy in (0..ny).rev() {
        for ix in 0..nx {
            let i = ix + nx * iy;
            let v = if peak > 0.0 { d.energy[i] / peak } else { 0.0 };
            let hue = f.psi[i].arg().rem_euclid(TAU) / TAU;
            buf.extend_from_slice(&hsv_to_rgb(hue, v));
        }
    }
    w.write_all(&buf)
}

/// `hue` and `value` in `[0, 1]`, full saturation.
pub fn hsv_to_rgb(hue: f64, value: f64) -> [u8; 3] {
    let h = (hue.rem_euclid(1.0)) * 6.0;
    let sector = h.floor() as u32 % 6;
    let frac = h - h.floor();
    let v = value.clamp(0.0, 1.0);
    let (q, t) = (v * (1.0 - frac), v * frac);
    let (r, g, b) = match sector {
        0 => (v, t, 0.0),
        1 => (q, v, 0.0),
        2 => (0.0, v, t),
        3 => (0.0, q, v),
        4 => (t, 0.0, v),
        _ => (v, 0.0, q),
    };
    let byte = |x: f64| (x * 255.0).round() as u8;
    [byte(r), byte(g), byte(b)]
}

/// Net phase winding of ψ around a circle in the `x-y` plane.
pub fn winding_number(comps: &[PlaneWaveComponent], center: Vec3, radius: f64, time: f64, n: usize) -> i64 {
    let points: Vec<Vec3> = (0..n)
        .map(|j| {
            let a = TAU * j as f64 / n as f64;
            center + Vec3::new(radius * a.cos(), radius * a.sin(), 0.0)
        })
        .collect();
    let psi = sample_field(comps, &points, time);
    let mut total = 0.0;
    for j in 0..n {
        total += (psi[(j + 1) % n] / psi[j]).arg();
    }
    (total / TAU).round() as i64
}

/// Distance from `center` along `direction` to the first maximum of `|ψ|²`,
/// found on `n` samples up to `r_max` and refined with a parabola. `None`
/// when the profile only rises or only falls.
pub fn first_maximum_radius(
    comps: &[PlaneWaveComponent],
    center: Vec3,
    direction: Vec3,
    time: f64,
    r_max: f64,
    n: usize,
) -> Option<f64> {
    let dir = direction.try_normalize(0.0)?;
    let h = r_max / n as f64;
    let points: Vec<Vec3> = (0..=n).map(|i| center + dir * (i as f64 * h)).collect();
    let intensity: Vec<f64> = sample_field(comps, &points, time)
        .iter()
        .map(Complex64::norm_sqr)
        .collect();
    let i = (1..n).find(|&i| intensity[i] >= intensity[i - 1] && intensity[i] > intensity[i + 1])?;
    let (a, b, c) = (intensity[i - 1], intensity[i], intensity[i + 1]);
    let denom = a - 2.0 * b + c;
    let shift = if denom != 0.0 { 0.5 * (a - c) / denom } else { 0.0 };
    Some((i as f64 + shift) * h)
}

/// Ratio of the first-ring radii of `|ψ|²` along `x` and `y`, each averaged
/// over both signs.
pub fn ellipse_axis_ratio(comps: &[PlaneWaveComponent], center: Vec3, time: f64, r_max: f64, n: usize) -> Option<f64> {
    let radius = |d: Vec3| {
        let a = first_maximum_radius(comps, center, d, time, r_max, n)?;
        let b = first_maximum_radius(comps, center, -d, time, r_max, n)?;
        Some(0.5 * (a + b))
    };
    Some(radius(Vec3::x())? / radius(Vec3::y())?)
}
