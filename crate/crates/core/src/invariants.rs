//! Seeded randomized checks of the frame-independence properties.
//!
//! Random packets are rings with random shape, mass, centre and time,
//! transported into random frames with `|u| <= 0.95`. Massless checks use
//! clouds of 2 to 8 random plane waves. The same seed always reproduces the
//! same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::epl::{decompose, epl_vector, rest_frame, transport};
use crate::error::{Error, Result};
use crate::minkowski::{Boost, Vec3};
use crate::observables::{effective_mass, expectation_set, four_momentum_expect, ExpectationSet};
use crate::spectrum::{boost_spectrum, make_ring, PlaneWaveComponent, SampleCloud, Spectrum};

pub const DEFAULT_SEED: u64 = 20260;
pub const DEFAULT_CASES: usize = 500;
pub const MAX_SPEED: f64 = 0.95;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantCheck {
    pub name: String,
    pub cases: usize,
    /// Largest scaled error over all cases.
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
    /// Index of the case with the largest error.
    pub worst_case: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InvariantReport {
    pub seed: u64,
    pub cases: usize,
    pub checks: Vec<InvariantCheck>,
}

impl InvariantReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&InvariantCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

struct Tracker {
    name: &'static str,
    tolerance: f64,
    strict: bool,
    cases: usize,
    max_error: f64,
    worst: usize,
}

impl Tracker {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Tracker {
            name,
            tolerance,
            strict: false,
            cases: 0,
            max_error: 0.0,
            worst: 0,
        }
    }

    /// Requires every value to be strictly below `bound`.
    fn below(name: &'static str, bound: f64) -> Self {
        Tracker {
            strict: true,
            ..Tracker::new(name, bound)
        }
    }

    fn record(&mut self, case: usize, err: f64) {
        self.cases += 1;
        // NaN must register as a failure
        if !(err <= self.max_error) {
            self.max_error = if err.is_nan() { f64::INFINITY } else { err };
            self.worst = case;
        }
    }

    fn finish(self) -> InvariantCheck {
        InvariantCheck {
            name: self.name.to_string(),
            cases: self.cases,
            max_error: self.max_error,
            tolerance: self.tolerance,
            pass: self.cases > 0
                && if self.strict {
                    self.max_error < self.tolerance
                } else {
                    self.max_error <= self.tolerance
                },
            worst_case: self.worst,
        }
    }
}

fn unit_vector(rng: &mut ChaCha8Rng) -> Vec3 {
    let z: f64 = rng.gen_range(-1.0..1.0);
    let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).sqrt();
    Vec3::new(r * phi.cos(), r * phi.sin(), z)
}

pub fn random_boost(rng: &mut ChaCha8Rng, max_speed: f64) -> Boost {
    let speed = rng.gen_range(0.0..max_speed);
    Boost::new(unit_vector(rng) * speed).expect("subluminal")
}

/// A ring packet with random parameters, seen from a random frame.
pub fn random_packet(rng: &mut ChaCha8Rng) -> Result<ExpectationSet> {
    let k = rng.gen_range(0.2..3.0);
    let theta = rng.gen_range(0.05..1.5);
    let ell = rng.gen_range(-4..=4) as f64;
    let sigma = [-1.0, 0.0, 1.0][rng.gen_range(0..3)];
    let m = if rng.gen_bool(0.5) {
        0.0
    } else {
        rng.gen_range(0.0..2.0)
    };
    let center = unit_vector(rng) * rng.gen_range(0.0..5.0);
    let ring = make_ring(k, theta, ell, sigma, m, 64)?.with_center(center);
    let set = expectation_set(&ring.into(), rng.gen_range(-5.0..5.0))?;
    transport(&set, &random_boost(rng, MAX_SPEED))
}

/// 2 to 8 massless plane waves in random directions.
pub fn random_massless_cloud(rng: &mut ChaCha8Rng) -> Result<SampleCloud> {
    let n = rng.gen_range(2..=8);
    let comps = (0..n)
        .map(|_| {
            let k = unit_vector(rng) * rng.gen_range(0.1..3.0);
            let a = num_complex::Complex64::from_polar(rng.gen_range(0.1..1.0), rng.gen_range(0.0..6.3));
            PlaneWaveComponent::new(k, 0.0, a, [-1.0, 1.0][rng.gen_range(0..2)], rng.gen_range(0.1..1.0))
        })
        .collect::<Result<Vec<_>>>()?;
    SampleCloud::new(comps)
}

fn scale(v: f64) -> f64 {
    v.abs().max(1.0)
}

/// Runs every invariant over `cases` random packets.
pub fn run_invariants(seed: u64, cases: usize) -> Result<InvariantReport> {
    if cases == 0 {
        return Err(Error::InvalidParameter("cases must be at least 1".to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut identity = Tracker::new("J = R_E x p + W/E", 1e-12);
    let mut norm = Tracker::new("W·W is frame independent", 1e-12);
    let mut orth = Tracker::new("W·p = 0", 1e-12);
    let mut time = Tracker::new("J_int is time independent", 1e-12);
    let mut tensor = Tracker::new("J·K and J²-K² are frame independent", 1e-12);
    let mut round = Tracker::new("boost then inverse boost", 1e-12);
    let mut rest = Tracker::new("rest frame has zero momentum", 1e-12);
    let mut massless = Tracker::below("massless packets are subluminal, max |p|/E", 1.0);

    for case in 0..cases {
        let e = random_packet(&mut rng)?;
        let d = decompose(&e)?;
        let jscale = e.total_am().amax().max(d.j_ext.amax()).max(1.0);
        identity.record(case, (e.total_am() - d.j_ext - d.j_int_epl).amax() / jscale);

        let w = epl_vector(&e).w;
        let wscale = (w.t * w.t + w.spatial.norm_squared()).max(1.0);
        orth.record(case, w.dot(&e.four_momentum()).abs() / (wscale.sqrt() * e.energy()));

        let b = random_boost(&mut rng, MAX_SPEED);
        let moved = transport(&e, &b)?;
        let w2 = epl_vector(&moved).w;
        let wscale2 = wscale.max(w2.t * w2.t + w2.spatial.norm_squared());
        norm.record(case, (w2.norm() - w.norm()).abs() / wscale2);

        let (a1, b1) = e.am_tensor().invariants();
        let (a2, b2) = moved.am_tensor().invariants();
        let tscale = (e.total_am().norm_squared() + e.boost_momentum().norm_squared())
            .max(moved.total_am().norm_squared() + moved.boost_momentum().norm_squared())
            .max(1.0);
        tensor.record(case, (a1 - a2).abs().max((b1 - b2).abs()) / tscale);

        let later = decompose(&e.at_time(e.time() + rng.gen_range(-10.0..10.0)))?;
        time.record(case, (later.j_int - d.j_int).amax() / jscale);

        let back = transport(&moved, &b.inverse())?;
        let err = (back.four_momentum().t - e.energy()).abs() / scale(e.energy());
        let err = err
            .max((back.momentum() - e.momentum()).amax() / scale(e.energy()))
            .max((back.total_am() - e.total_am()).amax() / jscale)
            .max(
                (back.at_time(e.time()).energy_centroid() - e.energy_centroid()).amax()
                    / scale(e.energy_centroid().amax()),
            );
        round.record(case, err);

        let (_, r) = rest_frame(&e)?;
        rest.record(case, r.momentum().norm() / r.energy());

        let cloud: Spectrum = random_massless_cloud(&mut rng)?.into();
        let p = four_momentum_expect(&cloud)?;
        let p2 = four_momentum_expect(&boost_spectrum(&cloud, &random_boost(&mut rng, MAX_SPEED)).into())?;
        for q in [p, p2] {
            let speed = q.spatial.norm() / q.t;
            let massive = effective_mass(&q).is_ok_and(|m| m > 0.0);
            massless.record(case, if massive { speed } else { f64::NAN });
        }
    }
    Ok(InvariantReport {
        seed,
        cases,
        checks: [identity, norm, orth, time, tensor, round, rest, massless]
            .into_iter()
            .map(Tracker::finish)
            .collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes() {
        let r = run_invariants(DEFAULT_SEED, 200).unwrap();
        assert!(r.passed(), "{}", r.to_json());
        assert!(r.checks.iter().all(|c| c.cases >= 200));
    }

    #[test]
    fn same_seed_same_report() {
        assert_eq!(run_invariants(7, 20).unwrap(), run_invariants(7, 20).unwrap());
        assert_ne!(run_invariants(7, 20).unwrap(), run_invariants(8, 20).unwrap());
    }

    #[test]
    fn zero_cases_is_an_error() {
        assert!(run_invariants(1, 0).is_err());
    }

    #[test]
    fn nan_is_recorded_as_failure() {
        let mut t = Tracker::new("x", 1.0);
        t.record(0, 0.5);
        t.record(1, f64::NAN);
        let c = t.finish();
        assert!(!c.pass);
        assert_eq!(c.worst_case, 1);
    }

    #[test]
    fn massless_clouds_have_timelike_or_null_momentum() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let c: Spectrum = random_massless_cloud(&mut rng).unwrap().into();
            let p = four_momentum_expect(&c).unwrap();
            assert!(p.norm() >= -1e-12 * p.t * p.t);
        }
    }
}
