//! Acceptance criteria, one `[PASS]`/`[FAIL]` line each. Exits nonzero when
//! any criterion fails.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wavepacket_am::epl::{epl_vector, pl_spin_massless, transport};
use wavepacket_am::minkowski::{AmTensor, Boost, FourVector, Vec3};
use wavepacket_am::observables::{effective_mass, four_momentum_expect, ExpectationSet};
use wavepacket_am::scenarios::{self, run_named, ScenarioReport, StvParams, Value};
use wavepacket_am::spectrum::{GaussianRing, PlaneWaveComponent, SampleCloud, Spectrum};
use wavepacket_am::synthesis::{synthesize, Axis, GridConfig};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn unit(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let n = v.norm();
        if n > 1e-3 && n <= 1.0 {
            return v / n;
        }
    }
}

/// Arbitrary timelike (E, p) with arbitrary J, K and time.
fn random_set(rng: &mut ChaCha8Rng) -> ExpectationSet {
    let m = rng.gen_range(0.05..3.0);
    let p = unit(rng) * rng.gen_range(0.0..5.0);
    let e = (m * m + p.norm_squared()).sqrt();
    let j = unit(rng) * rng.gen_range(0.0..10.0);
    let k = unit(rng) * rng.gen_range(0.0..10.0);
    ExpectationSet::from_tensor(
        FourVector::from_parts(e, p),
        AmTensor::new(j, k),
        rng.gen_range(-10.0..10.0),
        1.0,
    )
    .unwrap()
}

fn vec_value(r: &ScenarioReport, name: &str) -> [f64; 3] {
    match r.check(name).map(|c| &c.computed) {
        Some(Value::Vector(v)) => *v,
        other => panic!("{name}: {other:?}"),
    }
}

fn scalar_value(r: &ScenarioReport, name: &str) -> f64 {
    match r.check(name).map(|c| &c.computed) {
        Some(Value::Scalar(v)) => *v,
        other => panic!("{name}: {other:?}"),
    }
}

fn close(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
    a.iter().zip(&b).all(|(x, y)| (x - y).abs() <= tol)
}

fn c1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let e = random_set(&mut rng);
        let w = epl_vector(&e).w;
        let lever = e.total_am() - e.energy_centroid().cross(&e.momentum());
        let scale = e.total_am().norm().max(lever.norm()).max(1.0);
        worst = worst.max((w.spatial / e.energy() - lever).amax() / scale);
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(
        worst <= 1e-12 && secs < 1.0,
        format!("1000 sets, max |W/E - (J - R_E x p)| = {worst:.2e}, {secs:.3} s"),
    )
}

fn c2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let e = random_set(&mut rng);
        let b = Boost::new(unit(&mut rng) * rng.gen_range(0.0..=0.95)).unwrap();
        let w = epl_vector(&e).w;
        let w2 = epl_vector(&transport(&e, &b).unwrap()).w;
        // relative to the Euclidean size, since the norm itself may vanish
        let scale = (w.t * w.t + w.spatial.norm_squared()).max(w2.t * w2.t + w2.spatial.norm_squared());
        worst = worst.max((w2.norm() - w.norm()).abs() / scale);
    }
    outcome(
        worst <= 1e-12,
        format!("1000 boosts |u| <= 0.95, max relative change {worst:.2e}"),
    )
}

fn c3() -> Outcome {
    let b = Boost::new(Vec3::new(0.6, 0.0, 0.0)).unwrap();
    let mut worst = 0.0f64;
    let mut ok = true;
    for lambda in [1.0, -1.0] {
        let p = FourVector::new(1.0, 0.0, 0.0, 1.0).boost(&b);
        let s = pl_spin_massless(&p, lambda).unwrap();
        worst = worst
            .max((s - Vec3::new(-0.6, 0.0, 0.8) * lambda).amax())
            .max((s.norm() - 1.0).abs());
        let report = run_named("plane-wave", &[("lambda".into(), lambda)]).unwrap();
        ok &= report.passed();
        let from_spectrum = vec_value(&report, "S' (spectrum)");
        ok &= close(from_spectrum, [-0.6 * lambda, 0.0, 0.8 * lambda], 1e-12);
    }
    outcome(
        ok && worst <= 1e-12,
        format!("λ = ±1: max |S' - λ(-0.6, 0, 0.8)|, ||S'| - 1| = {worst:.2e}"),
    )
}

fn c4() -> Outcome {
    let r = run_named("two-wave", &[]).unwrap();
    let s = vec_value(&r, "<S>");
    let s0 = vec_value(&r, "<S0>");
    let mut ok = close(s, [-0.6, 0.0, 0.0], 1e-12) && close(s0, [-1.0, 0.0, 0.0], 1e-12);
    ok &= close(s0, [s[0] * 5.0 / 3.0, 0.0, 0.0], 1e-12);
    for i in [1, 2] {
        ok &= (scalar_value(&r, &format!("rest ω' (wave {i})")) - 0.6).abs() <= 1e-12;
    }
    ok &= close(vec_value(&r, "rest k' (wave 1)"), [0.6, 0.0, 0.0], 1e-12);
    ok &= close(vec_value(&r, "rest k' (wave 2)"), [-0.6, 0.0, 0.0], 1e-12);
    ok &= (scalar_value(&r, "|W·W| (lab)") - 0.36).abs() <= 1e-12;
    let w = match &r.check("W (lab, assembled)").unwrap().computed {
        Value::Four(w) => *w,
        _ => unreachable!(),
    };
    ok &= close([w[1], w[2], w[3]], [-0.6, 0.0, 0.0], 1e-12) && w[0].abs() <= 1e-12;
    ok &= r.passed();
    outcome(
        ok,
        format!(
            "<S> = ({:.3}, {:.3}, {:.3}), <S0> = {:.6}x̂, W = ({:.3}, {:.3}, {:.3}, {:.3}), {} checks",
            s[0],
            s[1],
            s[2],
            s0[0],
            w[0],
            w[1],
            w[2],
            w[3],
            r.checks.len()
        ),
    )
}

fn c5() -> Outcome {
    let r = run_named("bessel", &[]).unwrap();
    let m_eff = scalar_value(&r, "m_eff");
    let norm = scalar_value(&r, "W·W");
    let p0 = scalar_value(&r, "|<p0>|/<E0>") * scalar_value(&r, "<E0>");
    let grid = scalar_value(&r, "<L_z> (Gaussian-ring grid)");
    let ok_exact = (m_eff - 0.4).abs() <= 1e-12 && (norm + 0.64).abs() <= 1e-12 && p0 < 1e-12;
    let ok_grid = (grid - 2.0).abs() <= 1e-3;
    outcome(
        ok_exact && ok_grid,
        format!(
            "m_eff = {m_eff:.15}, W·W = {norm:.15}, |p0| = {p0:.1e}, grid <L_z> = {grid:.6} (|err| = {:.2e}, limit 1e-3)",
            (grid - 2.0).abs()
        ),
    )
}

fn c6() -> Outcome {
    let r = run_named("bessel-boost", &[]).unwrap();
    let int = r.check("J'_int (paraxial)").unwrap();
    let angle = r.check("angle(J'_int, <p'>) at m = 0 [deg]").unwrap();
    let norm = r.check("W'·W' (paraxial)").unwrap();
    let ok = int.pass && angle.pass && norm.pass && int.tolerance == 0.05 && norm.tolerance == 0.05;
    let a = match angle.computed {
        Value::Scalar(a) => a,
        _ => unreachable!(),
    };
    let (n, m) = match (&norm.computed, &norm.expected) {
        (Value::Scalar(n), Value::Scalar(m)) => (*n, *m),
        _ => unreachable!(),
    };
    outcome(
        ok,
        format!(
            "J'_int per-component err {:.2}%, m=0 angle {a:.2}°, W'·W' = {n:.4} vs -m²ℓ² = {m:.4} ({:.1}%)",
            100.0 * int.rel_err,
            100.0 * norm.rel_err
        ),
    )
}

fn c7() -> Outcome {
    let r = scenarios::stv_2d(&StvParams {
        synth: false,
        ..StvParams::default()
    })
    .unwrap();
    let g = 1.0 / (1.0f64 - 0.49).sqrt();
    let int = vec_value(&r, "J_int");
    let ext = vec_value(&r, "J_ext");
    let sum = vec_value(&r, "J_int + J_ext");
    let identity = scalar_value(&r, "(ℓ/2)[1/γ + γ(1 - p²/E²)]");
    let ok = close(int, [0.0, 0.0, 2.0 / g], 1e-10)
        && close(ext, [0.0, 0.0, g * 0.49 * 2.0], 1e-10)
        && (int[2] - 1.4283).abs() < 5e-5
        && (ext[2] - 1.3723).abs() < 5e-5
        && close(sum, [0.0, 0.0, 2.0 * g], 1e-12)
        && (identity - 2.0 / g).abs() <= 1e-12
        && r.passed();
    outcome(
        ok,
        format!(
            "J_int = {:.10}ẑ, J_ext = {:.10}ẑ, sum - γℓ = {:.1e}, identity - ℓ/γ = {:.1e}",
            int[2],
            ext[2],
            sum[2] - 2.0 * g,
            identity - 2.0 / g
        ),
    )
}

fn c8() -> Outcome {
    let start = Instant::now();
    let r = scenarios::stv_2d(&StvParams::default()).unwrap();
    let secs = start.elapsed().as_secs_f64();
    let jz = scalar_value(&r, "density J_z (rest)");
    let shift = scalar_value(&r, "density R_E·ŷ (boosted)");
    let ratio = scalar_value(&r, "intensity ellipse x/y ratio (boosted)");
    let g = 1.0 / (1.0f64 - 0.49).sqrt();
    let ok = (jz - 2.0).abs() <= 0.01 * 2.0
        && (shift - 0.8413).abs() <= 0.02 * 0.8413
        && (ratio * g - 1.0).abs() <= 0.02
        && secs < 30.0;

    // cost of one boosted 512² frame from a 1024-sample cloud
    let cloud: Spectrum = GaussianRing::new(1.33, std::f64::consts::FRAC_PI_2, 2.0, 0.3, 1.0)
        .unwrap()
        .polar_cloud(16, 64)
        .unwrap()
        .into();
    let boosted: Spectrum =
        wavepacket_am::spectrum::boost_spectrum(&cloud, &Boost::new(Vec3::x() * 0.7).unwrap()).into();
    let (_, hx, hy) = scenarios::stv_windows(0.3, 0.7);
    let cfg = GridConfig::plane(Axis::symmetric(hx, 512).unwrap(), Axis::symmetric(hy, 512).unwrap());
    let t1024 = Instant::now();
    synthesize(&boosted, &cfg, 0.0).unwrap();
    let t1024 = t1024.elapsed().as_secs_f64();
    outcome(
        ok,
        format!(
            "J_z = {jz:.6}, R_E·ŷ = {shift:.6} ({:+.2}% vs 0.8413), ratio·γ = {:.4}; {secs:.1} s with 6400 samples, {t1024:.1} s per 512² frame at 1024 samples",
            100.0 * (shift / 0.8413 - 1.0),
            ratio * g
        ),
    )
}

fn c9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut max_speed = 0.0f64;
    let mut min_mass = f64::INFINITY;
    let mut ok = true;
    for _ in 0..500 {
        let n = rng.gen_range(2..=10);
        let comps: Vec<_> = (0..n)
            .map(|_| {
                let k = unit(&mut rng) * rng.gen_range(0.01..5.0);
                let a = num_complex::Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                PlaneWaveComponent::new(k, 0.0, a, 1.0, rng.gen_range(0.01..1.0)).unwrap()
            })
            .collect();
        let p = four_momentum_expect(&SampleCloud::new(comps).unwrap().into()).unwrap();
        let speed = p.spatial.norm() / p.t;
        let m = effective_mass(&p).unwrap_or(0.0);
        ok &= speed < 1.0 && m > 0.0;
        max_speed = max_speed.max(speed);
        min_mass = min_mass.min(m / p.t);
    }
    outcome(
        ok,
        format!("500 spectra, max |<p>|/<E> = {max_speed:.6}, min m_eff/<E> = {min_mass:.2e}"),
    )
}

fn cli_bytes(args: &[&str], dir: &std::path::Path) -> (i32, Vec<u8>, Vec<u8>) {
    let dir_s = dir.to_str().unwrap();
    let mut full = vec!["wavepacket-am"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", dir_s]);
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = wavepacket_am::cli::run(full, &mut out, &mut err);
    let file = if args[0] == "invariants" {
        "invariants.json"
    } else {
        "report.json"
    };
    (code, out, std::fs::read(dir.join(file)).unwrap_or_default())
}

fn c10() -> Outcome {
    let runs: [&[&str]; 6] = [
        &["scenario", "plane-wave"],
        &["scenario", "two-wave"],
        &["scenario", "bessel"],
        &["scenario", "bessel-boost"],
        &[
            "scenario",
            "stv2d",
            "--set",
            "grid=128",
            "--set",
            "n_radial=12",
            "--set",
            "n_azimuth=48",
        ],
        &["invariants", "--seed", "42", "--cases", "1000"],
    ];
    let mut ok = true;
    let mut bytes = 0;
    for args in runs {
        let a = tempfile::tempdir().unwrap();
        let b = tempfile::tempdir().unwrap();
        let first = cli_bytes(args, a.path());
        let second = cli_bytes(args, b.path());
        ok &= !first.2.is_empty() && first == second;
        bytes += first.2.len();
    }
    outcome(
        ok,
        format!("{} commands run twice, {bytes} report bytes identical", runs.len()),
    )
}

fn main() {
    type Criterion = (&'static str, &'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("C1", "central identity", c1),
        ("C2", "EPL norm invariance", c2),
        ("C3", "boosted plane-wave spin", c3),
        ("C4", "two-wave transverse spin", c4),
        ("C5", "Bessel beam rest frame", c5),
        ("C6", "Bessel beam transverse boost", c6),
        ("C7", "spatiotemporal vortex transport", c7),
        ("C8", "field-synthesis oracle", c8),
        ("C9", "massless subluminality", c9),
        ("C10", "determinism", c10),
    ];
    let mut failed = 0;
    for (id, title, run) in criteria {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!("[{}] {id} {title}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
