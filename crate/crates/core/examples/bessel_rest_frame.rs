//! A Bessel beam is a ring of plane waves on a cone. Its mean momentum is
//! timelike even for massless waves, so it has a rest frame in which the
//! angular momentum is purely intrinsic.

use wavepacket_am::epl::{decompose, epl_vector, rest_frame};
use wavepacket_am::observables::{expectation_set, orbital_am_expect};
use wavepacket_am::spectrum::{make_ring, GaussianRing};

fn main() -> wavepacket_am::Result<()> {
    let (k, sin_theta, ell, sigma) = (1.0, 0.4, 2.0, 1.0);
    let theta = f64::asin(sin_theta);
    let ring = make_ring(k, theta, ell, sigma, 0.0, 256)?;
    let lab = expectation_set(&ring.into(), 0.0)?;
    let d = decompose(&lab)?;
    let spin = lab.spin().unwrap_or_default();
    let orbital = lab.orbital().unwrap_or_default();
    println!(
        "<E> = {:.4}  <p_z> = {:.4}  m_eff = {:.4}",
        lab.energy(),
        lab.momentum().z,
        d.m_eff
    );
    println!(
        "<S_z> = {:.4}  <L_z> = {:.4}  <J_z> = {:.4}",
        spin.z,
        orbital.z,
        lab.total_am().z
    );

    let (b, rest) = rest_frame(&lab)?;
    let w = epl_vector(&lab).w;
    let w0 = epl_vector(&rest).w;
    println!(
        "rest frame moves at {:.4}ẑ, |<p0>| = {:.1e}",
        b.velocity().z,
        rest.momentum().norm()
    );
    println!("W  = ({:.4}, 0, 0, {:.4})", w.t, w.spatial.z);
    println!("W0 = ({:.4}, 0, 0, {:.4}), W·W = {:.4}", w0.t, w0.spatial.z, w.norm());

    // the same beam with a finite ring width, on a Cartesian k-grid
    for n in [128, 256, 512] {
        let grid = GaussianRing::new(k, theta, ell, 0.1, 0.0)?.grid(n)?;
        let l = orbital_am_expect(&grid.into())?;
        println!("Gaussian ring on {n}² grid: <L_z> = {:.6}", l.z);
    }
    Ok(())
}
