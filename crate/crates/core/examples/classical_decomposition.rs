//! Intrinsic/extrinsic split for a system of point particles, the classical
//! picture the wavepacket decomposition generalizes.

use wavepacket_am::observables::{classical_decompose, PointParticle};
use wavepacket_am::Vec3;

fn main() -> wavepacket_am::Result<()> {
    // a binary orbiting its centre of mass, which itself drifts along x
    let drift = Vec3::new(0.5, 0.0, 0.0);
    let particles = [
        PointParticle {
            mass: 2.0,
            position: Vec3::new(1.0, 1.0, 0.0),
            velocity: drift + Vec3::new(0.0, 0.5, 0.0),
        },
        PointParticle {
            mass: 1.0,
            position: Vec3::new(-1.0, 1.0, 0.0),
            velocity: drift + Vec3::new(0.0, -1.0, 0.0),
        },
    ];
    let d = classical_decompose(&particles)?;
    println!("centre of mass  {:?}", d.center_of_mass.as_slice());
    println!("momentum        {:?}", d.momentum.as_slice());
    println!("total L         {:?}", d.total.as_slice());
    println!("extrinsic R×P   {:?}", d.extrinsic.as_slice());
    println!("intrinsic       {:?}", d.intrinsic.as_slice());
    Ok(())
}
