//! The intrinsic angular momentum two ways: as J minus the lever arm of the
//! energy centroid, and as the spatial Pauli-Lubanski construction divided
//! by the energy. They agree in every frame and at every time.

use rand::SeedableRng;
use wavepacket_am::epl::{decompose, transport};
use wavepacket_am::invariants::{random_boost, run_invariants};
use wavepacket_am::observables::expectation_set;
use wavepacket_am::spectrum::make_ring;
use wavepacket_am::Vec3;

fn main() -> wavepacket_am::Result<()> {
    let ring = make_ring(1.0, 0.5, 3.0, -1.0, 0.3, 128)?.with_center(Vec3::new(2.0, -1.0, 0.5));
    let packet = expectation_set(&ring.into(), 0.0)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    for _ in 0..5 {
        let b = random_boost(&mut rng, 0.95);
        let e = transport(&packet, &b)?;
        let d = decompose(&e)?;
        println!(
            "|u| = {:.3}: J - R_E×p = ({:+.5}, {:+.5}, {:+.5})  W/E = ({:+.5}, {:+.5}, {:+.5})  diff {:.1e}",
            b.speed(),
            d.j_int.x,
            d.j_int.y,
            d.j_int.z,
            d.j_int_epl.x,
            d.j_int_epl.y,
            d.j_int_epl.z,
            d.residual
        );
    }

    let report = run_invariants(42, 1000)?;
    for c in &report.checks {
        println!("{:<46} max {:.2e}", c.name, c.max_error);
    }
    Ok(())
}
