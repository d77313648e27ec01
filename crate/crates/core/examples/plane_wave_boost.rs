//! A circularly polarized plane wave along z, seen from a frame moving
//! sideways. The spin stays locked to the (now tilted) wavevector.
//!
//! ```text
//! cargo run --example plane_wave_boost
//! ```

use num_complex::Complex64;
use wavepacket_am::epl::pl_spin_massless;
use wavepacket_am::observables::spin_expect;
use wavepacket_am::spectrum::{boost_spectrum, PlaneWaveComponent, SampleCloud};
use wavepacket_am::{Boost, Vec3};

fn main() -> wavepacket_am::Result<()> {
    let boost = Boost::new(Vec3::new(0.6, 0.0, 0.0))?;
    for helicity in [1.0, -1.0] {
        let wave = PlaneWaveComponent::new(Vec3::z(), 0.0, Complex64::new(1.0, 0.0), helicity, 1.0)?;
        let p = wave.four_momentum().boost(&boost);
        let s = pl_spin_massless(&p, helicity)?;

        // same thing through the spectrum path
        let cloud = boost_spectrum(&SampleCloud::new(vec![wave])?.into(), &boost);
        let s_cloud = spin_expect(&cloud.into())?;

        println!("λ = {helicity:+}");
        println!(
            "  p'        = ({:.4}, {:.4}, {:.4}), E' = {:.4}",
            p.spatial.x, p.spatial.y, p.spatial.z, p.t
        );
        println!("  S' (PL)   = ({:.4}, {:.4}, {:.4})", s.x, s.y, s.z);
        println!("  S' (sum)  = ({:.4}, {:.4}, {:.4})", s_cloud.x, s_cloud.y, s_cloud.z);
        println!("  |S'| = {:.12}", s.norm());
    }
    Ok(())
}
