//! Two massless waves at (±k_x, 0, k_z) with opposite helicities carry a
//! spin transverse to their mean momentum. In their zero-momentum frame
//! they counter-propagate and the spin is a pure rest-frame spin.

use wavepacket_am::epl::{decompose, epl_vector, transport};
use wavepacket_am::observables::{four_momentum_expect, spin_expect, ExpectationSet};
use wavepacket_am::spectrum::{boost_spectrum, make_two_wave, Spectrum};
use wavepacket_am::Boost;

fn main() -> wavepacket_am::Result<()> {
    let (kz, kx) = (0.8, 0.6);
    let lab: Spectrum = make_two_wave(kz, kx, -1.0, 1.0)?.into();
    let p = four_momentum_expect(&lab)?;
    let s = spin_expect(&lab)?;
    println!(
        "lab:  <E> = {:.3}  <p> = {:.3}ẑ  <S> = ({:.3}, {:.3}, {:.3})",
        p.t, p.spatial.z, s.x, s.y, s.z
    );

    let to_rest = Boost::new(p.spatial / p.t)?;
    let rest_cloud = boost_spectrum(&lab, &to_rest);
    for c in &rest_cloud.components {
        println!(
            "rest wave: ω' = {:.3}, k' = ({:+.3}, {:.3}, {:.3})",
            c.omega(),
            c.k.x,
            c.k.y,
            c.k.z
        );
    }
    let rest_spec: Spectrum = rest_cloud.into();
    let s0 = spin_expect(&rest_spec)?;
    let e0 = four_momentum_expect(&rest_spec)?.t;
    println!(
        "rest: <E0> = {e0:.3}  <S0> = ({:.3}, {:.3}, {:.3})  (γ = {:.4})",
        s0.x,
        s0.y,
        s0.z,
        to_rest.gamma()
    );

    // a rest-frame state with only spin, carried back to the lab
    let rest = ExpectationSet::at_rest(e0, s0)?.with_spin(s0);
    let back = transport(&rest, &to_rest.inverse())?;
    let w = epl_vector(&back).w;
    let d = decompose(&back)?;
    println!(
        "lab:  <J> = {:.4}x̂  <K> = {:.4}ŷ",
        back.total_am().x,
        back.boost_momentum().y
    );
    println!(
        "lab:  W = ({:.3}, {:.3}, {:.3}, {:.3}), W·W = {:.3}",
        w.t,
        w.spatial.x,
        w.spatial.y,
        w.spatial.z,
        w.norm()
    );
    println!("lab:  J_int = {:.4}x̂  J_ext = {:.4}x̂", d.j_int.x, d.j_ext.x);
    Ok(())
}
