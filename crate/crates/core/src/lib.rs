//! Angular momentum of relativistic wavepackets built from plane-wave
//! spectra.
//!
//! The crate computes first moments of a spectrum (energy, momentum, spin,
//! orbital and total angular momentum, boost momentum, energy centroid),
//! transports them between inertial frames, and splits the angular momentum
//! into the part carried by the motion of the energy centroid and the part
//! intrinsic to the packet. The intrinsic part is obtained twice, from the
//! centroid lever arm and from the Pauli-Lubanski construction applied to the
//! mean four-momentum and angular-momentum tensor; the two always agree.
//!
//! Natural units `c = ħ = 1` and signature `(+, -, -, -)` throughout.
//!
//! | module | contents |
//! |---|---|
//! | [`minkowski`] | four-vectors, boosts, `(J, K)` tensors |
//! | [`spectrum`] | rings, k-grids, sample clouds, CSV I/O |
//! | [`observables`] | expectation values of a spectrum |
//! | [`epl`] | decomposition, frame transport, plane-wave spin |
//! | [`synthesis`] | scalar field synthesis and real-space moments |
//! | [`scenarios`] | self-checking worked examples |
//! | [`invariants`] | randomized identity checks |
//! | [`cli`] | the `wavepacket-am` command line |
//!
//! Runnable walkthroughs live in `examples/`.

// negated comparisons are how NaN inputs get rejected
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod epl;
pub mod error;
pub mod invariants;
pub mod minkowski;
pub mod numeric;
pub mod observables;
pub mod scenarios;
pub mod spectrum;
pub mod synthesis;

pub use error::{Error, Result};
pub use minkowski::{AmTensor, Boost, FourVector, Vec3};

pub(crate) mod serde_vec3 {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::minkowski::Vec3;

    pub fn serialize<S: Serializer>(v: &Vec3, s: S) -> Result<S::Ok, S::Error> {
        [v.x, v.y, v.z].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec3, D::Error> {
        let a = <[f64; 3]>::deserialize(d)?;
        Ok(Vec3::new(a[0], a[1], a[2]))
    }
}
