//! Deterministic reductions.

use crate::minkowski::Vec3;

const LEAF: usize = 32;

/// Pairwise (cascade) summation in a fixed order.
pub fn pairwise_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let v: Vec<f64> = values.into_iter().collect();
    pairwise_slice(&v)
}

fn pairwise_slice(v: &[f64]) -> f64 {
    if v.len() <= LEAF {
        v.iter().sum()
    } else {
        let (a, b) = v.split_at(v.len() / 2);
        pairwise_slice(a) + pairwise_slice(b)
    }
}

pub fn pairwise_sum_vec3<I: IntoIterator<Item = Vec3>>(values: I) -> Vec3 {
    let v: Vec<Vec3> = values.into_iter().collect();
    Vec3::new(
        pairwise_slice(&v.iter().map(|x| x.x).collect::<Vec<_>>()),
        pairwise_slice(&v.iter().map(|x| x.y).collect::<Vec<_>>()),
        pairwise_slice(&v.iter().map(|x| x.z).collect::<Vec<_>>()),
    )
}
