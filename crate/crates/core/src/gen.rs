//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geom::{Point, Segment};
use crate::scalar::Scalar;

pub const EXTENT: f64 = 1000.0;
pub const CLUSTER_RADIUS: f64 = 100.0;

/// `n` segments with endpoints uniform in `[0, 1000]^2`.
pub fn uniform<T: Scalar>(n: usize, seed: u64) -> Vec<Segment<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pt = || Point::new(T::lit(rng.gen_range(0.0..=EXTENT)), T::lit(rng.gen_range(0.0..=EXTENT)));
    (0..n).map(|_| Segment::new(pt(), pt())).collect()
}

/// `n` segments split between two disjoint disks of radius 100 inside
/// `[0, 1000]^2`; both endpoints of a segment lie in the same disk.
pub fn clustered<T: Scalar>(n: usize, seed: u64) -> Vec<Segment<T>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = CLUSTER_RADIUS;
    let center = |rng: &mut ChaCha8Rng| (rng.gen_range(r..=EXTENT - r), rng.gen_range(r..=EXTENT - r));
    let c1 = center(&mut rng);
    let c2 = loop {
        let c = center(&mut rng);
        if (c.0 - c1.0).hypot(c.1 - c1.1) > 2.0 * r {
            break c;
        }
    };
    let in_disk = |rng: &mut ChaCha8Rng, c: (f64, f64)| {
        let rho = r * rng.gen::<f64>().sqrt();
        let th = rng.gen_range(0.0..std::f64::consts::TAU);
        Point::new(T::lit(c.0 + rho * th.cos()), T::lit(c.1 + rho * th.sin()))
    };
    (0..n)
        .map(|_| {
            let c = if rng.gen_bool(0.5) { c1 } else { c2 };
            Segment::new(in_disk(&mut rng, c), in_disk(&mut rng, c))
        })
        .collect()
}

/// `n` segments with integer endpoints in `[0, extent]^2`.
pub fn integer<T: Scalar>(rng: &mut impl Rng, n: usize, extent: i32) -> Vec<Segment<T>> {
    let mut c = || T::lit(rng.gen_range(0..=extent) as f64);
    (0..n).map(|_| Segment::from_coords(c(), c(), c(), c())).collect()
}
