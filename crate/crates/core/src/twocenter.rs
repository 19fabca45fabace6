//! Two congruent disks from a square pair: circumscribe each square.

use crate::geom::Disk;
use crate::scalar::Scalar;
use crate::solution::{Problem, SquarePairSolution};

#[derive(Clone, Debug, PartialEq)]
pub struct DiskPairSolution<T> {
    pub problem: Problem,
    pub d1: Disk<T>,
    pub d2: Disk<T>,
    /// Circumradius of the squares, `sigma * sqrt(2) / 2`.
    pub radius: T,
    /// Inradius of the squares, `sigma / 2`. No two congruent disks of a
    /// smaller radius solve the same problem.
    pub lower_bound: T,
}

pub fn approximate_two_center<T: Scalar>(sol: &SquarePairSolution<T>) -> DiskPairSolution<T> {
    let radius = sol.sigma * T::FRAC_1_SQRT_2();
    let lower_bound = sol.sigma * T::lit(0.5);
    debug_assert!(radius <= T::SQRT_2() * lower_bound * (T::one() + T::epsilon() * T::lit(4.0)));
    DiskPairSolution {
        problem: sol.problem,
        d1: Disk::new(sol.s1.center(), radius),
        d2: Disk::new(sol.s2.center(), radius),
        radius,
        lower_bound,
    }
}
