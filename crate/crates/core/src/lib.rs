//! Combinatorics of the m-Shi arrangement in type A.
//!
//! The crate models the affine symmetric group by n-windows, n-core
//! partitions by their abaci and n-sets, and Fayers' level-t action on
//! n-sets, and uses them to build explicit bijections between
//!
//! * regions of the m-Shi arrangement and the set `C_n^(mn+1)`, and
//! * bounded regions and `C_n^(mn-1)`,
//!
//! with the Athanasiadis–Linusson parking functions as a second indexing.
//! The [`oracle`] module holds brute-force ground truth and [`verify`] runs
//! every claim against it.
//!
//! Everything is `no_std` with `alloc`; all geometry is exact.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod affperm;
pub mod bijection;
pub mod cores;
mod error;
pub mod finperm;
pub mod geometry;
pub mod levelt;
pub mod oracle;
pub mod parking;
pub mod verify;

pub use affperm::{AffinePerm, RationalPoint};
pub use bijection::{Kind, ShiRegionRecord};
pub use cores::{Abacus, NSet, NVector, Partition};
pub use error::{Error, Result};
pub use finperm::{FinitePerm, SetPartition, TranspositionSet};
pub use geometry::{AffineRoot, Hyperplane, RegionSignature, Wall, WallKind};
pub use levelt::{LevelTContext, Sign};
pub use parking::{ArcDiagram, ParkingFunction};

/// Exact rational scalar used for points of `V`.
pub type Rational = num_rational::Ratio<i64>;

pub(crate) fn binomial2(n: usize) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}
