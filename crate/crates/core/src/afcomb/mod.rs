//! Combinatorics of the extended affine symmetric group, compositions and periodic matrices.

mod composition;
mod coset;
mod matrix;
mod perm;

pub use composition::{compositions, Composition, ZVector};
pub use coset::{coset_data, enumerate_double_coset, is_min_left, is_min_right, jmath, jmath_inv, CosetData};
pub use matrix::{enumerate_theta, enumerate_upper, order_leq, PeriodicMatrix};
pub use perm::AffinePerm;

pub(crate) use coset::jmath_unchecked;
