//! Exact combinatorics of the orbits of the line-stabilizer subgroups
//! `S_i` of the upper-triangular group acting on the complete flag
//! variety of `GL(n)`.
//!
//! The orbit set carries three equivalent finite parametrizations
//! (decorated permutations, flags in standard form, share pairs), is
//! counted by partitions of an index set into ordered lists, and carries
//! a length-increasing monoid action whose graph refines into a closure
//! order.  Everything here is exact: permutations, tagged index
//! sequences, unbounded integers, and rational power series.  No
//! geometry and no floating point.
//!
//! The crate is `no_std` (with `alloc`); IO, serialization, and the
//! command-line surface live in the companion crate `orbit-atlas`.

#![no_std]

extern crate alloc;

pub mod egf;
pub mod monoid;
pub mod perm;
pub mod pil;
pub mod reps;

use num_bigint::BigUint;

/// n! as an unbounded integer.
pub fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::from(1u32);
    for m in 2..=n {
        acc *= BigUint::from(m);
    }
    acc
}
