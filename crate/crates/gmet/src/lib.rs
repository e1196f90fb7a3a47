//! gmet — a computation engine for invariant metrics on finite groups.
//!
//! Everything runs over explicit Cayley tables. The crate
//!
//! * builds and validates finite groups ([`group`]),
//! * enumerates unitary symmetric and conjugate partitions and counts them
//!   with Bell numbers ([`partitions`]),
//! * constructs concrete integral weight functions and metric families
//!   ([`metrics`]),
//! * computes metric symmetry groups as colored-graph automorphism groups
//!   ([`symmetry`]),
//! * evaluates closed-form counting formulas and degree invariants
//!   ([`counting`]),
//! * and exposes a CLI plus JSON/DOT interchange formats ([`io`]).
//!
//! All arithmetic is exact: element indices, arbitrary-precision integers
//! (`BigUint`) and rationals (`BigRational`). No floating point anywhere.

// index-heavy table math reads better with explicit ranges and `% 2 == 0`
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

pub mod counting;
pub mod group;
pub mod io;
pub mod metrics;
pub mod partitions;
pub mod symmetry;
