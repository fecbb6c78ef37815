//! Remoteness of permutation codes and of subsets of finite metric spaces.
//!
//! The remoteness of a code `C` is the least `t` such that some point lies within
//! distance `t` of every codeword. This crate provides exact oracles, closed forms
//! for pairs, cyclic and dihedral groups, a decision procedure for transitive
//! groups, Latin-square constructions and the remoteness graph of a group.
//!
//! The crate is `no_std` with `alloc`; enable `std` for `std::error::Error`
//! integration and `parallel` for rayon-backed scans.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod group;
pub mod latin;
pub mod metric;
pub mod pair;
pub mod perm;
pub mod rgraph;

pub use group::{GroupError, OrbitalPartition, PermutationGroup};
pub use latin::{LatinError, LatinSquare};
pub use metric::{FiniteMetricSpace, HammingSpace, MetricError, SymmetricSpace};
pub use pair::{pair_remoteness, PairAnalysis, PairError};
pub use perm::{Parity, PermError, Permutation};
pub use rgraph::RemotenessGraph;
