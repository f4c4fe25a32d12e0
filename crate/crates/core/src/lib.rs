//! Combinatorial invariants of square-tiled surfaces.
//!
//! A square-tiled surface (origami) is built from `n` unit squares glued
//! right-to-left by a permutation `σ` and top-to-bottom by `τ`. For every
//! rational direction the surface decomposes into Euclidean cylinders, and
//! the cyclic order of their boundary saddle connections is recorded by
//! permutations — the codes of the direction. This crate computes those
//! codes, the closed system of ring diagrams they generate, and uses both
//! to decide membership in the Veech group and to enumerate the SL₂(ℤ)
//! orbit of a surface together with the index of its Veech group.
//!
//! The algebraic computations are cross-checked by independent brute-force
//! oracles: a geometric trajectory tracer for the codes and an orbit BFS
//! for the Veech criteria.

pub mod closed_system;
pub mod codes;
pub mod error;
pub mod farey;
pub mod orbit;
pub mod perm;
pub mod surface;
pub mod veech;

pub use error::Error;
pub use farey::{CFrac, IntMatrix, PosMatrix, Slope};
pub use perm::{canonical_pair, simultaneous_conjugator, Permutation};
pub use surface::Surface;
