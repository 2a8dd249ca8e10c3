//! Exact computations in Calogero-Moser spaces `C_n`.
//!
//! The crate covers the rank-one matrix pairs themselves ([`cm`]), the group
//! `G₀ = A *_U B` of symplectic automorphisms of the free algebra on two
//! generators acting on them ([`aut`]), orbit sampling and classification
//! for the subgroups `A`, `B`, `U` ([`orbits`]), and graphs of groups with
//! their fundamental-group presentations ([`bass_serre`]). All arithmetic is
//! exact over the rationals.

pub mod aut;
pub mod bass_serre;
pub mod cm;
pub mod error;
pub mod linalg;
pub mod orbits;

pub use error::{Error, Result};
