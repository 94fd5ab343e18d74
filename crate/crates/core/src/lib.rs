//! Certification of two-qubit quantum correlations through a single family of
//! local-uncertainty witnesses.
//!
//! A bipartite state shared between Alice and Bob is probed by ±1-valued qubit
//! observables on each side. Every statistic the library works with derives
//! from the joint outcome distribution P(a,b|i,j) of those measurements. A
//! witness is a weight tensor V(a,b|i,j) together with a classical bound: the
//! weighted sum F = Σ V·P stays below the bound for every state in which Bob's
//! subsystem admits a complete local description, so F exceeding the bound
//! certifies a nonlocal correlation. Three built-in weight choices certify, in
//! increasing strength, entanglement, steering, and Bell nonlocality.
//!
//! The crate computes both sides of each inequality numerically:
//!
//! * [`qlinalg`] — dense complex 2×2/4×4 linear algebra: states, observables,
//!   projectors, fidelity, and the projection of almost-physical matrices back
//!   onto the density-matrix cone.
//! * [`correlations`] — the joint distribution P(a,b|i,j) and its correlators.
//! * [`witnesses`] — the witness tensors, their evaluation, and the
//!   entropy-based degree of nonlocality.
//! * [`bounds`] — classical bounds from first principles: deterministic-strategy
//!   enumeration, Bloch-sphere maximization, product-state optimization, and a
//!   see-saw search for quantum maxima.
//! * [`werner`] — the noisy-singlet family, its Pauli-twirl preparation, and
//!   violation thresholds in the mixing parameter.
//! * [`tomography`] — simulated over-complete state tomography with finite
//!   shot statistics and linear-inversion reconstruction.
//!
//! The crate is `no_std`-compatible (requires `alloc`); disable the default
//! `std` feature for embedded or wasm targets. All types are immutable after
//! construction and all operations are pure, so everything is safe to share
//! across threads.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod correlations;
pub mod error;
pub mod qlinalg;
pub mod seeding;
pub mod tol;
pub mod tomography;
pub mod werner;
pub mod witnesses;

pub use error::{Error, Result};
pub use tol::Tolerances;
