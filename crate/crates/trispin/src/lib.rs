//! Thermal entanglement in a three-qubit XX spin chain with a three-spin
//! interaction.
//!
//! The model is
//!
//! ```text
//! H = J * sum_{i=1,2} (sx_i sx_{i+1} + sy_i sy_{i+1})
//!   + h * sum_{i=1..3} sz_i
//!   + k * (sx_1 sz_2 sx_3 + sy_1 sz_2 sy_3)
//! ```
//!
//! with k_B = 1. The crate provides two fully independent routes to the
//! pairwise concurrence of the Gibbs state exp(-H/T)/Z and cross-validates
//! them:
//!
//! * [`model`] carries the closed-form eigensystem (all eight levels, their
//!   states, and per-level pair concurrences) and [`thermal`] the closed-form
//!   reduced state of the alternate pair (1,3) with its Boltzmann weights.
//! * [`linalg`] is a self-contained dense kernel (Jacobi eigensolver,
//!   Kronecker products, partial traces, a general two-qubit concurrence
//!   oracle) that recomputes everything numerically.
//!
//! [`analysis`] maps the ground-state phase structure in the field `h`:
//! level-crossing segments, the concurrence dip at the crossing, boot/peak
//! heights, and the sudden change of the dip magnitude at |k| = |J|.
//! [`verify`] bundles the cross-check battery behind the `verify` CLI
//! subcommand, and [`cli`] serializes everything as CSV/JSON.
//!
//! ```
//! use trispin::{model::ModelParams, model::Pair, thermal};
//!
//! let p = ModelParams { j: 1.0, h: 0.5, k: 0.0 };
//! let point = thermal::thermal_concurrence(&p, 0.05, Pair::OneThree).unwrap();
//! assert!((point.concurrence - 0.5).abs() < 1e-3);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod model;
pub mod thermal;
pub mod verify;

pub use error::{Error, Result};
pub use model::{ModelParams, Pair};
