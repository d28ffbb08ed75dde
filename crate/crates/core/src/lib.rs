//! Deterministic building blocks for risky-tackle video classification
//! experiments.
//!
//! The crate covers the full experiment loop at desk scale:
//!
//! - [`design`]: the L18 orthogonal augmentation schedule and the 20-run grid
//! - [`clip`]: the frame-tensor clip model, contact-centered localization,
//!   and spatial resampling
//! - [`augment`]: seeded noise / brightness / rotation / flip transforms
//! - [`split`]: stratified k-fold assignment with post-split class balancing
//!   and leakage checks
//! - [`model`]: a from-scratch video vision transformer with exact gradients
//! - [`loss`]: focal loss over two-class softmax outputs
//! - [`train`]: Adam optimization, early stopping, and the run×fold grid driver
//! - [`metrics`]: confusion-matrix metrics, threshold selection, aggregation
//! - [`synth`]: synthetic tackle-like clips with a planted, recoverable label
//!
//! Everything is a pure function of its inputs plus explicit seeds; no
//! operation touches the filesystem or global state. File formats and the
//! command-line pipeline live in the companion `tackle-cli` crate.
//!
//! The crate is `no_std`-compatible (with `alloc`) when built without the
//! default `std` feature.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod augment;
pub mod clip;
pub mod design;
pub mod loss;
pub mod metrics;
pub mod model;
pub mod rng;
pub mod split;
pub mod synth;
pub mod train;

pub use clip::{BinaryLabel, Clip, SattLabel};
pub use design::{Balancing, FactorLevels, RunId, RunPlan};
