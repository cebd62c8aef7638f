//! Step counting from raw wrist-IMU signals.
//!
//! The pipeline: raw 6-axis recordings are resampled to 15 Hz, cut into
//! 7-sample windows, classified left/right by a many-to-one LSTM network,
//! and every transition between the two classes is counted as a step.
//! A general model is trained across subjects; a personalized model is
//! produced by two-step fine-tuning on ~30 seconds of subject data.

pub mod baseline;
pub mod counting;
pub mod error;
pub mod ingest;
pub mod mat;
pub mod model;
pub mod nn;
pub mod signal;

pub use error::{Error, Result};
