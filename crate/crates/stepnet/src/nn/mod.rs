//! Minimal dense + LSTM network core with exact analytic gradients.
//!
//! No ML framework: forward passes record just enough state to run
//! backpropagation through time by hand. All math is f64 and every op is
//! deterministic given an explicit RNG.

mod dense;
mod lstm;
mod ops;

pub use dense::{dense_backward, dense_forward, dense_forward_cached, DenseCache, DenseGrads, DenseParams};
pub use lstm::{lstm_backward, lstm_forward, lstm_infer, LstmCache, LstmGrads, LstmParams};
pub use ops::{clip_to_norm, dropout, dropout_mask, sgd_update, softmax_xent};

/// Activation applied by a dense layer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Activation {
    Relu,
    None,
}

#[inline]
pub(crate) fn sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// Uniform init in [-1/sqrt(fan_in), +1/sqrt(fan_in)], drawn row-major.
pub(crate) fn init_uniform(rng: &mut impl rand::Rng, n: usize, fan_in: usize) -> Vec<f64> {
    let bound = 1.0 / (fan_in as f64).sqrt();
    (0..n).map(|_| rng.gen_range(-bound..bound)).collect()
}
