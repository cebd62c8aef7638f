//! Fully connected layer: forward, cached forward, and backward.

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{init_uniform, Activation};
use crate::error::{Error, Result};
use crate::mat::Matrix;

/// Weights `w` (out x in) and bias `b` (out).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DenseParams {
    pub w: Matrix,
    pub b: Vec<f64>,
}

impl DenseParams {
    pub fn new(out_dim: usize, in_dim: usize, rng: &mut impl Rng) -> Self {
        let w = Matrix::from_vec(out_dim, in_dim, init_uniform(rng, out_dim * in_dim, in_dim))
            .expect("sized by construction");
        DenseParams {
            w,
            b: vec![0.0; out_dim],
        }
    }

    pub fn zeros(out_dim: usize, in_dim: usize) -> Self {
        DenseParams {
            w: Matrix::zeros(out_dim, in_dim),
            b: vec![0.0; out_dim],
        }
    }

    pub fn out_dim(&self) -> usize {
        self.w.rows()
    }

    pub fn in_dim(&self) -> usize {
        self.w.cols()
    }
}

/// Gradients mirroring [`DenseParams`], plus nothing else.
#[derive(Debug, Clone)]
pub struct DenseGrads {
    pub w: Matrix,
    pub b: Vec<f64>,
}

impl DenseGrads {
    pub fn zeros_like(p: &DenseParams) -> Self {
        DenseGrads {
            w: Matrix::zeros(p.out_dim(), p.in_dim()),
            b: vec![0.0; p.out_dim()],
        }
    }
}

/// State saved by [`dense_forward_cached`] for the backward pass.
#[derive(Debug, Clone)]
pub struct DenseCache {
    pub x: Vec<f64>,
    /// Pre-activation values; the ReLU derivative is read off these.
    pub z: Vec<f64>,
    pub activation: Activation,
}

/// y = act(W x + b).
pub fn dense_forward(p: &DenseParams, x: &[f64], activation: Activation) -> Result<Vec<f64>> {
    Ok(dense_forward_cached(p, x, activation)?.0)
}

pub fn dense_forward_cached(
    p: &DenseParams,
    x: &[f64],
    activation: Activation,
) -> Result<(Vec<f64>, DenseCache)> {
    if x.len() != p.in_dim() {
        return Err(Error::Shape(format!(
            "dense expects input {}, got {}",
            p.in_dim(),
            x.len()
        )));
    }
    let mut z = p.b.clone();
    p.w.matvec_add(x, &mut z);
    let y = match activation {
        Activation::Relu => z.iter().map(|&v| v.max(0.0)).collect(),
        Activation::None => z.clone(),
    };
    let cache = DenseCache {
        x: x.to_vec(),
        z,
        activation,
    };
    Ok((y, cache))
}

/// Accumulates parameter gradients into `grads` and returns dL/dx.
pub fn dense_backward(
    p: &DenseParams,
    cache: &DenseCache,
    dy: &[f64],
    grads: &mut DenseGrads,
) -> Result<Vec<f64>> {
    if dy.len() != p.out_dim() {
        return Err(Error::Shape(format!(
            "dense backward expects grad {}, got {}",
            p.out_dim(),
            dy.len()
        )));
    }
    let dz: Vec<f64> = match cache.activation {
        Activation::Relu => dy
            .iter()
            .zip(&cache.z)
            .map(|(&g, &z)| if z > 0.0 { g } else { 0.0 })
            .collect(),
        Activation::None => dy.to_vec(),
    };
    grads.w.outer_add(&dz, &cache.x);
    for (gb, &d) in grads.b.iter_mut().zip(&dz) {
        *gb += d;
    }
    let mut dx = vec![0.0; p.in_dim()];
    p.w.matvec_t_add(&dz, &mut dx);
    Ok(dx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_relu_clamps_negatives() {
        let p = DenseParams {
            w: Matrix::from_vec(2, 2, vec![1.0, 0.0, 0.0, 1.0]).unwrap(),
            b: vec![0.0, 0.0],
        };
        let y = dense_forward(&p, &[-1.0, 2.0], Activation::Relu).unwrap();
        assert_eq!(y, vec![0.0, 2.0]);
    }

    #[test]
    fn zero_weights_pass_bias_through() {
        let p = DenseParams {
            w: Matrix::zeros(1, 3),
            b: vec![3.0],
        };
        let y = dense_forward(&p, &[9.0, -2.0, 0.5], Activation::None).unwrap();
        assert_eq!(y, vec![3.0]);
    }

    #[test]
    fn random_case_matches_dot_product_oracle() {
        // brute-force oracle: explicit per-row dot products
        let p = DenseParams {
            w: Matrix::from_vec(3, 2, vec![0.3, -1.2, 2.0, 0.7, -0.4, 0.1]).unwrap(),
            b: vec![0.5, -0.25, 1.0],
        };
        let x = [1.5, -2.5];
        let y = dense_forward(&p, &x, Activation::None).unwrap();
        for i in 0..3 {
            let expect = p.w.get(i, 0) * x[0] + p.w.get(i, 1) * x[1] + p.b[i];
            assert!((y[i] - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let p = DenseParams::zeros(2, 3);
        assert!(dense_forward(&p, &[1.0], Activation::None).is_err());
    }
}
