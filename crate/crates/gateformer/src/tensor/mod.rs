//! Dense tensors with reverse-mode automatic differentiation.
//!
//! The engine is define-by-run: a [`Tape`] records every primitive as it
//! executes and replays the adjoints in exact reverse order. Values are
//! generic over [`Element`] so the same graph code runs in f32 for training
//! and in f64 for finite-difference gradient checking.

mod adam;
pub mod kernels;
mod tape;

pub use adam::{adam_step, AdamState};
pub use tape::{Tape, ValueId};

use std::cmp::Ordering;

/// Scalar element type for tensors: f32 in training, f64 in gradient checks.
pub trait Element:
    num_traits::Float + num_traits::FromPrimitive + Send + Sync + std::fmt::Debug + std::fmt::Display + 'static
{
    fn from_f64(v: f64) -> Self;
    fn to_f64(self) -> f64;
    /// IEEE total order; used to put reduction terms in a canonical order.
    fn total_order(self, other: Self) -> Ordering;
}

impl Element for f32 {
    fn from_f64(v: f64) -> Self {
        v as f32
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
    fn total_order(self, other: Self) -> Ordering {
        self.total_cmp(&other)
    }
}

impl Element for f64 {
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(self) -> f64 {
        self
    }
    fn total_order(self, other: Self) -> Ordering {
        self.total_cmp(&other)
    }
}

/// A dense row-major tensor participating in the gradient tape.
#[derive(Clone, Debug)]
pub struct Tensor<T> {
    pub shape: Vec<usize>,
    pub data: Vec<T>,
    pub requires_grad: bool,
    pub grad: Option<Vec<T>>,
}

impl<T: Element> Tensor<T> {
    pub fn new(data: Vec<T>, shape: Vec<usize>) -> Self {
        assert_eq!(
            shape.iter().product::<usize>(),
            data.len(),
            "shape {:?} does not match buffer length {}",
            shape,
            data.len()
        );
        Tensor { shape, data, requires_grad: false, grad: None }
    }

    pub fn numel(&self) -> usize {
        self.data.len()
    }

    /// Rows/cols of a rank-1 or rank-2 tensor (rank 1 counts as one row).
    pub fn rows_cols(&self) -> (usize, usize) {
        match self.shape.len() {
            1 => (1, self.shape[0]),
            2 => (self.shape[0], self.shape[1]),
            r => panic!("expected rank 1 or 2 tensor, got rank {r}"),
        }
    }
}

/// Failure raised when a forward pass or optimizer step produces NaN/Inf.
#[derive(Debug, Clone, thiserror::Error)]
#[error("non-finite value produced by op `{op}`")]
pub struct NonFiniteError {
    /// Primitive that produced the first non-finite value.
    pub op: &'static str,
}

pub(crate) fn first_nonfinite<T: Element>(data: &[T]) -> bool {
    data.iter().any(|v| !v.is_finite())
}
