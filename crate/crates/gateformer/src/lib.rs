//! Multivariate time-series forecasting with gated temporal and variate-wise
//! attention.
//!
//! Each variate of a look-back window is embedded twice: patch tokens run
//! through temporal self-attention, and the raw series runs through a shared
//! MLP that keeps the global shape. A sigmoid gate fuses the two into one
//! embedding per variate; self-attention over those embeddings models
//! cross-variate structure, a second gate blends the interacting and
//! non-interacting embeddings, and a shared linear head maps each variate
//! embedding to the forecast horizon. Windows are instance-normalized on the
//! way in and de-normalized on the way out.
//!
//! Everything runs on a small reverse-mode autodiff tape ([`tensor`]) so the
//! whole network trains with Adam on CPU. The crate also ships the data
//! pipeline ([`data`]), the training loop with early stopping and variate
//! subsampling ([`train`]), metrics/ablation/transfer tooling ([`eval`]) and
//! a CLI (`gateformer` binary).

pub mod data;
pub mod eval;
pub mod model;
pub mod revin;
pub mod runconfig;
pub mod tensor;
pub mod train;
