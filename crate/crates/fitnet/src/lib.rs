//! Size-and-fit prediction for fashion e-commerce.
//!
//! Predicts whether a product will run small, fit, or large for a customer
//! by combining customer features, product features, and aggregated review
//! embeddings in a three-pathway residual network. Ships with a synthetic
//! marketplace generator, pluggable review encoders, a from-scratch dense
//! network toolkit with analytic gradients, and a training/evaluation stack
//! built around macro-F1.

pub mod data;
pub mod error;
pub mod model;
pub mod numeric;
pub mod review;
pub mod synthgen;
pub mod train;

pub use error::{Error, Result};
