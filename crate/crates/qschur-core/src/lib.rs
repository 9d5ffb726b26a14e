//! Quantum Schur–Weyl transform toolkit.
//!
//! Builds the unitary change of basis from the word basis of `V^⊗n` (V the
//! defining representation of `U_q(d)`) to the `(λ, P, Q)` basis of
//! `⊕_λ R^λ ⊗ V^λ`, for any quantum parameter `q ∈ [0, ∞]`, as a cascade of
//! Pieri transforms whose entries are products of reduced Wigner
//! coefficients. Ships the combinatorial layer (partitions, tableaux, RSK /
//! dual RSK / quantum insertion), the representation layer (Gelfand–Tsetlin
//! generator matrices for `U_q(d)`, Young–Yamanouchi–Hoefsmit matrices for
//! the Hecke algebra `H_q(n)`, and both word-basis actions), and a
//! verification suite for unitarity, the defining relations, intertwining,
//! and the crystal limits `q ∈ {0, ∞}` where the transform degenerates to
//! the (signed) RSK and dual-RSK permutations.

pub mod error;
pub mod gtj;
pub mod hecke;
pub mod insertion;
pub mod matrix;
pub mod parallel;
pub mod pieri;
pub mod qarith;
pub mod schurweyl;
pub mod tableaux;

/// Scalar type for all numerical work: `f32` or `f64`.
pub trait Float:
    num_traits::Float
    + num_traits::FromPrimitive
    + ndarray::LinalgScalar
    + std::fmt::Debug
    + std::fmt::Display
    + std::iter::Sum
    + Send
    + Sync
    + 'static
{
}
impl Float for f32 {}
impl Float for f64 {}

pub use error::Error;
pub use qarith::QParam;

/// Default-precision aliases.
pub type LogScalar64 = qarith::LogScalar<f64>;
pub type QParam64 = qarith::QParam<f64>;
pub type LabeledMatrix64 = matrix::LabeledMatrix<f64>;
pub type PieriMatrix64 = pieri::PieriMatrix<f64>;
pub type SchurTransform64 = schurweyl::SchurTransform<f64>;
