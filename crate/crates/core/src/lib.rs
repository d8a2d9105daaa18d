//! Skew-Hamiltonian matrices that generate a prescribed Lagrangian subspace as a
//! Krylov space.
//!
//! Given an ordered basis `x_1, …, x_n` of a Lagrangian subspace of ℝ^{2n}, the
//! crate builds the minimum-norm realizer `Ĥ` with `Ĥ x_k = x_{k+1}`, the full
//! affine family of such realizers, realizers with a prescribed spectrum on the
//! subspace, and the realizer nearest to an arbitrary matrix.
//!
//! ```
//! use skewham::{lagrangian, realization, matcore::Tolerance};
//!
//! let basis = lagrangian::random_lagrangian_onb(4, 7).unwrap();
//! let h = realization::hhat(&basis).unwrap();
//! assert!(realization::membership(&h, &basis, Tolerance::default()).passed);
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod experiment;
pub mod lagrangian;
pub mod matcore;
pub mod realization;
pub mod sampling;

pub use error::{Error, Result};
pub use lagrangian::OrderedBasis;
pub use matcore::{DenseMatrix, Tolerance, Vector};
pub use realization::{RealizationFamily, SkewParam, SpectrumSpec};
