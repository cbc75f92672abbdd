//! Equality between general ridge estimators in a general linear model.
//!
//! In the model `y = X beta + e` with `E[e] = 0` and `Cov(e) = sigma^2 Omega`
//! (`Omega` positive definite and known), a general ridge estimator is
//!
//! ```text
//! bhat(Psi, K) = (X' Psi^-1 X + K)^-1 X' Psi^-1 y
//! ```
//!
//! for a positive-definite working dispersion `Psi` and a positive-semidefinite
//! penalty `K`. The class contains ordinary least squares (`Psi = I, K = 0`),
//! the Gauss-Markov estimator (`Psi = Omega, K = 0`), ordinary ridge
//! (`K = lambda I`) and shrinkage estimators.
//!
//! This crate decides when `bhat(Omega, K1)` and `bhat(I, K2)` coincide for
//! every response `y`, constructs the dispersion matrices that make them
//! coincide, decides simultaneous equality of the generalized residual sums of
//! squares, and quantifies the discrepancy when they differ: exact L2 and
//! MSE-difference matrices, their first-order perturbation expansions in the
//! penalty scale, and the `(v1, v2)` rank classification of dispersion
//! matrices. Everything is dense, deterministic, and tolerance-explicit,
//! aimed at desk-scale problems (a few hundred rows at most).

pub mod classify;
pub mod equivalence;
pub mod error;
pub mod estimators;
pub mod linalg;
pub mod model;
pub mod sampling;
pub mod structure;

pub use classify::{DiscrepancyReport, PerturbationSpec};
pub use equivalence::{EqualityCertificate, GammaSolution, RssCertificate, RssResiduals};
pub use error::{Error, Result};
pub use estimators::EstimatorMoments;
pub use linalg::Tolerances;
pub use model::{Design, ModelTruth, Psi, RidgeSpec};
pub use structure::DispersionBlocks;
