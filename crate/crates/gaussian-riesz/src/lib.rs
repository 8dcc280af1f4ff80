//! Numerical toolkit for Gaussian harmonic analysis around the
//! Ornstein-Uhlenbeck operator `L = -1/2 Δ + x·∇` on `L²(γ)`,
//! `dγ = π^{-n/2} e^{-|x|²} dx`.
//!
//! The crate provides
//! - a sparse multi-dimensional Hermite expansion engine with the exact
//!   ladder actions of `δ_i` and `δ*_i` ([`multiindex`]),
//! - Gaussian geometry: admissible balls, tensor Gauss-Hermite quadrature
//!   and `L^p(γ)` norms ([`geometry`], [`quadrature`]),
//! - the spectral functional calculus of `L` ([`spectral`]) and both
//!   families of higher order Gaussian Riesz transforms through two
//!   independent routes: exact coefficient action ([`riesz`]) and
//!   principal-value integral kernels ([`kernel`]),
//! - constructive Gaussian `H¹`- and `X^k`-atoms ([`atoms`]),
//! - a verification harness for the quantitative lemmas behind the
//!   endpoint boundedness results ([`harness`]).

pub mod atoms;
pub mod geometry;
pub mod harness;
pub mod jets;
pub mod kernel;
pub mod multiindex;
pub mod quadrature;
pub mod riesz;
pub mod spectral;

pub use geometry::{m_admissibility, AdmissibleBall, WeightFunction};
pub use multiindex::{HermiteCoeffs, MultiIndex};
pub use quadrature::QuadratureGrid;
pub use riesz::{RieszFamily, RieszOrder};

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ball B({center:?}, {radius}) is not admissible: r_B > m(|c_B|) = {limit}")]
    NotAdmissible {
        center: Vec<f64>,
        radius: f64,
        limit: f64,
    },
    #[error("evaluation point too close to the kernel diagonal (|x-y| = {dist} < {min}); use the principal-value path")]
    DiagonalSingularity { dist: f64, min: f64 },
    #[error("principal-value extrapolation unreliable at x = {x:?}: estimates differ by {spread:e} (tolerance {tol:e})")]
    PvUnreliable { x: Vec<f64>, spread: f64, tol: f64 },
    #[error("Hermite degree {degree} exceeds the evaluation cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("kernel for half powers of L requires odd order, got |alpha| = {0}")]
    EvenHalfPowerOrder(usize),
    #[error("non-finite value encountered at node {node:?}")]
    NonFiniteNode { node: Vec<f64> },
    #[error("empty quadrature grid")]
    EmptyGrid,
    #[error("degenerate bump profile: {0}")]
    DegenerateProfile(String),
    #[error("unsupported dimension {0} (this routine handles n <= 3)")]
    UnsupportedDimension(usize),
    #[error("{0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
