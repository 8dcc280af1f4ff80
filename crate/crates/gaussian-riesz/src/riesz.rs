//! Exact spectral route for the higher order Gaussian Riesz transforms:
//! the old family `R_α = D^α L^{-|α|/2}` and the new family
//! `R*_α = D^{*α} (L+I)^{-|α|/2}`, acting on truncated Hermite expansions.
//!
//! This is the ground-truth oracle against which the integral-kernel route
//! is calibrated and checked.

use crate::multiindex::{apply_d, apply_d_star, HermiteCoeffs, MultiIndex};
use crate::spectral::{apply_power, SpectralMultiplier};
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RieszFamily {
    Old,
    New,
}

/// Order data of a Riesz transform: the multi-index `α` and `k = |α| >= 1`.
#[derive(Debug, Clone)]
pub struct RieszOrder {
    pub alpha: MultiIndex,
    pub family: RieszFamily,
}

impl RieszOrder {
    pub fn new(alpha: MultiIndex, family: RieszFamily) -> Self {
        assert!(alpha.order() >= 1, "Riesz order requires |alpha| >= 1");
        RieszOrder { alpha, family }
    }

    pub fn k(&self) -> usize {
        self.alpha.order()
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }
}

/// `R_α f = D^α L^{-k/2} f`.  Functions with nonzero mean lose it silently:
/// the negative power only acts through `Π₀`.
pub fn riesz_old(order: &RieszOrder, f: &HermiteCoeffs) -> HermiteCoeffs {
    debug_assert_eq!(order.family, RieszFamily::Old);
    let half = apply_power(
        SpectralMultiplier::l_power(-(order.k() as f64) / 2.0),
        f,
    );
    apply_d(&order.alpha, &half)
}

/// `R*_α f = D^{*α} (L+I)^{-k/2} f`, the composition taken literally in this
/// order (the factors do not commute).
pub fn riesz_new(order: &RieszOrder, f: &HermiteCoeffs) -> HermiteCoeffs {
    debug_assert_eq!(order.family, RieszFamily::New);
    let half = apply_power(
        SpectralMultiplier::l_plus_i_power(-(order.k() as f64) / 2.0),
        f,
    );
    apply_d_star(&order.alpha, &half)
}

pub fn riesz_apply(order: &RieszOrder, f: &HermiteCoeffs) -> HermiteCoeffs {
    match order.family {
        RieszFamily::Old => riesz_old(order, f),
        RieszFamily::New => riesz_new(order, f),
    }
}

/// Evaluate the spectral image at a point.
pub fn riesz_apply_pointwise(order: &RieszOrder, f: &HermiteCoeffs, x: &[f64]) -> Result<f64> {
    riesz_apply(order, f).eval(x)
}
