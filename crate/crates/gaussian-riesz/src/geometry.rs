//! Gaussian geometry: the admissibility function `m`, admissible balls and
//! the weights `w_k` attached to `X^k`-atoms.

use crate::{Error, Result};

/// Admissibility threshold `m(s) = 1` for `0 <= s <= 1`, `1/s` for `s > 1`.
pub fn m_admissibility(s: f64) -> f64 {
    assert!(s >= 0.0, "m is defined on [0, ∞)");
    if s <= 1.0 {
        1.0
    } else {
        1.0 / s
    }
}

/// A Euclidean ball `B(c_B, r_B)` with `r_B <= m(|c_B|)`; the family of these
/// balls is the one on which `γ` is doubling.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleBall {
    center: Vec<f64>,
    radius: f64,
}

impl AdmissibleBall {
    /// Constructor enforces admissibility.
    pub fn new(center: Vec<f64>, radius: f64) -> Result<Self> {
        assert!(radius > 0.0, "radius must be positive");
        let norm = center.iter().map(|c| c * c).sum::<f64>().sqrt();
        let limit = m_admissibility(norm);
        if radius > limit * (1.0 + 1e-12) {
            return Err(Error::NotAdmissible {
                center,
                radius,
                limit,
            });
        }
        Ok(AdmissibleBall { center, radius })
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn center(&self) -> &[f64] {
        &self.center
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn center_norm(&self) -> f64 {
        self.center.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.dist_to_center(x) < self.radius
    }

    pub fn dist_to_center(&self, x: &[f64]) -> f64 {
        self.center
            .iter()
            .zip(x)
            .map(|(c, xi)| (xi - c) * (xi - c))
            .sum::<f64>()
            .sqrt()
    }

    /// `r_{B,y} = r_B / (2|y|)`, infinite at `y = 0`.
    pub fn r_by(&self, y: &[f64]) -> f64 {
        let ny = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if ny == 0.0 {
            f64::INFINITY
        } else {
            self.radius / (2.0 * ny)
        }
    }

    /// Concentric scaling `cB`; the result is a plain Euclidean ball and is
    /// not required to be admissible.
    pub fn scaled(&self, c: f64) -> EuclideanBall {
        EuclideanBall {
            center: self.center.clone(),
            radius: c * self.radius,
        }
    }

    pub fn as_euclidean(&self) -> EuclideanBall {
        EuclideanBall {
            center: self.center.clone(),
            radius: self.radius,
        }
    }
}

/// A ball with no admissibility constraint (e.g. `2B` or `4B`).
#[derive(Debug, Clone, PartialEq)]
pub struct EuclideanBall {
    pub center: Vec<f64>,
    pub radius: f64,
}

impl EuclideanBall {
    pub fn new(center: Vec<f64>, radius: f64) -> Self {
        assert!(radius > 0.0);
        EuclideanBall { center, radius }
    }

    pub fn dim(&self) -> usize {
        self.center.len()
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        self.center
            .iter()
            .zip(x)
            .map(|(c, xi)| (xi - c) * (xi - c))
            .sum::<f64>()
            < self.radius * self.radius
    }
}

/// The weight `w_k` under which every `X^k`-atom is integrable:
/// `w_k = 1` for `k ∈ {1,2}` and `1 + |x|^{k-2}` for `k >= 3`.
#[derive(Debug, Clone, Copy)]
pub struct WeightFunction {
    pub order: usize,
}

impl WeightFunction {
    pub fn new(order: usize) -> Self {
        assert!(order >= 1);
        WeightFunction { order }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        if self.order <= 2 {
            1.0
        } else {
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            1.0 + norm.powi(self.order as i32 - 2)
        }
    }

    /// `ω_k(r_B)`: the radius factor in the `L²` size condition of an
    /// `X^k`-atom.
    pub fn omega(&self, r_b: f64) -> f64 {
        if self.order <= 2 {
            1.0
        } else {
            r_b.powi(self.order as i32 - 2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_values() {
        assert_eq!(m_admissibility(0.5), 1.0);
        assert_eq!(m_admissibility(2.0), 0.5);
        assert_eq!(m_admissibility(1.0), 1.0);
    }

    #[test]
    fn m_non_increasing() {
        let mut prev = f64::INFINITY;
        for k in 0..200 {
            let s = 0.05 * k as f64;
            let v = m_admissibility(s);
            assert!(v <= prev + 1e-15);
            prev = v;
        }
    }

    #[test]
    fn constructor_rejects_inadmissible() {
        assert!(AdmissibleBall::new(vec![2.0], 0.6).is_err());
        assert!(AdmissibleBall::new(vec![2.0], 0.5).is_ok());
        assert!(AdmissibleBall::new(vec![0.0, 0.0], 1.0).is_ok());
    }

    #[test]
    fn r_by_values() {
        let b = AdmissibleBall::new(vec![0.0], 0.1).unwrap();
        assert_eq!(b.r_by(&[1.0]), 0.05);
        assert!(b.r_by(&[0.0]).is_infinite());
    }

    #[test]
    fn weight_monotone_in_k_outside_unit_ball() {
        let x = [1.5, 0.3];
        let mut prev = 0.0;
        for k in 1..=6 {
            let v = WeightFunction::new(k).eval(&x);
            assert!(v >= prev);
            assert!(v >= 1.0);
            prev = v;
        }
    }
}
