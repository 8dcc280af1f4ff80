//! Quadrature machinery: tensor Gauss-Hermite grids realizing `∫ · dγ`
//! exactly on polynomials, radial Gauss-Legendre grids over balls and
//! complements, and `L^p(γ)` norms over regions.

use nalgebra::{DMatrix, SymmetricEigen};

use crate::geometry::{EuclideanBall, WeightFunction};
use crate::{Error, Result};

const SQRT_PI: f64 = 1.772453850905516;

/// Gauss-Hermite rule for the weight `e^{-t^2}`: `Σ w_i f(t_i) ≈ ∫ f e^{-t^2}`.
///
/// Nodes are eigenvalues of the Jacobi matrix (off-diagonal `sqrt(k/2)`),
/// weights come from the squared first eigenvector components times `sqrt(π)`.
pub fn gauss_hermite(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let (nodes, w0) = jacobi_eig(n, |k| (k as f64 / 2.0).sqrt());
    let weights = w0.iter().map(|v| v * v * SQRT_PI).collect();
    (nodes, weights)
}

/// Gauss-Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 1);
    let (nodes, w0) = jacobi_eig(n, |k| {
        let kf = k as f64;
        kf / (4.0 * kf * kf - 1.0).sqrt()
    });
    let weights = w0.iter().map(|v| v * v * 2.0).collect();
    (nodes, weights)
}

/// Gauss-Legendre rule mapped to `[a, b]`.
pub fn gauss_legendre_on(n: usize, a: f64, b: f64) -> (Vec<f64>, Vec<f64>) {
    let (t, w) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    (
        t.iter().map(|ti| mid + half * ti).collect(),
        w.iter().map(|wi| wi * half).collect(),
    )
}

fn jacobi_eig(n: usize, offdiag: impl Fn(usize) -> f64) -> (Vec<f64>, Vec<f64>) {
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 1..n {
        let b = offdiag(k);
        m[(k - 1, k)] = b;
        m[(k, k - 1)] = b;
    }
    let eig = SymmetricEigen::new(m);
    let mut pairs: Vec<(f64, f64)> = (0..n)
        .map(|j| (eig.eigenvalues[j], eig.eigenvectors[(0, j)]))
        .collect();
    pairs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    (
        pairs.iter().map(|p| p.0).collect(),
        pairs.iter().map(|p| p.1).collect(),
    )
}

/// Region selector for norms and measures.
#[derive(Debug, Clone)]
pub enum Region {
    Full,
    Ball(EuclideanBall),
    BallComplement(EuclideanBall),
}

/// Tensor Gauss-Hermite grid over `ℝⁿ`.
///
/// Weights carry the raw `e^{-|x|²}` rule; [`QuadratureGrid::integrate_gamma`]
/// applies the `π^{-n/2}` normalization making `γ` a probability measure.
#[derive(Debug, Clone)]
pub struct QuadratureGrid {
    dim: usize,
    nodes_per_axis: usize,
    nodes: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl QuadratureGrid {
    pub fn full_space(dim: usize, nodes_per_axis: usize) -> Result<Self> {
        if nodes_per_axis == 0 {
            return Err(Error::EmptyGrid);
        }
        let (t, w) = gauss_hermite(nodes_per_axis);
        let mut nodes = vec![Vec::with_capacity(dim)];
        let mut weights = vec![1.0];
        for _ in 0..dim {
            let mut next_nodes = Vec::with_capacity(nodes.len() * nodes_per_axis);
            let mut next_weights = Vec::with_capacity(nodes.len() * nodes_per_axis);
            for (node, weight) in nodes.iter().zip(&weights) {
                for (ti, wi) in t.iter().zip(&w) {
                    let mut nn = node.clone();
                    nn.push(*ti);
                    next_nodes.push(nn);
                    next_weights.push(weight * wi);
                }
            }
            nodes = next_nodes;
            weights = next_weights;
        }
        Ok(QuadratureGrid {
            dim,
            nodes_per_axis,
            nodes,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nodes_per_axis(&self) -> usize {
        self.nodes_per_axis
    }

    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    /// Polynomial degree per axis up to which `∫ p dγ` is exact.
    pub fn exactness_degree(&self) -> usize {
        2 * self.nodes_per_axis - 1
    }

    /// `∫ f dγ` over the full space.
    pub fn integrate_gamma(&self, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let norm = SQRT_PI.powi(self.dim as i32);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(x);
            if !v.is_finite() {
                return Err(Error::NonFiniteNode { node: x.clone() });
            }
            acc += w * v;
        }
        Ok(acc / norm)
    }

    /// Hermite coefficient `⟨f, h_β⟩` by grid quadrature.
    pub fn project(&self, beta: &crate::MultiIndex, f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let mut f = f;
        self.integrate_gamma(|x| {
            f(x) * crate::multiindex::hermite_eval_normalized(beta, x).unwrap()
        })
    }
}

/// Directions and weights covering the unit sphere `S^{n-1}`; weights sum to
/// its surface measure.
pub fn sphere_grid(dim: usize, resolution: usize) -> Result<Vec<(Vec<f64>, f64)>> {
    match dim {
        1 => Ok(vec![(vec![1.0], 1.0), (vec![-1.0], 1.0)]),
        2 => {
            let m = resolution.max(4);
            let dw = 2.0 * std::f64::consts::PI / m as f64;
            Ok((0..m)
                .map(|j| {
                    let th = dw * j as f64;
                    (vec![th.cos(), th.sin()], dw)
                })
                .collect())
        }
        3 => {
            let mu = resolution.max(4) / 2 + 2;
            let mphi = resolution.max(4);
            let (us, wus) = gauss_legendre(mu);
            let dphi = 2.0 * std::f64::consts::PI / mphi as f64;
            let mut out = Vec::with_capacity(mu * mphi);
            for (u, wu) in us.iter().zip(&wus) {
                let s = (1.0 - u * u).sqrt();
                for j in 0..mphi {
                    let phi = dphi * j as f64;
                    out.push((vec![s * phi.cos(), s * phi.sin(), *u], wu * dphi));
                }
            }
            Ok(out)
        }
        d => Err(Error::UnsupportedDimension(d)),
    }
}

/// Radial Gauss-Legendre grid over a ball, for integrands that are smooth on
/// the ball (`γ`-densities, atoms, Hermite expansions).
#[derive(Debug, Clone)]
pub struct BallQuad {
    nodes: Vec<Vec<f64>>,
    /// Lebesgue weights (include the `ρ^{n-1}` Jacobian and sphere weight).
    weights: Vec<f64>,
}

impl BallQuad {
    pub fn new(ball: &EuclideanBall, radial: usize, angular: usize) -> Result<Self> {
        let dim = ball.dim();
        let dirs = sphere_grid(dim, angular)?;
        let (rho, wr) = gauss_legendre_on(radial, 0.0, ball.radius);
        let mut nodes = Vec::with_capacity(rho.len() * dirs.len());
        let mut weights = Vec::with_capacity(rho.len() * dirs.len());
        for (r, wri) in rho.iter().zip(&wr) {
            let jac = r.powi(dim as i32 - 1);
            for (dir, wd) in &dirs {
                let x: Vec<f64> = ball
                    .center
                    .iter()
                    .zip(dir)
                    .map(|(c, d)| c + r * d)
                    .collect();
                nodes.push(x);
                weights.push(wri * jac * wd);
            }
        }
        Ok(BallQuad { nodes, weights })
    }

    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    /// Lebesgue weights aligned with [`BallQuad::nodes`].
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `∫_B f dx`.
    pub fn integrate_lebesgue(&self, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(x);
            if !v.is_finite() {
                return Err(Error::NonFiniteNode { node: x.clone() });
            }
            acc += w * v;
        }
        Ok(acc)
    }

    /// `∫_B f dγ`.
    pub fn integrate_gamma(&self, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let dim = self.nodes.first().map(|x| x.len()).unwrap_or(1);
        let norm = SQRT_PI.powi(dim as i32);
        self.integrate_lebesgue(|x| {
            let e = (-x.iter().map(|v| v * v).sum::<f64>()).exp();
            f(x) * e / norm
        })
    }
}

/// Radial grid over the complement `(κB)^c`, truncated at radius
/// `inner + reach` from the ball center.  Lebesgue weights.
#[derive(Debug, Clone)]
pub struct ComplementQuad {
    nodes: Vec<Vec<f64>>,
    weights: Vec<f64>,
}

impl ComplementQuad {
    pub fn new(
        center: &[f64],
        inner: f64,
        reach: f64,
        radial: usize,
        angular: usize,
    ) -> Result<Self> {
        let dim = center.len();
        let dirs = sphere_grid(dim, angular)?;
        // panels graded toward the inner boundary where integrands peak
        let mut edges = vec![inner];
        let panels = 6;
        for p in 1..=panels {
            edges.push(inner + reach * ((p as f64 / panels as f64).powf(1.5)));
        }
        let per_panel = (radial / panels).max(4);
        let mut nodes = Vec::new();
        let mut weights = Vec::new();
        for w in edges.windows(2) {
            let (rho, wr) = gauss_legendre_on(per_panel, w[0], w[1]);
            for (r, wri) in rho.iter().zip(&wr) {
                let jac = r.powi(dim as i32 - 1);
                for (dir, wd) in &dirs {
                    let x: Vec<f64> = center.iter().zip(dir).map(|(c, d)| c + r * d).collect();
                    nodes.push(x);
                    weights.push(wri * jac * wd);
                }
            }
        }
        Ok(ComplementQuad { nodes, weights })
    }

    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    /// `∫ f dx` over the truncated complement.
    pub fn integrate_lebesgue(&self, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let v = f(x);
            if !v.is_finite() {
                return Err(Error::NonFiniteNode { node: x.clone() });
            }
            acc += w * v;
        }
        Ok(acc)
    }

    /// `∫ f dγ` over the truncated complement.
    pub fn integrate_gamma(&self, mut f: impl FnMut(&[f64]) -> f64) -> Result<f64> {
        let dim = self.nodes.first().map(|x| x.len()).unwrap_or(1);
        let norm = SQRT_PI.powi(dim as i32);
        self.integrate_lebesgue(|x| {
            let e = (-x.iter().map(|v| v * v).sum::<f64>()).exp();
            f(x) * e / norm
        })
    }
}

/// Default resolution for ball quadratures used by the measure/norm helpers.
const BALL_RADIAL: usize = 48;
const BALL_ANGULAR: usize = 64;

/// `γ(region)`; the full space gives 1, balls go through the radial rule and
/// complements through `1 - γ(B)`.
pub fn gamma_measure(region: &Region, grid: &QuadratureGrid) -> Result<f64> {
    match region {
        Region::Full => grid.integrate_gamma(|_| 1.0),
        Region::Ball(b) => gamma_ball(b),
        Region::BallComplement(b) => Ok(1.0 - gamma_ball(b)?),
    }
}

/// `γ(B)` by the radial rule (dimension-independent oracle for balls).
pub fn gamma_ball(ball: &EuclideanBall) -> Result<f64> {
    BallQuad::new(ball, BALL_RADIAL, BALL_ANGULAR)?.integrate_gamma(|_| 1.0)
}

/// `γ(2B)/γ(B)`.  Errors when `γ(B)` underflows.
pub fn doubling_ratio(ball: &crate::AdmissibleBall) -> Result<f64> {
    let gb = gamma_ball(&ball.as_euclidean())?;
    if gb <= f64::MIN_POSITIVE {
        return Err(Error::Config(format!(
            "gamma(B) underflows for ball at |c|={}, r={}",
            ball.center_norm(),
            ball.radius()
        )));
    }
    Ok(gamma_ball(&ball.scaled(2.0))? / gb)
}

/// `(∫_region |f|^p w dγ)^{1/p}` for `p ∈ {1, 2}`.
///
/// Full-space integrals use the Gauss-Hermite grid; ball integrals use the
/// radial rule (which resolves small admissible balls the masked grid would
/// miss); complements are full minus ball, both integrands being globally
/// evaluable here.
pub fn lp_norm(
    f: &dyn Fn(&[f64]) -> f64,
    p: u8,
    region: &Region,
    weight: Option<&WeightFunction>,
    grid: &QuadratureGrid,
) -> Result<f64> {
    assert!(p == 1 || p == 2, "only L^1 and L^2 norms are provided");
    let integrand = |x: &[f64]| {
        let w = weight.map(|wk| wk.eval(x)).unwrap_or(1.0);
        let v = f(x).abs();
        if p == 1 {
            v * w
        } else {
            v * v * w
        }
    };
    let raw = match region {
        Region::Full => grid.integrate_gamma(integrand)?,
        Region::Ball(b) => BallQuad::new(b, BALL_RADIAL, BALL_ANGULAR)?.integrate_gamma(integrand)?,
        Region::BallComplement(b) => {
            let full = grid.integrate_gamma(integrand)?;
            let inner = BallQuad::new(b, BALL_RADIAL, BALL_ANGULAR)?.integrate_gamma(integrand)?;
            (full - inner).max(0.0)
        }
    };
    Ok(if p == 1 { raw } else { raw.sqrt() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::{hermite_eval_normalized, indices_up_to, MultiIndex};
    use approx::assert_abs_diff_eq;
    use statrs::function::erf::erf;

    #[test]
    fn gh_weights_sum_to_sqrt_pi() {
        for n in [1, 5, 20, 60] {
            let (_, w) = gauss_hermite(n);
            assert_abs_diff_eq!(w.iter().sum::<f64>(), SQRT_PI, epsilon = 1e-12);
        }
    }

    #[test]
    fn gh_polynomial_exactness() {
        // N nodes integrate t^{2N-2} e^{-t^2} exactly; moment oracle:
        // ∫ t^{2m} e^{-t^2} dt = sqrt(pi) (2m-1)!! / 2^m
        let n = 8;
        let (t, w) = gauss_hermite(n);
        for m in 0..n {
            let got: f64 = t.iter().zip(&w).map(|(ti, wi)| wi * ti.powi(2 * m as i32)).sum();
            let dfact: f64 = (1..=m).map(|j| (2 * j - 1) as f64).product();
            let expect = SQRT_PI * dfact / 2f64.powi(m as i32);
            assert_abs_diff_eq!(got, expect, epsilon = 1e-10 * expect.max(1.0));
        }
    }

    #[test]
    fn grid_probability_and_orthonormality() {
        let grid = QuadratureGrid::full_space(2, 16).unwrap();
        assert_abs_diff_eq!(grid.integrate_gamma(|_| 1.0).unwrap(), 1.0, epsilon = 1e-12);
        let idx = indices_up_to(2, 6);
        for a in &idx {
            for b in &idx {
                let v = grid
                    .integrate_gamma(|x| {
                        hermite_eval_normalized(a, x).unwrap() * hermite_eval_normalized(b, x).unwrap()
                    })
                    .unwrap();
                let expect = if a == b { 1.0 } else { 0.0 };
                assert!(
                    (v - expect).abs() < 1e-12,
                    "⟨h_{a:?}, h_{b:?}⟩ = {v}"
                );
            }
        }
    }

    #[test]
    fn gamma_ball_matches_erf() {
        let b = EuclideanBall::new(vec![0.0], 1.0);
        assert_abs_diff_eq!(gamma_ball(&b).unwrap(), erf(1.0), epsilon = 1e-10);
    }

    #[test]
    fn gamma_far_small_ball_bracketing() {
        // e^{-(|c|+r)^2} vol / pi <= gamma(B) <= e^{-(|c|-r)^2} vol / pi, n=2
        let b = EuclideanBall::new(vec![3.0, 0.0], 0.1);
        let vol = std::f64::consts::PI * 0.01;
        let g = gamma_ball(&b).unwrap();
        let lo = (-(3.1f64).powi(2)).exp() * vol / std::f64::consts::PI;
        let hi = (-(2.9f64).powi(2)).exp() * vol / std::f64::consts::PI;
        assert!(g > lo && g < hi, "γ(B) = {g}, bracket ({lo}, {hi})");
    }

    #[test]
    fn region_additivity() {
        let grid = QuadratureGrid::full_space(2, 32).unwrap();
        let b = EuclideanBall::new(vec![0.5, -0.2], 0.8);
        let gb = gamma_measure(&Region::Ball(b.clone()), &grid).unwrap();
        let gc = gamma_measure(&Region::BallComplement(b), &grid).unwrap();
        assert_abs_diff_eq!(gb + gc, 1.0, epsilon = 1e-8);
    }

    #[test]
    fn doubling_examples() {
        let b = crate::AdmissibleBall::new(vec![0.0], 1.0).unwrap();
        assert_abs_diff_eq!(
            doubling_ratio(&b).unwrap(),
            erf(2.0) / erf(1.0),
            epsilon = 1e-9
        );
        // r -> 0 limit is 2^n
        let b = crate::AdmissibleBall::new(vec![0.7], 1e-3).unwrap();
        assert_abs_diff_eq!(doubling_ratio(&b).unwrap(), 2.0, epsilon = 1e-3);
        let b = crate::AdmissibleBall::new(vec![0.7, 0.1], 1e-3).unwrap();
        assert_abs_diff_eq!(doubling_ratio(&b).unwrap(), 4.0, epsilon = 1e-2);
    }

    #[test]
    fn lp_norm_examples() {
        let grid = QuadratureGrid::full_space(1, 40).unwrap();
        let one = |_: &[f64]| 1.0;
        assert_abs_diff_eq!(
            lp_norm(&one, 1, &Region::Full, None, &grid).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        let h2 = |x: &[f64]| hermite_eval_normalized(&MultiIndex::new(vec![2]), x).unwrap();
        assert_abs_diff_eq!(
            lp_norm(&h2, 2, &Region::Full, None, &grid).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        let absx = |x: &[f64]| x[0].abs();
        assert_abs_diff_eq!(
            lp_norm(&absx, 1, &Region::Full, None, &grid).unwrap(),
            1.0 / SQRT_PI,
            epsilon = 1e-3
        );
    }

    #[test]
    fn sphere_weights_sum_to_surface() {
        let s1: f64 = sphere_grid(2, 32).unwrap().iter().map(|d| d.1).sum();
        assert_abs_diff_eq!(s1, 2.0 * std::f64::consts::PI, epsilon = 1e-12);
        let s2: f64 = sphere_grid(3, 16).unwrap().iter().map(|d| d.1).sum();
        assert_abs_diff_eq!(s2, 4.0 * std::f64::consts::PI, epsilon = 1e-10);
    }
}
