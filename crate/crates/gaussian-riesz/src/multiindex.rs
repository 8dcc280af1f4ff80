//! Multi-dimensional Hermite polynomials and sparse expansions in `L²(γ)`.
//!
//! The basis is the physicists' family `H_α(u) = Π_i H_{α_i}(u_i)` with its
//! normalized version `h_α = H_α / sqrt(2^{|α|} α!)`, orthonormal with respect
//! to the Gaussian probability measure `γ`.  The ladder operators act as
//! `δ_i h_β = sqrt(β_i) h_{β-e_i}` and `δ*_i h_β = sqrt(β_i + 1) h_{β+e_i}`.

use std::collections::HashMap;

use crate::{Error, Result};

/// Per-coordinate degree cap for pointwise evaluation.  Beyond this the
/// physicists' recurrence overflows double precision at |t| ≈ 5, and the
/// desk-scale truncations used by the crate stay far below it.
pub const DEGREE_CAP: usize = 60;

/// A multi-index `α ∈ ℕ₀ⁿ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn new(entries: Vec<usize>) -> Self {
        assert!(!entries.is_empty(), "multi-index needs dimension >= 1");
        MultiIndex(entries)
    }

    pub fn zeros(dim: usize) -> Self {
        MultiIndex(vec![0; dim])
    }

    /// Unit index `e_i`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Order `|α| = Σ α_i`.
    pub fn order(&self) -> usize {
        self.0.iter().sum()
    }

    /// Componentwise `β ≥ α`.
    pub fn dominates(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(b, a)| b >= a)
    }

    /// `α + β`.
    pub fn plus(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `α - β`, requires `self ≥ other`.
    pub fn minus(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `α!` as a float.
    pub fn factorial(&self) -> f64 {
        self.0.iter().map(|&a| factorial(a)).product()
    }
}

impl From<Vec<usize>> for MultiIndex {
    fn from(v: Vec<usize>) -> Self {
        MultiIndex::new(v)
    }
}

pub fn factorial(m: usize) -> f64 {
    (1..=m).map(|j| j as f64).product()
}

/// Physicists' Hermite polynomial `H_m(t)` by upward recurrence
/// `H_{m+1} = 2t H_m - 2m H_{m-1}`, `H_0 = 1`.
pub fn hermite_eval_1d(m: usize, t: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * t;
    for j in 1..m {
        let next = 2.0 * t * cur - 2.0 * (j as f64) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Normalized 1-d value `h_m(t) = H_m(t) / sqrt(2^m m!)`.
///
/// Runs the recurrence directly on the normalized family,
/// `h_{m+1} = t sqrt(2/(m+1)) h_m - sqrt(m/(m+1)) h_{m-1}`,
/// which stays in range for degrees well past the raw `H_m` overflow point.
pub fn hermite_eval_1d_normalized(m: usize, t: f64) -> f64 {
    if m == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = t * std::f64::consts::SQRT_2;
    for j in 1..m {
        let jf = j as f64;
        let next = t * (2.0 / (jf + 1.0)).sqrt() * cur - (jf / (jf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// All normalized values `h_0(t), ..., h_max(t)` in one recurrence pass.
pub fn hermite_column_normalized(max_degree: usize, t: f64) -> Vec<f64> {
    let mut col = Vec::with_capacity(max_degree + 1);
    col.push(1.0);
    if max_degree == 0 {
        return col;
    }
    col.push(t * std::f64::consts::SQRT_2);
    for j in 1..max_degree {
        let jf = j as f64;
        let next = t * (2.0 / (jf + 1.0)).sqrt() * col[j] - (jf / (jf + 1.0)).sqrt() * col[j - 1];
        col.push(next);
    }
    col
}

/// Tensor product `H_α(u) = Π_i H_{α_i}(u_i)`.
pub fn hermite_eval(alpha: &MultiIndex, u: &[f64]) -> Result<f64> {
    if alpha.dim() != u.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim(),
            got: u.len(),
        });
    }
    if let Some(&d) = alpha.0.iter().find(|&&d| d > DEGREE_CAP) {
        return Err(Error::DegreeCap {
            degree: d,
            cap: DEGREE_CAP,
        });
    }
    Ok(alpha
        .0
        .iter()
        .zip(u)
        .map(|(&m, &t)| hermite_eval_1d(m, t))
        .product())
}

/// Normalized tensor product `h_α(u)`.
pub fn hermite_eval_normalized(alpha: &MultiIndex, u: &[f64]) -> Result<f64> {
    if alpha.dim() != u.len() {
        return Err(Error::DimensionMismatch {
            expected: alpha.dim(),
            got: u.len(),
        });
    }
    Ok(alpha
        .0
        .iter()
        .zip(u)
        .map(|(&m, &t)| hermite_eval_1d_normalized(m, t))
        .product())
}

/// Sparse finite Hermite expansion `f = Σ_β c_β h_β` in `L²(γ)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteCoeffs {
    dim: usize,
    coeffs: HashMap<MultiIndex, f64>,
}

impl HermiteCoeffs {
    pub fn zero(dim: usize) -> Self {
        HermiteCoeffs {
            dim,
            coeffs: HashMap::new(),
        }
    }

    /// Single basis element `h_β`.
    pub fn basis(beta: MultiIndex) -> Self {
        let mut c = HermiteCoeffs::zero(beta.dim());
        c.set(beta, 1.0);
        c
    }

    pub fn from_entries(dim: usize, entries: impl IntoIterator<Item = (MultiIndex, f64)>) -> Self {
        let mut c = HermiteCoeffs::zero(dim);
        for (beta, v) in entries {
            assert_eq!(beta.dim(), dim);
            c.add(beta, v);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, beta: &MultiIndex) -> f64 {
        self.coeffs.get(beta).copied().unwrap_or(0.0)
    }

    pub fn set(&mut self, beta: MultiIndex, value: f64) {
        if value == 0.0 {
            self.coeffs.remove(&beta);
        } else {
            self.coeffs.insert(beta, value);
        }
    }

    pub fn add(&mut self, beta: MultiIndex, value: f64) {
        *self.coeffs.entry(beta).or_insert(0.0) += value;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&MultiIndex, f64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_order(&self) -> usize {
        self.coeffs.keys().map(|b| b.order()).max().unwrap_or(0)
    }

    pub fn scale(&self, s: f64) -> HermiteCoeffs {
        let coeffs = self.coeffs.iter().map(|(k, v)| (k.clone(), v * s)).collect();
        HermiteCoeffs {
            dim: self.dim,
            coeffs,
        }
    }

    pub fn add_assign(&mut self, other: &HermiteCoeffs) {
        assert_eq!(self.dim, other.dim);
        for (beta, v) in other.iter() {
            self.add(beta.clone(), v);
        }
    }

    pub fn sub(&self, other: &HermiteCoeffs) -> HermiteCoeffs {
        let mut out = self.clone();
        for (beta, v) in other.iter() {
            out.add(beta.clone(), -v);
        }
        out
    }

    /// Coefficient inner product; equals `⟨f, g⟩_{L²(γ)}` by Parseval.
    pub fn dot(&self, other: &HermiteCoeffs) -> f64 {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().map(|(beta, v)| v * large.get(beta)).sum()
    }

    /// `‖f‖_{L²(γ)}` via Parseval.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.values().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Pointwise evaluation of the expansion.
    ///
    /// Shares one recurrence column per coordinate across all terms, so the
    /// cost is `O(n · maxdeg + terms · n)`.
    pub fn eval(&self, u: &[f64]) -> Result<f64> {
        if u.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: u.len(),
            });
        }
        let maxdeg = self
            .coeffs
            .keys()
            .flat_map(|b| b.0.iter().copied())
            .max()
            .unwrap_or(0);
        if maxdeg > DEGREE_CAP {
            return Err(Error::DegreeCap {
                degree: maxdeg,
                cap: DEGREE_CAP,
            });
        }
        let columns: Vec<Vec<f64>> = u
            .iter()
            .map(|&t| hermite_column_normalized(maxdeg, t))
            .collect();
        Ok(self
            .coeffs
            .iter()
            .map(|(beta, &c)| {
                c * beta
                    .0
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| columns[i][m])
                    .product::<f64>()
            })
            .sum())
    }

    /// Sorted (index, coefficient) pairs, for deterministic output.
    pub fn sorted_entries(&self) -> Vec<(MultiIndex, f64)> {
        let mut v: Vec<_> = self
            .coeffs
            .iter()
            .map(|(k, &c)| (k.clone(), c))
            .collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        v
    }
}

/// Action of the annihilation ladder `δ_i`: coefficient map
/// `β ↦ sqrt(β_i + 1) · c_{β+e_i}`.
pub fn lower(i: usize, f: &HermiteCoeffs) -> HermiteCoeffs {
    let mut out = HermiteCoeffs::zero(f.dim());
    for (beta, v) in f.iter() {
        if beta.0[i] >= 1 {
            let mut b = beta.clone();
            b.0[i] -= 1;
            let factor = (beta.0[i] as f64).sqrt();
            out.add(b, factor * v);
        }
    }
    out
}

/// Action of the creation ladder `δ*_i`: coefficient map
/// `β ↦ sqrt(β_i) · c_{β-e_i}`.
pub fn raise(i: usize, f: &HermiteCoeffs) -> HermiteCoeffs {
    let mut out = HermiteCoeffs::zero(f.dim());
    for (beta, v) in f.iter() {
        let mut b = beta.clone();
        b.0[i] += 1;
        let factor = (b.0[i] as f64).sqrt();
        out.add(b, factor * v);
    }
    out
}

/// `D^α = δ_1^{α_1} ... δ_n^{α_n}`.
pub fn apply_d(alpha: &MultiIndex, f: &HermiteCoeffs) -> HermiteCoeffs {
    let mut g = f.clone();
    for (i, &a) in alpha.0.iter().enumerate() {
        for _ in 0..a {
            g = lower(i, &g);
        }
    }
    g
}

/// `D^{*α} = δ*_1^{α_1} ... δ*_n^{α_n}`.
pub fn apply_d_star(alpha: &MultiIndex, f: &HermiteCoeffs) -> HermiteCoeffs {
    let mut g = f.clone();
    for (i, &a) in alpha.0.iter().enumerate() {
        for _ in 0..a {
            g = raise(i, &g);
        }
    }
    g
}

/// Enumerate all multi-indices of dimension `n` with total order ≤ `max_order`.
pub fn indices_up_to(n: usize, max_order: usize) -> Vec<MultiIndex> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; n];
    fn rec(out: &mut Vec<MultiIndex>, cur: &mut Vec<usize>, pos: usize, remaining: usize) {
        if pos == cur.len() - 1 {
            for v in 0..=remaining {
                cur[pos] = v;
                out.push(MultiIndex(cur.clone()));
            }
            cur[pos] = 0;
            return;
        }
        for v in 0..=remaining {
            cur[pos] = v;
            rec(out, cur, pos + 1, remaining - v);
        }
        cur[pos] = 0;
    }
    rec(&mut out, &mut cur, 0, max_order);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn hermite_1d_low_degrees() {
        assert_abs_diff_eq!(hermite_eval_1d(0, 0.7), 1.0);
        assert_abs_diff_eq!(hermite_eval_1d(1, 0.7), 1.4, epsilon = 1e-15);
        // H_2(t) = 4t^2 - 2
        assert_abs_diff_eq!(hermite_eval_1d(2, 0.7), -0.04, epsilon = 1e-13);
    }

    /// Oracle: d^m/dt^m e^{-t^2} = (-1)^m H_m(t) e^{-t^2}, realized with
    /// central finite differences of e^{-t^2} at small m.
    #[test]
    fn hermite_matches_derivative_oracle() {
        let g = |t: f64| (-t * t).exp();
        let t = 0.7;
        let h = 1e-3;
        // second derivative of e^{-t^2}
        let d2 = (g(t + h) - 2.0 * g(t) + g(t - h)) / (h * h);
        let expected_h2 = d2 / g(t); // (-1)^2 H_2
        assert_abs_diff_eq!(hermite_eval_1d(2, t), expected_h2, epsilon = 1e-5);
    }

    #[test]
    fn tensor_eval() {
        let a = MultiIndex::new(vec![0, 0]);
        assert_abs_diff_eq!(hermite_eval(&a, &[3.0, -1.0]).unwrap(), 1.0);
        let a = MultiIndex::new(vec![1, 1]);
        assert_abs_diff_eq!(hermite_eval(&a, &[1.0, 1.0]).unwrap(), 4.0);
        let a = MultiIndex::new(vec![2, 1]);
        assert_abs_diff_eq!(hermite_eval(&a, &[0.5, 0.5]).unwrap(), -1.0, epsilon = 1e-14);
    }

    #[test]
    fn eval_dimension_mismatch() {
        let a = MultiIndex::new(vec![1, 1]);
        assert!(hermite_eval(&a, &[1.0]).is_err());
    }

    #[test]
    fn normalization_consistency() {
        let a = MultiIndex::new(vec![3, 2]);
        let u = [0.4, -1.1];
        let norm = (2f64.powi(5) * a.factorial()).sqrt();
        assert_abs_diff_eq!(
            hermite_eval_normalized(&a, &u).unwrap(),
            hermite_eval(&a, &u).unwrap() / norm,
            epsilon = 1e-13
        );
    }

    #[test]
    fn lower_on_constant_vanishes() {
        let f = HermiteCoeffs::basis(MultiIndex::zeros(1));
        assert!(lower(0, &f).is_empty());
    }

    #[test]
    fn lower_h1_gives_h0() {
        let f = HermiteCoeffs::basis(MultiIndex::new(vec![1]));
        let g = lower(0, &f);
        assert_abs_diff_eq!(g.get(&MultiIndex::zeros(1)), 1.0);
        assert_eq!(g.len(), 1);
    }

    #[test]
    fn lower_h4_gives_2_h3() {
        let f = HermiteCoeffs::basis(MultiIndex::new(vec![4]));
        let g = lower(0, &f);
        assert_abs_diff_eq!(g.get(&MultiIndex::new(vec![3])), 2.0);
        // pointwise against central differences of h_4: δ h = h'/sqrt(2)
        let t = 0.9;
        let h = 1e-5;
        let d = (hermite_eval_1d_normalized(4, t + h) - hermite_eval_1d_normalized(4, t - h))
            / (2.0 * h)
            / std::f64::consts::SQRT_2;
        assert_abs_diff_eq!(d, 2.0 * hermite_eval_1d_normalized(3, t), epsilon = 1e-8);
    }

    #[test]
    fn raise_h0_gives_h1() {
        let f = HermiteCoeffs::basis(MultiIndex::zeros(1));
        let g = raise(0, &f);
        assert_abs_diff_eq!(g.get(&MultiIndex::new(vec![1])), 1.0);
        // closed form check: -(1/sqrt2) e^{x^2} d/dx e^{-x^2} = sqrt2 x = h_1(x)
        for &x in &[-1.3, 0.2, 2.0] {
            assert_abs_diff_eq!(
                std::f64::consts::SQRT_2 * x,
                hermite_eval_1d_normalized(1, x),
                epsilon = 1e-14
            );
        }
    }

    #[test]
    fn raise_h2_gives_sqrt3_h3() {
        let f = HermiteCoeffs::basis(MultiIndex::new(vec![2]));
        let g = raise(0, &f);
        assert_abs_diff_eq!(g.get(&MultiIndex::new(vec![3])), 3f64.sqrt());
        // pointwise check of the closed form on a grid:
        // δ* f = sqrt2 x f - (1/sqrt2) f'
        for k in 0..20 {
            let x = -2.0 + 0.2 * k as f64;
            let h = 1e-5;
            let d = (hermite_eval_1d_normalized(2, x + h) - hermite_eval_1d_normalized(2, x - h))
                / (2.0 * h);
            let lhs = std::f64::consts::SQRT_2 * x * hermite_eval_1d_normalized(2, x)
                - d / std::f64::consts::SQRT_2;
            assert_abs_diff_eq!(lhs, 3f64.sqrt() * hermite_eval_1d_normalized(3, x), epsilon = 1e-8);
        }
    }

    #[test]
    fn d_alpha_examples() {
        // D^(2) h_(2) = sqrt(2) h_0
        let f = HermiteCoeffs::basis(MultiIndex::new(vec![2]));
        let g = apply_d(&MultiIndex::new(vec![2]), &f);
        assert_abs_diff_eq!(g.get(&MultiIndex::zeros(1)), 2f64.sqrt(), epsilon = 1e-15);

        // D^(1,1) h_(1,0) = 0 (lowering past zero)
        let f = HermiteCoeffs::basis(MultiIndex::new(vec![1, 0]));
        assert!(apply_d(&MultiIndex::new(vec![1, 1]), &f).is_empty());

        // D^{*(1,1)} h_(0,0) = h_(1,1)
        let f = HermiteCoeffs::basis(MultiIndex::zeros(2));
        let g = apply_d_star(&MultiIndex::new(vec![1, 1]), &f);
        assert_abs_diff_eq!(g.get(&MultiIndex::new(vec![1, 1])), 1.0);
    }

    #[test]
    fn ladder_exactness_on_grid() {
        // |(1/sqrt2) d/dt h_m - sqrt(m) h_{m-1}| < 1e-9 for m <= 30,
        // derivative taken symbolically via H_m' = 2m H_{m-1}.
        for m in 1..=30usize {
            for k in 0..64 {
                let t = -5.0 + 10.0 * (k as f64) / 63.0;
                let norm_m = (2f64.powi(m as i32) * factorial(m)).sqrt();
                let dh = 2.0 * m as f64 * hermite_eval_1d(m - 1, t) / norm_m;
                let lhs = dh / std::f64::consts::SQRT_2;
                let rhs = (m as f64).sqrt() * hermite_eval_1d_normalized(m - 1, t);
                assert!(
                    (lhs - rhs).abs() < 1e-9 * rhs.abs().max(1.0),
                    "m={m} t={t} lhs={lhs} rhs={rhs}"
                );
            }
        }
    }

    #[test]
    fn adjointness_random_pairs() {
        use rand::prelude::*;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        let idx = indices_up_to(2, 6);
        for _ in 0..100 {
            let f = HermiteCoeffs::from_entries(
                2,
                idx.iter()
                    .map(|b| (b.clone(), rng.gen_range(-1.0..1.0))),
            );
            let g = HermiteCoeffs::from_entries(
                2,
                idx.iter()
                    .map(|b| (b.clone(), rng.gen_range(-1.0..1.0))),
            );
            for i in 0..2 {
                let lhs = raise(i, &f).dot(&g);
                let rhs = f.dot(&lower(i, &g));
                assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
            }
        }
    }

    #[test]
    fn d_dstar_on_constant_gives_factorial() {
        for alpha in [
            MultiIndex::new(vec![2, 1]),
            MultiIndex::new(vec![3, 0]),
            MultiIndex::new(vec![1, 4]),
        ] {
            let h0 = HermiteCoeffs::basis(MultiIndex::zeros(2));
            let up = apply_d_star(&alpha, &h0);
            let back = apply_d(&alpha, &up);
            let value = back.get(&MultiIndex::zeros(2));
            assert!(value > 0.0);
            assert_abs_diff_eq!(value, alpha.factorial(), epsilon = 1e-10);
        }
    }
}
