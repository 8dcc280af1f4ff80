//! Integral-kernel route for the Gaussian Riesz transforms.
//!
//! Both families are one-dimensional `r`-integrals over `(0,1)` of Gaussian
//! bumps modulated by Hermite polynomials:
//!
//! - old: `k_α(x,y) = c ∫ r^{k-1} λ_α(r) H_α(v) e^{-|v|²} (1-r²)^{-n/2-1} dr`
//!   with `v = (y - rx)/sqrt(1-r²)`,
//! - new: `k*_α(x,y) = c e^{|x|²-|y|²} ∫ λ_α(r) H_α(v) e^{-|v|²} (1-r²)^{-n/2-1} dr`
//!   with `v = (x - ry)/sqrt(1-r²)`,
//! - odd half-power derivative: the kernel of `D^α L^{k/2}` with its explicit
//!   `Γ(-k/2)` prefactor,
//!
//! where `λ_α(r) = ((-log r)/(1-r²))^{k/2-1}`.  The integrand concentrates at
//! `r -> 1` near the diagonal, so the upper half of the integral runs in the
//! substituted variable `s = 1/sqrt(1-r²)` where it becomes a Gaussian tail.
//! All exponentials combine in log space before a single shifted
//! exponentiation per kernel value.

use crate::geometry::EuclideanBall;
use crate::multiindex::{hermite_eval, MultiIndex};
use crate::quadrature::{gauss_legendre_on, sphere_grid, BallQuad};
use crate::{Error, Result};

const SQRT_PI: f64 = 1.772453850905516;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelFamily {
    Old,
    New,
    /// Kernel of `D^α L^{k/2}` for odd `k`; carries its own exact prefactor.
    HalfPowerDerivative,
}

/// Which kernel, at which order, with which normalization constant.
///
/// The constants `c_{n,α}` for the old/new families are calibrated against
/// the spectral route (see [`calibrate`]); the half-power kernel uses the
/// explicit `π^{-n/2} / Γ(-k/2)` prefactor.
#[derive(Debug, Clone)]
pub struct KernelSpec {
    pub alpha: MultiIndex,
    pub family: KernelFamily,
    pub normalization: f64,
}

impl KernelSpec {
    pub fn new(alpha: MultiIndex, family: KernelFamily) -> Result<Self> {
        let k = alpha.order();
        assert!(k >= 1, "kernel order requires |alpha| >= 1");
        if family == KernelFamily::HalfPowerDerivative && k % 2 == 0 {
            return Err(Error::EvenHalfPowerOrder(k));
        }
        let normalization = match family {
            KernelFamily::HalfPowerDerivative => {
                1.0 / (SQRT_PI.powi(alpha.dim() as i32) * gamma_neg_half_odd(k))
            }
            _ => 1.0,
        };
        Ok(KernelSpec {
            alpha,
            family,
            normalization,
        })
    }

    pub fn with_normalization(mut self, c: f64) -> Self {
        self.normalization = c;
        self
    }

    pub fn k(&self) -> usize {
        self.alpha.order()
    }

    pub fn dim(&self) -> usize {
        self.alpha.dim()
    }
}

/// `Γ(-k/2)` for odd `k`, via `Γ(z) = Γ(z+1)/z` down from `Γ(1/2) = sqrt(π)`.
pub fn gamma_neg_half_odd(k: usize) -> f64 {
    assert!(k % 2 == 1);
    let mut z = -(k as f64) / 2.0;
    let mut g = SQRT_PI;
    // walk from 1/2 down to -k/2
    while z < 0.5 - 1e-9 {
        g /= z;
        z += 1.0;
    }
    g
}

/// Precomputed node of the `r`-integral: `1 - r²` and `-log r` are carried
/// exactly (from the substituted variable) to avoid cancellation at `r -> 1`.
#[derive(Debug, Clone, Copy)]
pub struct RNode {
    pub r: f64,
    pub one_minus_r2: f64,
    pub neg_log_r: f64,
    pub weight: f64,
}

/// Composite quadrature for `∫_0^1 g(r) dr`, split at `r = 1/2` with the
/// `s = 1/sqrt(1-r²)` substitution on the upper piece.
#[derive(Debug, Clone)]
pub struct RQuad {
    pub nodes: Vec<RNode>,
}

impl RQuad {
    /// `s_max` bounds how far the substituted Gaussian tail is followed; it
    /// must exceed `~8 / min|x-y|` for the points of interest.
    pub fn build(s_max: f64, points_per_panel: usize) -> Self {
        let mut nodes = Vec::new();
        // lower piece [0, 1/2], geometric grading toward 0 for the log factor
        let mut edges = vec![0.0];
        let grading = 10;
        for j in (0..grading).rev() {
            edges.push(0.5 * 4f64.powi(-(j as i32)));
        }
        for w in edges.windows(2) {
            let (r, wr) = gauss_legendre_on(points_per_panel, w[0], w[1]);
            for (ri, wi) in r.iter().zip(&wr) {
                nodes.push(RNode {
                    r: *ri,
                    one_minus_r2: 1.0 - ri * ri,
                    neg_log_r: -ri.ln(),
                    weight: *wi,
                });
            }
        }
        // upper piece via s = 1/sqrt(1-r²) ∈ [2/sqrt(3), s_max]
        let s0 = 2.0 / 3f64.sqrt();
        let ratio = 1.6;
        let mut s_edges = vec![s0];
        while *s_edges.last().unwrap() < s_max {
            s_edges.push(s_edges.last().unwrap() * ratio);
        }
        for w in s_edges.windows(2) {
            let (s, ws) = gauss_legendre_on(points_per_panel, w[0], w[1]);
            for (si, wi) in s.iter().zip(&ws) {
                let omr2 = 1.0 / (si * si);
                let r = (1.0 - omr2).sqrt();
                nodes.push(RNode {
                    r,
                    one_minus_r2: omr2,
                    neg_log_r: -0.5 * (-omr2).ln_1p(),
                    weight: wi / (si * si * si * r),
                });
            }
        }
        RQuad { nodes }
    }

    /// Default rule resolving point pairs down to `|x - y| ≈ 2e-3`.
    pub fn default_rule() -> Self {
        RQuad::build(4000.0, 8)
    }
}

/// `λ_α`-style log of the smooth positive part of the integrand, per family.
/// Returns `(sign, log|integrand|)` at one `r`-node, excluding the global
/// prefactor (normalization and, for new/half-power, `e^{|x|²-|y|²}`).
fn integrand_log(spec: &KernelSpec, x: &[f64], y: &[f64], node: &RNode) -> (f64, f64) {
    let n = x.len() as f64;
    let k = spec.k() as f64;
    let omr2 = node.one_minus_r2;
    let sq = omr2.sqrt();
    let r = node.r;
    let (arg_num, exp_num): (Vec<f64>, Vec<f64>) = match spec.family {
        // H and exponent share the argument for old/new
        KernelFamily::Old => {
            let a: Vec<f64> = y.iter().zip(x).map(|(yi, xi)| yi - r * xi).collect();
            (a.clone(), a)
        }
        KernelFamily::New => {
            let a: Vec<f64> = x.iter().zip(y).map(|(xi, yi)| xi - r * yi).collect();
            (a.clone(), a)
        }
        KernelFamily::HalfPowerDerivative => (
            x.iter().zip(y).map(|(xi, yi)| r * xi - yi).collect(),
            x.iter().zip(y).map(|(xi, yi)| xi - r * yi).collect(),
        ),
    };
    let v: Vec<f64> = arg_num.iter().map(|a| a / sq).collect();
    let h = hermite_eval(&spec.alpha, &v).expect("low-order Hermite");
    let exp_term = -exp_num.iter().map(|a| a * a).sum::<f64>() / omr2;
    let (pow_log, lambda_log) = match spec.family {
        KernelFamily::Old => (
            (k - 1.0) * r.ln() - (n / 2.0 + 1.0) * omr2.ln(),
            (k / 2.0 - 1.0) * (node.neg_log_r / omr2).ln(),
        ),
        KernelFamily::New => (
            -(n / 2.0 + 1.0) * omr2.ln(),
            (k / 2.0 - 1.0) * (node.neg_log_r / omr2).ln(),
        ),
        KernelFamily::HalfPowerDerivative => (
            (k - 1.0) * r.ln() - (n + k) / 2.0 * omr2.ln(),
            -(k + 2.0) / 2.0 * node.neg_log_r.ln(),
        ),
    };
    if h == 0.0 {
        return (0.0, f64::NEG_INFINITY);
    }
    (h.signum(), h.abs().ln() + exp_term + pow_log + lambda_log)
}

fn kernel_log_prefactor(spec: &KernelSpec, x: &[f64], y: &[f64]) -> f64 {
    match spec.family {
        KernelFamily::Old => 0.0,
        KernelFamily::New | KernelFamily::HalfPowerDerivative => {
            x.iter().map(|v| v * v).sum::<f64>() - y.iter().map(|v| v * v).sum::<f64>()
        }
    }
}

/// Evaluate the kernel at an off-diagonal point pair.
///
/// `min_sep` guards the diagonal singularity: below it the `r`-rule cannot
/// resolve the concentration and the caller must go through the PV path.
pub fn kernel_point(spec: &KernelSpec, x: &[f64], y: &[f64], rq: &RQuad) -> Result<f64> {
    let dist = x
        .iter()
        .zip(y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt();
    let min_sep = 8.0 / rq.nodes.last().map(|n| 1.0 / n.one_minus_r2.sqrt()).unwrap_or(1.0);
    if dist < min_sep {
        return Err(Error::DiagonalSingularity {
            dist,
            min: min_sep,
        });
    }
    Ok(kernel_point_unchecked(spec, x, y, rq))
}

/// As [`kernel_point`] without the diagonal guard (used inside PV exclusions
/// where the caller controls the separation).
pub fn kernel_point_unchecked(spec: &KernelSpec, x: &[f64], y: &[f64], rq: &RQuad) -> f64 {
    let mut max_log = f64::NEG_INFINITY;
    let mut vals: Vec<(f64, f64, f64)> = Vec::with_capacity(rq.nodes.len());
    for node in &rq.nodes {
        let (sign, log) = integrand_log(spec, x, y, node);
        if log > max_log {
            max_log = log;
        }
        vals.push((sign, log, node.weight));
    }
    if !max_log.is_finite() {
        return 0.0;
    }
    let sum: f64 = vals
        .iter()
        .map(|(sign, log, w)| sign * w * (log - max_log).exp())
        .sum();
    let pre = kernel_log_prefactor(spec, x, y);
    spec.normalization * sum * (max_log + pre).exp()
}

/// Old-family kernel `k_α(x,y)`.
pub fn kernel_old(spec: &KernelSpec, x: &[f64], y: &[f64], rq: &RQuad) -> Result<f64> {
    assert_eq!(spec.family, KernelFamily::Old);
    kernel_point(spec, x, y, rq)
}

/// New-family kernel `k*_α(x,y)`.
pub fn kernel_new(spec: &KernelSpec, x: &[f64], y: &[f64], rq: &RQuad) -> Result<f64> {
    assert_eq!(spec.family, KernelFamily::New);
    kernel_point(spec, x, y, rq)
}

/// Kernel of `D^α L^{k/2}` for odd `k = |α|`.
pub fn kernel_halfpower_derivative(
    spec: &KernelSpec,
    x: &[f64],
    y: &[f64],
    rq: &RQuad,
) -> Result<f64> {
    assert_eq!(spec.family, KernelFamily::HalfPowerDerivative);
    kernel_point(spec, x, y, rq)
}

/// `∇_y F_α(x,y,r)` for `F_α = H_α(v) e^{-|v|²}`, `v = (x-ry)/sqrt(1-r²)`:
/// per coordinate `2r (v_i H_α(v) - α_i H_{α-e_i}(v)) e^{-|v|²} / sqrt(1-r²)`.
pub fn grad_y_f(alpha: &MultiIndex, x: &[f64], y: &[f64], r: f64) -> Vec<f64> {
    assert!(r > 0.0 && r < 1.0);
    let omr2 = 1.0 - r * r;
    let sq = omr2.sqrt();
    let v: Vec<f64> = x.iter().zip(y).map(|(xi, yi)| (xi - r * yi) / sq).collect();
    let h = hermite_eval(alpha, &v).unwrap();
    let e = (-v.iter().map(|vi| vi * vi).sum::<f64>()).exp();
    (0..x.len())
        .map(|i| {
            let h_down = if alpha.0[i] >= 1 {
                let mut a = alpha.clone();
                a.0[i] -= 1;
                hermite_eval(&a, &v).unwrap()
            } else {
                0.0
            };
            2.0 * r * (v[i] * h - alpha.0[i] as f64 * h_down) * e / sq
        })
        .collect()
}

/// `F_α(x,y,r)` itself.
pub fn f_alpha(alpha: &MultiIndex, x: &[f64], y: &[f64], r: f64) -> f64 {
    let omr2 = 1.0 - r * r;
    let sq = omr2.sqrt();
    let v: Vec<f64> = x.iter().zip(y).map(|(xi, yi)| (xi - r * yi) / sq).collect();
    hermite_eval(alpha, &v).unwrap() * (-v.iter().map(|vi| vi * vi).sum::<f64>()).exp()
}

/// Principal-value configuration: two exclusion radii (`eps1 = 2 eps2`) and
/// the disagreement threshold beyond which a point is flagged unreliable.
#[derive(Debug, Clone)]
pub struct PVConfig {
    pub eps2: f64,
    pub eps1: f64,
    pub flag_tol: f64,
    pub radial_per_panel: usize,
    pub angular: usize,
}

impl Default for PVConfig {
    fn default() -> Self {
        PVConfig {
            eps2: 1e-3,
            eps1: 2e-3,
            flag_tol: 0.05,
            radial_per_panel: 10,
            angular: 48,
        }
    }
}

/// The two exclusion estimates before extrapolation, mostly for diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct PvEstimates {
    pub at_eps1: f64,
    pub at_eps2: f64,
    pub extrapolated: f64,
}

/// Apply the kernel transform to a compactly supported bounded `f` at `x`.
///
/// If `x` lies outside `supp f` no exclusion is needed and the ball rule is
/// used directly.  Otherwise the integral runs on annular shells around `x`
/// from the two exclusion radii outward, and the first-order Richardson
/// extrapolation in `ε` is returned; estimates disagreeing by more than
/// `10 × flag_tol` (relative) are reported as unreliable rather than
/// silently accepted.
pub fn apply_riesz_pv(
    spec: &KernelSpec,
    f: &dyn Fn(&[f64]) -> f64,
    support: &EuclideanBall,
    x: &[f64],
    pv: &PVConfig,
    rq: &RQuad,
) -> Result<f64> {
    Ok(apply_riesz_pv_detailed(spec, f, support, x, pv, rq)?.extrapolated)
}

pub fn apply_riesz_pv_detailed(
    spec: &KernelSpec,
    f: &dyn Fn(&[f64]) -> f64,
    support: &EuclideanBall,
    x: &[f64],
    pv: &PVConfig,
    rq: &RQuad,
) -> Result<PvEstimates> {
    let dist_c = support
        .center
        .iter()
        .zip(x)
        .map(|(c, xi)| (xi - c) * (xi - c))
        .sum::<f64>()
        .sqrt();
    if dist_c > support.radius + 2.0 * pv.eps1 {
        // plain quadrature over the support ball
        let bq = BallQuad::new(support, 64, pv.angular)?;
        let v = bq.integrate_lebesgue(|y| kernel_point_unchecked(spec, x, y, rq) * f(y))?;
        return Ok(PvEstimates {
            at_eps1: v,
            at_eps2: v,
            extrapolated: v,
        });
    }

    let rho_max = dist_c + support.radius;
    let dirs = sphere_grid(x.len(), pv.angular)?;
    // shells: [eps2, eps1], then geometric out to rho_max
    let mut edges = vec![pv.eps2, pv.eps1];
    while *edges.last().unwrap() < rho_max {
        edges.push((edges.last().unwrap() * 2.0).min(rho_max));
    }
    let dim = x.len() as i32;
    let mut shell_sums = Vec::with_capacity(edges.len() - 1);
    for w in edges.windows(2) {
        let (rho, wr) = gauss_legendre_on(pv.radial_per_panel, w[0], w[1]);
        let mut acc = 0.0;
        for (r, wri) in rho.iter().zip(&wr) {
            let jac = r.powi(dim - 1);
            for (dir, wd) in &dirs {
                let y: Vec<f64> = x.iter().zip(dir).map(|(xi, d)| xi + r * d).collect();
                let fy = f(&y);
                if fy != 0.0 {
                    acc += wri * jac * wd * kernel_point_unchecked(spec, x, &y, rq) * fy;
                }
            }
        }
        shell_sums.push(acc);
    }
    let tail: f64 = shell_sums[1..].iter().sum();
    let at_eps1 = tail;
    let at_eps2 = tail + shell_sums[0];
    // first-order Richardson with eps1 = 2 eps2
    let extrapolated = 2.0 * at_eps2 - at_eps1;
    let spread = (at_eps1 - at_eps2).abs();
    let tol = pv.flag_tol * extrapolated.abs().max(1e-12);
    if spread > 10.0 * tol {
        return Err(Error::PvUnreliable {
            x: x.to_vec(),
            spread,
            tol,
        });
    }
    Ok(PvEstimates {
        at_eps1,
        at_eps2,
        extrapolated,
    })
}

/// One persisted calibration record: `(n, α, family) -> c` with the residual
/// of the spectral match and the quadrature settings used.
#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationRecord {
    pub dim: usize,
    pub alpha: MultiIndex,
    pub family: crate::RieszFamily,
    pub c: f64,
    pub residual: f64,
    pub s_max: f64,
    pub points_per_panel: usize,
}

impl CalibrationRecord {
    pub fn key(&self) -> String {
        format!(
            "{},{},{}",
            self.dim,
            alpha_str(&self.alpha),
            family_str(self.family)
        )
    }
}

pub fn alpha_str(alpha: &MultiIndex) -> String {
    alpha
        .0
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

pub fn parse_alpha(s: &str) -> Result<MultiIndex> {
    let entries: std::result::Result<Vec<usize>, _> =
        s.split(['.', ',']).map(|p| p.trim().parse()).collect();
    let entries = entries.map_err(|e| Error::Config(format!("bad multi-index '{s}': {e}")))?;
    if entries.is_empty() {
        return Err(Error::Config("empty multi-index".into()));
    }
    Ok(MultiIndex::new(entries))
}

fn family_str(f: crate::RieszFamily) -> &'static str {
    match f {
        crate::RieszFamily::Old => "old",
        crate::RieszFamily::New => "new",
    }
}

pub fn parse_family(s: &str) -> Result<crate::RieszFamily> {
    match s {
        "old" => Ok(crate::RieszFamily::Old),
        "new" => Ok(crate::RieszFamily::New),
        other => Err(Error::Config(format!("unknown family '{other}'"))),
    }
}

/// Write records as one comma-separated line each:
/// `n,alpha(dot-separated),family,c,residual,s_max,points_per_panel`.
pub fn write_calibration(path: &std::path::Path, records: &[CalibrationRecord]) -> Result<()> {
    let mut out = String::from("# n,alpha,family,c,residual,s_max,points_per_panel\n");
    for r in records {
        out.push_str(&format!(
            "{},{},{},{:.16e},{:.6e},{},{}\n",
            r.dim,
            alpha_str(&r.alpha),
            family_str(r.family),
            r.c,
            r.residual,
            r.s_max,
            r.points_per_panel
        ));
    }
    std::fs::write(path, out)?;
    Ok(())
}

pub fn read_calibration(path: &std::path::Path) -> Result<Vec<CalibrationRecord>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 7 {
            return Err(Error::Config(format!("bad calibration line: {line}")));
        }
        let parse_f = |s: &str| {
            s.parse::<f64>()
                .map_err(|e| Error::Config(format!("bad float '{s}': {e}")))
        };
        out.push(CalibrationRecord {
            dim: fields[0]
                .parse()
                .map_err(|e| Error::Config(format!("bad dim: {e}")))?,
            alpha: parse_alpha(fields[1])?,
            family: parse_family(fields[2])?,
            c: parse_f(fields[3])?,
            residual: parse_f(fields[4])?,
            s_max: parse_f(fields[5])?,
            points_per_panel: fields[6]
                .parse()
                .map_err(|e| Error::Config(format!("bad panel count: {e}")))?,
        });
    }
    Ok(out)
}

/// Smooth plateau cutoff: identically 1 for `|x| <= plateau`, identically 0
/// for `|x| >= support`, `C^∞` in between.
pub fn smooth_cutoff(norm: f64, plateau: f64, support: f64) -> f64 {
    if norm <= plateau {
        return 1.0;
    }
    if norm >= support {
        return 0.0;
    }
    let t = (norm - plateau) / (support - plateau);
    let phi = |u: f64| if u > 0.0 { (-1.0 / u).exp() } else { 0.0 };
    phi(1.0 - t) / (phi(1.0 - t) + phi(t))
}

/// Reference input used for calibration and the spectral-kernel equivalence
/// checks: a finite mean-zero Hermite sum masked to a plateau so wide that
/// its Hermite coefficients are unchanged to ~1e-9 while the function gains
/// genuinely compact support.
pub struct MaskedHermiteInput {
    pub coeffs: crate::HermiteCoeffs,
    pub plateau: f64,
    pub support: EuclideanBall,
}

impl MaskedHermiteInput {
    pub fn new(coeffs: crate::HermiteCoeffs, plateau: f64, support_radius: f64) -> Self {
        let dim = coeffs.dim();
        MaskedHermiteInput {
            coeffs,
            plateau,
            support: EuclideanBall::new(vec![0.0; dim], support_radius),
        }
    }

    pub fn eval(&self, y: &[f64]) -> f64 {
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm >= self.support.radius {
            return 0.0;
        }
        let cut = smooth_cutoff(norm, self.plateau, self.support.radius);
        if cut == 0.0 {
            0.0
        } else {
            self.coeffs.eval(y).unwrap() * cut
        }
    }
}

/// Plateau / support radii giving coefficient-exact masking per dimension.
pub fn default_mask_radii(dim: usize) -> (f64, f64) {
    match dim {
        1 => (5.0, 6.5),
        2 => (4.2, 5.5),
        _ => (3.8, 5.0),
    }
}

/// Calibrate `c_{n,α}` for one family by matching the kernel route to the
/// spectral oracle on a fixed reference input at reference points outside
/// the support.  Returns the record with the post-calibration residual.
pub fn calibrate(
    dim: usize,
    alpha: &MultiIndex,
    family: crate::RieszFamily,
    rq: &RQuad,
    s_max: f64,
    points_per_panel: usize,
) -> Result<CalibrationRecord> {
    let (reference, spectral_image) = calibration_reference(dim, alpha, family);
    let kfam = match family {
        crate::RieszFamily::Old => KernelFamily::Old,
        crate::RieszFamily::New => KernelFamily::New,
    };
    let spec = KernelSpec::new(alpha.clone(), kfam)?;
    let points = calibration_points(dim, reference.support.radius);
    let bq = BallQuad::new(&reference.support, 72, 72)?;
    let mut ratios = Vec::new();
    for x in &points {
        let kernel_val =
            bq.integrate_lebesgue(|y| kernel_point_unchecked(&spec, x, y, rq) * reference.eval(y))?;
        let spectral_val = spectral_image.eval(x)?;
        if kernel_val.abs() > 1e-300 {
            ratios.push((spectral_val / kernel_val, kernel_val, spectral_val));
        }
    }
    if ratios.is_empty() {
        return Err(Error::Config("calibration produced no usable points".into()));
    }
    let c = ratios.iter().map(|r| r.0).sum::<f64>() / ratios.len() as f64;
    let residual = ratios
        .iter()
        .map(|(_, kv, sv)| ((c * kv - sv) / sv.abs().max(1e-300)).abs())
        .fold(0.0f64, f64::max);
    Ok(CalibrationRecord {
        dim,
        alpha: alpha.clone(),
        family,
        c,
        residual,
        s_max,
        points_per_panel,
    })
}

fn calibration_reference(
    dim: usize,
    alpha: &MultiIndex,
    family: crate::RieszFamily,
) -> (MaskedHermiteInput, crate::HermiteCoeffs) {
    use crate::multiindex::HermiteCoeffs;
    // mean-zero fixed reference: h_{e_1} + 0.5 h_{2 e_1} + 0.25 h_{e_1 + e_2}
    let mut coeffs = HermiteCoeffs::zero(dim);
    coeffs.add(MultiIndex::unit(dim, 0), 1.0);
    let mut two = vec![0usize; dim];
    two[0] = 2;
    coeffs.add(MultiIndex::new(two), 0.5);
    if dim >= 2 {
        let mut mixed = vec![0usize; dim];
        mixed[0] = 1;
        mixed[1] = 1;
        coeffs.add(MultiIndex::new(mixed), 0.25);
    }
    let order = crate::riesz::RieszOrder::new(alpha.clone(), family);
    let image = crate::riesz::riesz_apply(&order, &coeffs);
    let (plateau, support) = default_mask_radii(dim);
    (MaskedHermiteInput::new(coeffs, plateau, support), image)
}

fn calibration_points(dim: usize, support_radius: f64) -> Vec<Vec<f64>> {
    let radii = [support_radius + 0.6, support_radius + 1.1];
    let mut out = Vec::new();
    match dim {
        1 => {
            for r in radii {
                out.push(vec![r]);
                out.push(vec![-r]);
            }
        }
        _ => {
            for (j, r) in radii.iter().enumerate() {
                for a in 0..4 {
                    let th = std::f64::consts::PI * (2.0 * a as f64 + j as f64) / 4.0 + 0.3;
                    let mut p = vec![0.0; dim];
                    p[0] = r * th.cos();
                    p[1] = r * th.sin();
                    out.push(p);
                }
            }
        }
    }
    out
}
