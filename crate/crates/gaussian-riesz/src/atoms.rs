//! Constructive Gaussian atoms.
//!
//! `H¹(γ)`-atoms are either the constant function 1 or mean-zero functions
//! supported in an admissible ball with `‖a‖_{L²(γ)} <= γ(B)^{-1/2}`.
//! `X^k`-atoms additionally come with an explicit preimage: `a = L^k u` with
//! `u` supported in the same ball, and the size condition picks up the factor
//! `ω_k(r_B)`.  Atoms here are built from a two-bump radial profile whose
//! `L^k`-image is evaluated exactly through Taylor jets, so `L^{-k} a = u`
//! holds by construction and reconstruction checks are closed-form.

use crate::geometry::{AdmissibleBall, EuclideanBall, WeightFunction};
use crate::jets::{ou_power_value, Jet};
use crate::quadrature::{gamma_ball, BallQuad};
use crate::{Error, Result};

/// Below this margin in `1 - |x-c|²/ρ²` the bump value underflows to exactly
/// zero in f64, so the jet is replaced by the zero jet instead of risking
/// `∞ · 0` in the reciprocal.
const EDGE_MARGIN: f64 = 2e-3;

fn bump_scalar(q: f64) -> f64 {
    // q = |x-c|²/ρ²
    if q >= 1.0 - EDGE_MARGIN {
        0.0
    } else {
        (-1.0 / (1.0 - q)).exp()
    }
}

/// Smooth mean-zero profile supported in an admissible ball: an inner bump at
/// half radius minus a multiple of the full-radius bump, the mixing weight
/// chosen so that `∫ u dγ = 0`.
#[derive(Debug, Clone)]
pub struct BumpProfile {
    ball: AdmissibleBall,
    inner_ratio: f64,
    /// Coefficient of the outer bump; the inner bump has coefficient 1.
    outer_coeff: f64,
}

impl BumpProfile {
    pub fn new(ball: AdmissibleBall) -> Result<Self> {
        let inner_ratio = 0.5;
        let bq = BallQuad::new(&ball.as_euclidean(), 48, 48)?;
        let rb = ball.radius();
        let c = ball.center().to_vec();
        let q_of = |x: &[f64], rho: f64| {
            x.iter()
                .zip(&c)
                .map(|(xi, ci)| (xi - ci) * (xi - ci))
                .sum::<f64>()
                / (rho * rho)
        };
        let inner_mass = bq.integrate_gamma(|x| bump_scalar(q_of(x, inner_ratio * rb)))?;
        let outer_mass = bq.integrate_gamma(|x| bump_scalar(q_of(x, rb)))?;
        if !(inner_mass > 0.0 && outer_mass > 0.0) {
            return Err(Error::DegenerateProfile(format!(
                "bump masses degenerate: inner {inner_mass}, outer {outer_mass}"
            )));
        }
        Ok(BumpProfile {
            ball,
            inner_ratio,
            outer_coeff: -inner_mass / outer_mass,
        })
    }

    pub fn ball(&self) -> &AdmissibleBall {
        &self.ball
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        let rb = self.ball.radius();
        let d2: f64 = x
            .iter()
            .zip(self.ball.center())
            .map(|(xi, ci)| (xi - ci) * (xi - ci))
            .sum();
        let q_inner = d2 / (self.inner_ratio * rb * self.inner_ratio * rb);
        let q_outer = d2 / (rb * rb);
        bump_scalar(q_inner) + self.outer_coeff * bump_scalar(q_outer)
    }

    /// Jet of the profile around `x0` from coordinate jets `vars`.
    pub fn jet(&self, vars: &[Jet]) -> Result<Jet> {
        let dim = self.ball.dim();
        let x0: Vec<f64> = vars.iter().map(|v| v.value()).collect();
        let rb = self.ball.radius();
        let order = vars[0].order();
        let mut out: Option<Jet> = None;
        for (rho, coeff) in [
            (self.inner_ratio * rb, 1.0),
            (rb, self.outer_coeff),
        ] {
            let d2: f64 = x0
                .iter()
                .zip(self.ball.center())
                .map(|(xi, ci)| (xi - ci) * (xi - ci))
                .sum();
            let q0 = d2 / (rho * rho);
            if q0 >= 1.0 - EDGE_MARGIN {
                continue;
            }
            // q = Σ (x_i - c_i)² / ρ² as a jet, then e^{-1/(1-q)}
            let mut q: Option<Jet> = None;
            for i in 0..dim {
                let d = vars[i].sub(&Jet::constant(dim, order, self.ball.center()[i]));
                let term = d.mul(&d).scale(1.0 / (rho * rho));
                q = Some(match q {
                    None => term,
                    Some(acc) => acc.add(&term),
                });
            }
            let q = q.expect("dimension >= 1");
            let one_minus_q = Jet::constant(dim, order, 1.0).sub(&q);
            let bump = one_minus_q.recip()?.scale(-1.0).exp();
            out = Some(match out {
                None => bump.scale(coeff),
                Some(acc) => acc.add(&bump.scale(coeff)),
            });
        }
        Ok(match out {
            Some(j) => j,
            None => Jet::constant(dim, order, 0.0),
        })
    }

    /// `(L^k u)(x0)`, exact through order-`2k` jets; zero outside the ball.
    pub fn ou_power(&self, x0: &[f64], k: usize) -> Result<f64> {
        if self.ball.dist_to_center(x0) >= self.ball.radius() * (1.0 - 1e-14) {
            return Ok(0.0);
        }
        ou_power_value(x0, k, 2 * k, |vars| self.jet(vars))
    }
}

/// An `H¹(γ)`-atom: the constant 1 or a mean-zero ball atom saturating the
/// size condition `‖a‖_{L²(γ)} = γ(B)^{-1/2}`.
#[derive(Debug, Clone)]
pub enum H1Atom {
    Constant { dim: usize },
    Ball { profile: BumpProfile, scale: f64 },
}

impl H1Atom {
    pub fn constant(dim: usize) -> Self {
        H1Atom::Constant { dim }
    }

    pub fn ball_atom(ball: AdmissibleBall) -> Result<Self> {
        let profile = BumpProfile::new(ball)?;
        let bq = BallQuad::new(&profile.ball().as_euclidean(), 48, 48)?;
        let l2 = bq
            .integrate_gamma(|x| {
                let v = profile.eval(x);
                v * v
            })?
            .sqrt();
        if l2 <= 0.0 {
            return Err(Error::DegenerateProfile("zero profile".into()));
        }
        let bound = gamma_ball(&profile.ball().as_euclidean())?.sqrt().recip();
        Ok(H1Atom::Ball {
            scale: bound / l2,
            profile,
        })
    }

    pub fn dim(&self) -> usize {
        match self {
            H1Atom::Constant { dim } => *dim,
            H1Atom::Ball { profile, .. } => profile.ball().dim(),
        }
    }

    pub fn ball(&self) -> Option<&AdmissibleBall> {
        match self {
            H1Atom::Constant { .. } => None,
            H1Atom::Ball { profile, .. } => Some(profile.ball()),
        }
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        match self {
            H1Atom::Constant { .. } => 1.0,
            H1Atom::Ball { profile, scale } => scale * profile.eval(x),
        }
    }
}

/// Report of the `H¹`-atom conditions for an arbitrary candidate function.
#[derive(Debug, Clone)]
pub struct H1Certificate {
    pub mean: f64,
    pub l2: f64,
    pub l2_bound: f64,
    pub outside_sup: f64,
    pub valid: bool,
}

/// Check the ball-atom conditions of `f` against `ball`: support, vanishing
/// mean, and the `L²` size bound.
pub fn validate_h1_atom(
    f: &dyn Fn(&[f64]) -> f64,
    ball: &AdmissibleBall,
) -> Result<H1Certificate> {
    let bq = BallQuad::new(&ball.as_euclidean(), 48, 48)?;
    let mean = bq.integrate_gamma(|x| f(x))?;
    let l2 = bq
        .integrate_gamma(|x| {
            let v = f(x);
            v * v
        })?
        .sqrt();
    let l2_bound = gamma_ball(&ball.as_euclidean())?.sqrt().recip();
    // probe an annulus just outside the support for stray mass
    let dirs = crate::quadrature::sphere_grid(ball.dim(), 32)?;
    let mut outside_sup = 0.0f64;
    for factor in [1.001, 1.05, 1.5] {
        for (dir, _) in &dirs {
            let x: Vec<f64> = ball
                .center()
                .iter()
                .zip(dir)
                .map(|(c, d)| c + factor * ball.radius() * d)
                .collect();
            outside_sup = outside_sup.max(f(&x).abs());
        }
    }
    let valid = mean.abs() <= 1e-10 * l2_bound
        && l2 <= l2_bound * (1.0 + 1e-9)
        && outside_sup == 0.0;
    Ok(H1Certificate {
        mean,
        l2,
        l2_bound,
        outside_sup,
        valid,
    })
}

/// An `X^k`-atom `a = L^k u`, `u` supported in an admissible ball, with
/// `‖a‖_{L²(γ)} <= ω_k(r_B) γ(B)^{-1/2}` enforced by a common rescaling of
/// `a` and `u` (so the preimage relation is preserved exactly).
#[derive(Debug, Clone)]
pub struct XkAtom {
    profile: BumpProfile,
    k: usize,
    scale: f64,
    l2: f64,
    l2_bound: f64,
}

/// Resolutions of the ball rule used for atom norms.
const ATOM_RADIAL: usize = 40;
const ATOM_ANGULAR: usize = 48;

impl XkAtom {
    pub fn new(ball: AdmissibleBall, k: usize) -> Result<Self> {
        if !(1..=3).contains(&k) {
            return Err(Error::Config(format!(
                "X^k atoms are provided for k in 1..=3, got {k}"
            )));
        }
        let profile = BumpProfile::new(ball)?;
        let bq = BallQuad::new(&profile.ball().as_euclidean(), ATOM_RADIAL, ATOM_ANGULAR)?;
        // ou_power is fallible, so evaluate the nodes up front
        let mut values = Vec::with_capacity(bq.nodes().len());
        for x in bq.nodes() {
            values.push(profile.ou_power(x, k)?);
        }
        let mut idx = 0;
        let raw_sq = bq.integrate_gamma(|_| {
            let v = values[idx];
            idx += 1;
            v * v
        })?;
        let raw_l2 = raw_sq.sqrt();
        if raw_l2 <= 0.0 {
            return Err(Error::DegenerateProfile("zero X^k image".into()));
        }
        let wk = WeightFunction::new(k);
        let l2_bound =
            wk.omega(profile.ball().radius()) / gamma_ball(&profile.ball().as_euclidean())?.sqrt();
        let scale = (l2_bound / raw_l2).min(1.0);
        Ok(XkAtom {
            k,
            scale,
            l2: scale * raw_l2,
            l2_bound,
            profile,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn ball(&self) -> &AdmissibleBall {
        self.profile.ball()
    }

    pub fn l2(&self) -> f64 {
        self.l2
    }

    pub fn l2_bound(&self) -> f64 {
        self.l2_bound
    }

    /// The atom `a = L^k (scale · u)`.
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        Ok(self.scale * self.profile.ou_power(x, self.k)?)
    }

    /// The exact preimage `u = L^{-k} a`.
    pub fn preimage(&self, x: &[f64]) -> f64 {
        self.scale * self.profile.eval(x)
    }

    /// `∫ |a| w_k dγ` over the supporting ball.
    pub fn weighted_l1(&self) -> Result<f64> {
        let bq = BallQuad::new(&self.ball().as_euclidean(), ATOM_RADIAL, ATOM_ANGULAR)?;
        let wk = WeightFunction::new(self.k);
        let mut values = Vec::with_capacity(bq.nodes().len());
        for x in bq.nodes() {
            values.push(self.eval(x)?.abs() * wk.eval(x));
        }
        let mut idx = 0;
        bq.integrate_gamma(|_| {
            let v = values[idx];
            idx += 1;
            v
        })
    }
}

/// Uniform weighted-mass bound valid for every `X^k`-atom on an admissible
/// ball: `∫ |a| w_k dγ <= 1 + 2^{k-2}`.
pub fn weighted_l1_bound(k: usize) -> f64 {
    1.0 + 2f64.powf(k as f64 - 2.0)
}

/// Certificate of the `X^k`-atom conditions including the spectral
/// reconstruction `⟨a, h_β⟩ = |β|^k ⟨u, h_β⟩`.
#[derive(Debug, Clone)]
pub struct XkCertificate {
    pub mean: f64,
    pub l2: f64,
    pub l2_bound: f64,
    pub reconstruction_err: f64,
    pub outside_sup: f64,
    pub weighted_l1: f64,
    pub weighted_l1_bound: f64,
    pub valid: bool,
}

/// Validate an `X^k`-atom: support containment, vanishing mean, the `L²`
/// size condition, the weighted-mass bound, and the exactness of the
/// preimage via Hermite coefficients on both sides.
pub fn validate_xk_atom(atom: &XkAtom) -> Result<XkCertificate> {
    let ball = atom.ball().as_euclidean();
    let dim = ball.dim();
    let bq = BallQuad::new(&ball, ATOM_RADIAL, ATOM_ANGULAR)?;
    let mut a_vals = Vec::with_capacity(bq.nodes().len());
    for x in bq.nodes() {
        a_vals.push(atom.eval(x)?);
    }
    let with_cache = |values: &[f64], g: &dyn Fn(&[f64], f64) -> f64| -> Result<f64> {
        let mut idx = 0;
        bq.integrate_gamma(|x| {
            let v = g(x, values[idx]);
            idx += 1;
            v
        })
    };
    let mean = with_cache(&a_vals, &|_, a| a)?;
    let l2 = with_cache(&a_vals, &|_, a| a * a)?.sqrt();

    // reconstruction: compare ⟨a, h_β⟩ / |β|^k with ⟨u, h_β⟩
    let mut reconstruction_err = 0.0f64;
    let mut coeff_scale = 0.0f64;
    let betas: Vec<crate::MultiIndex> = crate::multiindex::indices_up_to(dim, 4)
        .into_iter()
        .filter(|b| b.order() >= 1)
        .collect();
    let mut pairs = Vec::new();
    for beta in &betas {
        let ca = with_cache(&a_vals, &|x, a| {
            a * crate::multiindex::hermite_eval_normalized(beta, x).unwrap()
        })?;
        let cu = bq.integrate_gamma(|x| {
            atom.preimage(x) * crate::multiindex::hermite_eval_normalized(beta, x).unwrap()
        })?;
        coeff_scale = coeff_scale.max(cu.abs());
        pairs.push((beta.order(), ca, cu));
    }
    for (order, ca, cu) in pairs {
        let predicted = ca / (order as f64).powi(atom.k() as i32);
        reconstruction_err = reconstruction_err.max((predicted - cu).abs());
    }
    let reconstruction_err = reconstruction_err / coeff_scale.max(f64::MIN_POSITIVE);

    let dirs = crate::quadrature::sphere_grid(dim, 32)?;
    let mut outside_sup = 0.0f64;
    for factor in [1.001, 1.2] {
        for (dir, _) in &dirs {
            let x: Vec<f64> = ball
                .center
                .iter()
                .zip(dir)
                .map(|(c, d)| c + factor * ball.radius * d)
                .collect();
            outside_sup = outside_sup.max(atom.eval(&x)?.abs());
        }
    }
    let weighted = atom.weighted_l1()?;
    let wbound = weighted_l1_bound(atom.k());
    let valid = mean.abs() <= 1e-8 * atom.l2_bound().max(l2)
        && l2 <= atom.l2_bound() * (1.0 + 1e-9)
        && reconstruction_err < 1e-6
        && outside_sup == 0.0
        && weighted <= wbound * (1.0 + 1e-9);
    Ok(XkCertificate {
        mean,
        l2,
        l2_bound: atom.l2_bound(),
        reconstruction_err,
        outside_sup,
        weighted_l1: weighted,
        weighted_l1_bound: wbound,
        valid,
    })
}

/// Euclidean support of any atom built here (for kernel-route application).
pub fn atom_support(ball: &AdmissibleBall) -> EuclideanBall {
    ball.as_euclidean()
}
