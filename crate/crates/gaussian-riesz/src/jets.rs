//! Dense truncated Taylor jets in up to three variables.
//!
//! A jet stores the Taylor coefficients of a function around a base point up
//! to a fixed total order.  Composition rules (product, reciprocal, exp) let
//! closed-form bump profiles propagate exact derivatives, and the
//! Ornstein-Uhlenbeck operator acts on jets symbolically; this is how atoms
//! `a = L^k u` are evaluated without symbolic expression swell.

use crate::{Error, Result};

/// Taylor jet of total order `order` at a base point of dimension `dim`.
///
/// Coefficients are laid out densely on the per-axis box `(order+1)^dim`;
/// entries with total degree above `valid_order` are meaningless (each
/// differentiation consumes one order of validity).
#[derive(Debug, Clone)]
pub struct Jet {
    dim: usize,
    order: usize,
    /// Orders above this are garbage; value extraction requires >= 0.
    valid_order: isize,
    c: Vec<f64>,
}

impl Jet {
    fn stride(&self) -> usize {
        self.order + 1
    }

    fn len(dim: usize, order: usize) -> usize {
        (order + 1).pow(dim as u32)
    }

    fn idx(&self, beta: &[usize]) -> usize {
        let s = self.stride();
        beta.iter().fold(0, |acc, &b| acc * s + b)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn constant(dim: usize, order: usize, value: f64) -> Self {
        let mut c = vec![0.0; Self::len(dim, order)];
        c[0] = value;
        Jet {
            dim,
            order,
            valid_order: order as isize,
            c,
        }
    }

    /// Jets of the coordinate functions `x_i` around `x0`.
    pub fn variables(x0: &[f64], order: usize) -> Vec<Jet> {
        let dim = x0.len();
        (0..dim)
            .map(|i| {
                let mut j = Jet::constant(dim, order, x0[i]);
                let mut beta = vec![0; dim];
                beta[i] = 1;
                let pos = j.idx(&beta);
                j.c[pos] = 1.0;
                j
            })
            .collect()
    }

    pub fn value(&self) -> f64 {
        assert!(self.valid_order >= 0, "jet has exhausted its valid order");
        self.c[0]
    }

    /// Taylor coefficient at `beta`; the mixed partial is `coeff * beta!`.
    pub fn coeff(&self, beta: &[usize]) -> f64 {
        self.c[self.idx(beta)]
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    fn zip(&self, other: &Jet, f: impl Fn(f64, f64) -> f64) -> Jet {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.order, other.order);
        Jet {
            dim: self.dim,
            order: self.order,
            valid_order: self.valid_order.min(other.valid_order),
            c: self
                .c
                .iter()
                .zip(&other.c)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    pub fn add(&self, other: &Jet) -> Jet {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Jet) -> Jet {
        self.zip(other, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> Jet {
        Jet {
            dim: self.dim,
            order: self.order,
            valid_order: self.valid_order,
            c: self.c.iter().map(|v| v * s).collect(),
        }
    }

    pub fn mul(&self, other: &Jet) -> Jet {
        assert_eq!(self.dim, other.dim);
        assert_eq!(self.order, other.order);
        let s = self.stride();
        let mut out = Jet {
            dim: self.dim,
            order: self.order,
            valid_order: self.valid_order.min(other.valid_order),
            c: vec![0.0; self.c.len()],
        };
        // convolution over boxes, truncated at total degree `order`
        let indices = box_indices(self.dim, self.order);
        for a in &indices {
            let va = self.c[self.idx(a)];
            if va == 0.0 {
                continue;
            }
            let ta: usize = a.iter().sum();
            for b in &indices {
                let tb: usize = b.iter().sum();
                if ta + tb > self.order {
                    continue;
                }
                let vb = other.c[other.idx(b)];
                if vb == 0.0 {
                    continue;
                }
                let pos = a
                    .iter()
                    .zip(b)
                    .fold(0, |acc, (ai, bi)| acc * s + (ai + bi));
                out.c[pos] += va * vb;
            }
        }
        out
    }

    /// Nilpotent part (constant term removed).
    fn fractional(&self) -> Jet {
        let mut j = self.clone();
        j.c[0] = 0.0;
        j
    }

    /// `1 / self`; requires a nonzero constant term.
    pub fn recip(&self) -> Result<Jet> {
        let a0 = self.c[0];
        if a0 == 0.0 || !a0.is_finite() {
            return Err(Error::DegenerateProfile(format!(
                "jet reciprocal at zero constant term ({a0})"
            )));
        }
        let frac = self.fractional().scale(-1.0 / a0);
        let mut acc = Jet::constant(self.dim, self.order, 1.0);
        let mut term = Jet::constant(self.dim, self.order, 1.0);
        for _ in 0..self.order {
            term = term.mul(&frac);
            acc = acc.add(&term);
        }
        Ok(acc.scale(1.0 / a0))
    }

    /// `exp(self)`.
    pub fn exp(&self) -> Jet {
        let e0 = self.c[0].exp();
        let frac = self.fractional();
        let mut acc = Jet::constant(self.dim, self.order, 1.0);
        let mut term = Jet::constant(self.dim, self.order, 1.0);
        for m in 1..=self.order {
            term = term.mul(&frac).scale(1.0 / m as f64);
            acc = acc.add(&term);
        }
        acc.scale(e0)
    }

    /// Partial derivative `∂_i`; consumes one order of validity.
    pub fn derivative(&self, i: usize) -> Jet {
        let s = self.stride();
        let mut out = Jet {
            dim: self.dim,
            order: self.order,
            valid_order: self.valid_order - 1,
            c: vec![0.0; self.c.len()],
        };
        for beta in box_indices(self.dim, self.order) {
            if beta[i] == 0 {
                continue;
            }
            let mut target = beta.clone();
            target[i] -= 1;
            let pos = target.iter().fold(0, |acc, &b| acc * s + b);
            out.c[pos] = self.c[self.idx(&beta)] * beta[i] as f64;
        }
        out
    }
}

fn box_indices(dim: usize, order: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; dim];
    loop {
        if cur.iter().sum::<usize>() <= order {
            out.push(cur.clone());
        }
        // odometer over the box
        let mut pos = dim;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < order {
                cur[pos] += 1;
                for v in cur.iter_mut().skip(pos + 1) {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// One application of `L = -1/2 Δ + x·∇` to a jet based at `x0`.
pub fn ou_apply(u: &Jet, x_vars: &[Jet]) -> Jet {
    let dim = x_vars.len();
    let mut out: Option<Jet> = None;
    for i in 0..dim {
        let di = u.derivative(i);
        let term = x_vars[i].mul(&di).sub(&di.derivative(i).scale(0.5));
        out = Some(match out {
            None => term,
            Some(acc) => acc.add(&term),
        });
    }
    out.expect("dimension >= 1")
}

/// `(L^k u)(x0)` for a jet builder evaluated at `x0`.
pub fn ou_power_value(
    x0: &[f64],
    k: usize,
    order: usize,
    build: impl Fn(&[Jet]) -> Result<Jet>,
) -> Result<f64> {
    assert!(order >= 2 * k, "jet order must cover 2k derivatives");
    let vars = Jet::variables(x0, order);
    let mut u = build(&vars)?;
    if !u.is_finite() {
        return Err(Error::DegenerateProfile(format!(
            "jet overflow at {x0:?}; widen the profile"
        )));
    }
    for _ in 0..k {
        u = ou_apply(&u, &vars);
    }
    if !u.is_finite() {
        return Err(Error::DegenerateProfile(format!(
            "jet overflow applying L^{k} at {x0:?}"
        )));
    }
    Ok(u.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn product_and_exp_match_closed_forms() {
        // f(x) = exp(x0^2 * x1) around (0.3, -0.2), check a mixed partial
        let vars = Jet::variables(&[0.3, -0.2], 4);
        let f = vars[0].mul(&vars[0]).mul(&vars[1]).exp();
        let h = 1e-4;
        let g = |x: f64, y: f64| (x * x * y).exp();
        let fd = (g(0.3 + h, -0.2) - g(0.3 - h, -0.2)) / (2.0 * h);
        assert_abs_diff_eq!(f.coeff(&[1, 0]), fd, epsilon = 1e-6);
        let fd2 = (g(0.3 + h, -0.2) - 2.0 * g(0.3, -0.2) + g(0.3 - h, -0.2)) / (h * h);
        assert_abs_diff_eq!(f.coeff(&[2, 0]) * 2.0, fd2, epsilon = 1e-5);
    }

    #[test]
    fn recip_matches() {
        let vars = Jet::variables(&[0.5], 5);
        let f = Jet::constant(1, 5, 1.0).sub(&vars[0].mul(&vars[0])).recip().unwrap();
        // d/dx 1/(1-x^2) = 2x/(1-x^2)^2 at 0.5: 1/0.5625... compute
        let expect = 2.0 * 0.5 / (0.75f64 * 0.75);
        assert_abs_diff_eq!(f.coeff(&[1]), expect, epsilon = 1e-12);
    }

    #[test]
    fn ou_on_hermite_is_eigen() {
        // L h_m = m h_m pointwise; try m = 3 in 1-d at a few points
        use crate::multiindex::hermite_eval_1d_normalized;
        for &x0 in &[-1.1, 0.0, 0.8] {
            let vars = Jet::variables(&[x0], 6);
            // h_3(x) = (8x^3 - 12x)/sqrt(48)
            let x = &vars[0];
            let h3 = x
                .mul(x)
                .mul(x)
                .scale(8.0)
                .sub(&x.scale(12.0))
                .scale(1.0 / 48f64.sqrt());
            let lh3 = ou_apply(&h3, &vars);
            assert_abs_diff_eq!(
                lh3.value(),
                3.0 * hermite_eval_1d_normalized(3, x0),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn ou_power_matches_repeated_eigen() {
        // L^2 h_2 = 4 h_2 in 2-d via h_(1,1)(x) = 2 x0 x1 / sqrt(4) ... use
        // h_(1,1) = sqrt2 x0 * sqrt2 x1, eigenvalue |β| = 2, L^2 -> 4.
        let value = ou_power_value(&[0.4, -0.7], 2, 6, |vars| {
            Ok(vars[0].mul(&vars[1]).scale(2.0))
        })
        .unwrap();
        assert_abs_diff_eq!(value, 4.0 * 2.0 * 0.4 * -0.7, epsilon = 1e-12);
    }
}
