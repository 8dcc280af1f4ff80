//! Spectral functional calculus of the Ornstein-Uhlenbeck operator on
//! truncated Hermite expansions: chaos projections `P_j`, the mean-removing
//! projection `Π₀`, and real powers `L^z` / `(L+I)^z`.

use crate::multiindex::{lower, raise, HermiteCoeffs};

/// Real power of `L` (shift 0) or `L + I` (shift 1), acting on `h_β` as
/// multiplication by `(|β| + shift)^z`.
///
/// With shift 0 and `z <= 0` the constant coefficient is annihilated: the
/// negative powers are only defined through `Π₀`.
#[derive(Debug, Clone, Copy)]
pub struct SpectralMultiplier {
    pub exponent: f64,
    pub shift: u8,
}

impl SpectralMultiplier {
    pub fn l_power(z: f64) -> Self {
        SpectralMultiplier {
            exponent: z,
            shift: 0,
        }
    }

    pub fn l_plus_i_power(z: f64) -> Self {
        SpectralMultiplier {
            exponent: z,
            shift: 1,
        }
    }

    fn factor(&self, order: usize) -> f64 {
        let base = order as f64 + self.shift as f64;
        if base == 0.0 {
            // L^z annihilates constants for every real z by the Π₀ convention
            0.0
        } else {
            base.powf(self.exponent)
        }
    }
}

/// Projection `P_j` onto the Wiener chaos of order `j`.
pub fn project(j: usize, f: &HermiteCoeffs) -> HermiteCoeffs {
    HermiteCoeffs::from_entries(
        f.dim(),
        f.iter()
            .filter(|(beta, _)| beta.order() == j)
            .map(|(beta, v)| (beta.clone(), v)),
    )
}

/// `Π₀ = I - P₀`: zeroes the mean.
pub fn pi0(f: &HermiteCoeffs) -> HermiteCoeffs {
    HermiteCoeffs::from_entries(
        f.dim(),
        f.iter()
            .filter(|(beta, _)| beta.order() > 0)
            .map(|(beta, v)| (beta.clone(), v)),
    )
}

/// Apply `L^z` or `(L+I)^z` coefficient-wise.
pub fn apply_power(mult: SpectralMultiplier, f: &HermiteCoeffs) -> HermiteCoeffs {
    HermiteCoeffs::from_entries(
        f.dim(),
        f.iter()
            .map(|(beta, v)| (beta.clone(), v * mult.factor(beta.order())))
            .filter(|(_, v)| *v != 0.0),
    )
}

/// `L f = Σ_i δ*_i δ_i f`, assembled from the ladders.  Used to tie the
/// spectral route to the ladder route.
pub fn ou_apply_via_ladders(f: &HermiteCoeffs) -> HermiteCoeffs {
    let mut out = HermiteCoeffs::zero(f.dim());
    for i in 0..f.dim() {
        out.add_assign(&raise(i, &lower(i, f)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiindex::{indices_up_to, MultiIndex};
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;

    fn random_coeffs(rng: &mut impl Rng, dim: usize, deg: usize) -> HermiteCoeffs {
        HermiteCoeffs::from_entries(
            dim,
            indices_up_to(dim, deg)
                .into_iter()
                .map(|b| (b, rng.gen_range(-1.0..1.0))),
        )
    }

    #[test]
    fn projections() {
        let mut f = HermiteCoeffs::basis(MultiIndex::new(vec![1, 0]));
        f.add(MultiIndex::new(vec![2, 0]), 1.0);
        let p1 = project(1, &f);
        assert_eq!(p1.len(), 1);
        assert_abs_diff_eq!(p1.get(&MultiIndex::new(vec![1, 0])), 1.0);

        // P_0 f = mean
        let mut g = f.clone();
        g.add(MultiIndex::zeros(2), 0.7);
        assert_abs_diff_eq!(project(0, &g).get(&MultiIndex::zeros(2)), 0.7);

        // completeness on truncations
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let f = random_coeffs(&mut rng, 2, 5);
        let mut sum = HermiteCoeffs::zero(2);
        for j in 0..=5 {
            sum.add_assign(&project(j, &f));
        }
        assert!(sum.sub(&f).l2_norm() < 1e-14);
    }

    #[test]
    fn pi0_properties() {
        let h0 = HermiteCoeffs::basis(MultiIndex::zeros(1));
        assert!(pi0(&h0).is_empty());
        let h3 = HermiteCoeffs::basis(MultiIndex::new(vec![3]));
        assert_eq!(pi0(&h3), h3);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let f = random_coeffs(&mut rng, 2, 4);
        assert!(pi0(&pi0(&f)).sub(&pi0(&f)).l2_norm() < 1e-15);
    }

    #[test]
    fn eigenvalue_relation() {
        let h2 = HermiteCoeffs::basis(MultiIndex::new(vec![2]));
        let lf = apply_power(SpectralMultiplier::l_power(1.0), &h2);
        assert_abs_diff_eq!(lf.get(&MultiIndex::new(vec![2])), 2.0);

        let h3 = HermiteCoeffs::basis(MultiIndex::new(vec![3]));
        let g = apply_power(SpectralMultiplier::l_plus_i_power(-0.5), &h3);
        assert_abs_diff_eq!(g.get(&MultiIndex::new(vec![3])), 0.5);
    }

    #[test]
    fn lk_lminusk_is_pi0() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for k in 1..=4 {
            let f = random_coeffs(&mut rng, 2, 6);
            let g = apply_power(
                SpectralMultiplier::l_power(k as f64),
                &apply_power(SpectralMultiplier::l_power(-(k as f64)), &f),
            );
            assert!(g.sub(&pi0(&f)).l2_norm() < 1e-12);
        }
    }

    #[test]
    fn semigroup_law_on_pi0() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        let f = pi0(&random_coeffs(&mut rng, 2, 5));
        for (z1, z2) in [(0.5, -1.5), (2.0, -0.5), (-0.25, -0.75)] {
            let a = apply_power(
                SpectralMultiplier::l_power(z1),
                &apply_power(SpectralMultiplier::l_power(z2), &f),
            );
            let b = apply_power(SpectralMultiplier::l_power(z1 + z2), &f);
            assert!(a.sub(&b).l2_norm() < 1e-14 * f.l2_norm());
        }
    }

    #[test]
    fn self_adjointness() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let f = random_coeffs(&mut rng, 2, 5);
            let g = random_coeffs(&mut rng, 2, 5);
            let m = SpectralMultiplier::l_power(0.7);
            let lhs = apply_power(m, &f).dot(&g);
            let rhs = f.dot(&apply_power(m, &g));
            assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0));
        }
    }

    #[test]
    fn l_equals_sum_ladders() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        for dim in 1..=3 {
            let f = random_coeffs(&mut rng, dim, 5);
            let a = apply_power(SpectralMultiplier::l_power(1.0), &f);
            let b = ou_apply_via_ladders(&f);
            assert!(a.sub(&b).l2_norm() < 1e-13 * f.l2_norm().max(1.0));
        }
    }
}
