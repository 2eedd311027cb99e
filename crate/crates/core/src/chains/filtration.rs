//! The filtration `V_n = ker Yⁿ` on a space of homogeneous polynomials.
//!
//! The basis of each `V_n` is adapted to heights: the height of `q` is the
//! least `h` with `Y^h(q) = 0`, basis elements are listed by increasing
//! height, and the first `s` of them span `V_n ∩ ker Y^{h_s}`. When the
//! heights present are exactly `1..=dim V_n` this is the usual adapted
//! basis, with `Y^{d−1}` killing all but the last element. Heights can skip
//! values (for instance when some intermediate degree carries no kernel of
//! `Y`), and then only the height-based form of the condition can hold.

use num_rational::BigRational;
use num_traits::Signed;

use super::ChainError;
use crate::algebra::{GaussRational, Monomial, Poly};
use crate::aut_solver::monomial_basis;
use crate::fields::VectorField;
use crate::grading::Weight;
use crate::linalg::{canonical_basis, nullspace, rank};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationLevel {
    pub n: usize,
    /// Adapted basis, by increasing height.
    pub basis: Vec<Poly>,
    pub heights: Vec<usize>,
}

impl FiltrationLevel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The adapted-basis condition at the top height `h`:
    /// `Y^h(F_top) = 0`, `Y^{h−1}(F_top) ≠ 0` and `Y^{h−1}(F_s) = 0` below.
    pub fn is_adapted(&self, y: &VectorField) -> bool {
        match self.heights.last() {
            None => true,
            Some(&h) => top_condition(y, &self.basis, h),
        }
    }

    /// The same condition at `h = dim V_n`; `None` when the heights skip a
    /// value, since then no basis can satisfy it.
    pub fn is_adapted_at_dimension(&self, y: &VectorField) -> Option<bool> {
        let d = self.dim();
        if self.heights.iter().copied().ne(1..=d) {
            return None;
        }
        Some(d == 0 || top_condition(y, &self.basis, d))
    }
}

fn top_condition(y: &VectorField, basis: &[Poly], h: usize) -> bool {
    let (top, rest) = basis.split_last().expect("nonempty basis");
    apply_pow(y, top, h).is_zero()
        && !apply_pow(y, top, h - 1).is_zero()
        && rest.iter().all(|f| apply_pow(y, f, h - 1).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelFiltration {
    pub operator: VectorField,
    pub degree: BigRational,
    /// Levels `n = 1, 2, …`.
    pub levels: Vec<FiltrationLevel>,
}

impl KernelFiltration {
    /// `dim V_n ≤ n` at every level.
    pub fn dimension_bound_holds(&self) -> bool {
        self.levels.iter().all(|l| l.dim() <= l.n)
    }

    pub fn is_increasing(&self) -> bool {
        self.levels.windows(2).all(|w| w[0].dim() <= w[1].dim())
    }

    pub fn all_adapted(&self) -> bool {
        self.levels.iter().all(|l| l.is_adapted(&self.operator))
    }
}

pub fn apply_pow(y: &VectorField, p: &Poly, k: usize) -> Poly {
    (0..k).fold(p.clone(), |acc, _| y.apply(&acc))
}

fn check_operator(y: &VectorField, w: &Weight) -> Result<BigRational, ChainError> {
    if !y.is_rigid() || !y.f1.is_z_only() || !y.f2.is_z_only() {
        return Err(ChainError::NotPositiveWeight);
    }
    let mu = y.weight(w).map_err(|_| ChainError::NotPositiveWeight)?;
    if !mu.is_positive() {
        return Err(ChainError::NotPositiveWeight);
    }
    Ok(mu)
}

/// Canonical basis of `ker Yⁿ` inside the degree-`kappa` polynomials, as
/// coordinate vectors over `domain`.
fn kernel_of_power(y: &VectorField, w: &Weight, mu: &BigRational, kappa: &BigRational, domain: &[Monomial], n: usize) -> Vec<Vec<GaussRational>> {
    let target = monomial_basis(w, &(kappa + mu * BigRational::from_integer(n.into())));
    let images: Vec<Poly> = domain.iter().map(|m| apply_pow(y, &Poly::monomial(*m), n)).collect();
    let matrix: Vec<Vec<GaussRational>> = target.iter().map(|t| images.iter().map(|im| im.coeff(t)).collect()).collect();
    canonical_basis(&nullspace(&matrix, domain.len()))
}

fn to_poly(domain: &[Monomial], v: &[GaussRational]) -> Poly {
    Poly::from_terms(domain.iter().zip(v).map(|(m, c)| (*m, c.clone())))
}

/// `dim {q : Y(q) = 0}` among holomorphic polynomials of degree `kappa`.
pub fn annihilator_dim(y: &VectorField, w: &Weight, kappa: &BigRational) -> Result<usize, ChainError> {
    let mu = check_operator(y, w)?;
    let domain = monomial_basis(w, kappa);
    Ok(kernel_of_power(y, w, &mu, kappa, &domain, 1).len())
}

pub fn kernel_filtration(y: &VectorField, w: &Weight, kappa: &BigRational, depth: usize) -> Result<KernelFiltration, ChainError> {
    let mu = check_operator(y, w)?;
    let domain = monomial_basis(w, kappa);
    let kernels: Vec<Vec<Vec<GaussRational>>> = (1..=depth).map(|n| kernel_of_power(y, w, &mu, kappa, &domain, n)).collect();

    let mut levels = Vec::with_capacity(depth);
    for n in 1..=depth {
        let mut chosen: Vec<Vec<GaussRational>> = Vec::new();
        let mut heights = Vec::new();
        for (h, kernel) in kernels.iter().enumerate().take(n) {
            for v in kernel {
                let mut trial = chosen.clone();
                trial.push(v.clone());
                if rank(&trial) > chosen.len() {
                    chosen = trial;
                    heights.push(h + 1);
                }
            }
        }
        levels.push(FiltrationLevel { n, basis: chosen.iter().map(|v| to_poly(&domain, v)).collect(), heights });
    }
    Ok(KernelFiltration { operator: y.clone(), degree: kappa.clone(), levels })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Var};

    fn shear() -> VectorField {
        VectorField::new(Poly::term(Monomial::holo(0, 2), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap()
    }

    fn quadratic() -> VectorField {
        VectorField::new(Poly::monomial(Monomial::holo(2, 0)), -Poly::monomial(Monomial::holo(1, 1)), Poly::zero()).unwrap()
    }

    #[test]
    fn shear_levels() {
        let w = Weight::from_ratios(1, 3, 1, 3);
        let f = kernel_filtration(&shear(), &w, &rat(1, 3), 3).unwrap();
        assert_eq!(f.levels[0].basis, vec![Poly::var(Var::Z2)]);
        assert_eq!(f.levels[1].dim(), 2);
        assert_eq!(f.levels[1].heights, vec![1, 2]);
        assert!(f.levels[1].basis[1].has_var(Var::Z1));
        assert!(f.dimension_bound_holds() && f.is_increasing() && f.all_adapted());
        assert_eq!(f.levels[1].is_adapted_at_dimension(&shear()), Some(true));
    }

    #[test]
    fn empty_degree() {
        let w = Weight::from_ratios(1, 3, 1, 3);
        let f = kernel_filtration(&shear(), &w, &rat(1, 5), 4).unwrap();
        assert!(f.levels.iter().all(|l| l.dim() == 0));
    }

    #[test]
    fn heights_with_gaps() {
        // degree 2 under equal weights: z2^2 has height 1, z1*z2 height 3
        let w = Weight::from_ratios(1, 7, 1, 7);
        let f = kernel_filtration(&quadratic(), &w, &rat(2, 7), 4).unwrap();
        let l3 = &f.levels[2];
        assert_eq!(l3.heights, vec![1, 3]);
        assert!(l3.is_adapted(&quadratic()));
        assert_eq!(l3.is_adapted_at_dimension(&quadratic()), None);
        assert!(f.dimension_bound_holds());
    }

    #[test]
    fn rejects_non_positive() {
        let w = Weight::from_ratios(1, 3, 1, 3);
        let rot = VectorField::new(Poly::term(Monomial::holo(1, 0), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap();
        assert_eq!(kernel_filtration(&rot, &w, &rat(1, 3), 2), Err(ChainError::NotPositiveWeight));
    }

    #[test]
    fn annihilators_are_small() {
        let w = Weight::from_ratios(1, 5, 1, 5);
        for k in 0..8 {
            assert!(annihilator_dim(&quadratic(), &w, &rat(k, 5)).unwrap() <= 1);
            assert!(annihilator_dim(&shear(), &w, &rat(k, 5)).unwrap() <= 1);
        }
    }
}
