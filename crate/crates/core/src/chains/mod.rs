//! Symmetric pairs of chains for a generalized rotation.
//!
//! A chain for `Y` is a sequence `U¹ … Uⁿ` with `Y(Uʲ) = c_j U^{j+1}` and
//! `Y(Uⁿ) = 0`. Two chains of equal length form a symmetric pair when
//! `c_j = −conj(d_{n−j})`; such a pair contributes the real block
//! `Re Σ_k Uᵏ·conj(V^{n−k+1})` to a model.

mod extract;
mod filtration;
mod random;
mod recover;

pub use extract::{extract_chains, lowest_block_rank};
pub use filtration::{annihilator_dim, kernel_filtration, FiltrationLevel, KernelFiltration};
pub use random::{random_chain_pair, random_model, ChainFamily, GeneratedModel, GeneratedPair};
pub use recover::recover_rotation;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{GaussRational, Poly, RealPoly};
use crate::fields::VectorField;
use crate::grading::{holomorphic_degree, is_homogeneous, GradingError, Model, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ChainError {
    #[error("field is not a generalized rotation of the model")]
    NotARotation,
    #[error("lowest bihomogeneous block has rank {0}, expected 1")]
    RankExceedsOne(usize),
    #[error("extraction did not terminate within {0} steps")]
    NonTerminating(usize),
    #[error("internal chain invariant violated: {0}")]
    Internal(String),
    #[error("chain tails have vanishing Jacobian")]
    ZeroJacobian,
    #[error("chain data inconsistent: division not exact")]
    NotDivisible,
    #[error("block is not homogeneous of weighted degree 1")]
    DegreeMismatch,
    #[error("synthesized polynomial has pluriharmonic terms")]
    PluriharmonicResult,
    #[error("synthesized polynomial is zero")]
    ZeroResult,
    #[error("no chain of the requested shape fits the degree budget")]
    InfeasibleBudget,
    #[error("operator must be rigid, z-only and of positive weight")]
    NotPositiveWeight,
    #[error("malformed chain: {0}")]
    Malformed(String),
    #[error(transparent)]
    Grading(#[from] GradingError),
}

/// `U¹ … Uⁿ` with constants `c_1 … c_{n−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    polys: Vec<Poly>,
    consts: Vec<GaussRational>,
}

impl Chain {
    pub fn new(polys: Vec<Poly>, consts: Vec<GaussRational>) -> Result<Self, ChainError> {
        if polys.is_empty() {
            return Err(ChainError::Malformed("empty chain".into()));
        }
        if consts.len() + 1 != polys.len() {
            return Err(ChainError::Malformed(format!("{} polynomials need {} constants", polys.len(), polys.len() - 1)));
        }
        if polys.iter().any(|p| p.is_zero() || !p.is_z_only() || !p.is_holomorphic()) {
            return Err(ChainError::Malformed("chain elements must be nonzero holomorphic z-polynomials".into()));
        }
        if consts.iter().any(Zero::is_zero) {
            return Err(ChainError::Malformed("chain constants must be nonzero".into()));
        }
        Ok(Self { polys, consts })
    }

    /// Reads the constants off `Y`; fails unless the polynomials form a
    /// chain for it.
    pub fn from_operator(y: &VectorField, polys: Vec<Poly>) -> Result<Self, ChainError> {
        let mut consts = Vec::with_capacity(polys.len().saturating_sub(1));
        for w in polys.windows(2) {
            let image = y.apply(&w[0]);
            let c = match (image.leading_term(), w[1].leading_term()) {
                (Some((m1, a)), Some((m2, b))) if m1 == m2 => a / b,
                _ => return Err(ChainError::Internal(format!("Y({}) is not a multiple of {}", w[0], w[1]))),
            };
            if image != w[1].scale(&c) {
                return Err(ChainError::Internal(format!("Y({}) is not a multiple of {}", w[0], w[1])));
            }
            consts.push(c);
        }
        let chain = Self::new(polys, consts)?;
        if !y.apply(chain.top()).is_zero() {
            return Err(ChainError::Internal("last chain element is not annihilated".into()));
        }
        Ok(chain)
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn consts(&self) -> &[GaussRational] {
        &self.consts
    }

    pub fn top(&self) -> &Poly {
        self.polys.last().expect("chains are nonempty")
    }

    pub fn verify(&self, y: &VectorField) -> bool {
        self.polys.windows(2).zip(&self.consts).all(|(w, c)| y.apply(&w[0]) == w[1].scale(c)) && y.apply(self.top()).is_zero()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricChainPair {
    pub u: Chain,
    pub v: Chain,
}

impl SymmetricChainPair {
    pub fn new(u: Chain, v: Chain) -> Result<Self, ChainError> {
        if u.len() != v.len() {
            return Err(ChainError::Malformed("chains of a pair must have equal length".into()));
        }
        Ok(Self { u, v })
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// `c_j = −conj(d_{n−j})` for every `j`.
    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (1..n).all(|j| self.u.consts[j - 1] == -self.v.consts[n - j - 1].conj())
    }

    /// `Σ_k Uᵏ·conj(V^{n−k+1})`, before taking the real part.
    pub fn sesquilinear(&self) -> Poly {
        let n = self.len();
        (0..n).fold(Poly::zero(), |acc, k| &acc + &(&self.u.polys[k] * &self.v.polys[n - 1 - k].conj()))
    }

    /// The real block `T = Re Σ_k Uᵏ·conj(V^{n−k+1})`.
    pub fn block(&self) -> RealPoly {
        self.sesquilinear().re_part().expect("real part is real")
    }

    /// Holomorphic weighted degrees of the `U` chain elements.
    pub fn degrees(&self, w: &Weight) -> Vec<BigRational> {
        self.u
            .polys
            .iter()
            .map(|p| p.leading_term().map(|(m, _)| holomorphic_degree(m, w)).unwrap_or_else(BigRational::zero))
            .collect()
    }
}

/// Checks every chain and symmetry condition against `Y`.
pub fn verify_pair(y: &VectorField, pair: &SymmetricChainPair) -> bool {
    pair.u.len() == pair.v.len() && pair.u.verify(y) && pair.v.verify(y) && pair.is_symmetric()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub pairs: Vec<SymmetricChainPair>,
    pub rotation: VectorField,
}

impl Decomposition {
    /// `Σ_j T_j`.
    pub fn synthesize(&self) -> Poly {
        sum_blocks(&self.pairs)
    }

    pub fn max_length(&self) -> usize {
        self.pairs.iter().map(SymmetricChainPair::len).max().unwrap_or(0)
    }

    pub fn verify(&self) -> bool {
        self.pairs.iter().all(|p| verify_pair(&self.rotation, p))
    }
}

fn sum_blocks(pairs: &[SymmetricChainPair]) -> Poly {
    pairs.iter().fold(Poly::zero(), |acc, p| &acc + p.block().as_poly())
}

/// `P = Σ_j T_j` as a validated model of the given weight.
pub fn synthesize_model(pairs: &[SymmetricChainPair], w: &Weight) -> Result<Model, ChainError> {
    let one = BigRational::one();
    for p in pairs {
        if !is_homogeneous(p.block().as_poly(), w, &one) {
            return Err(ChainError::DegreeMismatch);
        }
    }
    let p = sum_blocks(pairs);
    if p.is_zero() {
        return Err(ChainError::ZeroResult);
    }
    let p = RealPoly::try_from(p).expect("sum of real blocks");
    if !p.is_pluriharmonic_free() {
        return Err(ChainError::PluriharmonicResult);
    }
    Ok(Model::validate(p, Some(w.clone()))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Monomial};

    pub(crate) fn shear_y(l: u32) -> VectorField {
        VectorField::new(Poly::term(Monomial::holo(0, l), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap()
    }

    fn pair(c: GaussRational, d: GaussRational) -> SymmetricChainPair {
        let u = Chain::new(vec![Poly::var(crate::Var::Z1), Poly::monomial(Monomial::holo(0, 2))], vec![c]).unwrap();
        let v = Chain::new(vec![Poly::var(crate::Var::Z1), Poly::monomial(Monomial::holo(0, 2))], vec![d]).unwrap();
        SymmetricChainPair::new(u, v).unwrap()
    }

    #[test]
    fn verification() {
        let y = shear_y(2);
        assert!(verify_pair(&y, &pair(GaussRational::i(), GaussRational::i())));
        assert!(!verify_pair(&y, &pair(GaussRational::one(), GaussRational::one())));
        let bad = Chain::new(vec![Poly::var(crate::Var::Z1)], vec![]).unwrap();
        assert!(!bad.verify(&y));
    }

    #[test]
    fn synthesis() {
        let w = Weight::from_ratios(1, 3, 1, 3);
        let m = synthesize_model(&[pair(GaussRational::i(), GaussRational::i())], &w).unwrap();
        let expected = Poly::monomial(Monomial::mixed(1, 0, 0, 2)).re_part().unwrap().scale_rational(&rat(2, 1));
        assert_eq!(m.poly(), &expected);
        assert_eq!(synthesize_model(&[], &w), Err(ChainError::ZeroResult));
        assert_eq!(synthesize_model(&[pair(GaussRational::i(), GaussRational::i())], &Weight::from_ratios(1, 2, 1, 2)), Err(ChainError::DegreeMismatch));
    }

    #[test]
    fn from_operator_reads_constants() {
        let y = shear_y(2);
        let c = Chain::from_operator(&y, vec![Poly::var(crate::Var::Z1).scale(&GaussRational::ratio(1, 2)), Poly::monomial(Monomial::holo(0, 2)).scale(&GaussRational::ratio(1, 2))]).unwrap();
        assert_eq!(c.consts(), &[GaussRational::i()]);
        assert!(Chain::from_operator(&y, vec![Poly::var(crate::Var::Z1)]).is_err());
    }
}
