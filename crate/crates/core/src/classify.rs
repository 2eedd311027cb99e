//! Holomorphic nondegeneracy of a model and the 2-jet verdict.
//!
//! Degeneracy is tested on holomorphic fields `f1 ∂z1 + f2 ∂z2` with
//! coefficients in `z` alone: such a field annihilates `P` exactly when the
//! reduced fraction `P_z1 / P_z2` is free of conjugate variables.

use num_rational::BigRational;
use serde::Serialize;

use crate::algebra::{AlgebraError, Poly, RealPoly, Var};
use crate::aut_solver::{compute_g_c, AutError};
use crate::chains::{extract_chains, ChainError, Decomposition};
use crate::fields::VectorField;
use crate::grading::{GradingError, Model, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Solver(#[from] AutError),
    #[error(transparent)]
    Chains(#[from] ChainError),
    #[error(transparent)]
    Invalid(GradingError),
    #[error("gcd computation failed: {0}")]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictTag {
    TwoJetDetermination,
    HigherOrderPossible,
    DegenerateInapplicable,
}

impl VerdictTag {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictTag::TwoJetDetermination => "TWO_JET_DETERMINATION",
            VerdictTag::HigherOrderPossible => "HIGHER_ORDER_POSSIBLE",
            VerdictTag::DegenerateInapplicable => "DEGENERATE_INAPPLICABLE",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// A nonzero holomorphic field annihilating `P`.
    Degeneracy(VectorField),
    /// A generalized rotation with its chain decomposition.
    Rotation { mu: BigRational, decomposition: Decomposition },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub tag: VerdictTag,
    pub witness: Option<Witness>,
}

/// A z-only holomorphic field `X` with `X(P) = 0`, if one exists.
pub fn is_holomorphically_degenerate(m: &Model) -> Result<Option<VectorField>, ClassifyError> {
    degeneracy_witness(m.poly().as_poly())
}

fn degeneracy_witness(p: &Poly) -> Result<Option<VectorField>, ClassifyError> {
    let (p1, p2) = (p.partial(Var::Z1), p.partial(Var::Z2));
    if p1.is_zero() {
        return Ok(Some(VectorField::shift_z(1)));
    }
    if p2.is_zero() {
        return Ok(Some(VectorField::shift_z(2)));
    }
    let g = crate::algebra::mixed_gcd(&p1, &p2)?;
    let num = p1.exact_div(&g)?;
    let den = p2.exact_div(&g)?;
    let antiholo = |q: &Poly| q.has_var(Var::Zb1) || q.has_var(Var::Zb2);
    if antiholo(&num) || antiholo(&den) {
        return Ok(None);
    }
    let x = VectorField::new(den, -num, Poly::zero()).expect("z-only coefficients");
    debug_assert!(x.apply(p).is_zero());
    Ok(Some(x))
}

pub fn classify_two_jet(m: &Model) -> Result<Verdict, ClassifyError> {
    if let Some(x) = is_holomorphically_degenerate(m)? {
        return Ok(Verdict { tag: VerdictTag::DegenerateInapplicable, witness: Some(Witness::Degeneracy(x)) });
    }
    let report = compute_g_c(m)?;
    let rotations = report.generalized_rotations();
    if rotations.is_empty() {
        return Ok(Verdict { tag: VerdictTag::TwoJetDetermination, witness: None });
    }
    let mut last_err = None;
    for (mu, y) in rotations {
        match extract_chains(m, &y) {
            Ok(decomposition) => {
                return Ok(Verdict { tag: VerdictTag::HigherOrderPossible, witness: Some(Witness::Rotation { mu, decomposition }) })
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.expect("at least one rotation was tried").into())
}

/// Classifies a polynomial that may fail validation only for being of
/// infinite type; such a polynomial does not depend on some `z_j` and is
/// therefore degenerate.
pub fn classify_real_poly(p: &RealPoly, w: Option<Weight>) -> Result<Verdict, ClassifyError> {
    match Model::validate(p.clone(), w) {
        Ok(m) => classify_two_jet(&m),
        Err(GradingError::InfiniteType(_)) => match degeneracy_witness(p.as_poly())? {
            Some(x) => Ok(Verdict { tag: VerdictTag::DegenerateInapplicable, witness: Some(Witness::Degeneracy(x)) }),
            None => Err(ClassifyError::Invalid(GradingError::ZeroPolynomial)),
        },
        Err(e) => Err(ClassifyError::Invalid(e)),
    }
}
