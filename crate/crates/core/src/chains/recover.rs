//! Rebuilding the rotation from the tail of a chain.
//!
//! `Y(Uⁿ) = 0` forces `Y = a·(−∂₂Uⁿ ∂z1 + ∂₁Uⁿ ∂z2)` for some rational
//! function `a`, and `Y(U^{n−1}) = c Uⁿ` then gives `a = −c·Uⁿ/Δ` with
//! `Δ = ∂₁U^{n−1}∂₂Uⁿ − ∂₂U^{n−1}∂₁Uⁿ`. The factor `a` itself need not be a
//! polynomial, so the coefficients are divided out only after multiplying.

use super::{Chain, ChainError, Decomposition};
use crate::algebra::{AlgebraError, Poly, Var};
use crate::fields::VectorField;

pub fn recover_rotation(d: &Decomposition) -> Result<VectorField, ChainError> {
    for chain in d.pairs.iter().flat_map(|p| [&p.u, &p.v]).filter(|c| c.len() >= 2) {
        if let Some(y) = from_tail(chain)? {
            return Ok(y);
        }
    }
    Err(ChainError::ZeroJacobian)
}

fn from_tail(chain: &Chain) -> Result<Option<VectorField>, ChainError> {
    let n = chain.len();
    let (prev, last) = (&chain.polys()[n - 2], &chain.polys()[n - 1]);
    let c = &chain.consts()[n - 2];
    let (p1, p2) = (prev.partial(Var::Z1), prev.partial(Var::Z2));
    let (l1, l2) = (last.partial(Var::Z1), last.partial(Var::Z2));
    let delta = &(&p1 * &l2) - &(&p2 * &l1);
    if delta.is_zero() {
        return Ok(None);
    }
    let cu = last.scale(c);
    let div = |num: Poly| {
        num.exact_div(&delta).map_err(|e| match e {
            AlgebraError::NotDivisible => ChainError::NotDivisible,
            other => ChainError::Internal(other.to_string()),
        })
    };
    let f1 = div(&cu * &l2)?;
    let f2 = div(-(&cu * &l1))?;
    Ok(Some(VectorField::new(f1, f2, Poly::zero()).map_err(|e| ChainError::Internal(e.to_string()))?))
}
