//! Rigid graded pieces of the infinitesimal automorphism algebra.
//!
//! For a fixed weight `μ` the unknown field is written over monomial bases
//! of degrees `μ+λ1`, `μ+λ2` and `1+μ`, each complex coefficient split into
//! two rational unknowns. The tangency residual is real-linear in those
//! unknowns, so its coefficients give a rational linear system whose kernel
//! is the component.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::{GaussRational, Monomial, Poly, Var};
use crate::fields::{euler_field, VectorField};
use crate::grading::{Model, Weight};
use crate::linalg::{canonical_basis, FractionFreeEchelon};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutError {
    #[error("solver invariant violated: {0}")]
    InvariantViolation(String),
}

/// A real basis of the rigid fields of weight `mu` tangent to the model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentBasis {
    pub mu: BigRational,
    pub basis: Vec<VectorField>,
}

impl ComponentBasis {
    pub fn dim_real(&self) -> usize {
        self.basis.len()
    }

    pub fn is_generalized_rotation_weight(&self) -> bool {
        self.mu.is_positive() && self.mu < BigRational::one()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutReport {
    pub model: Model,
    /// Ordered by weight.
    pub components: Vec<ComponentBasis>,
    pub w_member: bool,
    pub e_member: bool,
}

impl AutReport {
    pub fn dim_g_c(&self) -> usize {
        self.g_c().map(ComponentBasis::dim_real).sum()
    }

    pub fn g_c(&self) -> impl Iterator<Item = &ComponentBasis> {
        self.components.iter().filter(|c| c.is_generalized_rotation_weight())
    }

    /// All generalized rotations paired with their weights.
    pub fn generalized_rotations(&self) -> Vec<(BigRational, VectorField)> {
        self.g_c().flat_map(|c| c.basis.iter().map(move |x| (c.mu.clone(), x.clone()))).collect()
    }

    pub fn component(&self, mu: &BigRational) -> Option<&ComponentBasis> {
        self.components.iter().find(|c| &c.mu == mu)
    }
}

/// Holomorphic z-monomials of weighted degree exactly `kappa`, in
/// descending term order.
pub fn monomial_basis(w: &Weight, kappa: &BigRational) -> Vec<Monomial> {
    if kappa.is_negative() {
        return Vec::new();
    }
    if kappa.is_zero() {
        return vec![Monomial::ONE];
    }
    assert!(w.l2().is_positive(), "monomial basis needs finite type");
    let mut out = Vec::new();
    let mut a1 = 0u32;
    loop {
        let rest = kappa - w.l1() * BigRational::from_integer(a1.into());
        if rest.is_negative() {
            break;
        }
        let a2 = &rest / w.l2();
        if a2.is_integer() {
            out.push(Monomial::holo(a1, a2.to_integer().to_u32().expect("small exponent")));
        }
        if w.l1().is_zero() {
            break;
        }
        a1 += 1;
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Weights `k/D` in `(0, 1)` where at least one coefficient space is
/// nonempty; `D` is the common denominator of the model weight.
pub fn candidate_weights(m: &Model) -> Vec<BigRational> {
    let w = m.weight();
    let d = w.common_denominator();
    let dn = d.to_i64().expect("denominator fits in i64");
    (1..dn)
        .map(|k| BigRational::new(BigInt::from(k), d.clone()))
        .filter(|mu| coefficient_bases(w, mu).iter().any(|b| !b.is_empty()))
        .collect()
}

/// Bases for `f1`, `f2`, `g` at weight `mu`.
pub fn coefficient_bases(w: &Weight, mu: &BigRational) -> [Vec<Monomial>; 3] {
    [monomial_basis(w, &(mu + w.l1())), monomial_basis(w, &(mu + w.l2())), monomial_basis(w, &(mu + BigRational::one()))]
}

pub fn solve_rigid_weight(m: &Model, mu: &BigRational) -> Result<ComponentBasis, AutError> {
    let bases = coefficient_bases(m.weight(), mu);
    solve_over_bases(m, mu, &bases)
}

/// The elementary field with coefficient `c·mono` in component `j`.
fn elementary(j: usize, mono: Monomial, c: GaussRational) -> VectorField {
    let p = Poly::term(mono, c);
    let mut x = VectorField::zero();
    match j {
        0 => x.f1 = p,
        1 => x.f2 = p,
        _ => x.g = p,
    }
    x
}

/// Column layout: for each component in order `f1, f2, g`, for each
/// monomial of its basis, a real and an imaginary column.
fn columns(bases: &[Vec<Monomial>; 3]) -> Vec<(usize, Monomial, GaussRational)> {
    let mut cols = Vec::new();
    for (j, basis) in bases.iter().enumerate() {
        for mono in basis {
            cols.push((j, *mono, GaussRational::one()));
            cols.push((j, *mono, GaussRational::i()));
        }
    }
    cols
}

/// Solves over explicitly given coefficient bases. The result is the
/// reduced echelon basis in the coordinates of `bases`, so two orderings of
/// the same bases span the same space of fields.
pub fn solve_over_bases(m: &Model, mu: &BigRational, bases: &[Vec<Monomial>; 3]) -> Result<ComponentBasis, AutError> {
    let cols = columns(bases);
    let n = cols.len();
    if n == 0 {
        return Ok(ComponentBasis { mu: mu.clone(), basis: Vec::new() });
    }
    // g columns are eliminated first: their residuals are pure and sparse
    let mut order: Vec<usize> = (0..n).filter(|&c| cols[c].0 == 2).collect();
    order.extend((0..n).filter(|&c| cols[c].0 != 2));
    let mut internal = vec![0usize; n];
    for (pos, &c) in order.iter().enumerate() {
        internal[c] = pos;
    }

    let mut rows: BTreeMap<Monomial, BTreeMap<usize, GaussRational>> = BTreeMap::new();
    for (c, (j, mono, coef)) in cols.iter().enumerate() {
        let r = elementary(*j, *mono, coef.clone())
            .tangency_residual(m)
            .map_err(|e| AutError::InvariantViolation(e.to_string()))?;
        for (rm, rc) in r.terms() {
            rows.entry(*rm).or_default().insert(internal[c], rc.clone());
        }
    }

    let mut ech = FractionFreeEchelon::new(n);
    'outer: for (mono, row) in &rows {
        // the residual is real, so the row of a monomial and of its
        // conjugate carry the same information
        if mono.conj() < *mono {
            continue;
        }
        for part in 0..2 {
            let r: BTreeMap<usize, BigRational> = row
                .iter()
                .map(|(c, v)| (*c, if part == 0 { v.re().clone() } else { v.im().clone() }))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if !r.is_empty() {
                ech.insert(&r);
            }
            if ech.is_full() {
                break 'outer;
            }
        }
    }

    let kernel: Vec<Vec<BigRational>> = ech
        .nullspace()
        .into_iter()
        .map(|v| (0..n).map(|c| v[internal[c]].clone()).collect())
        .collect();
    let kernel = canonical_basis(&kernel);

    let mut basis = Vec::with_capacity(kernel.len());
    for v in kernel {
        let mut x = VectorField::zero();
        for (c, val) in v.iter().enumerate() {
            if val.is_zero() {
                continue;
            }
            let (j, mono, coef) = &cols[c];
            x = x.add(&elementary(*j, *mono, coef.scale(val)));
        }
        verify_member(m, mu, &x)?;
        basis.push(x);
    }
    Ok(ComponentBasis { mu: mu.clone(), basis })
}

fn verify_member(m: &Model, mu: &BigRational, x: &VectorField) -> Result<(), AutError> {
    let r = x.tangency_residual(m).map_err(|e| AutError::InvariantViolation(e.to_string()))?;
    if !r.is_zero() {
        return Err(AutError::InvariantViolation(format!("field {x} has nonzero residual {r}")));
    }
    match x.weight(m.weight()) {
        Ok(k) if &k == mu => Ok(()),
        _ => Err(AutError::InvariantViolation(format!("field {x} is not homogeneous of weight {mu}"))),
    }
}

/// `W = ∂w` is tangent to every model.
pub fn w_is_member(m: &Model) -> bool {
    VectorField::shift_w().tangency_residual(m).map(|r| r.is_zero()).unwrap_or(false)
}

/// `E` is tangent exactly when `Σ λ_j (z_j P_zj + zb_j P_zbj) = P`.
pub fn e_is_member(m: &Model) -> bool {
    let e = euler_field(m.weight());
    let p = m.poly().as_poly();
    let mut lhs = Poly::zero();
    for (j, (z, zb)) in [(Var::Z1, Var::Zb1), (Var::Z2, Var::Zb2)].into_iter().enumerate() {
        let l = GaussRational::from_real(m.weight().lambda(j + 1).clone());
        let part = &(&Poly::var(z) * &p.partial(z)) + &(&Poly::var(zb) * &p.partial(zb));
        lhs = &lhs + &part.scale(&l);
    }
    // E(w) = w, so tangency of E to Im w = P reduces to the identity above
    debug_assert!(e.g == Poly::var(Var::W));
    &lhs == p
}

/// Shifts, rigid rotations and generalized rotations, ordered by weight.
pub fn compute_g_c(m: &Model) -> Result<AutReport, AutError> {
    let w = m.weight();
    let mut weights: Vec<BigRational> = vec![-w.l1().clone(), -w.l2().clone(), BigRational::zero()];
    weights.extend(candidate_weights(m));
    weights.sort();
    weights.dedup();
    let components = weights.iter().map(|mu| solve_rigid_weight(m, mu)).collect::<Result<Vec<_>, _>>()?;
    Ok(AutReport { model: m.clone(), components, w_member: w_is_member(m), e_member: e_is_member(m) })
}
