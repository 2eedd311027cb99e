//! Weights, weighted degrees and model validation.
//!
//! `w` and `u` carry weight one; `z_j` and `zb_j` carry `λ_j`. The weight
//! search here only looks at the given coordinates: it returns the
//! lexicographically smallest admissible weight that makes `P` homogeneous
//! of degree one. That agrees with the multitype exactly when the input is
//! already written in multitype coordinates, which is the standing
//! assumption for model files.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{rat, Monomial, Poly, RealPoly, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("weight ({}, {}) violates 0 <= l2 <= l1 <= 1/2", .0.0, .0.1)]
    InvalidWeight(Box<(BigRational, BigRational)>),
    #[error("no admissible weight makes the polynomial homogeneous of degree 1")]
    NotHomogenizable,
    #[error("polynomial contains pluriharmonic terms: {0}")]
    PluriharmonicTerms(String),
    #[error("polynomial is not homogeneous of weighted degree 1 for weight {0}")]
    NotHomogeneous(Box<Weight>),
    #[error("infinite multitype: weight {0} has l2 = 0")]
    InfiniteType(Box<Weight>),
    #[error("model polynomial is zero")]
    ZeroPolynomial,
    #[error("model polynomial may only involve z1, z2, zb1, zb2")]
    ForeignVariables,
}

/// A multitype weight `(λ1, λ2)` with `0 ≤ λ2 ≤ λ1 ≤ 1/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    l1: BigRational,
    l2: BigRational,
}

impl Weight {
    pub fn new(l1: BigRational, l2: BigRational) -> Result<Self, GradingError> {
        let half = rat(1, 2);
        if l2.is_negative() || l2 > l1 || l1 > half {
            return Err(GradingError::InvalidWeight(Box::new((l1, l2))));
        }
        Ok(Self { l1, l2 })
    }

    /// Convenience for tests and examples; panics on an invalid weight.
    pub fn from_ratios(n1: i64, d1: i64, n2: i64, d2: i64) -> Self {
        Self::new(rat(n1, d1), rat(n2, d2)).expect("valid weight")
    }

    pub fn l1(&self) -> &BigRational {
        &self.l1
    }

    pub fn l2(&self) -> &BigRational {
        &self.l2
    }

    /// `λ_j` for `j ∈ {1, 2}`.
    pub fn lambda(&self, j: usize) -> &BigRational {
        match j {
            1 => &self.l1,
            2 => &self.l2,
            _ => panic!("weight index {j} out of range"),
        }
    }

    /// Least common denominator of `λ1` and `λ2`.
    pub fn common_denominator(&self) -> num_bigint::BigInt {
        self.l1.denom().lcm(self.l2.denom())
    }

    pub fn multitype(&self) -> MultitypeReport {
        let inv = |l: &BigRational| if l.is_zero() { Multiplicity::Infinite } else { Multiplicity::Finite(l.recip()) };
        MultitypeReport { weight: self.clone(), m1: inv(&self.l1), m2: inv(&self.l2) }
    }
}

/// Renders as `p/q,r/s`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.l1, self.l2)
    }
}

impl FromStr for Weight {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 2 {
            return Err(format!("expected `p/q, r/s`, got `{s}`"));
        }
        let parse = |t: &str| t.parse::<BigRational>().map_err(|_| format!("invalid rational `{t}`"));
        Weight::new(parse(parts[0])?, parse(parts[1])?).map_err(|e| e.to_string())
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    Finite(BigRational),
    Infinite,
}

impl fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Multiplicity::Finite(m) => write!(f, "{m}"),
            Multiplicity::Infinite => write!(f, "INFINITE"),
        }
    }
}

/// `(m1, m2)` with `m_j = 1/λ_j`, or infinite when `λ_j = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultitypeReport {
    pub weight: Weight,
    pub m1: Multiplicity,
    pub m2: Multiplicity,
}

/// `κ = l + m + Σ (α_i + β_i) λ_i`.
pub fn weighted_degree(mono: &Monomial, w: &Weight) -> BigRational {
    let (a1, a2) = mono.alpha();
    let (b1, b2) = mono.beta();
    let whole = BigRational::from_integer((mono.exp(Var::U) + mono.exp(Var::W)).into());
    whole + w.l1() * BigRational::from_integer((a1 + b1).into()) + w.l2() * BigRational::from_integer((a2 + b2).into())
}

/// Weighted degree of the holomorphic factor `z^α` alone.
pub fn holomorphic_degree(mono: &Monomial, w: &Weight) -> BigRational {
    weighted_degree(&mono.holo_part(), w)
}

pub fn is_homogeneous(p: &Poly, w: &Weight, kappa: &BigRational) -> bool {
    p.monomials().all(|m| weighted_degree(m, w) == *kappa)
}

/// Lexicographically smallest admissible weight for which every support
/// monomial has weighted degree 1.
///
/// Each monomial gives a constraint `s1·λ1 + s2·λ2 = 1` with
/// `s_j = α_j + β_j`. Two independent constraints pin the weight; a single
/// one leaves a segment, on which the lexicographic minimum is taken.
pub fn support_minimal_weight(p: &Poly) -> Result<Weight, GradingError> {
    if p.is_zero() {
        return Err(GradingError::ZeroPolynomial);
    }
    if !p.is_z_only() {
        return Err(GradingError::ForeignVariables);
    }
    let mut rows: Vec<(BigRational, BigRational)> = p
        .monomials()
        .map(|m| {
            let (a1, a2) = m.alpha();
            let (b1, b2) = m.beta();
            (BigRational::from_integer((a1 + b1).into()), BigRational::from_integer((a2 + b2).into()))
        })
        .collect();
    rows.sort();
    rows.dedup();
    if rows.iter().any(|(s1, s2)| s1.is_zero() && s2.is_zero()) {
        return Err(GradingError::NotHomogenizable);
    }

    let (s1, s2) = rows[0].clone();
    let independent = rows[1..].iter().find(|(t1, t2)| &s1 * t2 - &s2 * t1 != BigRational::zero()).cloned();
    let candidate = match independent {
        Some((t1, t2)) => {
            let det = &s1 * &t2 - &s2 * &t1;
            let l1 = (&t2 - &s2) / &det;
            let l2 = (&s1 - &t1) / &det;
            (l1, l2)
        }
        None => {
            if s2.is_zero() {
                (s1.recip(), BigRational::zero())
            } else if s1.is_zero() {
                (s2.recip(), s2.recip())
            } else {
                let l = (&s1 + &s2).recip();
                (l.clone(), l)
            }
        }
    };
    let (l1, l2) = candidate;
    let ok = rows.iter().all(|(a, b)| a * &l1 + b * &l2 == BigRational::one());
    if !ok {
        return Err(GradingError::NotHomogenizable);
    }
    Weight::new(l1, l2).map_err(|_| GradingError::NotHomogenizable)
}

/// A validated model `Im w = P(z, zb)` with its weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    poly: RealPoly,
    weight: Weight,
}

impl Model {
    /// Checks every model invariant. Without an explicit weight the
    /// support-minimal weight is used.
    pub fn validate(p: RealPoly, weight: Option<Weight>) -> Result<Model, GradingError> {
        if p.is_zero() {
            return Err(GradingError::ZeroPolynomial);
        }
        if !p.is_z_only() {
            return Err(GradingError::ForeignVariables);
        }
        let ph = p.pluriharmonic_part();
        if !ph.is_zero() {
            return Err(GradingError::PluriharmonicTerms(ph.to_string()));
        }
        let weight = match weight {
            Some(w) => w,
            None => support_minimal_weight(&p)?,
        };
        if !is_homogeneous(&p, &weight, &BigRational::one()) {
            return Err(GradingError::NotHomogeneous(Box::new(weight)));
        }
        if weight.l2().is_zero() {
            return Err(GradingError::InfiniteType(Box::new(weight)));
        }
        Ok(Model { poly: p, weight })
    }

    pub fn poly(&self) -> &RealPoly {
        &self.poly
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn multitype(&self) -> MultitypeReport {
        self.weight.multitype()
    }

    /// `P_{z_j}`.
    pub fn dp(&self, j: usize) -> Poly {
        self.poly.partial(if j == 1 { Var::Z1 } else { Var::Z2 })
    }

    /// Splits `P` by the weighted degree of the holomorphic factor of each
    /// term, in increasing order of that degree. Blocks other than the
    /// middle one are not real on their own, so they are returned as plain
    /// polynomials.
    pub fn bihomogeneous_expansion(&self) -> Vec<(BigRational, Poly)> {
        bihomogeneous_blocks(self.poly.as_poly(), &self.weight)
    }
}

/// Blocks of `p` grouped by holomorphic weighted degree, ascending.
pub fn bihomogeneous_blocks(p: &Poly, w: &Weight) -> Vec<(BigRational, Poly)> {
    let mut blocks: std::collections::BTreeMap<BigRational, Poly> = Default::default();
    for (m, c) in p.terms() {
        blocks.entry(holomorphic_degree(m, w)).or_default().add_term(*m, c);
    }
    blocks.into_iter().filter(|(_, b)| !b.is_zero()).collect()
}
