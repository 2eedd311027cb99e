//! Seeded generators of symmetric chain pairs and of models built from them.
//!
//! Three families, each with a fixed rotation:
//! - `shear`: `Y = i z2^p ∂z1`, chains `{z1, z2^p}`, equal weights `1/(p+1)`.
//! - `quadratic`: `Y = z1²∂z1 − z1z2∂z2`, chains `U^j ∝ z1^{n−l+j} z2^n`
//!   of length `l` paired with `V^j ∝ z1^{m−l+j} z2^m`, `l ≤ m ≤ n`.
//! - `mixed`: `Y = i z2^p ∂z1` with unequal weights `(r/q, 1/q)`, chains
//!   starting at `z1^a z2^b`.
//!
//! Given the `U` constants, the `V` coefficients are solved from the
//! symmetry condition, so every generated pair verifies by construction.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{synthesize_model, Chain, ChainError, SymmetricChainPair};
use crate::algebra::{GaussRational, Monomial, Poly};
use crate::fields::VectorField;
use crate::grading::{Model, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChainFamily {
    Shear,
    Quadratic,
    Mixed,
}

impl ChainFamily {
    pub const ALL: [ChainFamily; 3] = [ChainFamily::Shear, ChainFamily::Quadratic, ChainFamily::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            ChainFamily::Shear => "shear",
            ChainFamily::Quadratic => "quadratic",
            ChainFamily::Mixed => "mixed",
        }
    }
}

impl fmt::Display for ChainFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChainFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ChainFamily::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedPair {
    pub rotation: VectorField,
    pub weight: Weight,
    pub pair: SymmetricChainPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedModel {
    pub family: ChainFamily,
    pub rotation: VectorField,
    pub pairs: Vec<SymmetricChainPair>,
    pub model: Model,
}

/// A nonzero Gaussian rational with small numerators and denominators.
pub(crate) fn small_gauss<R: Rng>(rng: &mut R) -> GaussRational {
    loop {
        let re = GaussRational::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let im = GaussRational::ratio(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let z = &re + &im.mul_i();
        if !num_traits::Zero::is_zero(&z) {
            return z;
        }
    }
}

fn shear_field(p: u32) -> VectorField {
    VectorField::new(Poly::term(Monomial::holo(0, p), GaussRational::i()), Poly::zero(), Poly::zero()).expect("holomorphic")
}

fn quadratic_field() -> VectorField {
    VectorField::new(Poly::monomial(Monomial::holo(2, 0)), -Poly::monomial(Monomial::holo(1, 1)), Poly::zero()).expect("holomorphic")
}

/// The `V` chain on the given monomial shapes whose constants make the pair
/// with `u` symmetric. With `Y(shape_k) = y_k·shape_{k+1}` and
/// `d_k = y_k v_k / v_{k+1}`, symmetry reads
/// `v_{n−k} = −conj(c_k)·v_{n−k+1} / y_{n−k}`.
fn symmetric_partner(y: &VectorField, u: &Chain, shapes: &[Monomial], top: GaussRational) -> Result<Chain, ChainError> {
    let n = shapes.len();
    let factors: Vec<GaussRational> = shapes
        .windows(2)
        .map(|w| y.apply(&Poly::monomial(w[0])).coeff(&w[1]))
        .collect();
    if factors.iter().any(num_traits::Zero::is_zero) {
        return Err(ChainError::Internal("monomial shapes do not form a chain".into()));
    }
    let mut v = vec![GaussRational::from_int(0); n + 1];
    v[n] = top;
    for k in 1..n {
        v[n - k] = &(&-u.consts()[k - 1].conj() * &v[n - k + 1]) / &factors[n - k - 1];
    }
    let polys = shapes.iter().zip(&v[1..]).map(|(m, c)| Poly::term(*m, c.clone())).collect();
    Chain::from_operator(y, polys)
}

fn monomial_pair<R: Rng>(y: &VectorField, u_shapes: &[Monomial], v_shapes: &[Monomial], rng: &mut R) -> Result<SymmetricChainPair, ChainError> {
    let us = u_shapes.iter().map(|m| Poly::term(*m, small_gauss(rng))).collect();
    let u = Chain::from_operator(y, us)?;
    let v = symmetric_partner(y, &u, v_shapes, small_gauss(rng))?;
    let pair = SymmetricChainPair::new(u, v)?;
    if !pair.is_symmetric() {
        return Err(ChainError::Internal("generated pair is not symmetric".into()));
    }
    Ok(pair)
}

fn shear_pair<R: Rng>(p: u32, rng: &mut R) -> Result<SymmetricChainPair, ChainError> {
    let shapes = [Monomial::holo(1, 0), Monomial::holo(0, p)];
    monomial_pair(&shear_field(p), &shapes, &shapes, rng)
}

fn quadratic_shapes(l: u32, k: u32) -> Vec<Monomial> {
    (1..=l).map(|j| Monomial::holo(k + j - l, k)).collect()
}

fn quadratic_pair<R: Rng>(l: u32, m: u32, n: u32, rng: &mut R) -> Result<SymmetricChainPair, ChainError> {
    monomial_pair(&quadratic_field(), &quadratic_shapes(l, n), &quadratic_shapes(l, m), rng)
}

fn mixed_shapes(a: u32, b: u32, p: u32) -> Vec<Monomial> {
    (0..=a).map(|k| Monomial::holo(a - k, b + k * p)).collect()
}

/// Length-1 pair `Re(c·z2^x·conj(z2)^{deg−x})`.
fn z2_pair<R: Rng>(x: u32, deg: u32, rng: &mut R) -> SymmetricChainPair {
    let u = Chain::new(vec![Poly::term(Monomial::holo(0, x), small_gauss(rng))], vec![]).expect("valid");
    let v = Chain::new(vec![Poly::monomial(Monomial::holo(0, deg - x))], vec![]).expect("valid");
    SymmetricChainPair::new(u, v).expect("equal lengths")
}

/// Quadratic-family triples `(l, m, n)` with `l ≤ m ≤ n` and
/// `2(n+m) − l + 1 = total`.
fn quadratic_triples(total: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for l in 1..=total {
        for m in l..=total {
            for n in m..=total {
                if 2 * (n + m) + 1 == total + l {
                    out.push((l, m, n));
                }
            }
        }
    }
    out
}

/// One pair of the requested length from the given family, with every
/// polynomial of total degree at most `degree_budget`.
pub fn random_chain_pair(family: ChainFamily, length: usize, degree_budget: u32, seed: u64) -> Result<GeneratedPair, ChainError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = u32::try_from(length).map_err(|_| ChainError::InfeasibleBudget)?;
    match family {
        ChainFamily::Shear => {
            if length != 2 || degree_budget < 3 {
                return Err(ChainError::InfeasibleBudget);
            }
            let p = rng.gen_range(2..=(degree_budget - 1).min(5));
            let pair = loop {
                let pair = shear_pair(p, &mut rng)?;
                if !pair.block().is_zero() {
                    break pair;
                }
            };
            Ok(GeneratedPair { rotation: shear_field(p), weight: Weight::from_ratios(1, p as i64 + 1, 1, p as i64 + 1), pair })
        }
        ChainFamily::Quadratic => {
            if len == 0 || 3 * len + 1 > degree_budget {
                return Err(ChainError::InfeasibleBudget);
            }
            let options: Vec<(u32, u32, u32)> =
                (3 * len + 1..=degree_budget).flat_map(quadratic_triples).filter(|t| t.0 == len).collect();
            let (l, m, n) = options[rng.gen_range(0..options.len())];
            let total = 2 * (n + m) + 1 - l;
            let pair = quadratic_pair(l, m, n, &mut rng)?;
            Ok(GeneratedPair { rotation: quadratic_field(), weight: Weight::from_ratios(1, total as i64, 1, total as i64), pair })
        }
        ChainFamily::Mixed => {
            let (y, w, pair) = mixed_main(len, degree_budget, &mut rng)?;
            Ok(GeneratedPair { rotation: y, weight: w, pair })
        }
    }
}

/// Picks `p, r, b, b'` for a mixed chain of length `len = a + 1`.
fn mixed_main<R: Rng>(len: u32, budget: u32, rng: &mut R) -> Result<(VectorField, Weight, SymmetricChainPair), ChainError> {
    if len < 2 {
        return Err(ChainError::InfeasibleBudget);
    }
    let a = len - 1;
    let mut options = Vec::new();
    for p in 2..=4u32 {
        for r in 1..p {
            for b in 0..=2u32 {
                for b2 in 0..=2u32 {
                    let q = a * (r + p) + b + b2;
                    if q <= budget && 2 * r <= q {
                        options.push((p, r, b, b2, q));
                    }
                }
            }
        }
    }
    if options.is_empty() {
        return Err(ChainError::InfeasibleBudget);
    }
    let (p, r, b, b2, q) = options[rng.gen_range(0..options.len())];
    let y = shear_field(p);
    let pair = monomial_pair(&y, &mixed_shapes(a, b, p), &mixed_shapes(a, b2, p), rng)?;
    Ok((y, Weight::from_ratios(r as i64, q as i64, 1, q as i64), pair))
}

/// A complete model from one family: a main pair of length at least two
/// plus a few extra pairs for the same rotation. Retries until the sum is a
/// valid model.
pub fn random_model<R: Rng>(family: ChainFamily, degree_budget: u32, rng: &mut R) -> Result<GeneratedModel, ChainError> {
    for _ in 0..64 {
        let attempt = match family {
            ChainFamily::Shear => {
                if degree_budget < 3 {
                    return Err(ChainError::InfeasibleBudget);
                }
                let p = rng.gen_range(2..=(degree_budget - 1).min(5));
                let mut pairs = vec![shear_pair(p, rng)?];
                for _ in 0..rng.gen_range(0..=2) {
                    pairs.push(z2_pair(rng.gen_range(1..=p), p + 1, rng));
                }
                (shear_field(p), Weight::from_ratios(1, p as i64 + 1, 1, p as i64 + 1), pairs)
            }
            ChainFamily::Quadratic => {
                let totals: Vec<u32> = (7..=degree_budget).filter(|t| quadratic_triples(*t).iter().any(|x| x.0 >= 2)).collect();
                if totals.is_empty() {
                    return Err(ChainError::InfeasibleBudget);
                }
                let total = totals[rng.gen_range(0..totals.len())];
                let triples = quadratic_triples(total);
                let main: Vec<_> = triples.iter().filter(|x| x.0 >= 2).collect();
                let (l, m, n) = *main[rng.gen_range(0..main.len())];
                let mut pairs = vec![quadratic_pair(l, m, n, rng)?];
                for _ in 0..rng.gen_range(0..=1) {
                    let (l, m, n) = triples[rng.gen_range(0..triples.len())];
                    pairs.push(quadratic_pair(l, m, n, rng)?);
                }
                (quadratic_field(), Weight::from_ratios(1, total as i64, 1, total as i64), pairs)
            }
            ChainFamily::Mixed => {
                let len = rng.gen_range(2..=3);
                let (y, w, main) = match mixed_main(len, degree_budget, rng) {
                    Ok(x) => x,
                    Err(ChainError::InfeasibleBudget) if len > 2 => mixed_main(2, degree_budget, rng)?,
                    Err(e) => return Err(e),
                };
                let q = u32::try_from(w.l2().denom().clone()).map_err(|_| ChainError::InfeasibleBudget)?;
                let pin = z2_pair(rng.gen_range(1..q), q, rng);
                (y, w, vec![main, pin])
            }
        };
        let (rotation, weight, pairs) = attempt;
        if pairs[0].block().is_zero() {
            continue;
        }
        match synthesize_model(&pairs, &weight) {
            Ok(model) => return Ok(GeneratedModel { family, rotation, pairs, model }),
            Err(ChainError::ZeroResult | ChainError::PluriharmonicResult | ChainError::Grading(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(ChainError::InfeasibleBudget)
}
