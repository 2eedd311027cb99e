//! Splitting a model into symmetric chain pairs for a given rotation.
//!
//! Write `P = Σ H_{αβ} z^α z̄^β` with `H` Hermitian and let `S` be the range
//! of `H`, a space of holomorphic polynomials. Tangency of `Y` forces `Y` to
//! preserve `S` and to act there as a nilpotent `N` with
//! `N C + C N* = 0`, where `P = Σ C_{xy} e_x ē_y` in any basis `e` of `S`.
//! In a Jordan basis of `N` this makes `C` anti-triangular and alternating
//! along anti-diagonals, and each anti-diagonal between two Jordan blocks
//! is exactly one symmetric pair of chains with constants `−1` and `1`.
//! The chains are then rescaled so every `V` element is monic.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{Chain, ChainError, Decomposition, SymmetricChainPair};
use crate::algebra::{GaussRational, Monomial, Poly};
use crate::fields::VectorField;
use crate::grading::{bihomogeneous_blocks, Model};
use crate::linalg::{canonical_basis, coordinates, inverse, mat_mul, nullspace, rank, rref, transpose};

type Mat = Vec<Vec<GaussRational>>;

/// Rank of the coefficient matrix of the lowest bihomogeneous block.
pub fn lowest_block_rank(m: &Model) -> usize {
    let blocks = bihomogeneous_blocks(m.poly(), m.weight());
    let Some((_, low)) = blocks.first() else {
        return 0;
    };
    let rows: Vec<Monomial> = dedup(low.monomials().map(Monomial::holo_part));
    let cols: Vec<Monomial> = dedup(low.monomials().map(Monomial::antiholo_part_as_holo));
    let matrix: Mat =
        rows.iter().map(|r| cols.iter().map(|c| low.coeff(&r.mul(&c.conj()))).collect()).collect();
    rank(&matrix)
}

fn dedup(it: impl Iterator<Item = Monomial>) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = it.collect();
    v.sort();
    v.dedup();
    v
}

pub fn extract_chains(m: &Model, y: &VectorField) -> Result<Decomposition, ChainError> {
    let mu = y.weight(m.weight()).map_err(|_| ChainError::NotARotation)?;
    let is_member = y.tangency_residual(m).map(|r| r.is_zero()).unwrap_or(false);
    if !mu.is_positive() || mu >= num_rational::BigRational::one() || !is_member {
        return Err(ChainError::NotARotation);
    }
    let low_rank = lowest_block_rank(m);
    if low_rank > 1 {
        return Err(ChainError::RankExceedsOne(low_rank));
    }

    // Hermitian coefficient matrix over a common monomial index
    let p = m.poly().as_poly();
    let index: Vec<Monomial> = dedup(p.monomials().flat_map(|t| [t.holo_part(), t.antiholo_part_as_holo()]));
    let pos: BTreeMap<Monomial, usize> = index.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let n = index.len();
    let mut h: Mat = vec![vec![GaussRational::zero(); n]; n];
    for (t, c) in p.terms() {
        h[pos[&t.holo_part()]][pos[&t.antiholo_part_as_holo()]] = c.clone();
    }

    let s_basis = canonical_basis(&transpose(&h));
    let r = s_basis.len();
    let to_poly = |v: &[GaussRational]| Poly::from_terms(index.iter().zip(v).map(|(m, c)| (*m, c.clone())));
    let to_vec = |q: &Poly| -> Option<Vec<GaussRational>> {
        if q.monomials().any(|m| !pos.contains_key(m)) {
            return None;
        }
        Some(index.iter().map(|m| q.coeff(m)).collect())
    };

    // N in coordinates of the range basis: column a holds Y(s_a)
    let images: Vec<Vec<GaussRational>> = s_basis
        .iter()
        .map(|s| to_vec(&y.apply(&to_poly(s))))
        .collect::<Option<_>>()
        .ok_or_else(|| ChainError::Internal("range of the coefficient matrix is not Y-invariant".into()))?;
    let coords = coordinates(&s_basis, &images)
        .ok_or_else(|| ChainError::Internal("range of the coefficient matrix is not Y-invariant".into()))?;
    let nmat: Mat = transpose(&coords);

    let chains = jordan_chains(&nmat)?;
    // polynomial of each chain element, as a vector over the index
    let chain_vecs: Vec<Vec<Vec<GaussRational>>> = chains
        .iter()
        .map(|ch| {
            ch.iter()
                .map(|c| {
                    (0..n).map(|i| (0..r).fold(GaussRational::zero(), |acc, a| &acc + &(&c[a] * &s_basis[a][i]))).collect()
                })
                .collect()
        })
        .collect();
    let flat: Vec<&Vec<GaussRational>> = chain_vecs.iter().flatten().collect();
    if flat.len() != r {
        return Err(ChainError::Internal("Jordan chains do not span the range".into()));
    }

    // C = F_R⁻¹ H_RR F_R⁻*, with R a set of rows on which F is invertible
    let f_t: Mat = flat.iter().map(|v| (*v).clone()).collect();
    let mut work = f_t.clone();
    let rows_r = rref(&mut work);
    let f_r: Mat = rows_r.iter().map(|&i| flat.iter().map(|v| v[i].clone()).collect()).collect();
    let f_inv = inverse(&f_r).ok_or_else(|| ChainError::Internal("chain basis is singular".into()))?;
    let h_rr: Mat = rows_r.iter().map(|&i| rows_r.iter().map(|&j| h[i][j].clone()).collect()).collect();
    let f_inv_star: Mat = transpose(&f_inv).into_iter().map(|row| row.into_iter().map(|x| x.conj()).collect()).collect();
    let c = mat_mul(&mat_mul(&f_inv, &h_rr), &f_inv_star);

    let offsets: Vec<usize> = chains
        .iter()
        .scan(0, |acc, ch| {
            let o = *acc;
            *acc += ch.len();
            Some(o)
        })
        .collect();
    let elem = |i: usize, k: usize| to_poly(&chain_vecs[i][k - 1]);

    let mut pairs = Vec::new();
    for i in 0..chains.len() {
        for j in i..chains.len() {
            let (a, b) = (chains[i].len(), chains[j].len());
            for t in a.max(b) + 1..=a + b {
                let mut gamma = c[offsets[i] + a - 1][offsets[j] + t - a - 1].clone();
                if a % 2 == 1 {
                    gamma = -gamma;
                }
                if gamma.is_zero() {
                    continue;
                }
                if i < j {
                    gamma = &gamma + &gamma;
                }
                let s = a + b + 1 - t;
                let mut us = Vec::with_capacity(s);
                let mut vs = Vec::with_capacity(s);
                for q in 1..=s {
                    let pq = t - b - 1 + q;
                    let sign = if pq % 2 == 1 { -gamma.clone() } else { gamma.clone() };
                    us.push(elem(i, pq).scale(&sign));
                    vs.push(elem(j, b - s + q));
                }
                // monic V, with U absorbing the conjugate scale
                for k in 0..s {
                    let nu = vs[k].leading_coeff().expect("nonzero chain element").clone();
                    vs[k] = vs[k].scale(&nu.inv().expect("nonzero"));
                    us[s - 1 - k] = us[s - 1 - k].scale(&nu.conj());
                }
                let pair = SymmetricChainPair::new(Chain::from_operator(y, us)?, Chain::from_operator(y, vs)?)?;
                if !pair.is_symmetric() {
                    return Err(ChainError::Internal("extracted pair violates the symmetry condition".into()));
                }
                pairs.push(pair);
            }
        }
    }

    let d = Decomposition { pairs, rotation: y.clone() };
    if &d.synthesize() != p {
        return Err(ChainError::Internal("extracted chains do not resynthesize the model".into()));
    }
    Ok(d)
}

/// Jordan chains `v, Nv, …, N^{j−1}v` of a nilpotent matrix, longest
/// first. Tops are taken from canonical kernel bases, so for a graded `N`
/// every chain element is homogeneous.
fn jordan_chains(nmat: &Mat) -> Result<Vec<Vec<Vec<GaussRational>>>, ChainError> {
    let r = nmat.len();
    let apply = |v: &Vec<GaussRational>| -> Vec<GaussRational> {
        (0..r).map(|i| (0..r).fold(GaussRational::zero(), |acc, a| &acc + &(&nmat[i][a] * &v[a]))).collect()
    };
    // kernels of N^j for j = 0.. until everything is killed
    let mut kernels: Vec<Mat> = vec![Vec::new()];
    let mut power: Mat = (0..r).map(|i| (0..r).map(|j| if i == j { GaussRational::one() } else { GaussRational::zero() }).collect()).collect();
    while kernels.last().expect("nonempty").len() < r {
        if kernels.len() > r + 1 {
            return Err(ChainError::Internal("operator is not nilpotent on the range".into()));
        }
        power = mat_mul(nmat, &power);
        kernels.push(canonical_basis(&nullspace(&power, r)));
    }
    let top = kernels.len() - 1;

    let mut chains: Vec<Vec<Vec<GaussRational>>> = Vec::new();
    for j in (1..=top).rev() {
        let mut span: Mat = kernels[j - 1].clone();
        for ch in &chains {
            // elements of a chain of length l at index ≥ l − j lie in ker N^j
            let l = ch.len();
            span.extend(ch[l - j..].iter().cloned());
        }
        let mut current = rank(&span);
        for v in &kernels[j] {
            let mut trial = span.clone();
            trial.push(v.clone());
            let rk = rank(&trial);
            if rk > current {
                current = rk;
                span = trial;
                let mut ch = vec![v.clone()];
                for _ in 1..j {
                    let next = apply(ch.last().expect("nonempty"));
                    ch.push(next);
                }
                span.extend(ch[1..].iter().cloned());
                chains.push(ch);
            }
        }
    }
    Ok(chains)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RealPoly;
    use crate::chains::{recover_rotation, synthesize_model, verify_pair};
    use crate::grading::Weight;

    fn shear_y(l: u32) -> VectorField {
        VectorField::new(Poly::term(Monomial::holo(0, l), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap()
    }

    #[test]
    fn shear_decomposition() {
        let m = Model::validate(Poly::monomial(Monomial::mixed(1, 0, 0, 2)).re_part().unwrap(), None).unwrap();
        let d = extract_chains(&m, &shear_y(2)).unwrap();
        assert_eq!(d.pairs.len(), 1);
        let p = &d.pairs[0];
        let half = GaussRational::ratio(1, 2);
        assert_eq!(p.u.polys(), &[Poly::var(crate::Var::Z1).scale(&half), Poly::monomial(Monomial::holo(0, 2)).scale(&half)]);
        assert_eq!(p.v.polys(), &[Poly::var(crate::Var::Z1), Poly::monomial(Monomial::holo(0, 2))]);
        assert_eq!(p.u.consts(), &[GaussRational::i()]);
        assert_eq!(p.v.consts(), &[GaussRational::i()]);
        assert!(verify_pair(&shear_y(2), p));
        assert_eq!(lowest_block_rank(&m), 1);
    }

    #[test]
    fn quadric_has_no_rotation() {
        let q = RealPoly::try_from(&Poly::monomial(Monomial::mixed(1, 0, 1, 0)) + &Poly::monomial(Monomial::mixed(0, 1, 0, 1))).unwrap();
        let m = Model::validate(q, None).unwrap();
        assert_eq!(extract_chains(&m, &shear_y(1)), Err(ChainError::NotARotation));
    }

    /// A length-3 pair for `z1²∂z1 − z1z2∂z2` built by hand.
    #[test]
    fn quadratic_length_three() {
        let y = VectorField::new(Poly::monomial(Monomial::holo(2, 0)), -Poly::monomial(Monomial::holo(1, 1)), Poly::zero()).unwrap();
        // l = m = n = 3: U^j = u_j z1^j z2^3, V^j = v_j z1^j z2^3
        let us: Vec<Poly> = (1..=3).map(|j| Poly::monomial(Monomial::holo(j, 3))).collect();
        let u = Chain::from_operator(&y, us).unwrap();
        // v_{l−j} = conj(c_j)·v_{l−j+1}/j
        let c = u.consts().to_vec();
        let mut v = vec![GaussRational::zero(); 4];
        v[3] = GaussRational::one();
        for j in 1..=2usize {
            v[3 - j] = &(&c[j - 1].conj() * &v[4 - j]) / &GaussRational::from_int(j as i64);
        }
        let vs: Vec<Poly> = (1..=3u32).map(|j| Poly::term(Monomial::holo(j, 3), v[j as usize].clone())).collect();
        let pair = SymmetricChainPair::new(u, Chain::from_operator(&y, vs).unwrap()).unwrap();
        assert!(verify_pair(&y, &pair));
        let w = Weight::from_ratios(1, 10, 1, 10);
        let m = synthesize_model(&[pair], &w).unwrap();
        let d = extract_chains(&m, &y).unwrap();
        assert_eq!(&d.synthesize(), m.poly().as_poly());
        assert!(d.verify());
        let back = recover_rotation(&d).unwrap();
        assert_eq!(back.apply(&Poly::monomial(Monomial::holo(1, 1))), Poly::zero());
    }
}
