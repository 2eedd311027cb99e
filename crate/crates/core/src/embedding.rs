//! The polynomial map into a hyperquadric defined by a chain decomposition.
//!
//! Each pair `j` of length `N_j` contributes coordinates `ζ_{j,k} = U_j^k`
//! and `ζ'_{j,k} = V_j^k`; together with `η = w` they map the model into
//! `Im η = Re Σ_j Σ_k ζ_{j,k}·conj(ζ'_{j,N_j−k+1})`. The rotation becomes
//! the linear field `Z = Σ c_{k−1,j} ζ_{j,k} ∂ζ_{j,k−1} + d_{k−1,j} ζ'_{j,k} ∂ζ'_{j,k−1}`.
//! Coordinates are counted including `η`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::algebra::{GaussRational, Poly};
use crate::chains::Decomposition;
use crate::fields::VectorField;
use crate::grading::Model;

/// A coordinate of the target space other than `η`; indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Zeta(usize, usize),
    ZetaPrime(usize, usize),
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Zeta(j, k) => write!(f, "zeta[{j},{k}]"),
            Coord::ZetaPrime(j, k) => write!(f, "zeta'[{j},{k}]"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadricEmbedding {
    pub ambient_dim: usize,
    /// `(ζ_{j,k}, ζ'_{j,N_j−k+1})` for every `j, k`.
    pub pairing: Vec<(Coord, Coord)>,
    /// Pullback of each coordinate; `η` pulls back to `w`.
    pub components: BTreeMap<Coord, Poly>,
    /// Terms `(coefficient, source, target)` of `Z`, meaning
    /// `coefficient · source · ∂target`.
    pub z_field: Vec<(GaussRational, Coord, Coord)>,
}

pub fn build_embedding(d: &Decomposition) -> QuadricEmbedding {
    let mut pairing = Vec::new();
    let mut components = BTreeMap::new();
    let mut z_field = Vec::new();
    for (idx, pair) in d.pairs.iter().enumerate() {
        let j = idx + 1;
        let n = pair.len();
        for k in 1..=n {
            pairing.push((Coord::Zeta(j, k), Coord::ZetaPrime(j, n - k + 1)));
            components.insert(Coord::Zeta(j, k), pair.u.polys()[k - 1].clone());
            components.insert(Coord::ZetaPrime(j, k), pair.v.polys()[k - 1].clone());
        }
        for k in 2..=n {
            z_field.push((pair.u.consts()[k - 2].clone(), Coord::Zeta(j, k), Coord::Zeta(j, k - 1)));
            z_field.push((pair.v.consts()[k - 2].clone(), Coord::ZetaPrime(j, k), Coord::ZetaPrime(j, k - 1)));
        }
    }
    let ambient_dim = 2 * d.pairs.iter().map(|p| p.len()).sum::<usize>() + 1;
    QuadricEmbedding { ambient_dim, pairing, components, z_field }
}

impl QuadricEmbedding {
    /// `Σ` over the pairing of `ζ·conj(ζ')`, pulled back.
    fn pulled_back_form(&self) -> Poly {
        self.pairing.iter().fold(Poly::zero(), |acc, (a, b)| &acc + &(&self.components[a] * &self.components[b].conj()))
    }

    /// The image of `Z` applied to a coordinate, as `(coefficient, source)`.
    fn z_image(&self, target: Coord) -> impl Iterator<Item = (&GaussRational, Coord)> + '_ {
        self.z_field.iter().filter(move |(_, _, t)| *t == target).map(|(c, s, _)| (c, *s))
    }
}

/// `P = Re Σ ζ·conj(ζ')` after substitution.
pub fn verify_maps_into(e: &QuadricEmbedding, m: &Model) -> bool {
    match e.pulled_back_form().re_part() {
        Ok(r) => &r == m.poly(),
        Err(_) => false,
    }
}

/// `Y(f^*x) = f^*(Z x)` for every coordinate `x`, and `Y(w) = 0 = Z(η)`.
pub fn verify_f_related(e: &QuadricEmbedding, y: &VectorField) -> bool {
    if !y.g.is_zero() {
        return false;
    }
    e.components.iter().all(|(coord, pull)| {
        let expected = e.z_image(*coord).fold(Poly::zero(), |acc, (c, src)| &acc + &e.components[&src].scale(c));
        y.apply(pull) == expected
    })
}

/// `(Z + Z̄)` annihilates the form `Re Σ ζ·conj(ζ')` identically.
pub fn verify_quadric_symmetry(e: &QuadricEmbedding) -> bool {
    // the form as Σ A[x,y] x·ȳ with A Hermitian
    let half = GaussRational::ratio(1, 2);
    let mut form: BTreeMap<(Coord, Coord), GaussRational> = BTreeMap::new();
    for (a, b) in &e.pairing {
        *form.entry((*a, *b)).or_insert_with(GaussRational::zero) += &half;
        *form.entry((*b, *a)).or_insert_with(GaussRational::zero) += &half;
    }
    let mut out: BTreeMap<(Coord, Coord), GaussRational> = BTreeMap::new();
    for ((x, y), a) in &form {
        for (c, src) in e.z_image(*x) {
            *out.entry((src, *y)).or_insert_with(GaussRational::zero) += &(a * c);
        }
        for (c, src) in e.z_image(*y) {
            *out.entry((*x, src)).or_insert_with(GaussRational::zero) += &(a * &c.conj());
        }
    }
    out.values().all(Zero::is_zero)
}
