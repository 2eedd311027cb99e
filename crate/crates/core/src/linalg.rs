//! Exact linear algebra over `ℚ` and `ℚ(i)`.
//!
//! Dense Gauss–Jordan elimination serves the small operator computations
//! (kernels of `Y^n`, chain bases). The automorphism solver uses
//! [`FractionFreeEchelon`], an incremental sparse elimination over the
//! integers that keeps each row primitive instead of dividing.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::GaussRational;

/// The field operations the dense routines need.
pub trait Scalar: Clone + PartialEq + Debug {
    fn zero_value() -> Self;
    fn one_value() -> Self;
    fn is_zero_value(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Scalar for BigRational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

impl Scalar for GaussRational {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn one_value() -> Self {
        One::one()
    }
    fn is_zero_value(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// In-place reduced row echelon form. Pivots are normalized to 1.
/// Returns the pivot column of each nonzero row, in order; zero rows end up
/// at the bottom.
pub fn rref<T: Scalar>(m: &mut [Vec<T>]) -> Vec<usize> {
    let ncols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero_value()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one_value().div(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = x.mul(&inv);
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero_value() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero_value() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Scalar>(m: &[Vec<T>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of `{x : m·x = 0}`; each vector has a 1 in its own free column.
pub fn nullspace<T: Scalar>(m: &[Vec<T>], ncols: usize) -> Vec<Vec<T>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![T::zero_value(); ncols];
        v[free] = T::one_value();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = work[row][free].neg();
        }
        out.push(v);
    }
    out
}

/// The canonical (reduced echelon) basis of the span of `vectors`.
pub fn canonical_basis<T: Scalar>(vectors: &[Vec<T>]) -> Vec<Vec<T>> {
    let mut work = vectors.to_vec();
    let k = rref(&mut work).len();
    work.truncate(k);
    work
}

/// Coordinates of each target in the given (independent) basis, or `None`
/// when some target lies outside the span.
pub fn coordinates<T: Scalar>(basis: &[Vec<T>], targets: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    if basis.is_empty() {
        return targets.iter().all(|t| t.iter().all(Scalar::is_zero_value)).then(|| vec![Vec::new(); targets.len()]);
    }
    let n = basis[0].len();
    let k = basis.len();
    // augmented system [basis | targets], one row per ambient coordinate
    let mut aug: Vec<Vec<T>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain(targets.iter().map(|t| t[i].clone())).collect())
        .collect();
    let pivots = rref(&mut aug);
    if pivots.iter().any(|&p| p >= k) || pivots.len() < k {
        return None;
    }
    Some(
        (0..targets.len())
            .map(|t| (0..k).map(|row| aug[row][k + t].clone()).collect())
            .collect(),
    )
}

/// Inverse of a square matrix, or `None` when singular.
pub fn inverse<T: Scalar>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one_value() } else { T::zero_value() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_mul<T: Scalar>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let k = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..k).fold(T::zero_value(), |acc, l| if row[l].is_zero_value() { acc } else { acc.add(&row[l].mul(&b[l][j])) }))
                .collect()
        })
        .collect()
}

pub fn transpose<T: Scalar>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mat_vec<T: Scalar>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(T::zero_value(), |acc, (a, b)| acc.add(&a.mul(b))))
        .collect()
}

/// Sparse row echelon form over `ℤ` built one row at a time.
///
/// Incoming rational rows are cleared of denominators; elimination uses
/// cross-multiplication and divides every new row by the gcd of its entries,
/// so no fractions appear until [`FractionFreeEchelon::nullspace`].
#[derive(Debug, Clone)]
pub struct FractionFreeEchelon {
    ncols: usize,
    rows: BTreeMap<usize, BTreeMap<usize, BigInt>>,
}

impl FractionFreeEchelon {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: &BTreeMap<usize, BigRational>) -> bool {
        let mut r = integer_row(row);
        loop {
            let Some((&lead, lead_val)) = r.iter().next() else {
                return false;
            };
            let Some(basis) = self.rows.get(&lead) else {
                self.rows.insert(lead, r);
                return true;
            };
            let a = basis[&lead].clone();
            let b = lead_val.clone();
            let g = a.gcd(&b);
            let (fa, fb) = (&a / &g, &b / &g);
            // r ← fa·r − fb·basis cancels the lead entry
            let mut next: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (c, v) in &r {
                next.insert(*c, v * &fa);
            }
            for (c, v) in basis {
                let e = next.entry(*c).or_insert_with(BigInt::zero);
                *e -= v * &fb;
            }
            next.retain(|_, v| !v.is_zero());
            make_primitive(&mut next);
            r = next;
        }
    }

    /// Rational basis of the right kernel, one vector per free column with a
    /// 1 in that column.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        // back-substitute to reduced form over ℚ
        let pivots: Vec<usize> = self.rows.keys().copied().collect();
        let mut reduced: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
        for &p in pivots.iter().rev() {
            let row = &self.rows[&p];
            let lead = BigRational::from_integer(row[&p].clone());
            let mut r: BTreeMap<usize, BigRational> =
                row.iter().map(|(c, v)| (*c, BigRational::from_integer(v.clone()) / &lead)).collect();
            let later: Vec<usize> = r.keys().copied().filter(|c| *c != p && reduced.contains_key(c)).collect();
            for c in later {
                let f = r[&c].clone();
                for (cc, vv) in &reduced[&c] {
                    let e = r.entry(*cc).or_insert_with(BigRational::zero);
                    *e -= &f * vv;
                }
                r.retain(|_, v| !v.is_zero());
            }
            reduced.insert(p, r);
        }
        let mut out = Vec::new();
        for free in (0..self.ncols).filter(|c| !self.rows.contains_key(c)) {
            let mut v = vec![BigRational::zero(); self.ncols];
            v[free] = BigRational::one();
            for (&p, row) in &reduced {
                if let Some(x) = row.get(&free) {
                    v[p] = -x.clone();
                }
            }
            out.push(v);
        }
        out
    }
}

fn integer_row(row: &BTreeMap<usize, BigRational>) -> BTreeMap<usize, BigInt> {
    let lcm = row.values().filter(|v| !v.is_zero()).fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut out: BTreeMap<usize, BigInt> = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&lcm / v.denom())))
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut BTreeMap<usize, BigInt>) {
    let g = row.values().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return;
    }
    for v in row.values_mut() {
        *v /= &g;
    }
}
