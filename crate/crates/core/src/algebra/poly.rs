use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Deref, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gauss::GaussRational;
use super::monomial::{Monomial, Var};
use super::AlgebraError;

/// Sparse polynomial in `z1, z2, zb1, zb2, u, w` over `ℚ(i)`.
///
/// Terms are stored in graded-lexicographic order with no zero
/// coefficients, so two equal polynomials are structurally equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, GaussRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussRational::one())
    }

    pub fn constant(c: GaussRational) -> Self {
        Self::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: GaussRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, GaussRational::one())
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, GaussRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(GaussRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &GaussRational)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> GaussRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussRational::zero)
    }

    /// Greatest term under the canonical order.
    pub fn leading_term(&self) -> Option<(&Monomial, &GaussRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Option<&GaussRational> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_value(&self) -> Option<GaussRational> {
        if self.is_constant() {
            Some(self.coeff(&Monomial::ONE))
        } else {
            None
        }
    }

    pub fn max_exp(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    pub fn has_var(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.exp(v) > 0)
    }

    /// No `zb1`, `zb2`, `u`.
    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(Monomial::is_holomorphic)
    }

    /// Depends on `z1, z2, zb1, zb2` only.
    pub fn is_z_only(&self) -> bool {
        !self.has_var(Var::U) && !self.has_var(Var::W)
    }

    /// Coefficient of `(α, β, l)` is the conjugate of that of `(β, α, l)`, and no `w`.
    pub fn is_real(&self) -> bool {
        !self.has_var(Var::W) && self.conj() == *self
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn scale_rational(&self, r: &BigRational) -> Self {
        self.scale(&GaussRational::from_real(r.clone()))
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.clone())).collect() }
    }

    /// Swaps `z ↔ zb` in every monomial and conjugates coefficients.
    pub fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect() }
    }

    /// `(p + conj p) / 2`.
    pub fn re_part(&self) -> Result<RealPoly, AlgebraError> {
        if self.has_var(Var::W) {
            return Err(AlgebraError::MalformedInput("real part of a w-dependent polynomial".into()));
        }
        let half = BigRational::new(1.into(), 2.into());
        Ok(RealPoly((self + &self.conj()).scale_rational(&half)))
    }

    /// `(p − conj p) / (2i)`.
    pub fn im_part(&self) -> Result<RealPoly, AlgebraError> {
        if self.has_var(Var::W) {
            return Err(AlgebraError::MalformedInput("imaginary part of a w-dependent polynomial".into()));
        }
        let factor = GaussRational::complex(0, 1, -1, 2); // 1/(2i)
        Ok(RealPoly((self - &self.conj()).scale(&factor)))
    }

    /// Formal partial derivative; `zb` variables are independent of `z`.
    pub fn partial(&self, v: Var) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            out.add_term(m.with_exp(v, e - 1), &c.scale(&BigRational::from_integer(e.into())));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Returns `r` with `r·q = self`, or an error when `q` does not divide.
    pub fn exact_div(&self, q: &Poly) -> Result<Poly, AlgebraError> {
        let (lm, lc) = q.leading_term().ok_or(AlgebraError::DivisionByZero)?;
        let lc_inv = lc.inv().expect("leading coefficient is nonzero");
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((m, c)) = rem.leading_term() {
            let t = lm.div(m).ok_or(AlgebraError::NotDivisible)?;
            let coef = c * &lc_inv;
            let sub = q.mul_monomial(&t).scale(&coef);
            quot.add_term(t, &coef);
            rem = &rem - &sub;
        }
        Ok(quot)
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(c) => self.scale(&c.inv().expect("nonzero")),
            None => Poly::zero(),
        }
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Poly {
        Self { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect() }
    }

    /// Monomial gcd of the support (the largest monomial dividing every term).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
            None => Monomial::ONE,
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c);
        }
        out
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, &-c);
        }
        out
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<GaussRational> for Poly {
    fn from(c: GaussRational) -> Self {
        Poly::constant(c)
    }
}

/// Writes a coefficient as a multiplicative factor. Returns `(negative, body)`
/// where `body` is empty for a unit coefficient.
fn coeff_factor(c: &GaussRational) -> (bool, String) {
    if c.is_real() {
        let r = c.re();
        let neg = r.is_negative();
        let a = r.abs();
        let body = if a.is_one() { String::new() } else { a.to_string() };
        (neg, body)
    } else if c.is_imaginary() {
        let r = c.im();
        let neg = r.is_negative();
        let a = r.abs();
        let body = if a.is_one() { "i".to_string() } else { format!("{a}*i") };
        (neg, body)
    } else {
        (false, format!("({c})"))
    }
}

/// Terms in descending canonical order, e.g. `1/2*z1*zb2^2 + (1/2+i)*z2`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = coeff_factor(c);
            let text = match (body.is_empty(), m.is_one()) {
                (true, true) => "1".to_string(),
                (true, false) => m.to_string(),
                (false, true) => body,
                (false, false) => format!("{body}*{m}"),
            };
            match (k, neg) {
                (0, true) => write!(f, "-{text}")?,
                (0, false) => write!(f, "{text}")?,
                (_, true) => write!(f, " - {text}")?,
                (_, false) => write!(f, " + {text}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial fixed by conjugation: the coefficient of `(α, β, l)` is the
/// conjugate of the coefficient of `(β, α, l)`, and `w` does not occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RealPoly(Poly);

impl RealPoly {
    pub fn zero() -> Self {
        Self(Poly::zero())
    }

    pub fn as_poly(&self) -> &Poly {
        &self.0
    }

    pub fn into_poly(self) -> Poly {
        self.0
    }

    /// Sum of the terms with `α = 0` or `β = 0`, i.e. the `h(z) + conj h(z)` part.
    pub fn pluriharmonic_part(&self) -> RealPoly {
        RealPoly(self.0.filter_terms(|m| {
            let (a1, a2) = m.alpha();
            let (b1, b2) = m.beta();
            a1 + a2 == 0 || b1 + b2 == 0
        }))
    }

    pub fn is_pluriharmonic_free(&self) -> bool {
        self.pluriharmonic_part().is_zero()
    }

    pub fn scale_rational(&self, r: &BigRational) -> RealPoly {
        RealPoly(self.0.scale_rational(r))
    }
}

impl Deref for RealPoly {
    type Target = Poly;
    fn deref(&self) -> &Poly {
        &self.0
    }
}

impl TryFrom<Poly> for RealPoly {
    type Error = AlgebraError;
    fn try_from(p: Poly) -> Result<Self, Self::Error> {
        if p.is_real() {
            Ok(RealPoly(p))
        } else {
            Err(AlgebraError::NotReal)
        }
    }
}

impl Add<&RealPoly> for &RealPoly {
    type Output = RealPoly;
    fn add(self, rhs: &RealPoly) -> RealPoly {
        RealPoly(&self.0 + &rhs.0)
    }
}

impl Sub<&RealPoly> for &RealPoly {
    type Output = RealPoly;
    fn sub(self, rhs: &RealPoly) -> RealPoly {
        RealPoly(&self.0 - &rhs.0)
    }
}

impl fmt::Display for RealPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
