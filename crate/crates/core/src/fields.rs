//! Holomorphic polynomial vector fields `f1 ∂z1 + f2 ∂z2 + g ∂w`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::algebra::{GaussRational, Monomial, Poly, RealPoly, Var};
use crate::grading::{weighted_degree, Model, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("vector field is not weighted homogeneous")]
    NotHomogeneous,
    #[error("vector field is zero")]
    ZeroField,
    #[error("tangency is only implemented for w-independent fields")]
    NonRigidInput,
    #[error("field coefficients must be holomorphic")]
    NotHolomorphic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum FieldClass {
    Shift,
    Rotation,
    GeneralizedRotation,
    NegativeNonrigid,
    Other,
}

impl fmt::Display for FieldClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FieldClass::Shift => "SHIFT",
            FieldClass::Rotation => "ROTATION",
            FieldClass::GeneralizedRotation => "GENERALIZED_ROTATION",
            FieldClass::NegativeNonrigid => "NEGATIVE_NONRIGID",
            FieldClass::Other => "OTHER",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VectorField {
    pub f1: Poly,
    pub f2: Poly,
    pub g: Poly,
}

impl VectorField {
    pub fn new(f1: Poly, f2: Poly, g: Poly) -> Result<Self, FieldError> {
        if [&f1, &f2, &g].iter().any(|p| !p.is_holomorphic()) {
            return Err(FieldError::NotHolomorphic);
        }
        Ok(Self { f1, f2, g })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `∂w`.
    pub fn shift_w() -> Self {
        Self { g: Poly::one(), ..Self::default() }
    }

    /// `∂z_j`.
    pub fn shift_z(j: usize) -> Self {
        let mut x = Self::default();
        *x.component_mut(j) = Poly::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.f1.is_zero() && self.f2.is_zero() && self.g.is_zero()
    }

    /// Components indexed `1 → f1`, `2 → f2`, `3 → g`.
    pub fn component(&self, j: usize) -> &Poly {
        match j {
            1 => &self.f1,
            2 => &self.f2,
            3 => &self.g,
            _ => panic!("component index {j} out of range"),
        }
    }

    fn component_mut(&mut self, j: usize) -> &mut Poly {
        match j {
            1 => &mut self.f1,
            2 => &mut self.f2,
            3 => &mut self.g,
            _ => panic!("component index {j} out of range"),
        }
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        Self { f1: self.f1.scale(c), f2: self.f2.scale(c), g: self.g.scale(c) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self { f1: &self.f1 + &o.f1, f2: &self.f2 + &o.f2, g: &self.g + &o.g }
    }

    /// `X(q) = f1 q_z1 + f2 q_z2 + g q_w`.
    pub fn apply(&self, q: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (coef, v) in [(&self.f1, Var::Z1), (&self.f2, Var::Z2), (&self.g, Var::W)] {
            if coef.is_zero() {
                continue;
            }
            let d = q.partial(v);
            if !d.is_zero() {
                out = &out + &(coef * &d);
            }
        }
        out
    }

    pub fn is_rigid(&self) -> bool {
        !(self.f1.has_var(Var::W) || self.f2.has_var(Var::W) || self.g.has_var(Var::W))
    }

    /// The common weight of all monomial contributions.
    pub fn weight(&self, w: &Weight) -> Result<BigRational, FieldError> {
        let mut found: Option<BigRational> = None;
        let one = BigRational::from_integer(1.into());
        let shifts = [w.l1().clone(), w.l2().clone(), one];
        for (j, shift) in shifts.iter().enumerate() {
            for m in self.component(j + 1).monomials() {
                let k = weighted_degree(m, w) - shift;
                match &found {
                    None => found = Some(k),
                    Some(prev) if *prev != k => return Err(FieldError::NotHomogeneous),
                    _ => {}
                }
            }
        }
        found.ok_or(FieldError::ZeroField)
    }

    /// `[X, Z]`, componentwise `X(Z^k) − Z(X^k)`.
    pub fn bracket(&self, z: &VectorField) -> VectorField {
        let comp = |k: usize| &self.apply(z.component(k)) - &z.apply(self.component(k));
        VectorField { f1: comp(1), f2: comp(2), g: comp(3) }
    }

    /// `Im(g) − 2 Re(f1 P_z1 + f2 P_z2)`; zero exactly when the field is
    /// tangent to the model.
    pub fn tangency_residual(&self, m: &Model) -> Result<RealPoly, FieldError> {
        if !self.is_rigid() {
            return Err(FieldError::NonRigidInput);
        }
        let mut h = Poly::zero();
        for j in 1..=2 {
            let f = self.component(j);
            if !f.is_zero() {
                h = &h + &(f * &m.dp(j));
            }
        }
        let two_re = &h + &h.conj();
        // Im g = (g − ḡ)/(2i) = −i(g − ḡ)/2
        let im_g = (&self.g - &self.g.conj()).scale(&GaussRational::complex(0, 1, -1, 2));
        let r = &im_g - &two_re;
        Ok(RealPoly::try_from(r).expect("residual is real by construction"))
    }

    pub fn classify(&self, w: &Weight) -> Result<FieldClass, FieldError> {
        let k = self.weight(w)?;
        Ok(match (self.is_rigid(), k.is_negative(), k.is_zero()) {
            (true, true, _) => FieldClass::Shift,
            (true, _, true) => FieldClass::Rotation,
            (true, _, _) => FieldClass::GeneralizedRotation,
            (false, true, _) => FieldClass::NegativeNonrigid,
            (false, _, _) => FieldClass::Other,
        })
    }
}

/// `λ1 z1 ∂z1 + λ2 z2 ∂z2 + w ∂w`.
pub fn euler_field(w: &Weight) -> VectorField {
    VectorField {
        f1: Poly::term(Monomial::holo(1, 0), GaussRational::from_real(w.l1().clone())),
        f2: Poly::term(Monomial::holo(0, 1), GaussRational::from_real(w.l2().clone())),
        g: Poly::var(Var::W),
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})*d/dz1 + ({})*d/dz2 + ({})*d/dw", self.f1, self.f2, self.g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn rotation_model() -> Model {
        let p = Poly::monomial(Monomial::mixed(1, 0, 0, 2)).re_part().unwrap();
        Model::validate(p, None).unwrap()
    }

    fn y_shear() -> VectorField {
        VectorField::new(Poly::term(Monomial::holo(0, 2), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap()
    }

    fn y_quadratic() -> VectorField {
        VectorField::new(
            Poly::monomial(Monomial::holo(2, 0)),
            -Poly::monomial(Monomial::holo(1, 1)),
            Poly::zero(),
        )
        .unwrap()
    }

    #[test]
    fn apply_examples() {
        assert_eq!(y_shear().apply(&Poly::var(Var::Z1)), Poly::term(Monomial::holo(0, 2), GaussRational::i()));
        for (a, b) in [(3u32, 1u32), (1, 4), (2, 2), (0, 0)] {
            let got = y_quadratic().apply(&Poly::monomial(Monomial::holo(a, b)));
            let expected = Poly::term(Monomial::holo(a + 1, b), GaussRational::from_int(a as i64 - b as i64));
            assert_eq!(got, expected);
        }
        assert!(y_shear().apply(&Poly::constant(GaussRational::ratio(5, 7))).is_zero());
    }

    #[test]
    fn weights_and_rigidity() {
        let w = Weight::from_ratios(1, 3, 1, 3);
        assert_eq!(VectorField::shift_w().weight(&w).unwrap(), rat(-1, 1));
        assert_eq!(y_shear().weight(&w).unwrap(), rat(1, 3));
        assert_eq!(euler_field(&w).weight(&w).unwrap(), rat(0, 1));
        assert_eq!(euler_field(&Weight::from_ratios(1, 2, 1, 4)).weight(&Weight::from_ratios(1, 2, 1, 4)).unwrap(), rat(0, 1));
        assert_eq!(VectorField::zero().weight(&w), Err(FieldError::ZeroField));
        let mixed = VectorField::new(Poly::one(), Poly::var(Var::Z1), Poly::zero()).unwrap();
        assert_eq!(mixed.weight(&Weight::from_ratios(1, 2, 1, 4)), Err(FieldError::NotHomogeneous));
        assert!(y_shear().is_rigid());
        assert!(!euler_field(&w).is_rigid());
        assert!(VectorField::shift_w().is_rigid());
    }

    #[test]
    fn residuals() {
        let m = rotation_model();
        assert!(y_shear().tangency_residual(&m).unwrap().is_zero());
        assert!(VectorField::shift_w().tangency_residual(&m).unwrap().is_zero());
        let r = VectorField::shift_z(1).tangency_residual(&m).unwrap();
        let expected = Poly::monomial(Monomial::mixed(0, 0, 0, 2)).re_part().unwrap();
        assert_eq!(r.as_poly(), &-expected.as_poly().clone());
        assert_eq!(euler_field(m.weight()).tangency_residual(&m), Err(FieldError::NonRigidInput));
    }

    #[test]
    fn brackets() {
        let w = VectorField::shift_w();
        let e = euler_field(&Weight::from_ratios(1, 3, 1, 3));
        assert!(w.bracket(&y_shear()).is_zero());
        assert_eq!(w.bracket(&e), w);
        assert!(y_quadratic().bracket(&y_quadratic()).is_zero());
    }

    #[test]
    fn classes() {
        let w = Weight::from_ratios(1, 3, 1, 3);
        assert_eq!(y_shear().classify(&w).unwrap(), FieldClass::GeneralizedRotation);
        assert_eq!(VectorField::shift_z(2).classify(&w).unwrap(), FieldClass::Shift);
        let rot = VectorField::new(Poly::term(Monomial::holo(1, 0), GaussRational::i()), Poly::zero(), Poly::zero()).unwrap();
        assert_eq!(rot.classify(&w).unwrap(), FieldClass::Rotation);
        assert_eq!(euler_field(&w).classify(&w).unwrap(), FieldClass::Other);
    }

    #[test]
    fn rendering() {
        assert_eq!(y_shear().to_string(), "(i*z2^2)*d/dz1 + (0)*d/dz2 + (0)*d/dw");
    }
}
