//! Multivariate gcd over `ℚ(i)` by recursive primitive remainder sequences.
//!
//! A polynomial is viewed as univariate in one main variable with
//! coefficients in the remaining ones; contents are computed recursively and
//! the primitive parts are combined by a pseudo-remainder sequence that is
//! kept primitive at every step. Degrees in this crate stay small, so the
//! plain PRS is adequate.

use super::monomial::{Monomial, Var};
use super::poly::Poly;
use super::AlgebraError;

/// The gcd of `p` and `q`, normalized to leading coefficient 1.
pub fn mixed_gcd(p: &Poly, q: &Poly) -> Result<Poly, AlgebraError> {
    if p.is_zero() && q.is_zero() {
        return Err(AlgebraError::BothZero);
    }
    Ok(gcd_rec(p, q).monic())
}

fn gcd_rec(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    // monomial factors split off first; most inputs here are sparse
    let mp = p.monomial_content();
    let mq = q.monomial_content();
    let mono = mp.gcd(&mq);
    let p = divide_monomial(p, &mp);
    let q = divide_monomial(q, &mq);

    let main = Var::ALL
        .into_iter()
        .filter(|v| p.has_var(*v) || q.has_var(*v))
        .min_by_key(|v| (!(p.has_var(*v) && q.has_var(*v)), p.max_exp(*v).max(q.max_exp(*v))));
    let Some(x) = main else {
        return Poly::monomial(mono);
    };

    let g = if !q.has_var(x) {
        gcd_rec(&content(&p, x), &q)
    } else if !p.has_var(x) {
        gcd_rec(&p, &content(&q, x))
    } else {
        let cp = content(&p, x);
        let cq = content(&q, x);
        let c = gcd_rec(&cp, &cq);
        let pp = p.exact_div(&cp).expect("content divides");
        let qq = q.exact_div(&cq).expect("content divides");
        &c * &primitive_prs(pp, qq, x)
    };
    g.mul_monomial(&mono)
}

fn divide_monomial(p: &Poly, m: &Monomial) -> Poly {
    Poly::from_terms(p.terms().map(|(t, c)| (m.div(t).expect("content divides"), c.clone())))
}

/// Coefficients of `p` viewed as a polynomial in `x`, indexed by degree.
fn coeffs_in(p: &Poly, x: Var) -> Vec<Poly> {
    let deg = p.max_exp(x) as usize;
    let mut out = vec![Poly::zero(); deg + 1];
    for (m, c) in p.terms() {
        let e = m.exp(x) as usize;
        out[e].add_term(m.with_exp(x, 0), c);
    }
    out
}

fn degree_in(p: &Poly, x: Var) -> usize {
    p.max_exp(x) as usize
}

fn content(p: &Poly, x: Var) -> Poly {
    coeffs_in(p, x)
        .iter()
        .filter(|c| !c.is_zero())
        .fold(Poly::zero(), |acc, c| gcd_rec(&acc, c).monic())
}

/// Normalized to leading coefficient 1, which keeps the rational
/// coefficients of the remainder sequence from growing.
fn primitive_part(p: &Poly, x: Var) -> Poly {
    let c = content(p, x);
    p.exact_div(&c).expect("content divides").monic()
}

/// `lc(b)^k · a` reduced modulo `b` in the main variable `x`.
fn pseudo_rem(a: &Poly, b: &Poly, x: Var) -> Poly {
    let db = degree_in(b, x);
    let lb = coeffs_in(b, x).pop().expect("b nonzero");
    let mut r = a.clone();
    while !r.is_zero() && r.has_var(x) && degree_in(&r, x) >= db {
        let dr = degree_in(&r, x);
        let lr = coeffs_in(&r, x).pop().expect("r nonzero");
        let shift = Monomial::ONE.with_exp(x, (dr - db) as u32);
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&shift));
    }
    if db == 0 {
        return Poly::zero();
    }
    r
}

fn primitive_prs(a: Poly, b: Poly, x: Var) -> Poly {
    let (mut a, mut b) = if degree_in(&a, x) >= degree_in(&b, x) { (a, b) } else { (b, a) };
    loop {
        if degree_in(&b, x) == 0 {
            // b is primitive and free of x, hence a unit here
            return Poly::one();
        }
        let r = pseudo_rem(&a, &b, x);
        if r.is_zero() {
            return primitive_part(&b, x);
        }
        a = b;
        b = primitive_part(&r, x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussRational;

    fn v(x: Var) -> Poly {
        Poly::var(x)
    }

    #[test]
    fn monomial_cases() {
        let a = &v(Var::Z1) * &v(Var::Zb2);
        let b = &v(Var::Z1) * &v(Var::Zb1);
        assert_eq!(mixed_gcd(&a, &b).unwrap(), v(Var::Z1));
        let c = Poly::monomial(Monomial::mixed(0, 1, 1, 1));
        let d = Poly::monomial(Monomial::mixed(1, 0, 1, 1));
        assert_eq!(mixed_gcd(&c, &d).unwrap(), Poly::monomial(Monomial::mixed(0, 0, 1, 1)));
    }

    #[test]
    fn with_zero() {
        let p = (&v(Var::Z1) + &v(Var::Z2)).scale(&GaussRational::from_int(3));
        assert_eq!(mixed_gcd(&p, &Poly::zero()).unwrap(), &v(Var::Z1) + &v(Var::Z2));
        assert_eq!(mixed_gcd(&Poly::zero(), &Poly::zero()), Err(AlgebraError::BothZero));
    }

    #[test]
    fn common_nonmonomial_factor() {
        let f = &(&v(Var::Z1) * &v(Var::Zb2)) + &v(Var::Z2).scale(&GaussRational::i());
        let g1 = &v(Var::Zb1) + &Poly::one();
        let g2 = &(&v(Var::Z1) * &v(Var::Z1)) - &v(Var::Zb2);
        let a = &f * &g1;
        let b = &f * &g2;
        assert_eq!(mixed_gcd(&a, &b).unwrap(), f.monic());
        let coprime = mixed_gcd(&g1, &g2).unwrap();
        assert_eq!(coprime, Poly::one());
    }

    #[test]
    fn squares() {
        let f = &v(Var::Z1) - &v(Var::Zb1);
        let a = &f * &f;
        let b = &f * &(&v(Var::Z1) + &v(Var::Zb1));
        assert_eq!(mixed_gcd(&a, &b).unwrap(), f.monic());
    }
}
