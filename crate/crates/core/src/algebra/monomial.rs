use std::cmp::Ordering;
use std::fmt;

/// The six variables of the coefficient ring, in exponent-vector order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Z1,
    Z2,
    Zb1,
    Zb2,
    U,
    W,
}

impl Var {
    pub const ALL: [Var; 6] = [Var::Z1, Var::Z2, Var::Zb1, Var::Zb2, Var::U, Var::W];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Z1 => "z1",
            Var::Z2 => "z2",
            Var::Zb1 => "zb1",
            Var::Zb2 => "zb2",
            Var::U => "u",
            Var::W => "w",
        }
    }

    /// The variable exchanged with `self` under complex conjugation.
    pub fn conj(self) -> Var {
        match self {
            Var::Z1 => Var::Zb1,
            Var::Z2 => Var::Zb2,
            Var::Zb1 => Var::Z1,
            Var::Zb2 => Var::Z2,
            other => other,
        }
    }
}

/// `z1^a1 z2^a2 zb1^b1 zb2^b2 u^l w^m`.
///
/// Ordered graded-lexicographically on `(a1, a2, b1, b2, l, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u32; 6],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 6] };

    pub fn new(a1: u32, a2: u32, b1: u32, b2: u32, l: u32, m: u32) -> Self {
        Self { exps: [a1, a2, b1, b2, l, m] }
    }

    /// A holomorphic monomial `z1^a1 z2^a2`.
    pub fn holo(a1: u32, a2: u32) -> Self {
        Self::new(a1, a2, 0, 0, 0, 0)
    }

    /// `z1^a1 z2^a2 zb1^b1 zb2^b2`.
    pub fn mixed(a1: u32, a2: u32, b1: u32, b2: u32) -> Self {
        Self::new(a1, a2, b1, b2, 0, 0)
    }

    pub fn var(v: Var) -> Self {
        let mut m = Self::ONE;
        m.exps[v.index()] = 1;
        m
    }

    pub fn exps(&self) -> &[u32; 6] {
        &self.exps
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn with_exp(mut self, v: Var, e: u32) -> Self {
        self.exps[v.index()] = e;
        self
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; 6]
    }

    /// Exponents `(a1, a2)` of the holomorphic `z` variables.
    pub fn alpha(&self) -> (u32, u32) {
        (self.exps[0], self.exps[1])
    }

    /// Exponents `(b1, b2)` of the antiholomorphic variables.
    pub fn beta(&self) -> (u32, u32) {
        (self.exps[2], self.exps[3])
    }

    /// Holomorphic part `z^α` (drops `zb`, `u`, `w`).
    pub fn holo_part(&self) -> Monomial {
        Monomial::holo(self.exps[0], self.exps[1])
    }

    /// The antiholomorphic exponents moved onto `z`: `zb^β ↦ z^β`.
    pub fn antiholo_part_as_holo(&self) -> Monomial {
        Monomial::holo(self.exps[2], self.exps[3])
    }

    pub fn conj(&self) -> Monomial {
        let e = self.exps;
        Monomial { exps: [e[2], e[3], e[0], e[1], e[4], e[5]] }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a += b;
        }
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut exps = other.exps;
        for (a, b) in exps.iter_mut().zip(self.exps.iter()) {
            *a -= b;
        }
        Some(Monomial { exps })
    }

    /// Componentwise minimum (the monomial gcd).
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (a, b) in exps.iter_mut().zip(other.exps.iter()) {
            *a = (*a).min(*b);
        }
        Monomial { exps }
    }

    pub fn is_holomorphic(&self) -> bool {
        self.exps[2] == 0 && self.exps[3] == 0 && self.exps[4] == 0
    }

    pub fn is_antiholomorphic(&self) -> bool {
        self.exps[0] == 0 && self.exps[1] == 0 && self.exps[4] == 0 && self.exps[5] == 0
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// `z1^2*zb2`; the unit monomial renders as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}
