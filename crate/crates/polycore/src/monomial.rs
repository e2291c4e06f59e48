use std::cmp::Ordering;
use std::fmt;

use crate::var::{Var, NUM_VARS};

const FIELD_BITS: u32 = 14;
const FIELD_MASK: u128 = (1 << FIELD_BITS) - 1;
const DEGREE_SHIFT: u32 = 112;
/// Largest total degree representable without a field overflowing.
pub const MAX_DEGREE: u32 = (1 << FIELD_BITS) - 1;

/// A monomial packed into a single `u128`.
///
/// The top 16 bits hold the total degree, followed by one 14-bit exponent
/// field per variable with `t` most significant and `a` least. Comparing the
/// packed integers is therefore exactly the graded lexicographic order, and
/// multiplying monomials is integer addition.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(u128);

#[inline]
fn shift(v: usize) -> u32 {
    FIELD_BITS * v as u32
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var) -> Monomial {
        Monomial::from_exponents(&{
            let mut e = [0u32; NUM_VARS];
            e[v.index()] = 1;
            e
        })
    }

    pub fn from_exponents(exps: &[u32; NUM_VARS]) -> Monomial {
        let deg: u32 = exps.iter().sum();
        assert!(deg <= MAX_DEGREE, "monomial degree {deg} exceeds {MAX_DEGREE}");
        let mut packed = (deg as u128) << DEGREE_SHIFT;
        for (i, &e) in exps.iter().enumerate() {
            packed |= (e as u128) << shift(i);
        }
        Monomial(packed)
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEGREE_SHIFT) as u32
    }

    #[inline]
    pub fn exponent(self, v: Var) -> u32 {
        ((self.0 >> shift(v.index())) & FIELD_MASK) as u32
    }

    pub fn exponents(self) -> [u32; NUM_VARS] {
        let mut e = [0u32; NUM_VARS];
        for (i, slot) in e.iter_mut().enumerate() {
            *slot = ((self.0 >> shift(i)) & FIELD_MASK) as u32;
        }
        e
    }

    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        assert!(
            self.degree() + other.degree() <= MAX_DEGREE,
            "monomial degree overflow"
        );
        Monomial(self.0 + other.0)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        if other.degree() > self.degree() {
            return None;
        }
        for i in 0..NUM_VARS {
            let s = (self.0 >> shift(i)) & FIELD_MASK;
            let o = (other.0 >> shift(i)) & FIELD_MASK;
            if o > s {
                return None;
            }
        }
        Some(Monomial(self.0 - other.0))
    }

    pub fn pow(self, k: u32) -> Monomial {
        assert!(self.degree() * k <= MAX_DEGREE, "monomial degree overflow");
        Monomial(self.0 * k as u128)
    }

    /// Same monomial with the exponent of `v` set to zero.
    pub fn without(self, v: Var) -> Monomial {
        let e = self.exponent(v) as u128;
        Monomial(self.0 - (e << shift(v.index())) - (e << DEGREE_SHIFT))
    }

    pub fn with_exponent(self, v: Var, k: u32) -> Monomial {
        let base = self.without(v);
        assert!(base.degree() + k <= MAX_DEGREE, "monomial degree overflow");
        Monomial(base.0 + ((k as u128) << shift(v.index())) + ((k as u128) << DEGREE_SHIFT))
    }

    pub fn is_one(self) -> bool {
        self.0 == 0
    }

    /// Bitmask of the variables with nonzero exponent.
    pub fn support(self) -> u8 {
        let mut mask = 0u8;
        for i in 0..NUM_VARS {
            if (self.0 >> shift(i)) & FIELD_MASK != 0 {
                mask |= 1 << i;
            }
        }
        mask
    }

    pub fn cmp_grlex(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_order_is_graded_lex() {
        let u3 = Monomial::var(Var::U).pow(3);
        let cu2 = Monomial::var(Var::C).mul(Monomial::var(Var::U).pow(2));
        let abc = Monomial::var(Var::A)
            .mul(Monomial::var(Var::B))
            .mul(Monomial::var(Var::C));
        let a4 = Monomial::var(Var::A).pow(4);
        assert!(a4 > u3);
        assert!(u3 > cu2);
        assert!(cu2 > abc);
    }

    #[test]
    fn division_and_exponents() {
        let m = Monomial::from_exponents(&[2, 1, 0, 3, 0, 0, 0, 0]);
        let d = Monomial::from_exponents(&[1, 1, 0, 1, 0, 0, 0, 0]);
        let q = m.div(d).unwrap();
        assert_eq!(q.exponents(), [1, 0, 0, 2, 0, 0, 0, 0]);
        assert_eq!(q.degree(), 3);
        assert!(d.div(m).is_none());
        assert_eq!(m.without(Var::U).exponents(), [2, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(m.with_exponent(Var::U, 1).degree(), 4);
        assert_eq!(m.to_string(), "a^2*b*u^3");
    }
}
