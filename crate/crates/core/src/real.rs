//! Real-number backends: `f64` for scanning and a 256-bit binary float for
//! re-verification and many-digit checks.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use polycore::Scalar;

/// A field with the transcendental functions the geometry layer needs.
pub trait Real: Scalar + Div<Output = Self> + PartialOrd {
    fn sqrt(&self) -> Self;
    fn cbrt(&self) -> Self;
    fn abs(&self) -> Self;
    fn cos(&self) -> Self;
    fn acos(&self) -> Self;
    fn atan2(&self, x: &Self) -> Self;
    fn pi() -> Self;
    fn from_f64(v: f64) -> Self;
    fn to_f64(&self) -> f64;
}

impl Real for f64 {
    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }
    fn cbrt(&self) -> Self {
        f64::cbrt(*self)
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn cos(&self) -> Self {
        f64::cos(*self)
    }
    fn acos(&self) -> Self {
        f64::acos(self.clamp(-1.0, 1.0))
    }
    fn atan2(&self, x: &Self) -> Self {
        f64::atan2(*self, *x)
    }
    fn pi() -> Self {
        std::f64::consts::PI
    }
    fn from_f64(v: f64) -> Self {
        v
    }
    fn to_f64(&self) -> f64 {
        *self
    }
}

/// Working precision of [`Hp`] in bits.
pub const HP_BITS: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// 256-bit binary floating point number (about 77 decimal digits).
#[derive(Clone)]
pub struct Hp(BigFloat);

impl Hp {
    pub fn from_str_dec(s: &str) -> Hp {
        Hp(with_consts(|cc| BigFloat::parse(s, Radix::Dec, HP_BITS, RM, cc)))
    }

    /// Nearest representable value of a rational.
    pub fn from_ratio(q: &BigRational) -> Hp {
        Hp::from_bigint(q.numer()) / Hp::from_bigint(q.denom())
    }

    pub fn from_bigint(n: &num_bigint::BigInt) -> Hp {
        Hp::from_str_dec(&n.to_string())
    }

    pub fn is_nan(&self) -> bool {
        self.0.is_nan()
    }

    /// Decimal rendering with the backend's full digit string.
    pub fn to_decimal(&self) -> String {
        with_consts(|cc| self.0.format(Radix::Dec, RM, cc)).unwrap_or_else(|_| "NaN".into())
    }
}

impl fmt::Debug for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hp({})", self.to_decimal())
    }
}

impl fmt::Display for Hp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

impl PartialEq for Hp {
    fn eq(&self, other: &Hp) -> bool {
        self.0.cmp(&other.0) == Some(0)
    }
}

impl PartialOrd for Hp {
    fn partial_cmp(&self, other: &Hp) -> Option<Ordering> {
        self.0.cmp(&other.0).map(|c| c.cmp(&0))
    }
}

impl Add for Hp {
    type Output = Hp;
    fn add(self, rhs: Hp) -> Hp {
        Hp(self.0.add(&rhs.0, HP_BITS, RM))
    }
}

impl Sub for Hp {
    type Output = Hp;
    fn sub(self, rhs: Hp) -> Hp {
        Hp(self.0.sub(&rhs.0, HP_BITS, RM))
    }
}

impl Mul for Hp {
    type Output = Hp;
    fn mul(self, rhs: Hp) -> Hp {
        Hp(self.0.mul(&rhs.0, HP_BITS, RM))
    }
}

impl Div for Hp {
    type Output = Hp;
    fn div(self, rhs: Hp) -> Hp {
        Hp(self.0.div(&rhs.0, HP_BITS, RM))
    }
}

impl Neg for Hp {
    type Output = Hp;
    fn neg(self) -> Hp {
        Hp(self.0.neg())
    }
}

impl Scalar for Hp {
    fn zero() -> Self {
        Hp(BigFloat::from_i64(0, HP_BITS))
    }
    fn one() -> Self {
        Hp(BigFloat::from_i64(1, HP_BITS))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn from_rational(q: &BigRational) -> Self {
        Hp::from_ratio(q)
    }
    fn from_i64(v: i64) -> Self {
        Hp(BigFloat::from_i64(v, HP_BITS))
    }
}

impl Real for Hp {
    fn sqrt(&self) -> Self {
        Hp(self.0.sqrt(HP_BITS, RM))
    }
    fn cbrt(&self) -> Self {
        Hp(self.0.cbrt(HP_BITS, RM))
    }
    fn abs(&self) -> Self {
        Hp(self.0.abs())
    }
    fn cos(&self) -> Self {
        Hp(with_consts(|cc| self.0.cos(HP_BITS, RM, cc)))
    }
    fn acos(&self) -> Self {
        let one = Hp::one();
        let x = if *self > one {
            one
        } else if *self < -Hp::one() {
            -Hp::one()
        } else {
            self.clone()
        };
        Hp(with_consts(|cc| x.0.acos(HP_BITS, RM, cc)))
    }
    fn atan2(&self, x: &Self) -> Self {
        let y = self;
        let zero = Hp::zero();
        if x.is_zero() {
            let half = Hp::pi() / Hp::from_i64(2);
            return if *y > zero {
                half
            } else if *y < zero {
                -half
            } else {
                zero
            };
        }
        let t = Hp(with_consts(|cc| (y.clone() / x.clone()).0.atan(HP_BITS, RM, cc)));
        if *x > zero {
            t
        } else if *y >= zero {
            t + Hp::pi()
        } else {
            t - Hp::pi()
        }
    }
    fn pi() -> Self {
        Hp(with_consts(|cc| cc.pi(HP_BITS, RM)))
    }
    fn from_f64(v: f64) -> Self {
        Hp(BigFloat::from_f64(v, HP_BITS))
    }
    fn to_f64(&self) -> f64 {
        if self.0.is_zero() {
            return 0.0;
        }
        self.to_decimal().parse().unwrap_or(f64::NAN)
    }
}

/// Converts an exact rational to any real backend.
pub fn real_from_rational<T: Real>(q: &BigRational) -> T {
    T::from_rational(q)
}

/// Nearest `f64` of a rational; used where exactness is no longer needed.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    q.to_f64().unwrap_or_else(|| if q.is_negative() { f64::MIN } else { f64::MAX })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hp_round_trips_and_is_precise() {
        let third = Hp::from_i64(1) / Hp::from_i64(3);
        assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-16);
        let two = Hp::from_i64(2);
        let r = two.sqrt();
        let err = (r.clone() * r - two).abs();
        assert!(err < Hp::from_str_dec("1e-70"));
    }

    #[test]
    fn hp_trig() {
        let pi = Hp::pi();
        assert!((pi.to_f64() - std::f64::consts::PI).abs() < 1e-15);
        let c = (pi.clone() / Hp::from_i64(3)).cos();
        assert!((c - Hp::from_f64(0.5)).abs() < Hp::from_str_dec("1e-70"));
        let a = Hp::from_i64(-1).atan2(&Hp::from_i64(-1));
        assert!((a.to_f64() + 3.0 * std::f64::consts::FRAC_PI_4).abs() < 1e-15);
        assert!((Hp::from_i64(-1).acos() - pi).abs() < Hp::from_str_dec("1e-70"));
    }

    #[test]
    fn rational_conversion() {
        let q = BigRational::new(22.into(), 7.into());
        let h = Hp::from_rational(&q);
        assert!((h.to_f64() - 22.0 / 7.0).abs() < 1e-15);
        assert_eq!(rational_to_f64(&q), 22.0 / 7.0);
    }
}
