//! Small helpers for exact rationals and univariate rational polynomials.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use polycore::{MultiPoly, Var};

use crate::error::{CoreError, Result};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `7`, `-3/4` or a terminating decimal such as `2.125`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || CoreError::InvalidParams(format!("not a rational number: `{s}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.trim_start().starts_with('-');
        let int = if int.is_empty() || int == "-" || int == "+" { "0" } else { int };
        let ip = BigInt::from_str(int).map_err(|_| bad())?;
        let fp = BigInt::from_str(frac).map_err(|_| bad())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let mag = ip.abs() * &den + fp;
        let num = if neg { -mag } else { mag };
        return Ok(BigRational::new(num, den));
    }
    BigInt::from_str(s).map(BigRational::from_integer).map_err(|_| bad())
}

/// The rational with the smallest denominator (then numerator) in `[lo, hi]`,
/// for `0 <= lo <= hi`.
pub fn simplest_between(lo: &BigRational, hi: &BigRational) -> BigRational {
    debug_assert!(!lo.is_negative() && lo <= hi);
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let f = lo.floor();
    let inner = simplest_between(&(hi - &f).recip(), &(lo - &f).recip());
    f + inner.recip()
}

/// Lowest common multiple of the denominators.
pub fn denominator_lcm<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    xs.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn midpoint(lo: &BigRational, hi: &BigRational) -> BigRational {
    (lo + hi) / q(2)
}

/// Evaluates a polynomial in one variable at a rational point.
pub fn eval_univariate(p: &MultiPoly, v: Var, at: &BigRational) -> BigRational {
    p.eval_rational(&[(v, at.clone())])
}

/// Encloses the values of a univariate polynomial over `[lo, hi]`, `lo >= 0`.
///
/// Positive and negative parts are each monotone on the nonnegative axis.
pub fn enclose_univariate(p: &MultiPoly, v: Var, lo: &BigRational, hi: &BigRational) -> (BigRational, BigRational) {
    debug_assert!(!lo.is_negative());
    let mut pos_lo = BigRational::zero();
    let mut pos_hi = BigRational::zero();
    let mut neg_lo = BigRational::zero();
    let mut neg_hi = BigRational::zero();
    for (m, c) in p.terms() {
        let e = m.exponent(v) as usize;
        let l = c.abs() * num_traits::pow(lo.clone(), e);
        let h = c.abs() * num_traits::pow(hi.clone(), e);
        if c.is_positive() {
            pos_lo += l;
            pos_hi += h;
        } else {
            neg_lo += l;
            neg_hi += h;
        }
    }
    (pos_lo - neg_hi, pos_hi - neg_lo)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::poly;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("7").unwrap(), q(7));
        assert_eq!(parse_rational("-3/4").unwrap(), qr(-3, 4));
        assert_eq!(parse_rational("2.125").unwrap(), qr(17, 8));
        assert_eq!(parse_rational("-0.5").unwrap(), qr(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&qr(1, 3), &qr(1, 2)), qr(1, 2));
        assert_eq!(simplest_between(&qr(3, 10), &qr(4, 10)), qr(1, 3));
        assert_eq!(simplest_between(&qr(21, 10), &qr(29, 10)), qr(5, 2));
        assert_eq!(simplest_between(&qr(2999, 1000), &qr(3001, 1000)), q(3));
        assert_eq!(simplest_between(&qr(31, 100), &qr(32, 100)), qr(5, 16));
    }

    #[test]
    fn enclosure_contains_values() {
        let p = poly("x^2 - 1");
        let (l, h) = enclose_univariate(&p, Var::X, &qr(18, 10), &qr(181, 100));
        let v = eval_univariate(&p, Var::X, &qr(1805, 1000));
        assert!(l <= v && v <= h);
    }
}
