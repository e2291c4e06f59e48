//! The Yff parameter `u` and the Yff points.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polycore::{poly, MultiPoly, Var};
use serde::{Deserialize, Serialize};

use crate::centers::shape::TriangleShape;
use crate::error::{CoreError, Result};
use crate::exact::{denominator_lcm, midpoint, q, qr, simplest_between};
use crate::geom::{validate_sides, BaryPoint, Sides};
use crate::real::{Hp, Real};

/// `2u^3 - (a+b+c)u^2 + (ab+bc+ca)u - abc`, i.e. `u^3 - (a-u)(b-u)(c-u)`.
pub fn yff_cubic() -> MultiPoly {
    poly("2*u^3 - (a + b + c)*u^2 + (a*b + b*c + c*a)*u - a*b*c")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum YffPoint {
    Y1,
    Y2,
}

/// Certified bracket `[lower, upper]` around the root of the Yff cubic in
/// `(0, min(a, b, c))`. When the root is rational and has been found exactly,
/// `lower == upper`.
#[derive(Clone, Debug, PartialEq)]
pub struct URoot {
    pub lower: BigRational,
    pub upper: BigRational,
    pub precision: BigRational,
}

impl URoot {
    pub fn is_exact(&self) -> bool {
        self.lower == self.upper
    }

    pub fn exact(&self) -> Option<&BigRational> {
        self.is_exact().then_some(&self.lower)
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    pub fn midpoint(&self) -> BigRational {
        midpoint(&self.lower, &self.upper)
    }

    /// Decimal digits of the midpoint, truncated toward zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let m = self.midpoint();
        let scale = num_traits::pow(BigInt::from(10), digits);
        let scaled = (m * BigRational::from_integer(scale.clone())).trunc().to_integer();
        let ip = &scaled / &scale;
        let fp = (&scaled % &scale).abs();
        if digits == 0 {
            return ip.to_string();
        }
        format!("{ip}.{:0>width$}", fp.to_string(), width = digits)
    }
}

fn cubic_at(s: &[BigRational; 3], u: &BigRational) -> BigRational {
    let [a, b, c] = s;
    let u2 = u * u;
    q(2) * &u2 * u - (a + b + c) * &u2 + (a * b + b * c + c * a) * u - a * b * c
}

/// Bisection on rational sides. Once the bracket is narrower than the
/// spacing of rationals the rational root theorem allows, the simplest
/// rational in the bracket is tested so that rational roots are found
/// exactly.
fn solve_rational(s: &[BigRational; 3], precision: &BigRational) -> Result<URoot> {
    let zero = BigRational::zero();
    let mut lo = zero.clone();
    let mut hi = s.iter().min().expect("three sides").clone();
    let flo = cubic_at(s, &lo);
    let fhi = cubic_at(s, &hi);
    if !(flo.is_negative() && fhi.is_positive()) {
        return Err(CoreError::Invariant(format!(
            "Yff cubic has no sign change on (0, {hi})"
        )));
    }
    // Integer form: D^3 times the cubic has leading coefficient 2 D^3, so a
    // rational root has denominator dividing 2 D^3.
    let d = denominator_lcm(s.iter());
    let lead = BigInt::from(2) * &d * &d * &d;
    let spacing = BigRational::new(BigInt::from(1), BigInt::from(2) * &lead * &lead);
    let mut tested = false;
    for _ in 0..20_000 {
        let width = &hi - &lo;
        if !tested && width < spacing {
            tested = true;
            let cand = simplest_between(&lo, &hi);
            if cubic_at(s, &cand).is_zero() {
                return Ok(URoot { lower: cand.clone(), upper: cand, precision: precision.clone() });
            }
        }
        if &width <= precision && tested {
            break;
        }
        let mid = midpoint(&lo, &hi);
        let fm = cubic_at(s, &mid);
        if fm.is_zero() {
            return Ok(URoot { lower: mid.clone(), upper: mid, precision: precision.clone() });
        }
        if fm.is_negative() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(URoot { lower: lo, upper: hi, precision: precision.clone() })
}

/// Root bracket of the Yff cubic for the shape, at most `precision` wide.
///
/// For algebraic sides the root is increasing in each side, so brackets
/// computed at the lower and upper side enclosures enclose it.
pub fn solve_u(shape: &TriangleShape, precision: &BigRational) -> Result<URoot> {
    if !precision.is_positive() {
        return Err(CoreError::InvalidParams("precision must be positive".into()));
    }
    if let Some(s) = shape.rational_sides() {
        return solve_rational(s, precision);
    }
    let mut w = precision / q(4);
    loop {
        let iv = shape.side_intervals(&w);
        let low = [iv[0].0.clone(), iv[1].0.clone(), iv[2].0.clone()];
        let high = [iv[0].1.clone(), iv[1].1.clone(), iv[2].1.clone()];
        let rl = solve_rational(&low, &(precision / q(4)))?;
        let rh = solve_rational(&high, &(precision / q(4)))?;
        let root = URoot { lower: rl.lower, upper: rh.upper, precision: precision.clone() };
        if &root.width() <= precision {
            return Ok(root);
        }
        w /= q(1024);
    }
}

/// Root bracket for rational sides given directly.
pub fn solve_u_sides(a: &BigRational, b: &BigRational, c: &BigRational, precision: &BigRational) -> Result<URoot> {
    let s = [a.clone(), b.clone(), c.clone()];
    let ok = s.iter().all(Signed::is_positive) && a < &(b + c) && b < &(c + a) && c < &(a + b);
    if !ok {
        return Err(CoreError::Geom(crate::error::GeomError::Domain(
            "side lengths violate the triangle inequality".into(),
        )));
    }
    solve_rational(&s, precision)
}

/// The intermediates of the radical expression for `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct URadicalIntermediates<T> {
    pub k1: T,
    pub k2: T,
    pub k3: T,
    pub k4: T,
}

/// `k3 = 2 s1^3 - 18 s1 s2 + 108 s3`, `k4 = 6 s2 - s1^2`, `k2 = k3^2 + 4 k4^3`
/// and `k1 = k3 + sqrt(k2)` (`k1` is left `NaN`-free only when `k2 >= 0`).
pub fn u_radical_intermediates<T: Real>(s: &Sides<T>) -> URadicalIntermediates<T> {
    let (a, b, c) = (s.a.clone(), s.b.clone(), s.c.clone());
    let s1 = a.clone() + b.clone() + c.clone();
    let s2 = a.clone() * b.clone() + b.clone() * c.clone() + c.clone() * a.clone();
    let s3 = a * b * c;
    let k3 = T::from_i64(2) * s1.pow_u32(3) - T::from_i64(18) * s1.clone() * s2.clone() + T::from_i64(108) * s3;
    let k4 = T::from_i64(6) * s2 - s1.square();
    let k2 = k3.square() + T::from_i64(4) * k4.pow_u32(3);
    let k1 = if k2 >= T::zero() { k3.clone() + k2.sqrt() } else { k3.clone() };
    URadicalIntermediates { k1, k2, k3, k4 }
}

/// `u` from the radical formula
/// `cbrt(k1)/(6 cbrt 2) - k4/(3 * 2^(2/3) cbrt(k1)) + s1/6`.
///
/// When `k2 < 0` the cube roots would be complex; the real root is then
/// taken from the trigonometric form of the depressed cubic
/// `t^3 + p t + q` with `p = k4/12`, `q = -k3/216`, `u = t + s1/6`.
pub fn u_radical<T: Real>(s: &Sides<T>) -> Result<T> {
    validate_sides(s)?;
    let k = u_radical_intermediates(s);
    let s1 = s.a.clone() + s.b.clone() + s.c.clone();
    let shift = s1 / T::from_i64(6);
    let zero = T::zero();
    if k.k2 >= zero {
        let mut k1 = k.k1.clone();
        if k1.is_zero() {
            // The other choice of square root gives the same real root.
            k1 = k.k3.clone() - k.k2.sqrt();
        }
        if k1.is_zero() {
            return Ok(shift);
        }
        let c1 = k1.cbrt();
        let cbrt2 = T::from_i64(2).cbrt();
        let t = c1.clone() / (T::from_i64(6) * cbrt2.clone()) - k.k4 / (T::from_i64(3) * cbrt2.square() * c1);
        return Ok(t + shift);
    }
    let p = k.k4 / T::from_i64(12);
    let qq = -(k.k3 / T::from_i64(216));
    let m = T::from_i64(2) * (-(p.clone()) / T::from_i64(3)).sqrt();
    let arg = (T::from_i64(3) * qq / (T::from_i64(2) * p.clone())) * (T::from_i64(-3) / p).sqrt();
    let phi = arg.acos() / T::from_i64(3);
    let mn = s.a.clone().min_real(s.b.clone()).min_real(s.c.clone());
    let mut best: Option<T> = None;
    for k in 0..3 {
        let ang = phi.clone() - T::from_i64(2 * k) * T::pi() / T::from_i64(3);
        let u = m.clone() * ang.cos() + shift.clone();
        if u > zero && u < mn {
            best = Some(u);
            break;
        }
        if best.is_none() {
            best = Some(u);
        }
    }
    Ok(best.expect("three candidate roots"))
}

trait MinReal: Real {
    fn min_real(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl<T: Real> MinReal for T {}

/// Newton refinement of the root to the working precision of `T`.
pub fn u_newton<T: Real>(s: &Sides<T>, start: f64) -> T {
    let (a, b, c) = (s.a.clone(), s.b.clone(), s.c.clone());
    let s1 = a.clone() + b.clone() + c.clone();
    let s2 = a.clone() * b.clone() + b.clone() * c.clone() + c.clone() * a.clone();
    let s3 = a * b * c;
    let mut u = T::from_f64(start);
    for _ in 0..12 {
        let f = T::from_i64(2) * u.pow_u32(3) - s1.clone() * u.square() + s2.clone() * u.clone() - s3.clone();
        let df = T::from_i64(6) * u.square() - T::from_i64(2) * s1.clone() * u.clone() + s2.clone();
        if df.is_zero() {
            break;
        }
        u = u - f / df;
    }
    u
}

/// `u` for the shape in double precision.
pub fn u_f64(shape: &TriangleShape) -> f64 {
    let s = shape.sides_f64();
    let start = u_radical(s).unwrap_or((s.a.min(s.b).min(s.c)) / 2.0);
    u_newton(s, start)
}

/// `u` for the shape at the working precision of [`Hp`].
pub fn u_hp(shape: &TriangleShape) -> Hp {
    u_newton(shape.sides_hp(), u_f64(shape))
}

/// Simple coordinates `Y1 = (u^2 : (a-u)(b-u) : u(b-u))`,
/// `Y2 = ((a-u)(b-u) : u^2 : u(a-u))`, valid in any ring.
pub fn yff_points<T: polycore::Scalar>(s: &Sides<T>, u: &T) -> (BaryPoint<T>, BaryPoint<T>) {
    let au = s.a.clone() - u.clone();
    let bu = s.b.clone() - u.clone();
    let u2 = u.square();
    let y1 = BaryPoint::new(u2.clone(), au.clone() * bu.clone(), u.clone() * bu.clone());
    let y2 = BaryPoint::new(au.clone() * bu, u2, u.clone() * au);
    (y1, y2)
}

pub fn yff_point<T: polycore::Scalar>(which: YffPoint, s: &Sides<T>, u: &T) -> BaryPoint<T> {
    let (y1, y2) = yff_points(s, u);
    match which {
        YffPoint::Y1 => y1,
        YffPoint::Y2 => y2,
    }
}

/// Symbolic Yff points in `a, b, c, u`.
pub fn yff_points_symbolic() -> (BaryPoint<MultiPoly>, BaryPoint<MultiPoly>) {
    yff_points(&symbolic_sides(), &MultiPoly::var(Var::U))
}

pub fn symbolic_sides() -> Sides<MultiPoly> {
    Sides::new(MultiPoly::var(Var::A), MultiPoly::var(Var::B), MultiPoly::var(Var::C))
}

/// Symmetric coordinates `Y1 = cbrt((c-u)/(b-u)) ::` and
/// `Y2 = cbrt((b-u)/(c-u)) ::`.
pub fn yff_points_symmetric<T: Real>(s: &Sides<T>, u: &T) -> (BaryPoint<T>, BaryPoint<T>) {
    let d = [s.a.clone() - u.clone(), s.b.clone() - u.clone(), s.c.clone() - u.clone()];
    let y1 = BaryPoint(std::array::from_fn(|i| (d[(i + 2) % 3].clone() / d[(i + 1) % 3].clone()).cbrt()));
    let y2 = BaryPoint(std::array::from_fn(|i| (d[(i + 1) % 3].clone() / d[(i + 2) % 3].clone()).cbrt()));
    (y1, y2)
}

/// Default bracket width used where the caller does not care: `2^-200`.
pub fn default_precision() -> BigRational {
    num_traits::pow(qr(1, 2), 200)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::shape::{make_shape, Family};
    use crate::geom::{cross, proportionality_residual};

    fn rs(a: i64, b: i64, c: i64) -> TriangleShape {
        TriangleShape::from_sides(q(a), q(b), q(c)).unwrap()
    }

    #[test]
    fn equilateral_is_exact_half() {
        let r = solve_u(&rs(1, 1, 1), &qr(1, 1000)).unwrap();
        assert_eq!(r.exact(), Some(&qr(1, 2)));
        let x = u_radical(&Sides::new(1.0, 1.0, 1.0)).unwrap();
        assert!((x - 0.5).abs() < 1e-14);
    }

    #[test]
    fn harmonic_root_collapses() {
        let s = make_shape(Family::Harmonic, &[q(2), q(3)]).unwrap();
        let r = solve_u(&s, &qr(1, 1_000_000)).unwrap();
        assert_eq!(r.exact(), Some(&q(6)));
    }

    #[test]
    fn bracket_brackets_by_sign() {
        let sides = [q(6), q(9), q(13)];
        let prec = num_traits::pow(qr(1, 10), 30);
        let r = solve_u(&rs(6, 9, 13), &prec).unwrap();
        assert!(r.width() <= prec);
        assert!(cubic_at(&sides, &r.lower).is_negative());
        assert!(cubic_at(&sides, &r.upper).is_positive());
        assert!(r.to_decimal(20).starts_with("4.21625485813629075196"));
        let x = u_radical(&Sides::new(6.0, 9.0, 13.0)).unwrap();
        assert!((x - crate::real::rational_to_f64(&r.midpoint())).abs() < 1e-12);
    }

    #[test]
    fn invalid_triangle_rejected() {
        assert!(u_radical(&Sides::new(4.0, 6.0, 12.0)).is_err());
        assert!(solve_u_sides(&q(4), &q(6), &q(12), &qr(1, 10)).is_err());
    }

    #[test]
    fn trig_branch_matches_newton() {
        // Near-equilateral triangles have k2 < 0.
        let s = Sides::new(1.0, 1.1, 1.2);
        let k = u_radical_intermediates(&s);
        let u = u_radical(&s).unwrap();
        let n = u_newton(&s, 0.5);
        assert!((u - n).abs() < 1e-12, "k2 = {}", k.k2);
    }

    #[test]
    fn algebraic_bracket() {
        let s = make_shape(Family::Heptagonal, &[]).unwrap();
        let prec = num_traits::pow(qr(1, 10), 25);
        let r = solve_u(&s, &prec).unwrap();
        assert!(r.width() <= prec);
        let u = u_hp(&s);
        assert!(Hp::from_ratio(&r.lower) <= u && u <= Hp::from_ratio(&r.upper));
    }

    #[test]
    fn symmetric_matches_simple() {
        let s = Sides::new(6.0, 9.0, 13.0);
        let u = u_newton(&s, 4.0);
        let (y1, y2) = yff_points(&s, &u);
        let (z1, z2) = yff_points_symmetric(&s, &u);
        assert!(proportionality_residual(&y1.0, &z1.0) < 1e-10);
        assert!(proportionality_residual(&y2.0, &z2.0) < 1e-10);
    }

    #[test]
    fn equilateral_points_are_centroid() {
        let s = Sides::new(q(1), q(1), q(1));
        let (y1, y2) = yff_points(&s, &qr(1, 2));
        let g = [q(1), q(1), q(1)];
        assert!(cross(&y1.0, &g).iter().all(Zero::is_zero));
        assert!(cross(&y2.0, &g).iter().all(Zero::is_zero));
    }
}
