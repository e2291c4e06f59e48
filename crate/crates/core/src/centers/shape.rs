//! Triangle shape families and their exact parametrizations.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use polycore::{poly, reduce_mod, MultiPoly, Var};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, GeomError, Result};
use crate::exact::{enclose_univariate, eval_univariate, midpoint, q, qr};
use crate::geom::Sides;
use crate::real::{rational_to_f64, Hp, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "scalene-random")]
    ScaleneRandom,
    #[serde(rename = "right-at-B")]
    RightAtB,
    #[serde(rename = "right-30-60-90")]
    Right306090,
    #[serde(rename = "sixty-at-C")]
    SixtyAtC,
    #[serde(rename = "heptagonal")]
    Heptagonal,
    #[serde(rename = "AP")]
    Ap,
    #[serde(rename = "harmonic")]
    Harmonic,
    #[serde(rename = "double-angle")]
    DoubleAngle,
    #[serde(rename = "isosceles")]
    Isosceles,
    #[serde(rename = "isosceles-right-at-A")]
    IsoscelesRightAtA,
    #[serde(rename = "nagel-special")]
    NagelSpecial,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::ScaleneRandom,
        Family::RightAtB,
        Family::Right306090,
        Family::SixtyAtC,
        Family::Heptagonal,
        Family::Ap,
        Family::Harmonic,
        Family::DoubleAngle,
        Family::Isosceles,
        Family::IsoscelesRightAtA,
        Family::NagelSpecial,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::ScaleneRandom => "scalene-random",
            Family::RightAtB => "right-at-B",
            Family::Right306090 => "right-30-60-90",
            Family::SixtyAtC => "sixty-at-C",
            Family::Heptagonal => "heptagonal",
            Family::Ap => "AP",
            Family::Harmonic => "harmonic",
            Family::DoubleAngle => "double-angle",
            Family::Isosceles => "isosceles",
            Family::IsoscelesRightAtA => "isosceles-right-at-A",
            Family::NagelSpecial => "nagel-special",
        }
    }

    /// Whether the family is a single shape up to similarity.
    pub fn is_fixed_shape(self) -> bool {
        matches!(self, Family::Right306090 | Family::Heptagonal | Family::IsoscelesRightAtA)
    }

    /// Names of the parameters `make_shape` expects.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::ScaleneRandom => &["a", "b", "c"],
            Family::Right306090 | Family::Heptagonal | Family::IsoscelesRightAtA => &["t"],
            _ => &["m", "n"],
        }
    }

    pub fn parametrization(self) -> Parametrization {
        let (params, sides, minpoly, constraint): (Vec<Var>, [&str; 3], Option<(&str, (i64, i64), (i64, i64))>, &str) =
            match self {
                Family::ScaleneRandom => (vec![Var::A, Var::B, Var::C], ["a", "b", "c"], None, "0"),
                Family::RightAtB => (
                    vec![Var::M, Var::N],
                    ["m^2 - n^2", "m^2 + n^2", "2*m*n"],
                    None,
                    "a^2 - b^2 + c^2",
                ),
                Family::Right306090 => (
                    vec![],
                    ["x", "2", "1"],
                    Some(("x^2 - 3", (1, 1), (2, 1))),
                    "(a^2 - 3*c^2)^2 + (b - 2*c)^2",
                ),
                Family::SixtyAtC => (
                    vec![Var::M, Var::N],
                    ["m^2 - n^2", "2*m*n - n^2", "m^2 - m*n + n^2"],
                    None,
                    "c^2 - a^2 - b^2 + a*b",
                ),
                Family::Heptagonal => (
                    vec![],
                    ["x^2 - 1", "x", "1"],
                    Some(("x^3 - x^2 - 2*x + 1", (9, 5), (2, 1))),
                    "(a^2 - b^2 - b*c)^2 + (b^2 - c^2 - c*a)^2",
                ),
                Family::Ap => (vec![Var::M, Var::N], ["m", "m + n", "m - n"], None, "b + c - 2*a"),
                Family::Harmonic => (
                    vec![Var::M, Var::N],
                    ["m*(m + n)", "2*m*n", "n*(m + n)"],
                    None,
                    "b*(a + c) - 2*a*c",
                ),
                Family::DoubleAngle => (
                    vec![Var::M, Var::N],
                    ["m*n", "n^2", "m^2 - n^2"],
                    None,
                    "a^2 - b*(b + c)",
                ),
                Family::Isosceles => (vec![Var::M, Var::N], ["m", "n", "n"], None, "b - c"),
                Family::IsoscelesRightAtA => (
                    vec![],
                    ["x", "1", "1"],
                    Some(("x^2 - 2", (1, 1), (2, 1))),
                    "(b - c)^2 + (a^2 - b^2 - c^2)^2",
                ),
                Family::NagelSpecial => (
                    vec![Var::M, Var::N],
                    ["x", "m", "n"],
                    Some(("x^3 - (m + n)*x^2 + 3*m*n*x - m*n*(m + n)", (0, 1), (0, 1))),
                    "a^2*(a - b - c) - b*c*(b + c - 3*a)",
                ),
            };
        Parametrization {
            params,
            sides: sides.map(poly),
            minpoly: minpoly.map(|(p, lo, hi)| MinPoly {
                poly: poly(p),
                lower: qr(lo.0, lo.1),
                upper: qr(hi.0, hi.1),
            }),
            constraint: poly(constraint),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = CoreError;

    fn from_str(s: &str) -> Result<Family> {
        let t = s.trim();
        Family::ALL
            .into_iter()
            .find(|f| f.tag().eq_ignore_ascii_case(t))
            .ok_or_else(|| CoreError::UnknownFamily(t.to_string()))
    }
}

/// Minimal polynomial in `x` of an algebraic parameter, with a starting
/// bracket. The nagel-special bracket is computed from `m, n` instead.
#[derive(Clone, Debug)]
pub struct MinPoly {
    pub poly: MultiPoly,
    pub lower: BigRational,
    pub upper: BigRational,
}

/// Symbolic description of a family: sides as polynomials in the
/// parameters (and in `x` for algebraic families) plus a constraint in
/// `a, b, c` vanishing on the family.
#[derive(Clone, Debug)]
pub struct Parametrization {
    pub params: Vec<Var>,
    pub sides: [MultiPoly; 3],
    pub minpoly: Option<MinPoly>,
    pub constraint: MultiPoly,
}

/// Real root of a univariate rational polynomial, isolated by a bracket.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraicReal {
    pub minpoly: MultiPoly,
    pub lower: BigRational,
    pub upper: BigRational,
}

impl AlgebraicReal {
    /// Requires a strict sign change across `[lower, upper]`.
    pub fn new(minpoly: MultiPoly, lower: BigRational, upper: BigRational) -> Result<AlgebraicReal> {
        let fl = eval_univariate(&minpoly, Var::X, &lower);
        let fu = eval_univariate(&minpoly, Var::X, &upper);
        if fl.is_zero() {
            return Ok(AlgebraicReal { minpoly, lower: lower.clone(), upper: lower });
        }
        if fu.is_zero() {
            return Ok(AlgebraicReal { minpoly, lower: upper.clone(), upper });
        }
        if fl.is_positive() == fu.is_positive() {
            return Err(CoreError::InvalidParams(format!(
                "{minpoly} has no sign change on [{lower}, {upper}]"
            )));
        }
        Ok(AlgebraicReal { minpoly, lower, upper })
    }

    pub fn width(&self) -> BigRational {
        &self.upper - &self.lower
    }

    /// Bisects until the bracket is at most `width` wide.
    pub fn refine(&mut self, width: &BigRational) {
        let lower_sign = eval_univariate(&self.minpoly, Var::X, &self.lower).is_positive();
        while &self.width() > width {
            let mid = midpoint(&self.lower, &self.upper);
            let fm = eval_univariate(&self.minpoly, Var::X, &mid);
            if fm.is_zero() {
                self.lower = mid.clone();
                self.upper = mid;
                return;
            }
            if fm.is_positive() == lower_sign {
                self.lower = mid;
            } else {
                self.upper = mid;
            }
        }
    }

    /// Value to the working precision of [`Hp`].
    pub fn to_hp(&self) -> Hp {
        let mut r = self.clone();
        r.refine(&num_traits::pow(qr(1, 2), 300));
        Hp::from_ratio(&midpoint(&r.lower, &r.upper))
    }
}

/// Exact side lengths of a shape.
#[derive(Clone, Debug)]
pub enum ExactSides {
    Rational([BigRational; 3]),
    /// Sides are polynomials in `x` (rational coefficients, scale included)
    /// evaluated at the algebraic number `root`.
    Algebraic { sides: [MultiPoly; 3], root: AlgebraicReal },
}

/// A concrete triangle from a family.
#[derive(Clone, Debug)]
pub struct TriangleShape {
    pub family: Family,
    pub params: Vec<BigRational>,
    pub exact: ExactSides,
    pub constraint: MultiPoly,
    numeric: Sides<f64>,
    hp: Sides<Hp>,
}

impl TriangleShape {
    /// A triangle given directly by rational sides, tagged scalene-random.
    pub fn from_sides(a: BigRational, b: BigRational, c: BigRational) -> Result<TriangleShape> {
        make_shape(Family::ScaleneRandom, &[a, b, c])
    }

    pub fn sides_f64(&self) -> &Sides<f64> {
        &self.numeric
    }

    pub fn sides_hp(&self) -> &Sides<Hp> {
        &self.hp
    }

    /// Exact rational sides when the family is rational.
    pub fn rational_sides(&self) -> Option<&[BigRational; 3]> {
        match &self.exact {
            ExactSides::Rational(s) => Some(s),
            ExactSides::Algebraic { .. } => None,
        }
    }

    /// Rational enclosures of the three sides, each at most `width` wide.
    pub fn side_intervals(&self, width: &BigRational) -> [(BigRational, BigRational); 3] {
        match &self.exact {
            ExactSides::Rational(s) => s.clone().map(|x| (x.clone(), x)),
            ExactSides::Algebraic { sides, root } => {
                let mut r = root.clone();
                let mut w = width.clone();
                loop {
                    r.refine(&w);
                    let iv = sides.clone().map(|p| enclose_univariate(&p, Var::X, &r.lower, &r.upper));
                    if iv.iter().all(|(l, h)| &(h - l) <= width) {
                        return iv;
                    }
                    w /= q(256);
                }
            }
        }
    }

    /// Short human-readable description, e.g. `right-at-B(m=2, n=1)`.
    pub fn label(&self) -> String {
        let names = self.family.param_names();
        let ps: Vec<String> = names
            .iter()
            .zip(&self.params)
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        format!("{}({})", self.family, ps.join(", "))
    }
}

fn hp_of_rational(x: &BigRational) -> Hp {
    Hp::from_ratio(x)
}

/// Builds a triangle from family parameters.
///
/// Fixed-shape families take an optional scale `t` (default 1).
pub fn make_shape(family: Family, params: &[BigRational]) -> Result<TriangleShape> {
    let par = family.parametrization();
    let names = family.param_names();
    let params: Vec<BigRational> = if family.is_fixed_shape() && params.is_empty() {
        vec![q(1)]
    } else {
        params.to_vec()
    };
    if params.len() != names.len() {
        return Err(CoreError::InvalidParams(format!(
            "{family} expects {} parameter(s) ({}), got {}",
            names.len(),
            names.join(", "),
            params.len()
        )));
    }
    let shown = join(&params);
    let invalid = |why: &str| CoreError::InvalidParams(format!("{family} with ({shown}): {why}"));

    let (exact, numeric, hp) = if family.is_fixed_shape() {
        let t = &params[0];
        if !t.is_positive() {
            return Err(invalid("scale must be positive"));
        }
        let mp = par.minpoly.clone().expect("fixed families are algebraic");
        let root = AlgebraicReal::new(mp.poly, mp.lower, mp.upper)?;
        let tp = MultiPoly::constant(t.clone());
        let sides = par.sides.clone().map(|s| &s * &tp);
        algebraic_numeric(sides, root)
    } else if family == Family::NagelSpecial {
        let (m, n) = (&params[0], &params[1]);
        if !m.is_positive() || !n.is_positive() {
            return Err(invalid("m and n must be positive"));
        }
        let mp = par.minpoly.clone().expect("nagel family is algebraic");
        let bind = [(Var::M, m.clone()), (Var::N, n.clone())];
        let specialized = specialize(&mp.poly, &bind);
        let lo = (m - n).abs();
        let hi = m + n;
        let root = AlgebraicReal::new(specialized, lo, hi).map_err(|_| invalid("no root in (|m-n|, m+n)"))?;
        let sides = par.sides.clone().map(|s| specialize(&s, &bind));
        algebraic_numeric(sides, root)
    } else {
        let bind: Vec<(Var, BigRational)> = par.params.iter().copied().zip(params.iter().cloned()).collect();
        let s = par.sides.clone().map(|p| p.eval_rational(&bind));
        let numeric = Sides::new(rational_to_f64(&s[0]), rational_to_f64(&s[1]), rational_to_f64(&s[2]));
        let hp = Sides::new(hp_of_rational(&s[0]), hp_of_rational(&s[1]), hp_of_rational(&s[2]));
        (ExactSides::Rational(s), numeric, hp)
    };

    check_triangle(&exact, &hp).map_err(|e| invalid(&e.to_string()))?;
    let shape = TriangleShape {
        family,
        params,
        exact,
        constraint: par.constraint.clone(),
        numeric,
        hp,
    };
    if !constraint_holds(&shape)? {
        return Err(invalid("family constraint does not vanish"));
    }
    Ok(shape)
}

fn join(xs: &[BigRational]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

fn specialize(p: &MultiPoly, bind: &[(Var, BigRational)]) -> MultiPoly {
    let map = bind
        .iter()
        .map(|(v, x)| (*v, MultiPoly::constant(x.clone())))
        .collect();
    p.substitute(&map)
}

fn algebraic_numeric(sides: [MultiPoly; 3], root: AlgebraicReal) -> (ExactSides, Sides<f64>, Sides<Hp>) {
    let x = root.to_hp();
    let ev = |p: &MultiPoly| p.eval(|v| if v == Var::X { x.clone() } else { <Hp as polycore::Scalar>::zero() });
    let hp = Sides::new(ev(&sides[0]), ev(&sides[1]), ev(&sides[2]));
    let numeric = Sides::new(Real::to_f64(&hp.a), Real::to_f64(&hp.b), Real::to_f64(&hp.c));
    (ExactSides::Algebraic { sides, root }, numeric, hp)
}

fn check_triangle(exact: &ExactSides, hp: &Sides<Hp>) -> Result<(), GeomError> {
    match exact {
        ExactSides::Rational([a, b, c]) => {
            let ok = a.is_positive() && b.is_positive() && c.is_positive() && a < &(b + c) && b < &(c + a) && c < &(a + b);
            if ok {
                Ok(())
            } else {
                Err(GeomError::Domain("side lengths violate the triangle inequality".into()))
            }
        }
        ExactSides::Algebraic { .. } => crate::geom::validate_sides(hp),
    }
}

/// Whether the constraint vanishes exactly on the shape.
fn constraint_holds(shape: &TriangleShape) -> Result<bool> {
    match &shape.exact {
        ExactSides::Rational([a, b, c]) => Ok(shape
            .constraint
            .eval_rational(&[(Var::A, a.clone()), (Var::B, b.clone()), (Var::C, c.clone())])
            .is_zero()),
        ExactSides::Algebraic { sides, root } => {
            let map = [(Var::A, sides[0].clone()), (Var::B, sides[1].clone()), (Var::C, sides[2].clone())]
                .into_iter()
                .collect();
            let p = shape.constraint.substitute(&map);
            Ok(reduce_mod(&p, &root.minpoly, Var::X)?.is_zero())
        }
    }
}

/// Random parameters for a family, following the sampling rules of the
/// scan harness (bounded integers or rationals, rejection of degenerate or
/// near-isosceles shapes where the family allows scalene members).
pub fn sample_params<R: Rng>(family: Family, rng: &mut R) -> Vec<BigRational> {
    loop {
        let p: Vec<BigRational> = match family {
            Family::ScaleneRandom => {
                let mut side = || qr(rng.gen_range(10..=200), rng.gen_range(1..=8));
                vec![side(), side(), side()]
            }
            Family::Right306090 | Family::Heptagonal | Family::IsoscelesRightAtA => {
                vec![qr(rng.gen_range(1..=40), rng.gen_range(1..=8))]
            }
            Family::RightAtB | Family::SixtyAtC => {
                let m = rng.gen_range(2..=16i64);
                vec![q(m), q(rng.gen_range(1..m))]
            }
            Family::Ap => {
                let m = rng.gen_range(3..=40i64);
                vec![q(m), q(rng.gen_range(1..=(m - 1) / 2))]
            }
            Family::Harmonic | Family::NagelSpecial => vec![q(rng.gen_range(1..=24)), q(rng.gen_range(1..=24))],
            Family::DoubleAngle => {
                let n = rng.gen_range(2..=24i64);
                vec![q(rng.gen_range(n + 1..2 * n)), q(n)]
            }
            Family::Isosceles => {
                let n = rng.gen_range(2..=30i64);
                vec![q(rng.gen_range(1..2 * n)), q(n)]
            }
        };
        if let Ok(shape) = make_shape(family, &p) {
            if acceptable_sample(&shape) {
                return p;
            }
        }
    }
}

/// Rejects near-degenerate samples: every triangle-inequality slack must be
/// at least 5% of the longest side, and families that admit scalene members
/// must be scalene with 5% margin.
fn acceptable_sample(shape: &TriangleShape) -> bool {
    let s = shape.sides_f64();
    let [a, b, c] = [s.a, s.b, s.c];
    let mx = a.max(b).max(c);
    let slack = (b + c - a).min(c + a - b).min(a + b - c);
    if slack < 0.05 * mx {
        return false;
    }
    let scalene_margin = (a - b).abs().min((b - c).abs()).min((c - a).abs());
    match shape.family {
        Family::Isosceles => (a - b).abs() >= 0.05 * mx,
        Family::IsoscelesRightAtA | Family::Right306090 | Family::Heptagonal => true,
        _ => scalene_margin >= 0.05 * mx,
    }
}

pub fn sample_shape<R: Rng>(family: Family, rng: &mut R) -> TriangleShape {
    let p = sample_params(family, rng);
    make_shape(family, &p).expect("sampled parameters are valid")
}
