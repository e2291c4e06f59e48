//! Point and line recipes shared by the detector and the certifier.
//!
//! A recipe evaluates in any ring: floats for scanning, [`Hp`] for
//! re-verification, and polynomials in `a, b, c, u` for certification.
//!
//! [`Hp`]: crate::real::Hp

use std::fmt;
use std::str::FromStr;

use polycore::{MultiPoly, Scalar, Var};
use serde::{Deserialize, Serialize};

use crate::centers::catalog::Catalog;
use crate::centers::yff::{symbolic_sides, yff_points};
use crate::error::{CoreError, Result};
use crate::geom::{
    foot_of_perpendicular, infinite_point, join, meet, midpoint, reflect_about_side, BaryLine, BaryPoint, Side, Sides,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointExpr {
    Vertex(usize),
    Center(u32),
    Y1,
    Y2,
    Reflect(Box<PointExpr>, Side),
    Foot(Box<PointExpr>, Side),
    Mid(Box<PointExpr>, Box<PointExpr>),
    Meet(Box<LineExpr>, Box<LineExpr>),
    /// Point at infinity of a line.
    Inf(Box<LineExpr>),
}

/// Line through two points.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LineExpr(pub PointExpr, pub PointExpr);

impl PointExpr {
    pub fn a() -> PointExpr {
        PointExpr::Vertex(0)
    }
    pub fn b() -> PointExpr {
        PointExpr::Vertex(1)
    }
    pub fn c() -> PointExpr {
        PointExpr::Vertex(2)
    }
    pub fn x(n: u32) -> PointExpr {
        PointExpr::Center(n)
    }
    pub fn reflect(self, side: Side) -> PointExpr {
        PointExpr::Reflect(Box::new(self), side)
    }
    pub fn foot(self, side: Side) -> PointExpr {
        PointExpr::Foot(Box::new(self), side)
    }
    pub fn mid(self, other: PointExpr) -> PointExpr {
        PointExpr::Mid(Box::new(self), Box::new(other))
    }

    /// Whether the recipe mentions a Yff point.
    pub fn uses_yff(&self) -> bool {
        match self {
            PointExpr::Y1 | PointExpr::Y2 => true,
            PointExpr::Vertex(_) | PointExpr::Center(_) => false,
            PointExpr::Reflect(p, _) | PointExpr::Foot(p, _) => p.uses_yff(),
            PointExpr::Mid(p, q) => p.uses_yff() || q.uses_yff(),
            PointExpr::Meet(l, m) => l.uses_yff() || m.uses_yff(),
            PointExpr::Inf(l) => l.uses_yff(),
        }
    }

    /// Catalog indices the recipe refers to.
    pub fn centers(&self, out: &mut Vec<u32>) {
        match self {
            PointExpr::Center(n) => out.push(*n),
            PointExpr::Vertex(_) | PointExpr::Y1 | PointExpr::Y2 => {}
            PointExpr::Reflect(p, _) | PointExpr::Foot(p, _) => p.centers(out),
            PointExpr::Mid(p, q) => {
                p.centers(out);
                q.centers(out);
            }
            PointExpr::Meet(l, m) => {
                l.centers(out);
                m.centers(out);
            }
            PointExpr::Inf(l) => l.centers(out),
        }
    }
}

impl LineExpr {
    pub fn new(p: PointExpr, q: PointExpr) -> LineExpr {
        LineExpr(p, q)
    }

    pub fn uses_yff(&self) -> bool {
        self.0.uses_yff() || self.1.uses_yff()
    }

    pub fn centers(&self, out: &mut Vec<u32>) {
        self.0.centers(out);
        self.1.centers(out);
    }
}

impl fmt::Display for PointExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointExpr::Vertex(i) => f.write_str(["A", "B", "C"][*i]),
            PointExpr::Center(n) => write!(f, "X{n}"),
            PointExpr::Y1 => f.write_str("Y1"),
            PointExpr::Y2 => f.write_str("Y2"),
            PointExpr::Reflect(p, s) => write!(f, "reflect({p},{})", s.name()),
            PointExpr::Foot(p, s) => write!(f, "foot({p},{})", s.name()),
            PointExpr::Mid(p, q) => write!(f, "mid({p},{q})"),
            PointExpr::Meet(l, m) => write!(f, "meet({l},{m})"),
            PointExpr::Inf(l) => write!(f, "inf({l})"),
        }
    }
}

impl fmt::Display for LineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.0, self.1)
    }
}

/// Values every recipe may depend on.
#[derive(Clone, Debug)]
pub struct EvalContext<T> {
    pub sides: Sides<T>,
    pub u: T,
    y1: BaryPoint<T>,
    y2: BaryPoint<T>,
}

impl<T: Scalar> EvalContext<T> {
    pub fn new(sides: Sides<T>, u: T) -> Self {
        let (y1, y2) = yff_points(&sides, &u);
        EvalContext { sides, u, y1, y2 }
    }
}

impl EvalContext<MultiPoly> {
    /// Polynomial context in the symbols `a, b, c, u`.
    pub fn symbolic() -> Self {
        EvalContext::new(symbolic_sides(), MultiPoly::var(Var::U))
    }
}

pub fn eval_point<T: Scalar>(e: &PointExpr, ctx: &EvalContext<T>) -> Result<BaryPoint<T>> {
    Ok(match e {
        PointExpr::Vertex(i) => BaryPoint::vertex(*i),
        PointExpr::Center(n) => Catalog::builtin().get(*n)?.point(&ctx.sides),
        PointExpr::Y1 => ctx.y1.clone(),
        PointExpr::Y2 => ctx.y2.clone(),
        PointExpr::Reflect(p, s) => reflect_about_side(&eval_point(p, ctx)?, *s, &ctx.sides),
        PointExpr::Foot(p, s) => foot_of_perpendicular(&eval_point(p, ctx)?, *s, &ctx.sides),
        PointExpr::Mid(p, q) => midpoint(&eval_point(p, ctx)?, &eval_point(q, ctx)?)?,
        PointExpr::Meet(l, m) => meet(&eval_line(l, ctx)?, &eval_line(m, ctx)?)?,
        PointExpr::Inf(l) => infinite_point(&eval_line(l, ctx)?)?,
    })
}

pub fn eval_line<T: Scalar>(l: &LineExpr, ctx: &EvalContext<T>) -> Result<BaryLine<T>> {
    Ok(join(&eval_point(&l.0, ctx)?, &eval_point(&l.1, ctx)?)?)
}

// ---------------------------------------------------------------------------
// Parsing: `A`, `X8`, `Y1`, `reflect(Y1,BC)`, `foot(P,CA)`, `mid(P,Q)`,
// `meet(P Q, R S)`, `inf(P Q)`.

#[derive(Clone, Debug, PartialEq)]
pub(crate) enum Tok {
    Ident(String),
    Open,
    Close,
    Comma,
}

pub(crate) fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '(' => {
                out.push(Tok::Open);
                chars.next();
            }
            ')' => {
                out.push(Tok::Close);
                chars.next();
            }
            ',' => {
                out.push(Tok::Comma);
                chars.next();
            }
            c if c.is_whitespace() => {
                chars.next();
            }
            c if c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '\'' => {
                let mut id = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '-' || d == '\'' {
                        id.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Tok::Ident(id));
            }
            other => return Err(CoreError::Statement(format!("unexpected character `{other}`"))),
        }
    }
    Ok(out)
}

pub(crate) struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    pub(crate) fn new(s: &str) -> Result<Parser> {
        Ok(Parser { toks: tokenize(s)?, pos: 0 })
    }

    pub(crate) fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    pub(crate) fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    pub(crate) fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(CoreError::Statement(format!("expected {t:?}, found {got:?}"))),
        }
    }

    pub(crate) fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    pub(crate) fn ident(&mut self) -> Result<String> {
        match self.next() {
            Some(Tok::Ident(s)) => Ok(s),
            got => Err(CoreError::Statement(format!("expected a name, found {got:?}"))),
        }
    }

    fn side(&mut self) -> Result<Side> {
        let s = self.ident()?;
        Side::parse(&s.to_ascii_uppercase()).ok_or_else(|| CoreError::Statement(format!("unknown side `{s}`")))
    }

    pub(crate) fn point(&mut self) -> Result<PointExpr> {
        let name = self.ident()?;
        let lower = name.to_ascii_lowercase();
        if self.peek() == Some(&Tok::Open) {
            self.next();
            let p = match lower.as_str() {
                "reflect" | "foot" => {
                    let p = self.point()?;
                    self.expect(Tok::Comma)?;
                    let s = self.side()?;
                    if lower == "reflect" {
                        p.reflect(s)
                    } else {
                        p.foot(s)
                    }
                }
                "mid" => {
                    let p = self.point()?;
                    self.expect(Tok::Comma)?;
                    let q = self.point()?;
                    p.mid(q)
                }
                "meet" => {
                    let l = self.line()?;
                    self.expect(Tok::Comma)?;
                    let m = self.line()?;
                    PointExpr::Meet(Box::new(l), Box::new(m))
                }
                "inf" => PointExpr::Inf(Box::new(self.line()?)),
                _ => return Err(CoreError::Statement(format!("unknown constructor `{name}`"))),
            };
            self.expect(Tok::Close)?;
            return Ok(p);
        }
        parse_atom(&name)
    }

    pub(crate) fn line(&mut self) -> Result<LineExpr> {
        let p = self.point()?;
        let q = self.point()?;
        Ok(LineExpr(p, q))
    }
}

fn parse_atom(name: &str) -> Result<PointExpr> {
    match name {
        "A" => return Ok(PointExpr::Vertex(0)),
        "B" => return Ok(PointExpr::Vertex(1)),
        "C" => return Ok(PointExpr::Vertex(2)),
        "Y1" | "y1" => return Ok(PointExpr::Y1),
        "Y2" | "y2" => return Ok(PointExpr::Y2),
        "Y1'" => return Ok(PointExpr::Y1.reflect(Side::BC)),
        "Y2'" => return Ok(PointExpr::Y2.reflect(Side::BC)),
        _ => {}
    }
    if let Some(rest) = name.strip_prefix('X').or_else(|| name.strip_prefix('x')) {
        if let Ok(n) = rest.parse::<u32>() {
            Catalog::builtin().get(n)?;
            return Ok(PointExpr::Center(n));
        }
    }
    Err(CoreError::Statement(format!("unknown point `{name}`")))
}

impl FromStr for PointExpr {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<PointExpr> {
        let mut p = Parser::new(s)?;
        let e = p.point()?;
        if !p.at_end() {
            return Err(CoreError::Statement(format!("trailing input in `{s}`")));
        }
        Ok(e)
    }
}

impl FromStr for LineExpr {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<LineExpr> {
        let mut p = Parser::new(s)?;
        let e = p.line()?;
        if !p.at_end() {
            return Err(CoreError::Statement(format!("trailing input in `{s}`")));
        }
        Ok(e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::poly;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["A", "X20", "Y1", "reflect(Y1,BC)", "foot(Y1,CA)", "mid(A,C)", "meet(A Y1,B Y2)", "inf(Y1 Y2)"] {
            let p: PointExpr = s.parse().unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!("X99".parse::<PointExpr>().is_err());
        assert!("Q".parse::<PointExpr>().is_err());
        assert!("reflect(Y1,QQ)".parse::<PointExpr>().is_err());
    }

    #[test]
    fn symbolic_line_bx8() {
        let ctx = EvalContext::symbolic();
        let l = eval_line(&"B X8".parse().unwrap(), &ctx).unwrap();
        let want = [poly("a+b-c"), poly("0"), poly("a-b-c")];
        let got = l.0;
        assert!(got.iter().zip(want.iter()).all(|(g, w)| g == w) || got.iter().zip(want.iter()).all(|(g, w)| *g == -w.clone()));
    }

    #[test]
    fn yff_usage() {
        let p: PointExpr = "reflect(Y2,BC)".parse().unwrap();
        assert!(p.uses_yff());
        let l: LineExpr = "X8 X20".parse().unwrap();
        assert!(!l.uses_yff());
        let mut cs = vec![];
        l.centers(&mut cs);
        assert_eq!(cs, vec![8, 20]);
    }
}
