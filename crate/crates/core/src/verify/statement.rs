//! Incidence statements and their polynomial and numeric forms.

use std::fmt;
use std::str::FromStr;

use polycore::{MultiPoly, Scalar};
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::geom::{
    collinear3, concurrent3, det3, det_residual, direction_form, infinite_point, BaryLine, BaryPoint,
};
use crate::points::{eval_line, eval_point, EvalContext, LineExpr, Parser, PointExpr, Tok};
use crate::real::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StatementKind {
    Concurrent3,
    Collinear3,
    Parallel,
    Perpendicular,
    PointOnLine,
    /// `K_b K_c = K_a^2` for the subtriangle areas of a point.
    AreaRelation,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Statement {
    Concurrent(LineExpr, LineExpr, LineExpr),
    Collinear(PointExpr, PointExpr, PointExpr),
    Parallel(LineExpr, LineExpr),
    Perpendicular(LineExpr, LineExpr),
    OnLine(PointExpr, LineExpr),
    AreaRelation(PointExpr),
}

impl Statement {
    pub fn kind(&self) -> StatementKind {
        match self {
            Statement::Concurrent(..) => StatementKind::Concurrent3,
            Statement::Collinear(..) => StatementKind::Collinear3,
            Statement::Parallel(..) => StatementKind::Parallel,
            Statement::Perpendicular(..) => StatementKind::Perpendicular,
            Statement::OnLine(..) => StatementKind::PointOnLine,
            Statement::AreaRelation(..) => StatementKind::AreaRelation,
        }
    }

    /// Catalog centers referenced by the statement.
    pub fn centers(&self) -> Vec<u32> {
        let mut out = Vec::new();
        match self {
            Statement::Concurrent(l, m, n) => {
                l.centers(&mut out);
                m.centers(&mut out);
                n.centers(&mut out);
            }
            Statement::Collinear(p, q, r) => {
                p.centers(&mut out);
                q.centers(&mut out);
                r.centers(&mut out);
            }
            Statement::Parallel(l, m) | Statement::Perpendicular(l, m) => {
                l.centers(&mut out);
                m.centers(&mut out);
            }
            Statement::OnLine(p, l) => {
                p.centers(&mut out);
                l.centers(&mut out);
            }
            Statement::AreaRelation(p) => p.centers(&mut out),
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Concurrent(l, m, n) => write!(f, "concurrent({l}, {m}, {n})"),
            Statement::Collinear(p, q, r) => write!(f, "collinear({p}, {q}, {r})"),
            Statement::Parallel(l, m) => write!(f, "parallel({l}, {m})"),
            Statement::Perpendicular(l, m) => write!(f, "perpendicular({l}, {m})"),
            Statement::OnLine(p, l) => write!(f, "on({p}, {l})"),
            Statement::AreaRelation(p) => write!(f, "area({p})"),
        }
    }
}

impl FromStr for Statement {
    type Err = CoreError;

    /// Parses `concurrent(A Y2, C Y1, X8 X20)`, `collinear(B, Y1, X8)`,
    /// `parallel(..)`, `perpendicular(..)`, `on(P, Q R)` and `area(P)`.
    fn from_str(s: &str) -> Result<Statement> {
        let mut p = Parser::new(s)?;
        let head = p.ident()?.to_ascii_lowercase();
        p.expect(Tok::Open)?;
        let st = match head.as_str() {
            "concurrent" => {
                let l = p.line()?;
                p.expect(Tok::Comma)?;
                let m = p.line()?;
                p.expect(Tok::Comma)?;
                let n = p.line()?;
                Statement::Concurrent(l, m, n)
            }
            "collinear" => {
                let a = p.point()?;
                p.expect(Tok::Comma)?;
                let b = p.point()?;
                p.expect(Tok::Comma)?;
                let c = p.point()?;
                Statement::Collinear(a, b, c)
            }
            "parallel" | "perpendicular" => {
                let l = p.line()?;
                p.expect(Tok::Comma)?;
                let m = p.line()?;
                if head == "parallel" {
                    Statement::Parallel(l, m)
                } else {
                    Statement::Perpendicular(l, m)
                }
            }
            "on" => {
                let a = p.point()?;
                p.expect(Tok::Comma)?;
                Statement::OnLine(a, p.line()?)
            }
            "area" => Statement::AreaRelation(p.point()?),
            _ => return Err(CoreError::Statement(format!("unknown statement kind `{head}`"))),
        };
        p.expect(Tok::Close)?;
        if !p.at_end() {
            return Err(CoreError::Statement(format!("trailing input in `{s}`")));
        }
        Ok(st)
    }
}

fn line_at_infinity<T: Scalar>() -> [T; 3] {
    [T::one(), T::one(), T::one()]
}

/// The quantity whose vanishing is the statement, evaluated in any ring.
///
/// Parallelism is `det(L1, L2, (1,1,1))` (the lines meet on the line at
/// infinity); perpendicularity is the Conway form on the infinite points.
pub fn statement_value<T: Scalar>(st: &Statement, ctx: &EvalContext<T>) -> Result<T> {
    Ok(match st {
        Statement::Concurrent(l, m, n) => concurrent3(&eval_line(l, ctx)?, &eval_line(m, ctx)?, &eval_line(n, ctx)?),
        Statement::Collinear(p, q, r) => collinear3(&eval_point(p, ctx)?, &eval_point(q, ctx)?, &eval_point(r, ctx)?),
        Statement::Parallel(l, m) => det3(&eval_line(l, ctx)?.0, &eval_line(m, ctx)?.0, &line_at_infinity()),
        Statement::Perpendicular(l, m) => {
            let f = infinite_point(&eval_line(l, ctx)?)?;
            let g = infinite_point(&eval_line(m, ctx)?)?;
            direction_form(&f.0, &g.0, &ctx.sides)
        }
        Statement::OnLine(p, l) => eval_line(l, ctx)?.contains(&eval_point(p, ctx)?),
        Statement::AreaRelation(p) => {
            let [x, y, z] = eval_point(p, ctx)?.0;
            y * z - x.square()
        }
    })
}

/// Polynomial in `a, b, c, u` whose vanishing (given the Yff cubic) is the
/// statement, with rational content removed.
pub fn statement_to_polynomial(st: &Statement) -> Result<MultiPoly> {
    let v = statement_value(st, &EvalContext::symbolic())?;
    Ok(v.primitive_part())
}

fn norm<T: Real>(v: &[T; 3]) -> T {
    (v[0].square() + v[1].square() + v[2].square()).sqrt()
}

/// Scale-free residual of the statement: zero when it holds, of order one
/// when it fails badly.
pub fn statement_residual<T: Real>(st: &Statement, ctx: &EvalContext<T>) -> Result<T> {
    let lines = |ls: &[&LineExpr]| -> Result<Vec<BaryLine<T>>> { ls.iter().map(|l| eval_line(l, ctx)).collect() };
    Ok(match st {
        Statement::Concurrent(l, m, n) => {
            let v = lines(&[l, m, n])?;
            det_residual(&v[0].0, &v[1].0, &v[2].0)
        }
        Statement::Collinear(p, q, r) => {
            let pts: Vec<BaryPoint<T>> = [p, q, r].iter().map(|x| eval_point(x, ctx)).collect::<Result<_>>()?;
            det_residual(&pts[0].0, &pts[1].0, &pts[2].0)
        }
        Statement::Parallel(l, m) => {
            let v = lines(&[l, m])?;
            crate::geom::parallel_residual(&v[0], &v[1], &ctx.sides)?
        }
        Statement::Perpendicular(l, m) => {
            let v = lines(&[l, m])?;
            crate::geom::perpendicular_residual(&v[0], &v[1], &ctx.sides)?
        }
        Statement::OnLine(p, l) => {
            let pt = eval_point(p, ctx)?;
            let ln = eval_line(l, ctx)?;
            ln.contains(&pt).abs() / (norm(&pt.0) * norm(&ln.0))
        }
        Statement::AreaRelation(p) => {
            let [x, y, z] = eval_point(p, ctx)?.0;
            let n = x.square() + y.square() + z.square();
            (y * z - x.square()).abs() / n
        }
    })
}
