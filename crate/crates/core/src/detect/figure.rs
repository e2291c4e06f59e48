//! A triangle with labeled points, evaluated in `f64` and [`Hp`].

use std::f64::consts::PI;

use crate::centers::catalog::Catalog;
use crate::centers::shape::TriangleShape;
use crate::centers::yff::{u_f64, u_hp};
use crate::detect::finding::{cmp_labels, is_yff_label};
use crate::geom::{embed_cartesian, BaryPoint, Planar, Side, Sides};
use crate::points::{eval_point, EvalContext, PointExpr};
use crate::real::{Hp, Real};

/// Points closer than this (relative to the longest side) are merged.
const COINCIDENT: f64 = 1e-9;
/// Collinearity threshold used to group points into lines.
const ON_LINE: f64 = 1e-9;
/// High-precision confirmation threshold for groupings.
const HP_CONFIRM: f64 = 1e-30;

#[derive(Clone, Debug)]
pub struct EvaluatedPoint {
    pub label: String,
    pub expr: PointExpr,
    pub bary: BaryPoint<f64>,
    pub bary_hp: BaryPoint<Hp>,
    pub planar: Planar<f64>,
    pub planar_hp: Planar<Hp>,
}

/// Every candidate point of one triangle, evaluated once and shared by
/// the figures built from it.
#[derive(Clone, Debug)]
pub struct PointPool {
    pub shape: TriangleShape,
    pub u: f64,
    pub points: Vec<EvaluatedPoint>,
    /// `(label, reason)` for points that could not be placed.
    pub skipped: Vec<(String, String)>,
    /// All placed points with their lines; angles are not collected.
    pub all: Figure,
}

/// Base labels: the vertices and the Yff points.
pub fn base_points() -> Vec<(String, PointExpr)> {
    vec![
        ("A".into(), PointExpr::a()),
        ("B".into(), PointExpr::b()),
        ("C".into(), PointExpr::c()),
        ("Y1".into(), PointExpr::Y1),
        ("Y2".into(), PointExpr::Y2),
    ]
}

/// Reflections of the Yff points in side `BC`.
pub fn reflected_points() -> Vec<(String, PointExpr)> {
    vec![
        ("Y1'".into(), PointExpr::Y1.reflect(Side::BC)),
        ("Y2'".into(), PointExpr::Y2.reflect(Side::BC)),
    ]
}

pub fn center_points(centers: &[u32]) -> Vec<(String, PointExpr)> {
    centers.iter().map(|&n| (format!("X{n}"), PointExpr::x(n))).collect()
}

/// Catalog centers with index at most `max`, excluding infinite ones.
pub fn finite_catalog_centers(max: u32) -> Vec<u32> {
    Catalog::builtin()
        .entries()
        .filter(|c| c.index <= max && !c.is_infinite())
        .map(|c| c.index)
        .collect()
}

impl PointPool {
    pub fn new(shape: &TriangleShape, entries: &[(String, PointExpr)]) -> PointPool {
        let sides_f = shape.sides_f64().clone();
        let sides_h = shape.sides_hp().clone();
        let u = u_f64(shape);
        let ctx_f = EvalContext::new(sides_f.clone(), u);
        let ctx_h = EvalContext::new(sides_h.clone(), u_hp(shape));
        let scale = sides_f.a.max(sides_f.b).max(sides_f.c);
        let mut points = Vec::new();
        let mut skipped = Vec::new();
        for (label, expr) in entries {
            let placed = (|| -> crate::Result<EvaluatedPoint> {
                let bary = eval_point(expr, &ctx_f)?;
                let planar = embed_cartesian(&bary, &sides_f)?;
                if !(planar.x.is_finite() && planar.y.is_finite()) || planar.x.hypot(planar.y) > 1e6 * scale {
                    return Err(crate::CoreError::Precondition("point at or near infinity".into()));
                }
                let hp = eval_point(expr, &ctx_h)?;
                let planar_hp = embed_cartesian(&hp, &sides_h)?;
                Ok(EvaluatedPoint {
                    label: label.clone(),
                    expr: expr.clone(),
                    bary,
                    bary_hp: hp,
                    planar,
                    planar_hp,
                })
            })();
            match placed {
                Ok(p) => points.push(p),
                Err(e) => skipped.push((label.clone(), e.to_string())),
            }
        }
        points.sort_by(|a, b| cmp_labels(&a.label, &b.label));
        let all = Figure::from_points(shape, u, points.clone(), None);
        PointPool {
            shape: shape.clone(),
            u,
            points,
            skipped,
            all,
        }
    }

    pub fn get(&self, label: &str) -> Option<&EvaluatedPoint> {
        self.points.iter().find(|p| p.label == label)
    }

    /// A figure on the base points, the given centers and optionally the
    /// reflected Yff points. Labels missing from the pool are ignored.
    pub fn figure(&self, centers: &[u32], reflections: bool) -> Figure {
        let mut want: Vec<String> = base_points().into_iter().map(|p| p.0).collect();
        want.extend(centers.iter().map(|n| format!("X{n}")));
        if reflections {
            want.extend(reflected_points().into_iter().map(|p| p.0));
        }
        self.select(&want)
    }

    /// A figure on the listed labels. Its direction symbols name the
    /// maximal lines of the whole pool, so relations from different
    /// figures of one pool share symbols.
    pub fn select(&self, want: &[String]) -> Figure {
        let chosen: Vec<EvaluatedPoint> = self
            .points
            .iter()
            .filter(|p| want.contains(&p.label))
            .cloned()
            .collect();
        Figure::from_points(&self.shape, self.u, chosen, Some(&self.all))
    }

    /// Global line of the pool through two labels, resolving aliases.
    pub fn global_line(&self, p: &str, q: &str) -> Option<usize> {
        let (i, j) = (self.all.resolve(p)?, self.all.resolve(q)?);
        (i != j).then(|| self.all.line_through(i, j))
    }
}

/// Maximal set of collinear labeled points.
#[derive(Clone, Debug)]
pub struct LineGroup {
    pub members: Vec<usize>,
    /// Direction angle in `[0, pi)`.
    pub dir: f64,
    /// Unit normal and offset: `n . p = c`.
    pub normal: [f64; 3],
}

/// Ray from a labeled vertex through one side of a line group.
#[derive(Clone, Copy, Debug)]
pub struct Ray {
    pub line: usize,
    pub rep: usize,
    pub angle: f64,
}

/// Angle `rep(r1) - vertex - rep(r2)` between two rays on different lines.
#[derive(Clone, Copy, Debug)]
pub struct AngleItem {
    pub vertex: usize,
    pub p: usize,
    pub r: usize,
    pub line_p: usize,
    pub line_r: usize,
    pub value: f64,
    /// `value = sigma * (dir(line_r) - dir(line_p)) + k * pi`.
    pub sigma: i8,
    pub k: i64,
}

#[derive(Clone, Debug)]
pub struct Figure {
    pub shape: TriangleShape,
    pub u: f64,
    pub points: Vec<EvaluatedPoint>,
    /// `(dropped, kept)` for points coinciding with an earlier label.
    pub aliases: Vec<(String, String)>,
    pub lines: Vec<LineGroup>,
    line_of: Vec<Vec<usize>>,
    pub angles: Vec<AngleItem>,
    pub scale: f64,
    symbols: Vec<String>,
}

fn wrap(x: f64) -> f64 {
    let mut y = x % (2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    } else if y <= -PI {
        y += 2.0 * PI;
    }
    y
}

fn hp_collinear(a: &Planar<Hp>, b: &Planar<Hp>, c: &Planar<Hp>) -> f64 {
    let (ux, uy) = (b.x.clone() - a.x.clone(), b.y.clone() - a.y.clone());
    let (vx, vy) = (c.x.clone() - a.x.clone(), c.y.clone() - a.y.clone());
    let cr = (ux.clone() * vy.clone() - uy.clone() * vx.clone()).abs();
    let n = ((sq(&ux) + sq(&uy)) * (sq(&vx) + sq(&vy))).sqrt();
    (cr / n).to_f64()
}

impl Figure {
    /// Evaluates `entries` on `shape` and builds the figure.
    pub fn new(shape: &TriangleShape, entries: &[(String, PointExpr)]) -> Figure {
        let pool = PointPool::new(shape, entries);
        let labels: Vec<String> = entries.iter().map(|e| e.0.clone()).collect();
        pool.select(&labels)
    }

    /// The base points plus the given centers.
    pub fn standard(shape: &TriangleShape, centers: &[u32], reflections: bool) -> Figure {
        let mut e = base_points();
        e.extend(center_points(centers));
        if reflections {
            e.extend(reflected_points());
        }
        Figure::new(shape, &e)
    }

    /// With `global` absent the figure is the pool itself: lines are
    /// grouped but angles are skipped.
    fn from_points(shape: &TriangleShape, u: f64, mut candidates: Vec<EvaluatedPoint>, global: Option<&Figure>) -> Figure {
        candidates.sort_by(|a, b| cmp_labels(&a.label, &b.label));
        let s = shape.sides_f64();
        let scale = s.a.max(s.b).max(s.c);
        let mut points: Vec<EvaluatedPoint> = Vec::new();
        let mut aliases = Vec::new();
        for p in candidates {
            let dup = points.iter().find(|q| {
                (q.planar.x - p.planar.x).hypot(q.planar.y - p.planar.y) < COINCIDENT * scale && {
                    let dx = q.planar_hp.x.clone() - p.planar_hp.x.clone();
                    let dy = q.planar_hp.y.clone() - p.planar_hp.y.clone();
                    (sq(&dx) + sq(&dy)).sqrt().to_f64() < HP_CONFIRM * scale
                }
            });
            match dup {
                Some(q) => aliases.push((p.label.clone(), q.label.clone())),
                None => points.push(p),
            }
        }
        let mut fig = Figure {
            shape: shape.clone(),
            u,
            points,
            aliases,
            lines: Vec::new(),
            line_of: Vec::new(),
            angles: Vec::new(),
            scale,
            symbols: Vec::new(),
        };
        fig.group_lines();
        fig.symbols = (0..fig.lines.len())
            .map(|l| {
                let m = &fig.lines[l].members;
                // a Yff line that only the full pool identifies with a base
                // line keeps its own name, so the identification is not
                // mistaken for background knowledge
                let labels = global
                    .and_then(|g| {
                        let gl = g.line_through(g.resolve(fig.label(m[0]))?, g.resolve(fig.label(m[1]))?);
                        (fig.line_is_base(l) || !g.line_is_base(gl)).then(|| g.line_labels(gl))
                    })
                    .unwrap_or_else(|| fig.line_labels(l));
                format!("d[{}]", labels.join(" "))
            })
            .collect();
        if global.is_some() {
            fig.collect_angles();
        }
        fig
    }

    pub fn sides(&self) -> &Sides<f64> {
        self.shape.sides_f64()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.points.iter().position(|p| p.label == label)
    }

    pub fn label(&self, i: usize) -> &str {
        &self.points[i].label
    }

    pub fn line_through(&self, i: usize, j: usize) -> usize {
        self.line_of[i][j]
    }

    pub fn line_labels(&self, l: usize) -> Vec<String> {
        self.lines[l].members.iter().map(|&i| self.points[i].label.clone()).collect()
    }

    /// A line is base-definable when two of its points are not Yff-derived.
    pub fn line_is_base(&self, l: usize) -> bool {
        self.lines[l]
            .members
            .iter()
            .filter(|&&i| !is_yff_label(&self.points[i].label))
            .count()
            >= 2
    }

    /// Name of the line's direction; shared by all figures of one pool.
    pub fn direction_symbol(&self, l: usize) -> String {
        self.symbols[l].clone()
    }

    /// Index of a label, following aliases of merged points.
    pub fn resolve(&self, label: &str) -> Option<usize> {
        let kept = self.aliases.iter().find(|a| a.0 == label).map_or(label, |a| a.1.as_str());
        self.index_of(kept)
    }

    fn group_lines(&mut self) {
        let n = self.points.len();
        self.line_of = vec![vec![usize::MAX; n]; n];
        for i in 0..n {
            for j in (i + 1)..n {
                if self.line_of[i][j] != usize::MAX {
                    continue;
                }
                let (pi, pj) = (&self.points[i].planar, &self.points[j].planar);
                let (dx, dy) = (pj.x - pi.x, pj.y - pi.y);
                let len = dx.hypot(dy);
                let mut members = vec![i, j];
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    let pk = &self.points[k].planar;
                    let (ex, ey) = (pk.x - pi.x, pk.y - pi.y);
                    let s = (dx * ey - dy * ex).abs() / (len * ex.hypot(ey));
                    if s < ON_LINE
                        && hp_collinear(&self.points[i].planar_hp, &self.points[j].planar_hp, &self.points[k].planar_hp)
                            < HP_CONFIRM
                    {
                        members.push(k);
                    }
                }
                members.sort_unstable();
                let l = self.lines.len();
                for &a in &members {
                    for &b in &members {
                        if a != b {
                            self.line_of[a][b] = l;
                        }
                    }
                }
                let mut dir = dy.atan2(dx);
                if dir < 0.0 {
                    dir += PI;
                }
                if dir >= PI {
                    dir -= PI;
                }
                let (nx, ny) = (-dy / len, dx / len);
                self.lines.push(LineGroup {
                    members,
                    dir,
                    normal: [nx, ny, nx * pi.x + ny * pi.y],
                });
            }
        }
    }

    fn rays_at(&self, q: usize) -> Vec<Ray> {
        let mut seen_lines: Vec<usize> = Vec::new();
        let mut rays = Vec::new();
        let pq = &self.points[q].planar;
        for j in 0..self.points.len() {
            if j == q {
                continue;
            }
            let l = self.line_of[q][j];
            if seen_lines.contains(&l) {
                continue;
            }
            seen_lines.push(l);
            let d = self.lines[l].dir;
            let (ux, uy) = (d.cos(), d.sin());
            let mut side_rep: [Option<usize>; 2] = [None, None];
            for &m in &self.lines[l].members {
                if m == q {
                    continue;
                }
                let pm = &self.points[m].planar;
                let t = (pm.x - pq.x) * ux + (pm.y - pq.y) * uy;
                let s = usize::from(t < 0.0);
                if side_rep[s].is_none() {
                    side_rep[s] = Some(m);
                }
            }
            for rep in side_rep.into_iter().flatten() {
                let pr = &self.points[rep].planar;
                rays.push(Ray {
                    line: l,
                    rep,
                    angle: (pr.y - pq.y).atan2(pr.x - pq.x),
                });
            }
        }
        rays
    }

    fn collect_angles(&mut self) {
        let mut out = Vec::new();
        for q in 0..self.points.len() {
            let rays = self.rays_at(q);
            for a in 0..rays.len() {
                for b in (a + 1)..rays.len() {
                    let (mut r1, mut r2) = (rays[a], rays[b]);
                    if r1.line == r2.line {
                        continue;
                    }
                    if cmp_labels(&self.points[r1.rep].label, &self.points[r2.rep].label).is_gt() {
                        std::mem::swap(&mut r1, &mut r2);
                    }
                    let w = wrap(r2.angle - r1.angle);
                    let value = w.abs();
                    let sigma: i8 = if w >= 0.0 { 1 } else { -1 };
                    let lin = f64::from(sigma) * (self.lines[r2.line].dir - self.lines[r1.line].dir);
                    let k = ((value - lin) / PI).round() as i64;
                    out.push(AngleItem {
                        vertex: q,
                        p: r1.rep,
                        r: r2.rep,
                        line_p: r1.line,
                        line_r: r2.line,
                        value,
                        sigma,
                        k,
                    });
                }
            }
        }
        self.angles = out;
    }

    pub fn angle_labels(&self, a: &AngleItem) -> Vec<String> {
        vec![
            self.label(a.p).to_string(),
            self.label(a.vertex).to_string(),
            self.label(a.r).to_string(),
        ]
    }

    /// All three labels of the angle are base points or centers.
    pub fn angle_is_base(&self, a: &AngleItem) -> bool {
        [a.p, a.vertex, a.r].iter().all(|&i| !is_yff_label(self.label(i)))
    }
}

fn sq<T: Clone + std::ops::Mul<Output = T>>(x: &T) -> T {
    x.clone() * x.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::centers::shape::{make_shape, Family};
    use crate::exact::q;

    #[test]
    fn right_triangle_merges_orthocenter_into_b() {
        let shape = make_shape(Family::RightAtB, &[q(2), q(1)]).unwrap();
        let fig = Figure::standard(&shape, &[3, 4], false);
        assert!(fig.aliases.contains(&("X4".to_string(), "B".to_string())));
        let a = fig.index_of("A").unwrap();
        let c = fig.index_of("C").unwrap();
        let l = fig.line_through(a, c);
        assert_eq!(fig.line_labels(l), vec!["A", "C", "X3"]);
    }

    #[test]
    fn angle_decomposition_is_consistent() {
        let shape = make_shape(Family::ScaleneRandom, &[q(6), q(9), q(13)]).unwrap();
        let fig = Figure::standard(&shape, &[1, 3], false);
        for a in &fig.angles {
            let lin = f64::from(a.sigma) * (fig.lines[a.line_r].dir - fig.lines[a.line_p].dir) + a.k as f64 * PI;
            assert!((lin - a.value).abs() < 1e-12);
            assert!(a.value > 0.0 && a.value < PI);
        }
        // angles of triangle ABC sum to pi
        let find = |p: &str, v: &str, r: &str| {
            fig.angles
                .iter()
                .find(|x| fig.angle_labels(x) == vec![p.to_string(), v.to_string(), r.to_string()])
                .map(|x| x.value)
                .unwrap()
        };
        let s = find("B", "A", "C") + find("A", "B", "C") + find("A", "C", "B");
        assert!((s - PI).abs() < 1e-12);
    }
}
