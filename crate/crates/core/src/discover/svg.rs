//! Static SVG drawings of figures with highlighted findings.

use std::fmt::Write;

use crate::centers::shape::TriangleShape;
use crate::detect::finding::point_label;
use crate::detect::{base_points, Figure, Finding, FindingKind};
use crate::points::{LineExpr, PointExpr};
use crate::verify::Statement;

#[derive(Clone, Debug, PartialEq)]
pub enum Highlight {
    /// Full line through two labels, dashed.
    Line(String, String),
    Segment(String, String),
    Point(String),
    /// Angle `(p, vertex, r)` marked by an arc.
    Angle(String, String, String),
}

const WIDTH: f64 = 800.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

/// Highlight groups for a finding; each group is drawn in one color.
pub fn highlights_for(f: &Finding) -> Vec<Vec<Highlight>> {
    let line = |a: &Vec<String>| Highlight::Line(a[0].clone(), a[a.len() - 1].clone());
    match f.kind {
        FindingKind::Concurrent | FindingKind::Parallel | FindingKind::Perpendicular => {
            vec![f.actors.iter().map(line).collect()]
        }
        FindingKind::Collinear => {
            let mut g = vec![line(&f.actors[0])];
            g.extend(f.actors[0].iter().map(|p| Highlight::Point(p.clone())));
            vec![g]
        }
        FindingKind::EqualAngle => vec![f
            .actors
            .iter()
            .map(|a| Highlight::Angle(a[0].clone(), a[1].clone(), a[2].clone()))
            .collect()],
        FindingKind::AngleSumConstant => f
            .actors
            .iter()
            .map(|a| vec![Highlight::Angle(a[0].clone(), a[1].clone(), a[2].clone())])
            .collect(),
        FindingKind::EqualLength => vec![f
            .actors
            .iter()
            .map(|s| Highlight::Segment(s[0].clone(), s[1].clone()))
            .collect()],
        FindingKind::AreaRelation => {
            let p = f.actors[0][0].clone();
            let mut g = vec![Highlight::Point(p.clone())];
            g.extend(["A", "B", "C"].map(|v| Highlight::Segment(p.clone(), v.to_string())));
            vec![g]
        }
    }
}

fn statement_lines(st: &Statement) -> Vec<&LineExpr> {
    match st {
        Statement::Concurrent(a, b, c) => vec![a, b, c],
        Statement::Parallel(a, b) | Statement::Perpendicular(a, b) => vec![a, b],
        Statement::OnLine(_, l) => vec![l],
        _ => Vec::new(),
    }
}

fn statement_points(st: &Statement) -> Vec<PointExpr> {
    let mut v: Vec<PointExpr> = Vec::new();
    for l in statement_lines(st) {
        v.push(l.0.clone());
        v.push(l.1.clone());
    }
    match st {
        Statement::Collinear(p, q, r) => v.extend([p.clone(), q.clone(), r.clone()]),
        Statement::OnLine(p, _) | Statement::AreaRelation(p) => v.push(p.clone()),
        _ => {}
    }
    v
}

/// Figure with the base points and every point of `st`, plus the
/// highlights that draw the statement.
pub fn statement_figure(shape: &TriangleShape, st: &Statement) -> (Figure, Vec<Vec<Highlight>>) {
    let mut entries = base_points();
    for p in statement_points(st) {
        let l = point_label(&p);
        if !entries.iter().any(|e| e.0 == l) {
            entries.push((l, p));
        }
    }
    let fig = Figure::new(shape, &entries);
    let lbl = |p: &PointExpr| point_label(p);
    let group: Vec<Highlight> = match st {
        Statement::Collinear(p, q, r) => {
            let mut g = vec![Highlight::Line(lbl(p), lbl(r))];
            g.extend([p, q, r].map(|x| Highlight::Point(lbl(x))));
            g
        }
        Statement::AreaRelation(p) => {
            let mut g = vec![Highlight::Point(lbl(p))];
            g.extend(["A", "B", "C"].map(|v| Highlight::Segment(lbl(p), v.to_string())));
            g
        }
        Statement::OnLine(p, l) => vec![Highlight::Line(lbl(&l.0), lbl(&l.1)), Highlight::Point(lbl(p))],
        _ => statement_lines(st)
            .into_iter()
            .map(|l| Highlight::Line(lbl(&l.0), lbl(&l.1)))
            .collect(),
    };
    (fig, vec![group])
}

struct View {
    min_x: f64,
    max_y: f64,
    k: f64,
    w: f64,
    h: f64,
}

impl View {
    fn map(&self, x: f64, y: f64) -> (f64, f64) {
        (MARGIN + (x - self.min_x) * self.k, MARGIN + (self.max_y - y) * self.k)
    }

    /// Portion of the line through `p` and `q` inside the drawing area.
    fn clip(&self, p: (f64, f64), q: (f64, f64)) -> Option<((f64, f64), (f64, f64))> {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
        for (d, s, a, b) in [(dx, p.0, 0.0, self.w), (dy, p.1, 0.0, self.h)] {
            if d.abs() < 1e-12 {
                if s < a || s > b {
                    return None;
                }
                continue;
            }
            let (t1, t2) = ((a - s) / d, (b - s) / d);
            lo = lo.max(t1.min(t2));
            hi = hi.min(t1.max(t2));
        }
        (lo < hi).then(|| ((p.0 + lo * dx, p.1 + lo * dy), (p.0 + hi * dx, p.1 + hi * dy)))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Draws the triangle, every labeled point and the highlight groups.
pub fn render_figure(fig: &Figure, highlights: &[Vec<Highlight>]) -> String {
    let verts: Vec<(f64, f64)> = ["A", "B", "C"]
        .iter()
        .filter_map(|v| fig.resolve(v))
        .map(|i| (fig.points[i].planar.x, fig.points[i].planar.y))
        .collect();
    let (cx, cy) = (
        verts.iter().map(|p| p.0).sum::<f64>() / 3.0,
        verts.iter().map(|p| p.1).sum::<f64>() / 3.0,
    );
    // far-away points are labeled but do not stretch the view
    let reach = 2.0 * fig.scale;
    let shown: Vec<(f64, f64)> = fig
        .points
        .iter()
        .map(|p| (p.planar.x, p.planar.y))
        .filter(|p| (p.0 - cx).hypot(p.1 - cy) <= reach)
        .collect();
    let min_x = shown.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
    let max_x = shown.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    let min_y = shown.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let max_y = shown.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    let k = (WIDTH - 2.0 * MARGIN) / (max_x - min_x).max(max_y - min_y).max(1e-9);
    let w = (max_x - min_x) * k + 2.0 * MARGIN;
    let h = (max_y - min_y) * k + 2.0 * MARGIN;
    let view = View { min_x, max_y, k, w, h };
    let at = |label: &str| {
        fig.resolve(label).map(|i| {
            let p = &fig.points[i].planar;
            view.map(p.x, p.y)
        })
    };

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.2} {h:.2}" font-family="sans-serif" font-size="13">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if let (Some(a), Some(b), Some(c)) = (at("A"), at("B"), at("C")) {
        let _ = writeln!(
            s,
            r#"<polygon points="{:.2},{:.2} {:.2},{:.2} {:.2},{:.2}" fill="none" stroke="black" stroke-width="1.5"/>"#,
            a.0, a.1, b.0, b.1, c.0, c.1
        );
    }
    for (g, group) in highlights.iter().enumerate() {
        let color = PALETTE[g % PALETTE.len()];
        for h in group {
            match h {
                Highlight::Line(p, q) => {
                    if let Some((a, b)) = at(p).zip(at(q)).and_then(|(p, q)| view.clip(p, q)) {
                        let _ = writeln!(
                            s,
                            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="1.2" stroke-dasharray="6 4"/>"#,
                            a.0, a.1, b.0, b.1
                        );
                    }
                }
                Highlight::Segment(p, q) => {
                    if let (Some(a), Some(b)) = (at(p), at(q)) {
                        let _ = writeln!(
                            s,
                            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
                            a.0, a.1, b.0, b.1
                        );
                    }
                }
                Highlight::Point(p) => {
                    if let Some(a) = at(p) {
                        let _ = writeln!(
                            s,
                            r#"<circle cx="{:.2}" cy="{:.2}" r="5" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
                            a.0, a.1
                        );
                    }
                }
                Highlight::Angle(p, v, r) => {
                    if let (Some(a), Some(o), Some(b)) = (at(p), at(v), at(r)) {
                        let rad = 22.0;
                        let t1 = (a.1 - o.1).atan2(a.0 - o.0);
                        let t2 = (b.1 - o.1).atan2(b.0 - o.0);
                        let mut d = t2 - t1;
                        while d > std::f64::consts::PI {
                            d -= 2.0 * std::f64::consts::PI;
                        }
                        while d < -std::f64::consts::PI {
                            d += 2.0 * std::f64::consts::PI;
                        }
                        let (x1, y1) = (o.0 + rad * t1.cos(), o.1 + rad * t1.sin());
                        let (x2, y2) = (o.0 + rad * (t1 + d).cos(), o.1 + rad * (t1 + d).sin());
                        let sweep = u8::from(d > 0.0);
                        let _ = writeln!(
                            s,
                            r#"<path d="M {:.2} {:.2} A {rad:.0} {rad:.0} 0 0 {sweep} {:.2} {:.2}" fill="none" stroke="{color}" stroke-width="2.5"/>"#,
                            x1, y1, x2, y2
                        );
                    }
                }
            }
        }
    }
    for p in &fig.points {
        let (x, y) = view.map(p.planar.x, p.planar.y);
        if x < 0.0 || y < 0.0 || x > w || y > h {
            continue;
        }
        let _ = writeln!(s, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="black"/>"#);
        let _ = writeln!(s, r#"<text x="{:.2}" y="{:.2}">{}</text>"#, x + 5.0, y - 5.0, escape(&p.label));
    }
    s.push_str("</svg>\n");
    s
}
