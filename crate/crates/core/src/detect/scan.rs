//! Numeric detectors, high-precision re-verification and deduplication.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_integer::Integer;

use crate::detect::figure::{AngleItem, Figure};
use crate::detect::finding::{is_yff_label, AngleConstant, Finding, FindingKind};
use crate::detect::relation::{AngleRelation, RelationSpace};
use crate::exact::{q, qr};
use crate::geom::{
    angle, det_residual, join, parallel_residual, perpendicular_residual, subtriangle_areas, BaryPoint, Planar, Sides,
};
use crate::points::PointExpr;
use crate::real::{Hp, Real};

/// Class assigned to findings implied by the known relations alone.
pub const TRIVIAL: &str = "trivial";
/// Largest denominator of the rational multiples of pi tested by the
/// angle-sum detector.
pub const MAX_PI_DENOMINATOR: i64 = 14;

#[derive(Clone, Debug)]
pub struct ScanOptions {
    pub tol: f64,
    pub kinds: Vec<FindingKind>,
    /// Labels every reported finding must mention.
    pub require: Vec<String>,
    /// Report only findings mentioning a Yff point.
    pub require_yff: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            tol: 1e-10,
            kinds: FindingKind::ALL.to_vec(),
            require: Vec::new(),
            require_yff: true,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanResult {
    pub findings: Vec<Finding>,
    /// Relations among base lines and construction facts.
    pub background: Vec<AngleRelation>,
    pub diagnostics: Vec<String>,
}

/// Assigns dedup classes. Findings whose relation follows from `known`
/// get [`TRIVIAL`]; those following from an earlier finding share its class;
/// the rest start a class named by their own key.
pub struct Deduper {
    space: RelationSpace,
    generators: Vec<String>,
}

impl Deduper {
    pub fn new(known: &[AngleRelation]) -> Self {
        let mut space = RelationSpace::new(true);
        for r in known {
            space.insert(r, 0);
        }
        Deduper {
            space,
            generators: Vec::new(),
        }
    }

    pub fn implied(&self, f: &Finding) -> Option<String> {
        let r = f.relation.as_ref()?;
        self.space.contains(r).map(|tag| {
            if tag == 0 {
                TRIVIAL.to_string()
            } else {
                self.generators[tag - 1].clone()
            }
        })
    }

    pub fn add_generator(&mut self, f: &Finding) {
        if let Some(r) = &f.relation {
            self.generators.push(f.key());
            self.space.insert(r, self.generators.len());
        }
    }
}

/// Classifies findings in the given order.
pub fn dedupe(findings: &mut [Finding], known: &[AngleRelation]) {
    let mut d = Deduper::new(known);
    for f in findings.iter_mut() {
        f.class = match d.implied(f) {
            Some(c) => c,
            None => {
                d.add_generator(f);
                f.key()
            }
        };
    }
}

// ---------------------------------------------------------------------------
// Measurement, generic over the number type.

trait Coords<T> {
    fn bary(&self, i: usize) -> &BaryPoint<T>;
    fn planar(&self, i: usize) -> &Planar<T>;
    fn sides(&self) -> &Sides<T>;
}

struct F64View<'a>(&'a Figure);
struct HpView<'a>(&'a Figure);

impl Coords<f64> for F64View<'_> {
    fn bary(&self, i: usize) -> &BaryPoint<f64> {
        &self.0.points[i].bary
    }
    fn planar(&self, i: usize) -> &Planar<f64> {
        &self.0.points[i].planar
    }
    fn sides(&self) -> &Sides<f64> {
        self.0.shape.sides_f64()
    }
}

impl Coords<Hp> for HpView<'_> {
    fn bary(&self, i: usize) -> &BaryPoint<Hp> {
        &self.0.points[i].bary_hp
    }
    fn planar(&self, i: usize) -> &Planar<Hp> {
        &self.0.points[i].planar_hp
    }
    fn sides(&self) -> &Sides<Hp> {
        self.0.shape.sides_hp()
    }
}

fn planar_distance<T: Real>(p: &Planar<T>, q: &Planar<T>) -> T {
    let dx = p.x.clone() - q.x.clone();
    let dy = p.y.clone() - q.y.clone();
    (sq(&dx) + sq(&dy)).sqrt()
}

fn measure<T: Real, V: Coords<T>>(fig: &Figure, v: &V, f: &Finding) -> crate::Result<T> {
    let idx = |l: &str| {
        fig.index_of(l)
            .ok_or_else(|| crate::CoreError::Invariant(format!("label {l} not in figure")))
    };
    let line = |ls: &[String]| -> crate::Result<crate::geom::BaryLine<T>> {
        Ok(join(v.bary(idx(&ls[0])?), v.bary(idx(&ls[1])?))?)
    };
    let ang = |a: &[String]| -> crate::Result<T> {
        Ok(angle(v.planar(idx(&a[1])?), v.planar(idx(&a[0])?), v.planar(idx(&a[2])?))?)
    };
    Ok(match f.kind {
        FindingKind::Concurrent => {
            let (l1, l2, l3) = (line(&f.actors[0])?, line(&f.actors[1])?, line(&f.actors[2])?);
            det_residual(&l1.0, &l2.0, &l3.0)
        }
        FindingKind::Collinear => {
            let m = &f.actors[0];
            let (p0, p1) = (v.bary(idx(&m[0])?), v.bary(idx(&m[1])?));
            let mut worst = T::zero();
            for l in &m[2..] {
                let r = det_residual(&p0.0, &p1.0, &v.bary(idx(l)?).0);
                if r > worst {
                    worst = r;
                }
            }
            worst
        }
        FindingKind::Parallel => parallel_residual(&line(&f.actors[0])?, &line(&f.actors[1])?, v.sides())?,
        FindingKind::Perpendicular => perpendicular_residual(&line(&f.actors[0])?, &line(&f.actors[1])?, v.sides())?,
        FindingKind::EqualAngle => (ang(&f.actors[0])? - ang(&f.actors[1])?).abs(),
        FindingKind::AngleSumConstant => {
            let c = f
                .constant
                .ok_or_else(|| crate::CoreError::Invariant("angle sum without constant".into()))?;
            let second = ang(&f.actors[1])?;
            let second = if c.sign < 0 { -second } else { second };
            let target = T::pi() * T::from_i64(c.num) / T::from_i64(c.den);
            (ang(&f.actors[0])? + second - target).abs()
        }
        FindingKind::EqualLength => {
            let len = |s: &[String]| -> crate::Result<T> { Ok(planar_distance(v.planar(idx(&s[0])?), v.planar(idx(&s[1])?))) };
            let first = len(&f.actors[0])?;
            let mut worst = T::zero();
            for s in &f.actors[1..] {
                let r = (len(s)? - first.clone()).abs() / first.clone();
                if r > worst {
                    worst = r;
                }
            }
            worst
        }
        FindingKind::AreaRelation => {
            let (k, _) = subtriangle_areas(v.bary(idx(&f.actors[0][0])?), v.sides())?;
            let i = ["A", "B", "C"]
                .iter()
                .position(|x| *x == f.actors[1][0])
                .ok_or_else(|| crate::CoreError::Invariant("area relation needs a vertex".into()))?;
            let (j, l) = ((i + 1) % 3, (i + 2) % 3);
            let norm = sq(&k[0]) + sq(&k[1]) + sq(&k[2]);
            (k[j].clone() * k[l].clone() - sq(&k[i])).abs() / norm
        }
    })
}

/// Residual of a finding in `f64`.
pub fn measure_f64(fig: &Figure, f: &Finding) -> crate::Result<f64> {
    measure(fig, &F64View(fig), f)
}

/// Residual of a finding at high precision.
pub fn measure_hp(fig: &Figure, f: &Finding) -> crate::Result<f64> {
    Ok(measure(fig, &HpView(fig), f)?.to_f64())
}

// ---------------------------------------------------------------------------
// Detectors.

fn pi_fractions(max: f64) -> Vec<(f64, i64, i64)> {
    let mut v = Vec::new();
    for den in 1..=MAX_PI_DENOMINATOR {
        for num in 1..=(2 * den) {
            if num.gcd(&den) == 1 && (num as f64) / (den as f64) <= max {
                v.push((PI * num as f64 / den as f64, num, den));
            }
        }
    }
    v.sort_by(|a, b| a.0.total_cmp(&b.0));
    v
}

fn nearest_fraction(table: &[(f64, i64, i64)], x: f64) -> (f64, i64, i64) {
    let i = table.partition_point(|t| t.0 < x);
    let mut best = table[i.min(table.len() - 1)];
    if i > 0 && (x - table[i - 1].0).abs() < (x - best.0).abs() {
        best = table[i - 1];
    }
    best
}

struct Ctx<'a> {
    fig: &'a Figure,
    syms: Vec<String>,
    tol: f64,
}

impl Ctx<'_> {
    fn angle_expr(&self, a: &AngleItem) -> AngleRelation {
        let s = q(i64::from(a.sigma));
        let mut r = AngleRelation::new();
        r.add_term(&self.syms[a.line_r], s.clone());
        r.add_term(&self.syms[a.line_p], -s);
        r.add_pi(q(a.k));
        r
    }

    fn line_pair_relation(&self, l1: usize, l2: usize, half_turns: i64) -> AngleRelation {
        let mut r = AngleRelation::new();
        r.add_term(&self.syms[l1], q(1));
        r.add_term(&self.syms[l2], q(-1));
        r.add_pi(qr(-half_turns, 2));
        r
    }
}

struct Candidate {
    finding: Finding,
    base: bool,
}

fn line_pairs(cx: &Ctx<'_>, kinds: &[FindingKind], out: &mut Vec<Candidate>) {
    let fig = cx.fig;
    for i in 0..fig.lines.len() {
        for j in (i + 1)..fig.lines.len() {
            let diff = fig.lines[i].dir - fig.lines[j].dir;
            let quarter = diff / (PI / 2.0);
            let k = quarter.round();
            if (quarter - k).abs() * (PI / 2.0) >= cx.tol {
                continue;
            }
            let k = k as i64;
            let kind = if k % 2 == 0 {
                FindingKind::Parallel
            } else {
                FindingKind::Perpendicular
            };
            if !kinds.contains(&kind) {
                continue;
            }
            let mut f = Finding::new(kind, vec![fig.line_labels(i), fig.line_labels(j)], None);
            f.relation = Some(cx.line_pair_relation(i, j, k));
            out.push(Candidate {
                finding: f,
                base: fig.line_is_base(i) && fig.line_is_base(j),
            });
        }
    }
}

fn collinear(cx: &Ctx<'_>, out: &mut Vec<Candidate>) {
    let fig = cx.fig;
    for l in 0..fig.lines.len() {
        let labels = fig.line_labels(l);
        if labels.len() >= 3 && labels.iter().any(|x| is_yff_label(x)) {
            out.push(Candidate {
                finding: Finding::new(FindingKind::Collinear, vec![labels], None),
                base: false,
            });
        }
    }
}

fn concurrent(cx: &Ctx<'_>, out: &mut Vec<Candidate>) {
    let fig = cx.fig;
    let n = fig.lines.len();
    let shares = |a: usize, b: usize| fig.lines[a].members.iter().any(|m| fig.lines[b].members.contains(m));
    let sin = |a: usize, b: usize| (fig.lines[a].dir - fig.lines[b].dir).sin().abs();
    for i in 0..n {
        for j in (i + 1)..n {
            if sin(i, j) < 1e-6 {
                continue;
            }
            for k in (j + 1)..n {
                if sin(i, k) < 1e-6 || sin(j, k) < 1e-6 {
                    continue;
                }
                let all_base = fig.line_is_base(i) && fig.line_is_base(j) && fig.line_is_base(k);
                if all_base {
                    continue;
                }
                let [a, b, c] = [&fig.lines[i].normal, &fig.lines[j].normal, &fig.lines[k].normal];
                let det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
                    + a[2] * (b[0] * c[1] - b[1] * c[0]);
                if det.abs() / fig.scale > 1e3 * cx.tol {
                    continue;
                }
                // a labeled point on all three lines makes it trivial
                let common = fig.lines[i]
                    .members
                    .iter()
                    .any(|m| fig.lines[j].members.contains(m) && fig.lines[k].members.contains(m));
                if common {
                    continue;
                }
                let _ = shares;
                let f = Finding::new(
                    FindingKind::Concurrent,
                    vec![fig.line_labels(i), fig.line_labels(j), fig.line_labels(k)],
                    None,
                );
                out.push(Candidate {
                    finding: f,
                    base: false,
                });
            }
        }
    }
}

fn angle_pairs(cx: &Ctx<'_>, kinds: &[FindingKind], out: &mut Vec<Candidate>) {
    let fig = cx.fig;
    let want_eq = kinds.contains(&FindingKind::EqualAngle);
    let want_sum = kinds.contains(&FindingKind::AngleSumConstant);
    if !want_eq && !want_sum {
        return;
    }
    let sums = pi_fractions(2.0);
    let exprs: Vec<AngleRelation> = fig.angles.iter().map(|a| cx.angle_expr(a)).collect();
    let base: Vec<bool> = fig.angles.iter().map(|a| fig.angle_is_base(a)).collect();
    for i in 0..fig.angles.len() {
        for j in (i + 1)..fig.angles.len() {
            let (a, b) = (&fig.angles[i], &fig.angles[j]);
            let mut tries: Vec<(FindingKind, Option<AngleConstant>, AngleRelation)> = Vec::new();
            let d = a.value - b.value;
            if want_eq && d.abs() < cx.tol {
                let mut r = exprs[i].clone();
                r.add_scaled(&exprs[j], &q(-1));
                tries.push((FindingKind::EqualAngle, None, r));
            }
            if want_sum {
                for (sign, x) in [(1i8, a.value + b.value), (-1i8, d)] {
                    if sign < 0 && d.abs() < cx.tol {
                        continue;
                    }
                    let (v, num, den) = nearest_fraction(&sums, x.abs());
                    if (x.abs() - v).abs() >= cx.tol {
                        continue;
                    }
                    let num = if x < 0.0 { -num } else { num };
                    let mut r = exprs[i].clone();
                    r.add_scaled(&exprs[j], &q(i64::from(sign)));
                    r.add_pi(qr(-num, den));
                    tries.push((FindingKind::AngleSumConstant, Some(AngleConstant { sign, num, den }), r));
                }
            }
            for (kind, constant, rel) in tries {
                if rel.terms.is_empty() {
                    continue;
                }
                let mut f = Finding::new(kind, vec![fig.angle_labels(a), fig.angle_labels(b)], constant);
                f.relation = Some(rel);
                out.push(Candidate {
                    finding: f,
                    base: base[i] && base[j],
                });
            }
        }
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Reflection of a labeled point in a side: `(point, image, side vertices)`.
fn reflections(fig: &Figure) -> Vec<(usize, usize, [usize; 2])> {
    let mut out = Vec::new();
    for (i, p) in fig.points.iter().enumerate() {
        if let PointExpr::Reflect(inner, side) = &p.expr {
            let src = fig.points.iter().position(|x| &x.expr == inner.as_ref());
            let o = side.opposite();
            let ends = [(o + 1) % 3, (o + 2) % 3].map(|v| fig.index_of(["A", "B", "C"][v]));
            if let (Some(s), [Some(e1), Some(e2)]) = (src, ends) {
                out.push((s, i, [e1, e2]));
            }
        }
    }
    out
}

fn equal_lengths(cx: &Ctx<'_>, out: &mut Vec<Candidate>) {
    let fig = cx.fig;
    let n = fig.len();
    let mut segs: Vec<(usize, usize, f64)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let (p, q) = (&fig.points[i].planar, &fig.points[j].planar);
            segs.push((i, j, (p.x - q.x).hypot(p.y - q.y)));
        }
    }
    let seg_index = |a: usize, b: usize| segs.iter().position(|s| (s.0, s.1) == (a.min(b), a.max(b)));
    let is_base = |s: &(usize, usize, f64)| !is_yff_label(fig.label(s.0)) && !is_yff_label(fig.label(s.1));
    let mut all = UnionFind::new(segs.len());
    let mut known = UnionFind::new(segs.len());
    for a in 0..segs.len() {
        for b in (a + 1)..segs.len() {
            let (la, lb) = (segs[a].2, segs[b].2);
            if (la - lb).abs() / la.max(lb) < cx.tol {
                all.union(a, b);
                if is_base(&segs[a]) && is_base(&segs[b]) {
                    known.union(a, b);
                }
            }
        }
    }
    for (src, img, ends) in reflections(fig) {
        for e in ends {
            if let (Some(a), Some(b)) = (seg_index(e, src), seg_index(e, img)) {
                known.union(a, b);
                all.union(a, b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for s in 0..segs.len() {
        let r = all.find(s);
        groups.entry(r).or_default().push(s);
    }
    for members in groups.values() {
        if members.len() < 2 || members.iter().all(|&s| is_base(&segs[s])) {
            continue;
        }
        let mut comps: Vec<usize> = members.iter().map(|&s| known.find(s)).collect();
        comps.sort_unstable();
        comps.dedup();
        if comps.len() < 2 {
            continue;
        }
        let actors = members
            .iter()
            .map(|&s| vec![fig.label(segs[s].0).to_string(), fig.label(segs[s].1).to_string()])
            .collect();
        out.push(Candidate {
            finding: Finding::new(FindingKind::EqualLength, actors, None),
            base: false,
        });
    }
}

fn area_relations(cx: &Ctx<'_>, out: &mut Vec<Candidate>) {
    let fig = cx.fig;
    for y in ["Y1", "Y2"] {
        if fig.index_of(y).is_none() {
            continue;
        }
        for v in ["A", "B", "C"] {
            let f = Finding::new(FindingKind::AreaRelation, vec![vec![y.to_string()], vec![v.to_string()]], None);
            if measure_f64(fig, &f).is_ok_and(|r| r < cx.tol) {
                out.push(Candidate { finding: f, base: false });
            }
        }
    }
}

fn construction_relations(cx: &Ctx<'_>) -> Vec<AngleRelation> {
    let fig = cx.fig;
    let mut out = Vec::new();
    for (src, img, [e1, e2]) in reflections(fig) {
        let side = fig.line_through(e1, e2);
        for e in [e1, e2] {
            let (la, lb) = (fig.line_through(e, src), fig.line_through(e, img));
            if la == side || lb == side {
                continue;
            }
            let sum = fig.lines[la].dir + fig.lines[lb].dir - 2.0 * fig.lines[side].dir;
            let k = (sum / PI).round() as i64;
            let mut r = AngleRelation::new();
            r.add_term(&cx.syms[la], q(1));
            r.add_term(&cx.syms[lb], q(1));
            r.add_term(&cx.syms[side], q(-2));
            r.add_pi(q(-k));
            out.push(r);
        }
        let normal = fig.line_through(src, img);
        let diff = fig.lines[normal].dir - fig.lines[side].dir;
        let k = (diff / (PI / 2.0)).round() as i64;
        out.push(cx.line_pair_relation(normal, side, k));
    }
    out
}

/// Constant-angle relations between lines through two non-Yff points of
/// `all`, confirmed at high precision. These are facts about the triangle
/// and its centers alone.
pub fn line_background(all: &Figure, tol: f64) -> Vec<AngleRelation> {
    let table = pi_fractions(1.0);
    let base: Vec<usize> = (0..all.lines.len()).filter(|&l| all.line_is_base(l)).collect();
    let hp_dir = |l: usize| {
        let m = &all.lines[l].members;
        let (p, q) = (&all.points[m[0]].planar_hp, &all.points[m[1]].planar_hp);
        (q.y.clone() - p.y.clone(), q.x.clone() - p.x.clone())
    };
    let mut out = Vec::new();
    for (x, &i) in base.iter().enumerate() {
        for &j in &base[x + 1..] {
            let diff = (all.lines[i].dir - all.lines[j].dir).rem_euclid(PI);
            let (v, num, den) = if diff < tol { (0.0, 0, 1) } else { nearest_fraction(&table, diff) };
            if (diff - v).abs() >= tol {
                continue;
            }
            // sin(di - dj - num/den pi) vanishes at high precision
            let ((yi, xi), (yj, xj)) = (hp_dir(i), hp_dir(j));
            let cross = yi.clone() * xj.clone() - xi.clone() * yj.clone();
            let dot = xi.clone() * xj.clone() + yi.clone() * yj.clone();
            let phi = Hp::pi() * <Hp as polycore::Scalar>::from_i64(num) / <Hp as polycore::Scalar>::from_i64(den);
            let sin_phi = (Hp::pi() / <Hp as polycore::Scalar>::from_i64(2) - phi.clone()).cos();
            let norm = ((sq(&xi) + sq(&yi)) * (sq(&xj) + sq(&yj))).sqrt();
            let r = (cross * phi.cos() - dot * sin_phi).abs() / norm;
            if r.to_f64() > tol / 10.0 {
                continue;
            }
            let mut rel = AngleRelation::new();
            rel.add_term(&all.direction_symbol(i), q(1));
            rel.add_term(&all.direction_symbol(j), q(-1));
            rel.add_pi(qr(-num, den));
            out.push(rel);
        }
    }
    out
}

/// Runs every enabled detector, re-verifies at high precision with a ten
/// times tighter tolerance, and classifies the findings.
pub fn scan_with(fig: &Figure, opts: &ScanOptions) -> ScanResult {
    let mut result = ScanResult::default();
    if fig.len() < 3 || fig.index_of("A").is_none() || fig.index_of("B").is_none() || fig.index_of("C").is_none() {
        result.diagnostics.push("degenerate figure: vertices missing or coincident".into());
        return result;
    }
    let cx = Ctx {
        fig,
        syms: (0..fig.lines.len()).map(|l| fig.direction_symbol(l)).collect(),
        tol: opts.tol,
    };
    let kinds = &opts.kinds;
    let mut cands = Vec::new();
    if kinds.contains(&FindingKind::Parallel) || kinds.contains(&FindingKind::Perpendicular) {
        line_pairs(&cx, kinds, &mut cands);
    }
    if kinds.contains(&FindingKind::Collinear) {
        collinear(&cx, &mut cands);
    }
    if kinds.contains(&FindingKind::Concurrent) {
        concurrent(&cx, &mut cands);
    }
    angle_pairs(&cx, kinds, &mut cands);
    if kinds.contains(&FindingKind::EqualLength) {
        equal_lengths(&cx, &mut cands);
    }
    if kinds.contains(&FindingKind::AreaRelation) {
        area_relations(&cx, &mut cands);
    }

    let mut known = construction_relations(&cx);
    let mut pending = Vec::new();
    for c in cands {
        if c.base {
            if let Some(r) = c.finding.relation {
                known.push(r);
            }
        } else {
            pending.push(c.finding);
        }
    }
    pending.sort_by(|a, b| (a.kind, a.key()).cmp(&(b.kind, b.key())));

    let hp_tol = opts.tol / 10.0;
    let mut dd = Deduper::new(&known);
    for mut f in pending {
        f.tolerance = opts.tol;
        let reported = (!opts.require_yff || f.involves_yff())
            && opts.require.iter().all(|l| f.labels().contains(&l.as_str()));
        let class = dd.implied(&f);
        if class.as_deref() == Some(TRIVIAL) {
            continue;
        }
        if class.is_none() || reported {
            match (measure_f64(fig, &f), measure_hp(fig, &f)) {
                (Ok(r), Ok(h)) if r <= opts.tol && h <= hp_tol => {
                    f.residual = r;
                    f.verified_residual = h;
                }
                (r, h) => {
                    result
                        .diagnostics
                        .push(format!("rejected {}: f64 {:?}, high precision {:?}", f.key(), r.ok(), h.ok()));
                    continue;
                }
            }
        }
        f.class = match class {
            Some(c) => c,
            None => {
                dd.add_generator(&f);
                f.key()
            }
        };
        if reported {
            result.findings.push(f);
        }
    }
    result.background = known;
    result
}

/// Findings of `fig` at tolerance `tol`, deduplicated, trivial ones removed.
pub fn scan_properties(fig: &Figure, tol: f64) -> Vec<Finding> {
    scan_with(
        fig,
        &ScanOptions {
            tol,
            ..ScanOptions::default()
        },
    )
    .findings
}

fn sq<T: Clone + std::ops::Mul<Output = T>>(x: &T) -> T {
    x.clone() * x.clone()
}
