use num_rational::BigRational;
use polycore::{resultant_u, Var};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yff_core::centers::catalog::center;
use yff_core::centers::shape::{make_shape, sample_shape, Family, TriangleShape};
use yff_core::centers::yff::{default_precision, solve_u, u_f64, yff_cubic, yff_points};
use yff_core::detect::{scan_properties, Figure};
use yff_core::exact::{q, qr};
use yff_core::geom::{
    area, collinear3, concurrent3, cross, det_residual, distance, embed_cartesian, foot_of_perpendicular,
    infinite_point, join, meet, normalize, normalized_trilinears, perpendicular_residual, proportionality_residual,
    reflect_about_side, subtriangle_areas, BaryLine, BaryPoint, Side, Sides,
};
use yff_core::points::EvalContext;
use yff_core::real::rational_to_f64;
use yff_core::verify::{residual_on, statement_residual, statement_to_polynomial, Statement};

fn zero() -> BigRational {
    q(0)
}

fn rat() -> impl Strategy<Value = BigRational> {
    (-30i64..=30, 1i64..=6).prop_map(|(n, d)| qr(n, d))
}

fn bary() -> impl Strategy<Value = BaryPoint<BigRational>> {
    (rat(), rat(), rat())
        .prop_map(|(x, y, z)| BaryPoint::new(x, y, z))
        .prop_filter("zero triple", |p| p.0.iter().any(|c| *c != zero()))
}

/// Finite points with positive weights, i.e. inside the triangle.
fn interior() -> impl Strategy<Value = BaryPoint<BigRational>> {
    (1i64..=20, 1i64..=20, 1i64..=20).prop_map(|(x, y, z)| BaryPoint::new(q(x), q(y), q(z)))
}

fn sides() -> impl Strategy<Value = [BigRational; 3]> {
    (10i64..=200, 10i64..=200, 10i64..=200, 1i64..=4)
        .prop_filter("triangle inequality", |(a, b, c, _)| a < &(b + c) && b < &(a + c) && c < &(a + b))
        .prop_map(|(a, b, c, d)| [qr(a, d), qr(b, d), qr(c, d)])
}

fn exact_sides(s: &[BigRational; 3]) -> Sides<BigRational> {
    Sides::new(s[0].clone(), s[1].clone(), s[2].clone())
}

fn float_sides(s: &[BigRational; 3]) -> Sides<f64> {
    Sides::new(rational_to_f64(&s[0]), rational_to_f64(&s[1]), rational_to_f64(&s[2]))
}

fn to_f64(p: &BaryPoint<BigRational>) -> BaryPoint<f64> {
    p.map(rational_to_f64)
}

fn shape_of(s: &[BigRational; 3]) -> TriangleShape {
    TriangleShape::from_sides(s[0].clone(), s[1].clone(), s[2].clone()).unwrap()
}

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::BC), Just(Side::CA), Just(Side::AB)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn meet_of_joins_recovers_the_common_point(p in bary(), r1 in bary(), r2 in bary()) {
        prop_assume!(collinear3(&p, &r1, &r2) != zero());
        let l = join(&p, &r1).unwrap();
        let m = join(&p, &r2).unwrap();
        prop_assert!(meet(&l, &m).unwrap().proportional_exact(&p));
    }

    #[test]
    fn infinite_point_lies_on_its_line_and_at_infinity(p in bary(), r in bary()) {
        prop_assume!(!p.proportional_exact(&r));
        let l = join(&p, &r).unwrap();
        prop_assume!(!(l.0[0] == l.0[1] && l.0[1] == l.0[2]));
        let f = infinite_point(&l).unwrap();
        prop_assert_eq!(l.contains(&f), zero());
        prop_assert_eq!(f.coord_sum(), zero());
    }

    #[test]
    fn reflection_is_an_involution(p in bary(), s in sides(), which in side()) {
        let sd = exact_sides(&s);
        let twice = reflect_about_side(&reflect_about_side(&p, which, &sd), which, &sd);
        prop_assert!(cross(&twice.0, &p.0).iter().all(|c| *c == zero()));
    }

    #[test]
    fn concurrency_determinant_is_antisymmetric(l in bary(), m in bary(), n in bary()) {
        let (l, m, n) = (BaryLine(l.0), BaryLine(m.0), BaryLine(n.0));
        prop_assert_eq!(concurrent3(&l, &m, &n), -concurrent3(&m, &l, &n));
        prop_assert_eq!(concurrent3(&l, &m, &n), -concurrent3(&l, &n, &m));
    }

    #[test]
    fn exact_collinearity_agrees_with_float(p in interior(), r in interior(), s in 1i64..5, t in 1i64..5, k in 0usize..3) {
        prop_assume!(!p.proportional_exact(&r));
        // A third point on the line PR, then the same point nudged off it.
        let on = BaryPoint([0, 1, 2].map(|i| &p.0[i] * q(s) + &r.0[i] * q(t)));
        prop_assert_eq!(collinear3(&p, &r, &on), zero());
        let (pf, rf, onf) = (to_f64(&p), to_f64(&r), to_f64(&on));
        prop_assert!(det_residual(&pf.0, &rf.0, &onf.0) < 1e-12);
        let line = cross(&pf.0, &rf.0);
        let norm = onf.0.iter().map(|x| x * x).sum::<f64>().sqrt();
        let kk = (0..3).max_by(|&i, &j| line[i].abs().total_cmp(&line[j].abs())).unwrap_or(k);
        let mut off = onf.clone();
        off.0[kk] += 1e-2 * norm;
        prop_assert!(det_residual(&pf.0, &rf.0, &off.0) > 1e-4);
    }

    #[test]
    fn subtriangle_areas_match_shoelace(p in interior(), s in sides()) {
        let sd = float_sides(&s);
        let pf = to_f64(&p);
        let (k, inside) = subtriangle_areas(&pf, &sd).unwrap();
        prop_assert!(inside);
        let total = area(&sd).unwrap();
        prop_assert!(((k[0] + k[1] + k[2]) - total).abs() < 1e-12 * total);
        let pt = embed_cartesian(&pf, &sd).unwrap();
        let v = [0, 1, 2].map(|i| embed_cartesian(&BaryPoint::vertex(i), &sd).unwrap());
        let shoelace = |a: &yff_core::geom::Planar<f64>, b: &yff_core::geom::Planar<f64>| {
            ((b.x - pt.x) * (a.y - pt.y) - (a.x - pt.x) * (b.y - pt.y)).abs() / 2.0
        };
        prop_assert!((k[0] - shoelace(&v[1], &v[2])).abs() < 1e-9 * total);
        prop_assert!((k[1] - shoelace(&v[2], &v[0])).abs() < 1e-9 * total);
        prop_assert!((k[2] - shoelace(&v[0], &v[1])).abs() < 1e-9 * total);
    }

    #[test]
    fn conway_perpendicularity_matches_cartesian(p in bary(), s in sides(), which in side()) {
        let sd = exact_sides(&s);
        prop_assume!(p.coord_sum() != zero());
        let f = foot_of_perpendicular(&p, which, &sd);
        prop_assume!(!f.proportional_exact(&p));
        let (i, j) = match which { Side::BC => (1, 2), Side::CA => (2, 0), Side::AB => (0, 1) };
        let sl = join(&BaryPoint::vertex(i), &BaryPoint::vertex(j)).unwrap();
        let pf_line = join(&p, &f).unwrap();
        let fs = float_sides(&s);
        let to_line = |l: &BaryLine<BigRational>| BaryLine(l.0.clone().map(|x| rational_to_f64(&x)));
        prop_assert!(perpendicular_residual(&to_line(&pf_line), &to_line(&sl), &fs).unwrap() < 1e-12);
        let e = |b: &BaryPoint<BigRational>| embed_cartesian(&to_f64(b), &fs).unwrap();
        let (pp, ff, vi, vj) = (e(&p), e(&f), e(&BaryPoint::vertex(i)), e(&BaryPoint::vertex(j)));
        let dot = (pp.x - ff.x) * (vj.x - vi.x) + (pp.y - ff.y) * (vj.y - vi.y);
        let scale = ((pp.x - ff.x).hypot(pp.y - ff.y)) * ((vj.x - vi.x).hypot(vj.y - vi.y));
        prop_assert!(dot.abs() < 1e-9 * scale.max(1.0));
    }
}

fn cubic_f64(s: &Sides<f64>, u: f64) -> f64 {
    u.powi(3) - (s.a - u) * (s.b - u) * (s.c - u)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn cubic_has_a_single_root_below_the_shortest_side(s in sides()) {
        let sd = float_sides(&s);
        let m = sd.a.min(sd.b).min(sd.c);
        prop_assert!(cubic_f64(&sd, 0.0) < 0.0);
        prop_assert!(cubic_f64(&sd, m) > 0.0);
        let mut changes = 0;
        let mut prev = cubic_f64(&sd, 0.0);
        for i in 1..=400 {
            let v = cubic_f64(&sd, m * f64::from(i) / 400.0);
            if (v > 0.0) != (prev > 0.0) {
                changes += 1;
            }
            prev = v;
        }
        prop_assert_eq!(changes, 1);
        let u = u_f64(&shape_of(&s));
        prop_assert!(u > 0.0 && u < m);
        prop_assert!(cubic_f64(&sd, u).abs() < 1e-9 * m.powi(3));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn u_scales_with_the_triangle(s in sides(), t in 2i64..9) {
        let scaled = s.clone().map(|x| x * q(t));
        let (u1, ut) = (u_f64(&shape_of(&s)), u_f64(&shape_of(&scaled)));
        prop_assert!((ut - u1 * t as f64).abs() < 1e-12 * ut);
        let st: Statement = "collinear(Y1, Y2, X2)".parse().unwrap();
        let r1 = residual_on(&st, &shape_of(&s)).unwrap();
        let rt = residual_on(&st, &shape_of(&scaled)).unwrap();
        prop_assert!((r1 - rt).abs() <= 1e-12 * r1.max(1e-30));
    }

    #[test]
    fn yff_points_are_isotomic(s in sides()) {
        let sd = float_sides(&s);
        let u = u_f64(&shape_of(&s));
        let (y1, y2) = yff_points(&sd, &u);
        let prod = [0, 1, 2].map(|i| y1.0[i] * y2.0[i]);
        prop_assert!(proportionality_residual(&prod, &[1.0, 1.0, 1.0]) < 1e-12);
    }

    #[test]
    fn catalog_sanity(s in sides()) {
        let ex = exact_sides(&s);
        let x2 = center(2, &ex).unwrap();
        prop_assert!(x2.proportional_exact(&BaryPoint::new(q(1), q(1), q(1))));
        let x3 = center(3, &ex).unwrap();
        let x4 = center(4, &ex).unwrap();
        let x5 = center(5, &ex).unwrap();
        let mid = yff_core::geom::midpoint(&x3, &x4).unwrap();
        prop_assert!(x5.proportional_exact(&mid));
        let sd = float_sides(&s);
        let t = normalized_trilinears(&center(1, &sd).unwrap(), &sd).unwrap();
        prop_assert!((t[0] - t[1]).abs() < 1e-10 * t[0] && (t[1] - t[2]).abs() < 1e-10 * t[0]);
        let o = center(3, &sd).unwrap();
        let d = [0, 1, 2].map(|i| distance(&o, &BaryPoint::vertex(i), &sd).unwrap());
        prop_assert!((d[0] - d[1]).abs() < 1e-9 * d[0] && (d[1] - d[2]).abs() < 1e-9 * d[0]);
    }

    #[test]
    fn exact_root_bracket_contains_the_float_root(s in sides()) {
        let shape = shape_of(&s);
        let root = solve_u(&shape, &default_precision()).unwrap();
        let mid = rational_to_f64(&root.midpoint());
        prop_assert!((mid - u_f64(&shape)).abs() < 1e-12 * mid);
    }
}

#[test]
fn harmonic_characterizations_agree() {
    let statements: Vec<Statement> = ["collinear(Y1, Y2, B)", "collinear(Y1, Y2, X2)", "collinear(Y1, Y2, mid(A,C))"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..100 {
        let shape = sample_shape(Family::Harmonic, &mut rng);
        for st in &statements {
            assert!(residual_on(st, &shape).unwrap() < 1e-12, "{st} on {}", shape.label());
        }
    }
    let mut seen = 0;
    while seen < 100 {
        let shape = sample_shape(Family::ScaleneRandom, &mut rng);
        let s = shape.sides_f64();
        let defect = (s.b * (s.a + s.c) - 2.0 * s.a * s.c).abs() / (s.a + s.b + s.c).powi(2);
        if defect < 1e-3 {
            continue;
        }
        seen += 1;
        for st in &statements {
            assert!(residual_on(st, &shape).unwrap() > 1e-8, "{st} on {}", shape.label());
        }
    }
}

#[test]
fn vertex_condition_vanishes_with_its_resultant() {
    // |p(a,b,c,u*)| is small exactly when the u-resultant vanishes.
    let st: Statement = "collinear(Y1, Y2, B)".parse().unwrap();
    let p = statement_to_polynomial(&st).unwrap();
    let r = resultant_u(&p, &yff_cubic()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for i in 0..100 {
        let fam = if i % 2 == 0 { Family::Harmonic } else { Family::ScaleneRandom };
        let shape = sample_shape(fam, &mut rng);
        let [a, b, c] = shape.rational_sides().unwrap().clone();
        let rv = r.eval_rational(&[(Var::A, a), (Var::B, b), (Var::C, c)]);
        let ctx = EvalContext::new(shape.sides_f64().clone(), u_f64(&shape));
        let pv = statement_residual(&st, &ctx).unwrap();
        assert_eq!(rv == zero(), pv < 1e-12, "{}: resultant {rv}, residual {pv:e}", shape.label());
    }
}

#[test]
fn isosceles_area_relation_iff_equal_sides() {
    let st: Statement = "area(Y1)".parse().unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0;
    while checked < 200 {
        let fam = if checked % 2 == 0 { Family::Isosceles } else { Family::ScaleneRandom };
        let shape = sample_shape(fam, &mut rng);
        let s = shape.sides_f64();
        let equal = shape.rational_sides().is_some_and(|r| r[1] == r[2]);
        if !equal && (s.b - s.c).abs() < 1e-3 * (s.a + s.b + s.c) {
            continue;
        }
        checked += 1;
        let r = residual_on(&st, &shape).unwrap();
        assert_eq!(r < 1e-10, equal, "{} residual {r:e}", shape.label());
    }
}

fn perturb(shape: &TriangleShape, k: usize) -> TriangleShape {
    let s = shape.sides_f64();
    let mut v = [s.a, s.b, s.c].map(|x| BigRational::from_float(x).unwrap());
    v[k] = &v[k] * qr(101, 100);
    TriangleShape::from_sides(v[0].clone(), v[1].clone(), v[2].clone()).unwrap()
}

#[test]
fn family_findings_vanish_under_perturbation() {
    let cases: [(Family, &[u32], bool, &str); 5] = [
        (Family::RightAtB, &[8, 20], false, "concurrent(A Y2, C Y1, X8 X20)"),
        (Family::SixtyAtC, &[3, 8], false, "concurrent(A Y1, B Y2, X3 X8)"),
        (Family::Ap, &[1], false, "parallel(A X1, Y1 Y2)"),
        (Family::Harmonic, &[2], false, "collinear(Y1, Y2, X2)"),
        (Family::Heptagonal, &[1], true, "parallel(X1 Y2, reflect(Y1,BC) C)"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (fam, centers, refl, text) in cases {
        let st: Statement = text.parse().unwrap();
        let shape = sample_shape(fam, &mut rng);
        let found = scan_properties(&Figure::standard(&shape, centers, refl), 1e-10);
        assert!(found.iter().any(|f| f.matches(&st)), "{text} missing on {}", shape.label());
        for k in 0..3 {
            let moved = perturb(&shape, k);
            let after = scan_properties(&Figure::standard(&moved, centers, refl), 1e-10);
            assert!(!after.iter().any(|f| f.matches(&st)), "{text} survives perturbing side {k}");
            // Whatever survives also holds on an unrelated scalene triangle.
            let other = make_shape(Family::ScaleneRandom, &[q(37), q(52), q(61)]).unwrap();
            for f in &after {
                for s in f.to_statements() {
                    assert!(residual_on(&s, &other).unwrap() < 1e-10, "{s} is not generic ({text})");
                }
            }
        }
    }
}

#[test]
fn scan_output_is_byte_identical() {
    let shape = make_shape(Family::RightAtB, &[q(5), q(3)]).unwrap();
    let fig = Figure::standard(&shape, &[8, 20], false);
    let a = serde_json::to_string(&scan_properties(&fig, 1e-10)).unwrap();
    let b = serde_json::to_string(&scan_properties(&fig, 1e-10)).unwrap();
    assert_eq!(a, b);
}

#[test]
fn normalize_rejects_points_at_infinity() {
    let p = BaryPoint::new(1.0, -1.0, 0.0);
    assert!(normalize(&p).is_err());
}
