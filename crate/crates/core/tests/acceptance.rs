//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the target
//! exits nonzero if any criterion fails. Runs without the libtest harness so
//! the table is always shown.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use polycore::{elimination_generator, poly, Monomial, MultiPoly, Var, NUM_VARS};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yff_core::centers::metrics::{median_split_ratio, special_points, yff_cevian_area};
use yff_core::centers::shape::{make_shape, sample_shape, Family, TriangleShape};
use yff_core::centers::yff::{default_precision, solve_u, u_f64, yff_cubic, YffPoint};
use yff_core::discover::{run_scan, FamilyScan, FamilyReport, ScanConfig};
use yff_core::exact::{q, qr};
use yff_core::geom::{angle_at, unit_sum_trilinears, BaryPoint};
use yff_core::points::{eval_point, EvalContext, PointExpr};
use yff_core::verify::{certify, residual_on, statement_to_polynomial, CertifyOptions, Elimination, Statement, Verdict};

const YM_FIRST: f64 = 0.4500479513210176;
const YC_FIRST: f64 = 0.7440584232553069;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn st(s: &str) -> Statement {
    s.parse().unwrap()
}

fn opts() -> CertifyOptions {
    CertifyOptions {
        timeout: Duration::from_secs(300),
        ..CertifyOptions::default()
    }
}

/// Divides out the largest monomial dividing every term.
fn strip_monomial(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut e = [u32::MAX; NUM_VARS];
    for (m, _) in p.terms() {
        for (i, x) in m.exponents().iter().enumerate() {
            e[i] = e[i].min(*x);
        }
    }
    let g = Monomial::from_exponents(&e);
    MultiPoly::from_terms(p.terms().iter().map(|(m, c)| (m.div(g).unwrap(), c.clone())))
}

fn f64_ctx(shape: &TriangleShape) -> EvalContext<f64> {
    EvalContext::new(shape.sides_f64().clone(), u_f64(shape))
}

fn point(ctx: &EvalContext<f64>, label: &str) -> BaryPoint<f64> {
    eval_point(&label.parse::<PointExpr>().unwrap(), ctx).unwrap()
}

/// Angle at `at` between rays to `p` and `q`.
fn ang(ctx: &EvalContext<f64>, p: &str, at: &str, r: &str) -> f64 {
    angle_at(&point(ctx, at), &point(ctx, p), &point(ctx, r), &ctx.sides).unwrap()
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let shape = TriangleShape::from_sides(q(6), q(9), q(13)).unwrap();
    let sp = special_points(&shape).unwrap();
    let ym = unit_sum_trilinears(&sp.ym, shape.sides_f64()).unwrap()[0];
    let yc = unit_sum_trilinears(&sp.yc, shape.sides_f64()).unwrap()[0];
    let el = t.elapsed();
    let pass = (ym - YM_FIRST).abs() < 1e-12 && (yc - YC_FIRST).abs() < 1e-12 && el < Duration::from_secs(1);
    outcome(pass, format!("Ym {ym:.16}, Yc {yc:.16}, {:.3}s", el.as_secs_f64()))
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let s = st("perpendicular(Y1 Y2, X1 X3)");
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = 0f64;
    for _ in 0..1000 {
        let shape = sample_shape(Family::ScaleneRandom, &mut rng);
        let r = yff_core::verify::statement_residual(&s, &f64_ctx(&shape)).unwrap();
        worst = worst.max(r);
    }
    let cert = certify(&s, Family::ScaleneRandom, &opts()).unwrap();
    let el = t.elapsed();
    let exact_ok = cert.verdict == Verdict::Certified
        && cert.elimination == Elimination::Resultant
        && cert.resultant.as_ref().is_some_and(MultiPoly::is_zero);
    let pass = worst < 1e-10 && exact_ok && el < Duration::from_secs(60);
    outcome(
        pass,
        format!("max residual {worst:.2e}, resultant zero {exact_ok}, {:.1}s", el.as_secs_f64()),
    )
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let s = st("concurrent(A Y2, C Y1, X8 X20)");
    let cert = certify(&s, Family::RightAtB, &opts()).unwrap();
    let mut worst = 0f64;
    let mut pythagorean = true;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..20 {
        let shape = sample_shape(Family::RightAtB, &mut rng);
        let [a, b, c] = shape.rational_sides().unwrap().clone();
        pythagorean &= &a * &a + &c * &c == &b * &b && a.is_integer() && b.is_integer() && c.is_integer();
        let r = yff_core::verify::statement_residual(&s, &f64_ctx(&shape)).unwrap();
        worst = worst.max(r);
    }
    let el = t.elapsed();
    let pass = cert.verdict == Verdict::Certified
        && cert.reduced_is_zero()
        && pythagorean
        && worst < 1e-10
        && el < Duration::from_secs(120);
    outcome(
        pass,
        format!("{}, max residual {worst:.2e}, {:.1}s", cert.verdict, el.as_secs_f64()),
    )
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let cubic = yff_cubic();
    let gen = |p: &MultiPoly| elimination_generator(p, &cubic, Var::U).unwrap();
    let stmt_poly = |s: &str| statement_to_polynomial(&st(s)).unwrap();
    let cases: Vec<(&str, MultiPoly, MultiPoly)> = vec![
        ("vertex determinant", stmt_poly("collinear(Y1, Y2, B)"), poly("b*(b-2*u)*(a-u)*u")),
        ("centroid determinant", stmt_poly("collinear(Y1, Y2, X2)"), poly("(a-2*u)*(b-2*u)*(b*u-a*b+a*u)")),
        (
            "centroid elimination",
            gen(&stmt_poly("collinear(Y1, Y2, X2)")),
            poly("a^3*b^3*(a*b+a*c-2*b*c)*(2*a*b-a*c-b*c)*(a*b-2*a*c+b*c)"),
        ),
        (
            "double-angle reduction",
            gen(&stmt_poly("concurrent(B Y2, C X2, A reflect(Y2,BC))")),
            poly("a*b*(b-c)*(a^2-b*(b+c))"),
        ),
        ("isosceles area", gen(&stmt_poly("area(Y1)")), poly("a^4*b^4*(b-c)*c")),
        (
            "nagel condition",
            gen(&poly("(a+b+c)/2 - a - u")),
            poly("a^2*(a-b-c) - b*c*(b+c-3*a)"),
        ),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (name, got, want) in &cases {
        let strict = got.proportional(want);
        let loose = strip_monomial(got).proportional(&strip_monomial(want));
        pass &= loose;
        if !strict {
            notes.push(format!("{name}: equal only after monomial content removal"));
        }
        if !loose {
            notes.push(format!("{name}: MISMATCH {}", got.primitive_part()));
        }
    }
    // The incidence route for the Nagel point gives the same condition.
    let nagel = gen(&stmt_poly("collinear(B, Y1, X8)"));
    let cond = poly("a^2*(a-b-c) - b*c*(b+c-3*a)");
    let nagel_ok = polycore::gcd(&nagel, &cond).proportional(&cond);
    pass &= nagel_ok;
    if !nagel_ok {
        notes.push("collinear(B, Y1, X8) generator lacks the nagel factor".into());
    }
    let el = t.elapsed();
    pass &= el < Duration::from_secs(120);
    let mut detail = format!("{} outputs, {:.1}s", cases.len(), el.as_secs_f64());
    for n in notes {
        detail.push_str("; ");
        detail.push_str(&n);
    }
    outcome(pass, detail)
}

fn criterion_5() -> Outcome {
    let prec = default_precision();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let statements = [
        st("collinear(Y1, Y2, B)"),
        st("collinear(Y1, Y2, X2)"),
        st("collinear(Y1, Y2, mid(A,C))"),
    ];
    let (mut exact_u, mut worst_line, mut worst_ratio) = (true, 0f64, 0f64);
    let mut corollary = true;
    for _ in 0..100 {
        let shape = sample_shape(Family::Harmonic, &mut rng);
        let b = shape.rational_sides().unwrap()[1].clone();
        let root = solve_u(&shape, &prec).unwrap();
        exact_u &= root.exact() == Some(&(&b / q(2)));
        for s in &statements {
            worst_line = worst_line.max(residual_on(s, &shape).unwrap());
        }
        let (af, bf) = (shape.sides_f64().a, shape.sides_f64().b);
        let r1 = median_split_ratio(&shape, YffPoint::Y1).unwrap();
        let r2 = median_split_ratio(&shape, YffPoint::Y2).unwrap();
        worst_ratio = worst_ratio
            .max((r1 - 2.0 * bf / (2.0 * af - bf)).abs())
            .max((r2 - 2.0 * (2.0 * af - bf) / bf).abs());
        let is_346 = shape.params[0] == &shape.params[1] * q(2);
        corollary &= ((r1 - 1.0).abs() < 1e-10) == is_346;
    }
    // Explicit members with m = 2n, i.e. sides proportional to (6, 4, 3).
    for n in [qr(1, 1), qr(1, 3), qr(5, 2)] {
        let shape = make_shape(Family::Harmonic, &[&n * q(2), n]).unwrap();
        let r1 = median_split_ratio(&shape, YffPoint::Y1).unwrap();
        corollary &= (r1 - 1.0).abs() < 1e-10;
    }
    let pass = exact_u && worst_line < 1e-12 && worst_ratio < 1e-10 && corollary;
    outcome(
        pass,
        format!(
            "u = b/2 exact {exact_u}, line residual {worst_line:.2e}, ratio error {worst_ratio:.2e}, 3-4-6 corollary {corollary}"
        ),
    )
}

fn criterion_6() -> Outcome {
    let t = Instant::now();
    let s = st("parallel(X1 Y2, reflect(Y1,BC) C)");
    let cert = certify(&s, Family::Heptagonal, &opts()).unwrap();
    let shape = make_shape(Family::Heptagonal, &[]).unwrap();
    let numeric = residual_on(&s, &shape).unwrap();
    let ctx = f64_ctx(&shape);
    let theta = ang(&ctx, "Y2", "X1", "A");
    let p7 = PI / 7.0;
    let p14 = PI / 14.0;
    let checks: Vec<(&str, f64, f64)> = vec![
        ("sum", ang(&ctx, "C", "X1", "Y2") + ang(&ctx, "X1", "C", "Y1"), p7),
        ("1", ang(&ctx, "B", "A", "X1"), 2.0 * p7),
        ("2", ang(&ctx, "C", "X1", "Y2"), 9.0 * p14 - theta),
        ("3", ang(&ctx, "A", "C", "X1"), p14),
        ("4", ang(&ctx, "X1", "C", "Y1"), theta - PI / 2.0),
        ("5", ang(&ctx, "B", "X1", "C"), 11.0 * p14),
        ("6", ang(&ctx, "Y1", "C", "B"), 4.0 * p7 - theta),
        ("7", ang(&ctx, "A", "B", "X1"), p7),
        ("8", ang(&ctx, "X1", "B", "C"), p7),
        ("9", ang(&ctx, "X1", "A", "C"), 2.0 * p7),
        ("X3", ang(&ctx, "C", "X1", "Y2"), ang(&ctx, "Y1", "C", "X3")),
        ("X5", ang(&ctx, "C", "B", "X5"), ang(&ctx, "Y2", "Y1", "foot(Y1,CA)")),
        ("X21", ang(&ctx, "X21", "X1", "Y2"), ang(&ctx, "C", "Y1", "Y2")),
        ("X28", ang(&ctx, "X1", "Y2", "Y1"), ang(&ctx, "X28", "C", "Y1")),
    ];
    let mut worst = 0f64;
    let mut bad = Vec::new();
    for (name, lhs, rhs) in &checks {
        let e = (lhs - rhs).abs();
        worst = worst.max(e);
        if e >= 1e-10 {
            bad.push(*name);
        }
    }
    let el = t.elapsed();
    let cert_ok = cert.verdict == Verdict::Certified && cert.reduced_is_zero();
    let pass = cert_ok && numeric < 1e-10 && bad.is_empty() && el < Duration::from_secs(120);
    outcome(
        pass,
        format!(
            "parallel {} (residual {numeric:.2e}), {} angle identities, max error {worst:.2e}{}, {:.1}s",
            cert.verdict,
            checks.len(),
            if bad.is_empty() { String::new() } else { format!(", failing {bad:?}") },
            el.as_secs_f64()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0f64;
    for _ in 0..100 {
        let shape = sample_shape(Family::ScaleneRandom, &mut rng);
        for which in [YffPoint::Y1, YffPoint::Y2] {
            let a = yff_cevian_area(&shape, which).unwrap();
            worst = worst
                .max((a.segment_formula - a.closed_form).abs())
                .max((a.direct - a.closed_form).abs());
        }
    }
    outcome(worst < 1e-10, format!("max deviation {worst:.2e}"))
}

fn has(report: &FamilyReport, target: &str) -> bool {
    report.stable.iter().any(|s| s.key == target || s.class == target)
}

fn criterion_8() -> Outcome {
    let t = Instant::now();
    let families = Family::ALL
        .iter()
        .map(|&f| {
            let mut fs = FamilyScan::new(f);
            fs.reflections = matches!(f, Family::Heptagonal | Family::DoubleAngle);
            fs
        })
        .collect();
    let report = run_scan(&ScanConfig::new(families)).unwrap();
    let el = t.elapsed();
    let fam = |f| report.family(f).unwrap();
    let thm2 = "perpendicular(X1 X3, Y1 Y2)";
    let scalene = fam(Family::ScaleneRandom);
    let scalene_ok = !scalene.stable.is_empty() && scalene.stable.iter().all(|s| s.class == thm2);
    let right_ok = has(fam(Family::RightAtB), "concurrent(A Y2, C Y1, X8 X20)");
    let ap_ok = has(fam(Family::Ap), "parallel(A X1, Y1 Y2)");
    let sixty_ok = has(fam(Family::SixtyAtC), "concurrent(A Y1, B Y2, X3 X8)");
    let pass = scalene_ok && right_ok && ap_ok && sixty_ok && el < Duration::from_secs(600);
    outcome(
        pass,
        format!(
            "scalene single class {scalene_ok}, right-at-B {right_ok}, AP {ap_ok}, sixty-at-C {sixty_ok}, {} families in {:.1}s",
            report.families.len(),
            el.as_secs_f64()
        ),
    )
}

fn criterion_9() -> Outcome {
    // Ring axioms, resultant oracles, reflection involution and exact/float
    // agreement run as property tests in their own targets; the area
    // relation is checked here on 200 samples.
    let s = st("area(Y1)");
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut iso_worst, mut scalene_best) = (0f64, f64::INFINITY);
    let mut scalene_seen = 0;
    for _ in 0..100 {
        let shape = sample_shape(Family::Isosceles, &mut rng);
        iso_worst = iso_worst.max(residual_on(&s, &shape).unwrap());
    }
    while scalene_seen < 100 {
        let shape = sample_shape(Family::ScaleneRandom, &mut rng);
        let sd = shape.sides_f64();
        if (sd.b - sd.c).abs() < 1e-3 * (sd.a + sd.b + sd.c) {
            continue;
        }
        scalene_seen += 1;
        scalene_best = scalene_best.min(residual_on(&s, &shape).unwrap());
    }
    let pass = iso_worst < 1e-10 && scalene_best > 1e-10;
    outcome(
        pass,
        format!("b = c max residual {iso_worst:.2e}, b != c min residual {scalene_best:.2e}"),
    )
}

fn main() -> std::process::ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("special-point constants", criterion_1),
        ("general perpendicularity", criterion_2),
        ("right-at-B concurrency", criterion_3),
        ("printed elimination outputs", criterion_4),
        ("harmonic suite", criterion_5),
        ("heptagonal suite", criterion_6),
        ("cevian areas", criterion_7),
        ("discovery reproduction", criterion_8),
        ("area relation iff b = c", criterion_9),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        println!("{} {}. {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        if !o.pass {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        std::process::ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::ExitCode::FAILURE
    }
}
