use polycore::{
    det_bareiss, elimination_generator, poly, reduce_mod, resultant_u, BigInt, BigRational,
    PolyMatrix, Var,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CUBIC: &str = "2*u^3 - (a+b+c)*u^2 + (a*b+b*c+c*a)*u - a*b*c";

fn rq(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(BigInt::from(rng.gen_range(1..60)), BigInt::from(rng.gen_range(1..9)))
}

#[test]
fn cubic_expansion_agrees_at_random_points() {
    let lhs = poly("u^3 - (a-u)*(b-u)*(c-u)");
    let rhs = poly(CUBIC);
    assert_eq!(lhs, rhs);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..20 {
        let pt: Vec<_> = [Var::A, Var::B, Var::C, Var::U].into_iter().map(|v| (v, rq(&mut rng))).collect();
        let get = |v: Var| pt.iter().find(|p| p.0 == v).unwrap().1.clone();
        let (a, b, c, u) = (get(Var::A), get(Var::B), get(Var::C), get(Var::U));
        let direct = &u * &u * &u - (&a - &u) * (&b - &u) * (&c - &u);
        assert_eq!(rhs.eval_rational(&pt), direct);
    }
}

#[test]
fn substitution_examples() {
    assert!(poly("b-2*u").substitute_one(Var::U, &poly("b/2")).is_zero());
    let s = poly(CUBIC).substitute_one(Var::U, &poly("b/2"));
    assert!(s.proportional(&poly("b*(a*b-2*a*c+b*c)")));
    let mut m = std::collections::BTreeMap::new();
    m.insert(Var::A, poly("m^2-n^2"));
    m.insert(Var::B, poly("m^2+n^2"));
    m.insert(Var::C, poly("2*m*n"));
    assert!(poly("a^2-b^2+c^2").substitute(&m).is_zero());
}

#[test]
fn harmonic_vertex_determinant_is_printed_form() {
    let m = PolyMatrix::from_rows(vec![
        vec![poly("u^2"), poly("(a-u)*(b-u)"), poly("u*(b-u)")],
        vec![poly("(a-u)*(b-u)"), poly("u^2"), poly("u*(a-u)")],
        vec![poly("0"), poly("1"), poly("0")],
    ])
    .unwrap();
    assert!(det_bareiss(&m).unwrap().proportional(&poly("b*(b-2*u)*(a-u)*u")));
}

#[test]
fn nagel_condition_vanishes_exactly_on_its_locus() {
    let p = poly("(a+b+c)/2 - a - u");
    let r = resultant_u(&p, &poly(CUBIC)).unwrap();
    let cond = poly("a^2*(a-b-c) - b*c*(b+c-3*a)");
    assert!(r.proportional(&cond));
    let mut rng = ChaCha8Rng::seed_from_u64(27);
    let mut hits = 0;
    for _ in 0..50 {
        let b = rq(&mut rng);
        let c = rq(&mut rng);
        let a = rq(&mut rng);
        let pt = vec![(Var::A, a.clone()), (Var::B, b.clone()), (Var::C, c.clone())];
        let cv = cond.eval_rational(&pt);
        let rv = r.eval_rational(&pt);
        assert_eq!(rv.clone() == BigRational::from_integer(0.into()), cv == BigRational::from_integer(0.into()));
        // Points violating the condition give nonzero resultant.
        if cv != BigRational::from_integer(0.into()) {
            hits += 1;
        }
    }
    assert_eq!(hits, 50);
    // The locus has no small rational points beyond the equilateral one;
    // check that and an irrational member numerically.
    let one = BigRational::from_integer(1.into());
    let eq = vec![(Var::A, one.clone()), (Var::B, one.clone()), (Var::C, one)];
    assert_eq!(r.eval_rational(&eq), BigRational::from_integer(0.into()));
    let c = (5.0 + 97f64.sqrt()) / 4.0;
    let on = [(Var::A, 3.0), (Var::B, 2.0), (Var::C, c)];
    assert!(cond.eval_f64(&on).abs() < 1e-12);
    let off = [(Var::A, 3.0), (Var::B, 2.0), (Var::C, c + 0.01)];
    assert!(r.eval_f64(&on).abs() < 1e-9 * r.eval_f64(&off).abs());
}

#[test]
fn heptagonal_reduction_matches_numeric_value() {
    let m = poly("x^3 - x^2 - 2*x + 1");
    let p = poly("(x^2-1)^2 - x*(x^2+x-1)");
    let r = reduce_mod(&p, &m, Var::X).unwrap();
    assert!(r.degree_in(Var::X) < 3);
    let x = 2.0 * (std::f64::consts::PI / 7.0).cos();
    let pv = p.eval_f64(&[(Var::X, x)]);
    let rv = r.eval_f64(&[(Var::X, x)]);
    assert!((pv - rv).abs() < 1e-12, "{pv} vs {rv}");
}

#[test]
fn printed_elimination_outputs() {
    let cubic = poly(CUBIC);
    let gen = |p: &str| elimination_generator(&poly(p), &cubic, Var::U).unwrap();
    assert!(gen("(a-2*u)*(b-2*u)*(b*u-a*b+a*u)")
        .proportional(&poly("a^3*b^3*(a*b+a*c-2*b*c)*(2*a*b-a*c-b*c)*(a*b-2*a*c+b*c)")));
    assert!(gen("(a-u)*u*(-b+u)^2 - u^4").proportional(&poly("a^4*b^4*(b-c)*c")));
    assert!(gen("(b-2*u)*(a^2*(b-u)+2*a*u*(u-b)+b*u^2)")
        .proportional(&poly("a^3*b^4*(a*b-2*a*c+b*c)*(a^2*b+2*a^2*c-2*a*b*c+2*a*c^2+b*c^2)")));
}
