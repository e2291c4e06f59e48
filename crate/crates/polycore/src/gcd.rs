//! Multivariate gcd by recursive content extraction and primitive
//! pseudo-remainder sequences.

use crate::{MultiPoly, Var};

/// Greatest common divisor, returned as an integer primitive polynomial with
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one();
    }
    let support = p.support() | q.support();
    let v = Var::ALL
        .into_iter()
        .rev()
        .find(|v| support & (1 << v.index()) != 0)
        .expect("nonconstant");
    let (cp, pp) = split_content(p, v);
    let (cq, pq) = split_content(q, v);
    let c = gcd(&cp, &cq);
    if pp.degree_in(v) == 0 || pq.degree_in(v) == 0 {
        return c;
    }
    let (mut r0, mut r1) = if pp.degree_in(v) >= pq.degree_in(v) {
        (pp, pq)
    } else {
        (pq, pp)
    };
    let g = loop {
        let r = pseudo_rem(&r0, &r1, v);
        if r.is_zero() {
            break r1;
        }
        if r.degree_in(v) == 0 {
            break MultiPoly::one();
        }
        r0 = r1;
        r1 = split_content(&r, v).1;
    };
    (&c * &g).primitive_part()
}

/// gcd of any number of polynomials.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a MultiPoly>>(ps: I) -> MultiPoly {
    let mut g = MultiPoly::zero();
    for p in ps {
        g = gcd(&g, p);
        if g.is_constant() && !g.is_zero() {
            break;
        }
    }
    g
}

/// Content with respect to `v` (gcd of its coefficients) and the primitive part.
pub fn split_content(p: &MultiPoly, v: Var) -> (MultiPoly, MultiPoly) {
    let coeffs = p.coeffs_in(v);
    let c = gcd_all(coeffs.iter().rev());
    let pp = p.div_exact(&c).expect("content divides");
    (c, pp)
}

/// `lc(g)^k * f mod g` in `v` for the smallest `k` that makes it exact.
pub fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, v: Var) -> MultiPoly {
    let gc = g.coeffs_in(v);
    let dg = gc.len() - 1;
    let lg = &gc[dg];
    let mut r = f.coeffs_in(v);
    while r.len() > dg && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c = &*c * lg;
        }
        for (k, gk) in gc.iter().enumerate() {
            let sub = &lr * gk;
            r[dr - dg + k] -= &sub;
        }
        while r.last().is_some_and(MultiPoly::is_zero) {
            r.pop();
        }
    }
    MultiPoly::from_coeffs_in(v, &r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly;

    #[test]
    fn gcd_of_shared_factor() {
        let f = poly("(a-b)*(a+c)^2*(u-1)");
        let g = poly("(a+c)*(b-u)*(a-b)*3");
        assert_eq!(gcd(&f, &g), poly("(a-b)*(a+c)").primitive_part());
    }

    #[test]
    fn coprime_gives_one() {
        assert_eq!(gcd(&poly("a^2+b^2"), &poly("a+b")), MultiPoly::one());
        assert_eq!(gcd(&poly("2*a"), &poly("4")), MultiPoly::one());
    }

    #[test]
    fn gcd_with_zero() {
        assert_eq!(gcd(&MultiPoly::zero(), &poly("-2*a")), poly("a"));
    }

    #[test]
    fn pseudo_remainder_is_exact_multiple() {
        let f = poly("a*u^3 + b*u + 1");
        let g = poly("b*u^2 + a");
        let r = pseudo_rem(&f, &g, Var::U);
        assert!(r.degree_in(Var::U) < 2);
    }
}
