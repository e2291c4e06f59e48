use crate::{MultiPoly, PolyError, Var};

/// Remainder of `p` modulo `minpoly`, viewed as polynomials in `v`.
///
/// `minpoly` must have a nonzero constant leading coefficient in `v`; its
/// lower coefficients may involve other variables. Each `v^i` with
/// `i >= deg` is rewritten through the tail until the degree drops below
/// `deg(minpoly)`.
pub fn reduce_mod(p: &MultiPoly, minpoly: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    if minpoly.is_zero() {
        return Err(PolyError::Usage("minimal polynomial is zero".into()));
    }
    let mc = minpoly.coeffs_in(v);
    let d = mc.len() - 1;
    if d == 0 {
        return Err(PolyError::ZeroDegree(v));
    }
    let lc = mc[d].constant_value().ok_or_else(|| {
        PolyError::Usage(format!(
            "leading coefficient of the minimal polynomial in {v} is not constant"
        ))
    })?;
    let inv = lc.recip();
    // v^d = -(tail)/lc
    let tail: Vec<MultiPoly> = mc[..d].iter().map(|c| c.scale(&-inv.clone())).collect();
    let mut c = p.coeffs_in(v);
    if c.len() <= d {
        return Ok(p.clone());
    }
    for i in (d..c.len()).rev() {
        let top = std::mem::take(&mut c[i]);
        if top.is_zero() {
            continue;
        }
        for (k, t) in tail.iter().enumerate() {
            if !t.is_zero() {
                let add = &top * t;
                c[i - d + k] += &add;
            }
        }
    }
    c.truncate(d);
    Ok(MultiPoly::from_coeffs_in(v, &c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly;

    const HEPTA: &str = "x^3 - x^2 - 2*x + 1";

    #[test]
    fn one_rewrite_step() {
        let r = reduce_mod(&poly("x^3"), &poly(HEPTA), Var::X).unwrap();
        assert_eq!(r, poly("x^2 + 2*x - 1"));
    }

    #[test]
    fn multiples_vanish() {
        let q = poly("a*x^4 - 3*x + b");
        let r = reduce_mod(&(&q * &poly(HEPTA)), &poly(HEPTA), Var::X).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn non_monic_and_parametric_minpoly() {
        let m = poly("2*x^2 - m*x - n");
        let r = reduce_mod(&poly("x^2"), &m, Var::X).unwrap();
        assert_eq!(r, poly("m*x/2 + n/2"));
        assert!(reduce_mod(&poly("x"), &poly("m*x^2+1"), Var::X).is_err());
    }

    #[test]
    fn zero_or_constant_minpoly_is_rejected() {
        assert!(matches!(
            reduce_mod(&poly("x"), &MultiPoly::zero(), Var::X),
            Err(PolyError::Usage(_))
        ));
        assert_eq!(
            reduce_mod(&poly("x"), &poly("3"), Var::X),
            Err(PolyError::ZeroDegree(Var::X))
        );
    }
}
