use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;
use crate::var::{Var, NUM_VARS};
use crate::PolyError;

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted by descending graded lexicographic order with no
/// zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<(Monomial, BigRational)>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> MultiPoly {
        MultiPoly::term(Monomial::ONE, c)
    }

    pub fn from_int(n: i64) -> MultiPoly {
        MultiPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> MultiPoly {
        MultiPoly::term(Monomial::var(v), BigRational::one())
    }

    pub fn term(m: Monomial, c: BigRational) -> MultiPoly {
        if c.is_zero() {
            MultiPoly::zero()
        } else {
            MultiPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds a polynomial from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> MultiPoly {
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in iter {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(e) => *e += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        MultiPoly::from_map(acc)
    }

    fn from_map(map: HashMap<Monomial, BigRational>) -> MultiPoly {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|x, y| y.0.cmp(&x.0));
        MultiPoly { terms }
    }

    /// Sum of many polynomials in one pass.
    pub fn sum<'a, I: IntoIterator<Item = &'a MultiPoly>>(iter: I) -> MultiPoly {
        MultiPoly::from_terms(
            iter.into_iter()
                .flat_map(|p| p.terms.iter().map(|(m, c)| (*m, c.clone()))),
        )
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn leading_term(&self) -> Option<&(Monomial, BigRational)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.first().map(|t| t.0.degree()).unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.iter().map(|t| t.0.exponent(v)).max().unwrap_or(0)
    }

    /// Bitmask of the variables that occur.
    pub fn support(&self) -> u8 {
        self.terms.iter().fold(0, |m, t| m | t.0.support())
    }

    pub fn contains_var(&self, v: Var) -> bool {
        self.support() & (1 << v.index()) != 0
    }

    pub fn vars(&self) -> Vec<Var> {
        let s = self.support();
        Var::ALL
            .into_iter()
            .filter(|v| s & (1 << v.index()) != 0)
            .collect()
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(t, k)| (t.mul(m), k.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        <MultiPoly as crate::ring::Scalar>::pow_u32(self, k)
    }

    /// Coefficients of `self` viewed as a polynomial in `v`: entry `i` is the
    /// coefficient of `v^i`.
    pub fn coeffs_in(&self, v: Var) -> Vec<MultiPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let d = self.degree_in(v) as usize;
        let mut buckets: Vec<Vec<(Monomial, BigRational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            buckets[m.exponent(v) as usize].push((m.without(v), c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                // Removing one variable can break the grlex order.
                ts.sort_unstable_by(|x, y| y.0.cmp(&x.0));
                MultiPoly { terms: ts }
            })
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(v: Var, coeffs: &[MultiPoly]) -> MultiPoly {
        MultiPoly::from_terms(coeffs.iter().enumerate().flat_map(|(i, p)| {
            p.terms
                .iter()
                .map(move |(m, c)| (m.with_exponent(v, m.exponent(v) + i as u32), c.clone()))
        }))
    }

    /// Leading coefficient with respect to `v`.
    pub fn lc_in(&self, v: Var) -> MultiPoly {
        self.coeffs_in(v).pop().unwrap_or_default()
    }

    /// Evaluates with `value(v)` supplying each occurring variable.
    pub fn eval<T: crate::ring::Scalar>(&self, value: impl Fn(Var) -> T) -> T {
        let max = self.max_exponents();
        let powers = power_tables(&max, |v| value(v));
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_rational(c);
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = t * powers[v.index()][e].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Evaluates at a rational point given as `(var, value)` pairs.
    /// Unassigned variables evaluate to zero.
    pub fn eval_rational(&self, point: &[(Var, BigRational)]) -> BigRational {
        self.eval(|v| {
            point
                .iter()
                .find(|(w, _)| *w == v)
                .map(|(_, q)| q.clone())
                .unwrap_or_else(BigRational::zero)
        })
    }

    pub fn eval_f64(&self, point: &[(Var, f64)]) -> f64 {
        self.eval(|v| {
            point
                .iter()
                .find(|(w, _)| *w == v)
                .map(|(_, q)| *q)
                .unwrap_or(0.0)
        })
    }

    /// Substitutes polynomials for variables; unbound variables stay.
    pub fn substitute(&self, bindings: &BTreeMap<Var, MultiPoly>) -> MultiPoly {
        let max = self.max_exponents();
        let powers = power_tables(&max, |v| {
            bindings.get(&v).cloned().unwrap_or_else(|| MultiPoly::var(v))
        });
        let mut acc: HashMap<Monomial, BigRational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exponent(v) as usize;
                if e > 0 {
                    t = &t * &powers[v.index()][e];
                }
            }
            for (tm, tc) in t.terms {
                match acc.get_mut(&tm) {
                    Some(e) => *e += tc,
                    None => {
                        acc.insert(tm, tc);
                    }
                }
            }
        }
        MultiPoly::from_map(acc)
    }

    pub fn substitute_one(&self, v: Var, with: &MultiPoly) -> MultiPoly {
        let mut b = BTreeMap::new();
        b.insert(v, with.clone());
        self.substitute(&b)
    }

    fn max_exponents(&self) -> [u32; NUM_VARS] {
        let mut max = [0u32; NUM_VARS];
        for (m, _) in &self.terms {
            for (slot, e) in max.iter_mut().zip(m.exponents()) {
                *slot = (*slot).max(e);
            }
        }
        max
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<MultiPoly, PolyError> {
        if d.is_zero() {
            return Err(PolyError::Usage("division by the zero polynomial".into()));
        }
        if let Some(c) = d.constant_value() {
            return Ok(self.scale(&c.recip()));
        }
        let (dm, dc) = d.terms[0].clone();
        let dc_inv = dc.recip();
        let mut rem: BTreeMap<Monomial, BigRational> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        let mut quot = Vec::new();
        while let Some((&rm, _)) = rem.iter().next_back() {
            let rc = rem.remove(&rm).expect("present");
            let qm = rm.div(dm).ok_or(PolyError::InexactDivision)?;
            let qc = &rc * &dc_inv;
            for (m, c) in &d.terms[1..] {
                let key = m.mul(qm);
                let delta = c * &qc;
                match rem.get_mut(&key) {
                    Some(e) => {
                        *e -= delta;
                        if e.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -delta);
                    }
                }
            }
            quot.push((qm, qc));
        }
        // Quotient monomials are produced in descending order already.
        Ok(MultiPoly { terms: quot })
    }

    /// Divides by `d` if it divides exactly.
    pub fn try_div(&self, d: &MultiPoly) -> Option<MultiPoly> {
        self.div_exact(d).ok()
    }

    /// Least common multiple of coefficient denominators over gcd of numerators,
    /// signed so that the leading coefficient becomes positive.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        let mut content = BigRational::new(num, den);
        if self.terms[0].1.is_negative() {
            content = -content;
        }
        content
    }

    /// Integer-coefficient primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> MultiPoly {
        if self.is_zero() {
            return MultiPoly::zero();
        }
        self.scale(&self.content().recip())
    }

    /// Whether `self` and `other` agree up to a nonzero rational factor.
    pub fn proportional(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.primitive_part() == other.primitive_part()
    }

    /// Canonical text: primitive part printed with integer coefficients.
    pub fn canonical_string(&self) -> String {
        self.primitive_part().to_string()
    }

    /// Partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| (m.with_exponent(v, e - 1), c * BigRational::from_integer(e.into())))
        }))
    }

    /// Swaps variables according to `perm`, used for the cyclic `::` rule.
    pub fn rename(&self, perm: &[(Var, Var)]) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| {
            let old = m.exponents();
            let mut new = old;
            for (from, to) in perm {
                new[from.index()] = 0;
                new[to.index()] = 0;
            }
            for (from, to) in perm {
                new[to.index()] += old[from.index()];
            }
            (Monomial::from_exponents(&new), c.clone())
        }))
    }

    /// Whether every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }
}

fn power_tables<T: crate::ring::Scalar>(max: &[u32; NUM_VARS], value: impl Fn(Var) -> T) -> Vec<Vec<T>> {
    Var::ALL
        .iter()
        .map(|&v| {
            let e = max[v.index()] as usize;
            if e == 0 {
                return Vec::new();
            }
            let x = value(v);
            let mut tab = Vec::with_capacity(e + 1);
            tab.push(T::one());
            for i in 1..=e {
                let next = tab[i - 1].clone() * x.clone();
                tab.push(next);
            }
            tab
        })
        .collect()
}

fn add_terms(p: &MultiPoly, q: &MultiPoly, negate_q: bool) -> MultiPoly {
    let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
    let (mut i, mut j) = (0, 0);
    let qv = |c: &BigRational| if negate_q { -c.clone() } else { c.clone() };
    while i < p.terms.len() && j < q.terms.len() {
        let (pm, pc) = &p.terms[i];
        let (qm, qc) = &q.terms[j];
        match pm.cmp(qm) {
            std::cmp::Ordering::Greater => {
                out.push((*pm, pc.clone()));
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push((*qm, qv(qc)));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let s = if negate_q { pc - qc } else { pc + qc };
                if !s.is_zero() {
                    out.push((*pm, s));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(p.terms[i..].iter().cloned());
    out.extend(q.terms[j..].iter().map(|(m, c)| (*m, qv(c))));
    MultiPoly { terms: out }
}

fn mul_terms(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero();
    }
    if p.terms.len() == 1 {
        let (m, c) = &p.terms[0];
        return MultiPoly {
            terms: q.terms.iter().map(|(t, k)| (t.mul(*m), k * c)).collect(),
        };
    }
    if q.terms.len() == 1 {
        return mul_terms(q, p);
    }
    let mut acc: HashMap<Monomial, BigRational> =
        HashMap::with_capacity(p.terms.len() * q.terms.len() / 2 + 1);
    for (pm, pc) in &p.terms {
        for (qm, qc) in &q.terms {
            let m = pm.mul(*qm);
            let c = pc * qc;
            match acc.get_mut(&m) {
                Some(e) => *e += c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
    }
    MultiPoly::from_map(acc)
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        add_terms(self, rhs, false)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        add_terms(self, rhs, true)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        mul_terms(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for t in &mut self.terms {
            t.1 = -std::mem::take(&mut t.1);
        }
        self
    }
}

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        *self = &*self - rhs;
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl From<i64> for MultiPoly {
    fn from(n: i64) -> Self {
        MultiPoly::from_int(n)
    }
}

impl From<BigRational> for MultiPoly {
    fn from(c: BigRational) -> Self {
        MultiPoly::constant(c)
    }
}

impl crate::ring::Scalar for MultiPoly {
    fn zero() -> Self {
        MultiPoly::zero()
    }
    fn one() -> Self {
        MultiPoly::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_rational(q: &BigRational) -> Self {
        MultiPoly::constant(q.clone())
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.numer().sign() == Sign::Minus;
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write_rational(f, &abs)?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write_rational(f, &abs)?;
                write!(f, "*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, ratio};

    fn a() -> MultiPoly {
        MultiPoly::var(Var::A)
    }
    fn b() -> MultiPoly {
        MultiPoly::var(Var::B)
    }
    fn u() -> MultiPoly {
        MultiPoly::var(Var::U)
    }

    #[test]
    fn add_cancels() {
        let s = &(&a() + &b()) + &(&a() - &b());
        assert_eq!(s, a().scale(&rat(2)));
        assert!((&s - &s).is_zero());
    }

    #[test]
    fn expansion_of_product() {
        let p = &(&a() - &u()) * &(&b() - &u());
        assert_eq!(p.to_string(), "u^2 - b*u - a*u + a*b");
    }

    #[test]
    fn coeffs_roundtrip() {
        let p = &(&a() - &u()).pow(3) * &b();
        let cs = p.coeffs_in(Var::U);
        assert_eq!(cs.len(), 4);
        assert_eq!(cs[3], -b());
        assert_eq!(MultiPoly::from_coeffs_in(Var::U, &cs), p);
    }

    #[test]
    fn exact_division() {
        let f = &(&a() + &b()) * &(&a() - &u().scale(&ratio(1, 2)));
        assert_eq!(f.div_exact(&(&a() + &b())).unwrap(), &a() - &u().scale(&ratio(1, 2)));
        assert_eq!(f.div_exact(&(&a() + &u())), Err(PolyError::InexactDivision));
    }

    #[test]
    fn primitive_part_is_integral_and_positive() {
        let p = (&a().scale(&ratio(-2, 3)) + &b().scale(&ratio(4, 9))).primitive_part();
        assert_eq!(p.to_string(), "2*b - 3*a");
    }

    #[test]
    fn substitution_and_eval() {
        let p = &b() - &u().scale(&rat(2));
        let q = p.substitute_one(Var::U, &b().scale(&ratio(1, 2)));
        assert!(q.is_zero());
        let v = (&a() * &b()).eval_rational(&[(Var::A, rat(3)), (Var::B, ratio(1, 2))]);
        assert_eq!(v, ratio(3, 2));
    }

    #[test]
    fn rename_is_cyclic_shift() {
        let p = &a().pow(2) * &b();
        let q = p.rename(&[(Var::A, Var::B), (Var::B, Var::C), (Var::C, Var::A)]);
        assert_eq!(q, &b().pow(2) * &MultiPoly::var(Var::C));
    }
}
