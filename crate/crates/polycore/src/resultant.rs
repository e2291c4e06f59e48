
use crate::gcd::gcd_all;
use crate::matrix::{det_bareiss, PolyMatrix};
use crate::reduce::reduce_mod;
use crate::{MultiPoly, PolyError, Var};

/// Sylvester matrix of `p` and `q` with respect to `v`.
pub fn sylvester(p: &MultiPoly, q: &MultiPoly, v: Var) -> PolyMatrix {
    let pc = p.coeffs_in(v);
    let qc = q.coeffs_in(v);
    let m = pc.len().saturating_sub(1);
    let n = qc.len().saturating_sub(1);
    let size = m + n;
    let mut s = PolyMatrix::zeros(size, size);
    for i in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            s.set(i, i + k, c.clone());
        }
    }
    for j in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            s.set(n + j, j + k, c.clone());
        }
    }
    s
}

/// Resultant of `p` and `q` in `v` as the Bareiss determinant of the full
/// Sylvester matrix.
pub fn sylvester_resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    if p.is_zero() || q.is_zero() {
        return Ok(MultiPoly::zero());
    }
    det_bareiss(&sylvester(p, q, v))
}

/// Resultant with respect to `u`.
///
/// When one argument has a constant leading coefficient in `u` (the Yff
/// cubic does), the other is first reduced modulo it, which shrinks the
/// Sylvester matrix without changing the value.
pub fn resultant_u(p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
    resultant(p, q, Var::U)
}

/// [`resultant_u`] for an arbitrary variable.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    let m = p.degree_in(v);
    let n = q.degree_in(v);
    if m == 0 || p.is_zero() {
        return Err(PolyError::ZeroDegree(v));
    }
    if n == 0 || q.is_zero() {
        return Err(PolyError::ZeroDegree(v));
    }
    if q.lc_in(v).is_constant() && m >= n {
        return reduced_resultant(p, q, v);
    }
    if p.lc_in(v).is_constant() && n >= m {
        let r = reduced_resultant(q, p, v)?;
        return Ok(if (m * n) % 2 == 1 { -r } else { r });
    }
    sylvester_resultant(p, q, v)
}

// Res(p, q) = (-1)^{mn} lc(q)^{m-k} Res(q, r) with r = p mod q of degree k.
fn reduced_resultant(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    let m = p.degree_in(v);
    let n = q.degree_in(v);
    let r = reduce_mod(p, q, v)?;
    if r.is_zero() {
        return Ok(MultiPoly::zero());
    }
    let k = r.degree_in(v);
    let lc = q.lc_in(v).constant_value().expect("constant leading coefficient");
    let scale = num_traits::pow(lc, (m - k) as usize);
    let inner = sylvester_resultant(q, &r, v)?;
    let mut res = inner.scale(&scale);
    if (m * n) % 2 == 1 {
        res = -res;
    }
    Ok(res)
}

/// Matrix of multiplication by `p` on `R[v]/(q)` over the basis
/// `1, v, ..., v^{n-1}`; column `j` holds `p * v^j mod q`.
pub fn multiplication_matrix(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<PolyMatrix, PolyError> {
    let n = q.degree_in(v) as usize;
    if n == 0 {
        return Err(PolyError::ZeroDegree(v));
    }
    let mut mat = PolyMatrix::zeros(n, n);
    let mut col = reduce_mod(p, q, v)?;
    let vp = MultiPoly::var(v);
    for j in 0..n {
        for (i, c) in col.coeffs_in(v).into_iter().enumerate() {
            mat.set(i, j, c);
        }
        if j + 1 < n {
            col = reduce_mod(&(&col * &vp), q, v)?;
        }
    }
    Ok(mat)
}

/// Generator of the elimination ideal `(p, q) ∩ R`, where `R` is the ring
/// of the remaining variables and `q` has constant leading coefficient in
/// `v`.
///
/// An element `g` of `R` lies in the ideal exactly when `g` is a multiple of
/// `p` in the free module `R[v]/(q)`. With `M` the multiplication matrix,
/// that means `det M` divides `g` times every entry of the first column of
/// `adj M`, so the generator is `det M / gcd(det M, adj(M)[.][0])`.
/// The result is a divisor of the resultant that drops its repeated and
/// extraneous factors.
pub fn elimination_generator(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    if !q.lc_in(v).is_constant() {
        return Err(PolyError::Usage(format!(
            "elimination generator needs a constant leading coefficient in {v}"
        )));
    }
    let mat = multiplication_matrix(p, q, v)?;
    let det = det_bareiss(&mat)?;
    if det.is_zero() {
        return Ok(det);
    }
    let n = mat.rows();
    let mut parts = vec![det.clone()];
    for i in 0..n {
        // adj(M)[i][0] is the cofactor of entry (0, i).
        let minor = det_bareiss(&mat.minor(0, i))?;
        parts.push(minor);
    }
    let g = gcd_all(parts.iter());
    Ok(det.div_exact(&g)?.primitive_part())
}

/// `lc(q)^{deg p} * det(multiplication matrix)` equals `Res(q, p)`.
pub fn resultant_via_norm(p: &MultiPoly, q: &MultiPoly, v: Var) -> Result<MultiPoly, PolyError> {
    let lc = q
        .lc_in(v)
        .constant_value()
        .ok_or_else(|| PolyError::Usage("leading coefficient is not constant".into()))?;
    let det = det_bareiss(&multiplication_matrix(p, q, v)?)?;
    let m = p.degree_in(v) as usize;
    let n = q.degree_in(v) as usize;
    let mut out = det.scale(&num_traits::pow(lc, m));
    // Res(p, q) = (-1)^{mn} Res(q, p).
    if (m * n) % 2 == 1 {
        out = -out;
    }
    Ok(out)
}
