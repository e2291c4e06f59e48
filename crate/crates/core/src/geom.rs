//! Projective barycentric geometry.
//!
//! Incidence operations only need ring arithmetic, so they run unchanged on
//! floats, exact rationals and symbolic polynomials in `a, b, c, u`. Metric
//! operations (distances, angles, embeddings) need a [`Real`] backend.

use num_rational::BigRational;
use polycore::Scalar;

use crate::error::GeomError;
use crate::real::Real;

/// Homogeneous point `(x : y : z)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaryPoint<T>(pub [T; 3]);

/// Line `p x + q y + r z = 0` stored as `(p : q : r)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BaryLine<T>(pub [T; 3]);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
pub enum Side {
    BC,
    CA,
    AB,
}

impl Side {
    /// Index of the vertex opposite this side.
    pub fn opposite(self) -> usize {
        match self {
            Side::BC => 0,
            Side::CA => 1,
            Side::AB => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::BC => "BC",
            Side::CA => "CA",
            Side::AB => "AB",
        }
    }

    pub fn parse(s: &str) -> Option<Side> {
        match s {
            "BC" | "CB" => Some(Side::BC),
            "CA" | "AC" => Some(Side::CA),
            "AB" | "BA" => Some(Side::AB),
            _ => None,
        }
    }
}

/// Side lengths `a = BC`, `b = CA`, `c = AB`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sides<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

/// Conway symbols `S_A, S_B, S_C`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConwaySymbols<T> {
    pub sa: T,
    pub sb: T,
    pub sc: T,
}

impl<T: Scalar> Sides<T> {
    pub fn new(a: T, b: T, c: T) -> Self {
        Sides { a, b, c }
    }

    pub fn squares(&self) -> [T; 3] {
        [self.a.square(), self.b.square(), self.c.square()]
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn conway(&self) -> ConwaySymbols<T> {
        let [a2, b2, c2] = self.squares();
        let half = T::from_rational(&BigRational::new(1.into(), 2.into()));
        ConwaySymbols {
            sa: (b2.clone() + c2.clone() - a2.clone()) * half.clone(),
            sb: (c2.clone() + a2.clone() - b2.clone()) * half.clone(),
            sc: (a2 + b2 - c2) * half,
        }
    }

    /// Relabels so that side `k` plays the role of `a` (cyclic shift).
    fn rotated(&self, k: usize) -> [T; 3] {
        let s = self.as_array();
        [s[k % 3].clone(), s[(k + 1) % 3].clone(), s[(k + 2) % 3].clone()]
    }
}

impl<T: Scalar> ConwaySymbols<T> {
    pub fn as_array(&self) -> [T; 3] {
        [self.sa.clone(), self.sb.clone(), self.sc.clone()]
    }
}

pub fn cross<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

pub fn dot<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> T {
    u[0].clone() * v[0].clone() + u[1].clone() * v[1].clone() + u[2].clone() * v[2].clone()
}

pub fn det3<T: Scalar>(r1: &[T; 3], r2: &[T; 3], r3: &[T; 3]) -> T {
    dot(r1, &cross(r2, r3))
}

fn all_zero<T: Scalar>(v: &[T; 3]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn coord_sum<T: Scalar>(v: &[T; 3]) -> T {
    v[0].clone() + v[1].clone() + v[2].clone()
}

fn scale3<T: Scalar>(v: &[T; 3], k: &T) -> [T; 3] {
    [v[0].clone() * k.clone(), v[1].clone() * k.clone(), v[2].clone() * k.clone()]
}

fn sub3<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    [
        u[0].clone() - v[0].clone(),
        u[1].clone() - v[1].clone(),
        u[2].clone() - v[2].clone(),
    ]
}

fn add3<T: Scalar>(u: &[T; 3], v: &[T; 3]) -> [T; 3] {
    [
        u[0].clone() + v[0].clone(),
        u[1].clone() + v[1].clone(),
        u[2].clone() + v[2].clone(),
    ]
}

impl<T: Scalar> BaryPoint<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        BaryPoint([x, y, z])
    }

    pub fn vertex(i: usize) -> Self {
        let mut c = [T::zero(), T::zero(), T::zero()];
        c[i] = T::one();
        BaryPoint(c)
    }

    pub fn coord_sum(&self) -> T {
        coord_sum(&self.0)
    }

    /// Exact homogeneous equality.
    pub fn proportional_exact(&self, other: &Self) -> bool {
        all_zero(&cross(&self.0, &other.0))
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> BaryPoint<U> {
        BaryPoint([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }
}

impl<T: Scalar> BaryLine<T> {
    pub fn new(p: T, q: T, r: T) -> Self {
        BaryLine([p, q, r])
    }

    pub fn contains(&self, p: &BaryPoint<T>) -> T {
        dot(&self.0, &p.0)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> BaryLine<U> {
        BaryLine([f(&self.0[0]), f(&self.0[1]), f(&self.0[2])])
    }
}

/// Line through two points.
pub fn join<T: Scalar>(p: &BaryPoint<T>, q: &BaryPoint<T>) -> Result<BaryLine<T>, GeomError> {
    let l = cross(&p.0, &q.0);
    if all_zero(&l) {
        return Err(GeomError::Degenerate("join of coincident points".into()));
    }
    Ok(BaryLine(l))
}

/// Intersection of two lines.
pub fn meet<T: Scalar>(l: &BaryLine<T>, m: &BaryLine<T>) -> Result<BaryPoint<T>, GeomError> {
    let p = cross(&l.0, &m.0);
    if all_zero(&p) {
        return Err(GeomError::Degenerate("meet of coincident lines".into()));
    }
    Ok(BaryPoint(p))
}

/// Determinant whose vanishing means the three lines are concurrent.
pub fn concurrent3<T: Scalar>(l1: &BaryLine<T>, l2: &BaryLine<T>, l3: &BaryLine<T>) -> T {
    det3(&l1.0, &l2.0, &l3.0)
}

/// Determinant whose vanishing means the three points are collinear.
pub fn collinear3<T: Scalar>(p: &BaryPoint<T>, q: &BaryPoint<T>, r: &BaryPoint<T>) -> T {
    det3(&p.0, &q.0, &r.0)
}

/// Point at infinity of a line: `(q - r : r - p : p - q)`.
pub fn infinite_point<T: Scalar>(l: &BaryLine<T>) -> Result<BaryPoint<T>, GeomError> {
    let [p, q, r] = &l.0;
    let f = [q.clone() - r.clone(), r.clone() - p.clone(), p.clone() - q.clone()];
    if all_zero(&f) {
        return Err(GeomError::Degenerate("the line at infinity has no single infinite point".into()));
    }
    Ok(BaryPoint(f))
}

/// Cross product of the infinite points; all zero iff the lines are parallel.
pub fn parallel<T: Scalar>(l1: &BaryLine<T>, l2: &BaryLine<T>) -> Result<[T; 3], GeomError> {
    let f = infinite_point(l1)?;
    let g = infinite_point(l2)?;
    Ok(cross(&f.0, &g.0))
}

/// Bilinear form `S_A f1 g1 + S_B f2 g2 + S_C f3 g3` on the infinite points
/// of the two lines; zero iff the lines are perpendicular.
pub fn perpendicular<T: Scalar>(
    l1: &BaryLine<T>,
    l2: &BaryLine<T>,
    sides: &Sides<T>,
) -> Result<T, GeomError> {
    let f = infinite_point(l1)?;
    let g = infinite_point(l2)?;
    Ok(direction_form(&f.0, &g.0, sides))
}

/// The Conway bilinear form on displacement vectors (coordinate sum zero).
/// On a normalized displacement `d`, `direction_form(d, d)` is the squared
/// length.
pub fn direction_form<T: Scalar>(f: &[T; 3], g: &[T; 3], sides: &Sides<T>) -> T {
    let s = sides.conway();
    s.sa * f[0].clone() * g[0].clone() + s.sb * f[1].clone() * g[1].clone() + s.sc * f[2].clone() * g[2].clone()
}

/// Foot of the perpendicular from `p` to a side line.
///
/// For side `BC` this is `(0 : S_C x + a^2 y : S_B x + a^2 z)`; the other
/// sides follow by cyclic relabeling.
pub fn foot_of_perpendicular<T: Scalar>(p: &BaryPoint<T>, side: Side, sides: &Sides<T>) -> BaryPoint<T> {
    let k = side.opposite();
    let [s0, s1, s2] = sides.rotated(k);
    let rot = Sides::new(s0, s1, s2);
    let cs = rot.conway();
    let a2 = rot.a.square();
    let x = p.0[k].clone();
    let y = p.0[(k + 1) % 3].clone();
    let z = p.0[(k + 2) % 3].clone();
    let mut out = [T::zero(), T::zero(), T::zero()];
    out[(k + 1) % 3] = cs.sc * x.clone() + a2.clone() * y;
    out[(k + 2) % 3] = cs.sb * x + a2 * z;
    BaryPoint(out)
}

/// Reflection of `p` in a side line:
/// `(a^2 x : (c^2 - b^2) x - a^2 (x + y) : (b^2 - c^2) x - a^2 (x + z))` for `BC`.
pub fn reflect_about_side<T: Scalar>(p: &BaryPoint<T>, side: Side, sides: &Sides<T>) -> BaryPoint<T> {
    let k = side.opposite();
    let [a, b, c] = sides.rotated(k);
    let (a2, b2, c2) = (a.square(), b.square(), c.square());
    let x = p.0[k].clone();
    let y = p.0[(k + 1) % 3].clone();
    let z = p.0[(k + 2) % 3].clone();
    let mut out = [T::zero(), T::zero(), T::zero()];
    out[k] = a2.clone() * x.clone();
    out[(k + 1) % 3] = (c2.clone() - b2.clone()) * x.clone() - a2.clone() * (x.clone() + y);
    out[(k + 2) % 3] = (b2 - c2) * x.clone() - a2 * (x + z);
    BaryPoint(out)
}

/// Midpoint as a homogeneous point: `P * sum(Q) + Q * sum(P)`.
pub fn midpoint<T: Scalar>(p: &BaryPoint<T>, q: &BaryPoint<T>) -> Result<BaryPoint<T>, GeomError> {
    let sp = p.coord_sum();
    let sq = q.coord_sum();
    if sp.is_zero() || sq.is_zero() {
        return Err(GeomError::Domain("midpoint of an infinite point".into()));
    }
    Ok(BaryPoint(add3(&scale3(&p.0, &sq), &scale3(&q.0, &sp))))
}

/// Barycentric conic `A x^2 + B y^2 + C z^2 + D yz + E zx + F xy = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Conic<T> {
    pub coeffs: [T; 6],
}

fn conic_row<T: Scalar>(p: &BaryPoint<T>) -> [T; 6] {
    let [x, y, z] = &p.0;
    [
        x.square(),
        y.square(),
        z.square(),
        y.clone() * z.clone(),
        z.clone() * x.clone(),
        x.clone() * y.clone(),
    ]
}

fn det_cofactor<T: Scalar>(m: &[Vec<T>]) -> T {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = T::zero();
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let t = m[0][j].clone() * det_cofactor(&minor);
        acc = if j % 2 == 0 { acc + t } else { acc - t };
    }
    acc
}

impl<T: Scalar> Conic<T> {
    pub fn eval(&self, p: &BaryPoint<T>) -> T {
        let r = conic_row(p);
        r.iter()
            .zip(self.coeffs.iter())
            .fold(T::zero(), |acc, (x, k)| acc + x.clone() * k.clone())
    }

    /// Symmetric matrix (times 2, to stay in the ring).
    pub fn matrix2(&self) -> [[T; 3]; 3] {
        let [a, b, c, d, e, f] = self.coeffs.clone();
        let two = T::from_i64(2);
        [
            [two.clone() * a, f.clone(), e.clone()],
            [f, two.clone() * b, d.clone()],
            [e, d, two * c],
        ]
    }
}

/// Conic through five points, coefficients as signed 5x5 minors.
pub fn conic_through5<T: Scalar>(pts: &[BaryPoint<T>; 5]) -> Result<Conic<T>, GeomError> {
    let rows: Vec<[T; 6]> = pts.iter().map(conic_row).collect();
    let mut coeffs: [T; 6] = std::array::from_fn(|_| T::zero());
    for (j, slot) in coeffs.iter_mut().enumerate() {
        let minor: Vec<Vec<T>> = rows
            .iter()
            .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let d = det_cofactor(&minor);
        *slot = if j % 2 == 0 { d } else { -d };
    }
    if coeffs.iter().all(Scalar::is_zero) {
        return Err(GeomError::Degenerate("five points do not determine a unique conic".into()));
    }
    Ok(Conic { coeffs })
}

/// Center: pole of the line at infinity, `adj(M) (1, 1, 1)`.
pub fn conic_center<T: Scalar>(c: &Conic<T>) -> Result<BaryPoint<T>, GeomError> {
    let m = c.matrix2();
    let cof = |i: usize, j: usize| -> T {
        let r: Vec<usize> = (0..3).filter(|&x| x != i).collect();
        let s: Vec<usize> = (0..3).filter(|&x| x != j).collect();
        let d = m[r[0]][s[0]].clone() * m[r[1]][s[1]].clone() - m[r[0]][s[1]].clone() * m[r[1]][s[0]].clone();
        if (i + j) % 2 == 0 {
            d
        } else {
            -d
        }
    };
    // adj(M)[i][j] = cofactor(j, i); M is symmetric so the transpose is moot.
    let p: [T; 3] = std::array::from_fn(|i| cof(0, i) + cof(1, i) + cof(2, i));
    if all_zero(&p) {
        return Err(GeomError::Degenerate("conic has no finite center".into()));
    }
    Ok(BaryPoint(p))
}

// ---------------------------------------------------------------------------
// Metric operations.

/// Relative tolerance below which a coordinate sum counts as zero.
const INFINITE_TOL: f64 = 1e-13;

fn max_abs<T: Real>(v: &[T; 3]) -> T {
    let mut m = v[0].abs();
    for x in &v[1..] {
        let ax = x.abs();
        if ax > m {
            m = ax;
        }
    }
    m
}

/// Normalized coordinates (sum one).
pub fn normalize<T: Real>(p: &BaryPoint<T>) -> Result<[T; 3], GeomError> {
    let s = p.coord_sum();
    let m = max_abs(&p.0);
    if m.is_zero() || s.abs() <= m * T::from_f64(INFINITE_TOL) {
        return Err(GeomError::Domain("point at infinity".into()));
    }
    Ok([p.0[0].clone() / s.clone(), p.0[1].clone() / s.clone(), p.0[2].clone() / s])
}

/// Checks strict triangle inequalities.
pub fn validate_sides<T: Real>(s: &Sides<T>) -> Result<(), GeomError> {
    let zero = T::zero();
    let ok = s.a > zero
        && s.b > zero
        && s.c > zero
        && s.a.clone() < s.b.clone() + s.c.clone()
        && s.b.clone() < s.c.clone() + s.a.clone()
        && s.c.clone() < s.a.clone() + s.b.clone();
    if ok {
        Ok(())
    } else {
        Err(GeomError::Domain("side lengths violate the triangle inequality".into()))
    }
}

/// Area by Heron's formula.
pub fn area<T: Real>(s: &Sides<T>) -> Result<T, GeomError> {
    validate_sides(s)?;
    let (a, b, c) = (s.a.clone(), s.b.clone(), s.c.clone());
    let p = (a.clone() + b.clone() + c.clone())
        * (b.clone() + c.clone() - a.clone())
        * (c.clone() + a.clone() - b.clone())
        * (a + b - c);
    Ok(p.sqrt() / T::from_i64(4))
}

/// Planar point.
#[derive(Clone, Debug, PartialEq)]
pub struct Planar<T> {
    pub x: T,
    pub y: T,
}

/// Vertices in the canonical embedding: `B = (0,0)`, `C = (a,0)`, `A` above.
pub fn vertices<T: Real>(s: &Sides<T>) -> Result<[Planar<T>; 3], GeomError> {
    validate_sides(s)?;
    let [a2, b2, c2] = s.squares();
    let xa = (a2 + c2.clone() - b2) / (T::from_i64(2) * s.a.clone());
    let ya = (c2 - xa.square()).sqrt();
    Ok([
        Planar { x: xa, y: ya },
        Planar { x: T::zero(), y: T::zero() },
        Planar { x: s.a.clone(), y: T::zero() },
    ])
}

/// Cartesian image of a finite point.
pub fn embed_cartesian<T: Real>(p: &BaryPoint<T>, s: &Sides<T>) -> Result<Planar<T>, GeomError> {
    let v = vertices(s)?;
    let w = normalize(p)?;
    Ok(Planar {
        x: w[0].clone() * v[0].x.clone() + w[1].clone() * v[1].x.clone() + w[2].clone() * v[2].x.clone(),
        y: w[0].clone() * v[0].y.clone() + w[1].clone() * v[1].y.clone() + w[2].clone() * v[2].y.clone(),
    })
}

/// Cartesian direction of a displacement or infinite point (coordinate sum zero).
pub fn embed_direction<T: Real>(f: &[T; 3], s: &Sides<T>) -> Result<Planar<T>, GeomError> {
    let v = vertices(s)?;
    Ok(Planar {
        x: f[0].clone() * v[0].x.clone() + f[1].clone() * v[1].x.clone() + f[2].clone() * v[2].x.clone(),
        y: f[0].clone() * v[0].y.clone() + f[1].clone() * v[1].y.clone() + f[2].clone() * v[2].y.clone(),
    })
}

/// Distance between finite points from the displacement formula
/// `|PQ|^2 = -(a^2 yz + b^2 zx + c^2 xy)` on normalized `Q - P`.
pub fn distance<T: Real>(p: &BaryPoint<T>, q: &BaryPoint<T>, s: &Sides<T>) -> Result<T, GeomError> {
    let d = sub3(&normalize(q)?, &normalize(p)?);
    let [a2, b2, c2] = s.squares();
    let sq = -(a2 * d[1].clone() * d[2].clone() + b2 * d[2].clone() * d[0].clone() + c2 * d[0].clone() * d[1].clone());
    let zero = T::zero();
    Ok(if sq > zero { sq.sqrt() } else { zero })
}

/// Angle at `at` between rays to `p` and `q`, in `[0, pi]`.
pub fn angle<T: Real>(at: &Planar<T>, p: &Planar<T>, q: &Planar<T>) -> Result<T, GeomError> {
    let (ux, uy) = (p.x.clone() - at.x.clone(), p.y.clone() - at.y.clone());
    let (vx, vy) = (q.x.clone() - at.x.clone(), q.y.clone() - at.y.clone());
    let zero = T::zero();
    if (ux == zero && uy == zero) || (vx == zero && vy == zero) {
        return Err(GeomError::Domain("angle with a zero-length ray".into()));
    }
    let cr = ux.clone() * vy.clone() - uy.clone() * vx.clone();
    let dt = ux * vx + uy * vy;
    Ok(cr.abs().atan2(&dt))
}

/// Angle at a point in barycentric coordinates.
pub fn angle_at<T: Real>(
    at: &BaryPoint<T>,
    p: &BaryPoint<T>,
    q: &BaryPoint<T>,
    s: &Sides<T>,
) -> Result<T, GeomError> {
    angle(&embed_cartesian(at, s)?, &embed_cartesian(p, s)?, &embed_cartesian(q, s)?)
}

/// Angle between two lines, in `[0, pi/2]`.
pub fn angle_between_lines<T: Real>(l1: &BaryLine<T>, l2: &BaryLine<T>, s: &Sides<T>) -> Result<T, GeomError> {
    let f = embed_direction(&infinite_point(l1)?.0, s)?;
    let g = embed_direction(&infinite_point(l2)?.0, s)?;
    let cr = (f.x.clone() * g.y.clone() - f.y.clone() * g.x.clone()).abs();
    let dt = (f.x * g.x + f.y * g.y).abs();
    Ok(cr.atan2(&dt))
}

/// Signed distances to the sides `BC, CA, AB`.
pub fn normalized_trilinears<T: Real>(p: &BaryPoint<T>, s: &Sides<T>) -> Result<[T; 3], GeomError> {
    let w = normalize(p)?;
    let k2 = T::from_i64(2) * area(s)?;
    Ok([
        k2.clone() * w[0].clone() / s.a.clone(),
        k2.clone() * w[1].clone() / s.b.clone(),
        k2 * w[2].clone() / s.c.clone(),
    ])
}

/// Trilinears `(x/a : y/b : z/c)` scaled so that they sum to one.
pub fn unit_sum_trilinears<T: Real>(p: &BaryPoint<T>, s: &Sides<T>) -> Result<[T; 3], GeomError> {
    let t = [
        p.0[0].clone() / s.a.clone(),
        p.0[1].clone() / s.b.clone(),
        p.0[2].clone() / s.c.clone(),
    ];
    let sum = coord_sum(&t);
    if sum.is_zero() {
        return Err(GeomError::Domain("trilinears sum to zero".into()));
    }
    Ok([t[0].clone() / sum.clone(), t[1].clone() / sum.clone(), t[2].clone() / sum])
}

/// Signed areas of `PBC, PCA, PAB` and whether `P` is strictly inside.
pub fn subtriangle_areas<T: Real>(p: &BaryPoint<T>, s: &Sides<T>) -> Result<([T; 3], bool), GeomError> {
    let w = normalize(p)?;
    let k = area(s)?;
    let zero = T::zero();
    let inside = w.iter().all(|x| *x > zero);
    Ok(([k.clone() * w[0].clone(), k.clone() * w[1].clone(), k * w[2].clone()], inside))
}

// ---------------------------------------------------------------------------
// Normalized float residuals.

fn norm<T: Real>(v: &[T; 3]) -> T {
    dot(v, v).sqrt()
}

/// `|P x Q| / (|P| |Q|)`: zero iff the triples are proportional.
pub fn proportionality_residual<T: Real>(p: &[T; 3], q: &[T; 3]) -> T {
    let d = norm(p) * norm(q);
    if d.is_zero() {
        return T::one();
    }
    norm(&cross(p, q)) / d
}

/// Determinant over the product of row norms.
pub fn det_residual<T: Real>(r1: &[T; 3], r2: &[T; 3], r3: &[T; 3]) -> T {
    let d = norm(r1) * norm(r2) * norm(r3);
    if d.is_zero() {
        return T::one();
    }
    det3(r1, r2, r3).abs() / d
}

/// `|cos|` of the angle between the lines via the Conway form.
pub fn perpendicular_residual<T: Real>(l1: &BaryLine<T>, l2: &BaryLine<T>, s: &Sides<T>) -> Result<T, GeomError> {
    let f = infinite_point(l1)?.0;
    let g = infinite_point(l2)?.0;
    let ff = direction_form(&f, &f, s);
    let gg = direction_form(&g, &g, s);
    let d = (ff * gg).sqrt();
    if d.is_zero() {
        return Err(GeomError::Degenerate("zero-length direction".into()));
    }
    Ok(direction_form(&f, &g, s).abs() / d)
}

/// `|sin|` of the angle between the lines.
pub fn parallel_residual<T: Real>(l1: &BaryLine<T>, l2: &BaryLine<T>, s: &Sides<T>) -> Result<T, GeomError> {
    let f = embed_direction(&infinite_point(l1)?.0, s)?;
    let g = embed_direction(&infinite_point(l2)?.0, s)?;
    let cr = f.x.clone() * g.y.clone() - f.y.clone() * g.x.clone();
    let d = (f.x.square() + f.y.square()).sqrt() * (g.x.square() + g.y.square()).sqrt();
    if d.is_zero() {
        return Err(GeomError::Degenerate("zero-length direction".into()));
    }
    Ok(cr.abs() / d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: f64, b: f64, c: f64) -> Sides<f64> {
        Sides::new(a, b, c)
    }

    fn close(x: f64, y: f64, tol: f64) -> bool {
        (x - y).abs() <= tol
    }

    #[test]
    fn join_and_meet_basics() {
        let a = BaryPoint::<f64>::vertex(0);
        let b = BaryPoint::<f64>::vertex(1);
        assert_eq!(join(&a, &b).unwrap(), BaryLine::new(0.0, 0.0, 1.0));
        let ab = BaryLine::new(0.0, 0.0, 1.0);
        let ca = BaryLine::new(0.0, 1.0, 0.0);
        let m = meet(&ab, &ca).unwrap();
        assert!(proportionality_residual(&m.0, &[1.0, 0.0, 0.0]) < 1e-15);
        assert!(join(&a, &a).is_err());
    }

    #[test]
    fn infinite_point_examples() {
        let l = BaryLine::new(1.0, 1.0, -2.0);
        let f = infinite_point(&l).unwrap();
        assert!(proportionality_residual(&f.0, &[1.0, -1.0, 0.0]) < 1e-15);
        assert!(infinite_point(&BaryLine::new(2.0, 2.0, 2.0)).is_err());
    }

    #[test]
    fn altitude_foot_and_reflection() {
        let sd = s(6.0, 9.0, 13.0);
        let a = BaryPoint::<f64>::vertex(0);
        let f = foot_of_perpendicular(&a, Side::BC, &sd);
        let cs = sd.conway();
        assert!(proportionality_residual(&f.0, &[0.0, cs.sc, cs.sb]) < 1e-15);
        let r = reflect_about_side(&a, Side::BC, &sd);
        let pa = embed_cartesian(&a, &sd).unwrap();
        let pr = embed_cartesian(&r, &sd).unwrap();
        assert!(close(pa.x, pr.x, 1e-12) && close(pa.y, -pr.y, 1e-12));
    }

    #[test]
    fn canonical_embedding() {
        let sd = s(3.0, 5.0, 4.0);
        let c = embed_cartesian(&BaryPoint::vertex(2), &sd).unwrap();
        assert_eq!((c.x, c.y), (3.0, 0.0));
        let o = embed_cartesian(&BaryPoint::new(1.0, 0.0, 1.0), &sd).unwrap();
        let v = vertices(&sd).unwrap();
        assert!(close(o.x, (v[0].x + v[2].x) / 2.0, 1e-15));
        assert!(embed_cartesian(&BaryPoint::new(1.0, -1.0, 0.0), &sd).is_err());
        assert!(vertices(&s(4.0, 6.0, 12.0)).is_err());
    }

    #[test]
    fn distances_and_trilinears() {
        let sd = s(6.0, 9.0, 13.0);
        let b = BaryPoint::<f64>::vertex(1);
        let c = BaryPoint::<f64>::vertex(2);
        assert!(close(distance(&b, &c, &sd).unwrap(), 6.0, 1e-12));
        let i = BaryPoint::new(6.0, 9.0, 13.0);
        let t = normalized_trilinears(&i, &sd).unwrap();
        let k = area(&sd).unwrap();
        let r = 2.0 * k / 28.0;
        assert!(t.iter().all(|x| close(*x, r, 1e-12)));
        assert!(close(6.0 * t[0] + 9.0 * t[1] + 13.0 * t[2], 2.0 * k, 1e-10));
    }

    #[test]
    fn right_angle_at_b() {
        let sd = s(3.0_f64.sqrt(), 2.0, 1.0);
        let v = vertices(&sd).unwrap();
        let ang = angle(&v[1], &v[0], &v[2]).unwrap();
        assert!(close(ang, std::f64::consts::FRAC_PI_2, 1e-12));
    }

    #[test]
    fn circumconic_and_center() {
        let sd = s(6.0, 9.0, 13.0);
        let x3 = BaryPoint::new(
            36.0 * (81.0 + 169.0 - 36.0),
            81.0 * (169.0 + 36.0 - 81.0),
            169.0 * (36.0 + 81.0 - 169.0),
        );
        // Circumcircle points are (a^2/p : b^2/q : c^2/r) with p + q + r = 0.
        let on = |p: f64, q: f64| {
            let r = -p - q;
            BaryPoint::new(36.0 / p, 81.0 / q, 169.0 / r)
        };
        let pts = [BaryPoint::vertex(0), BaryPoint::vertex(1), BaryPoint::vertex(2), on(1.0, 2.0), on(3.0, -1.0)];
        let conic = conic_through5(&pts).unwrap();
        let k = conic.coeffs;
        assert!(k[0].abs() < 1e-9 * k[3].abs());
        assert!(proportionality_residual(&[k[3], k[4], k[5]], &[36.0, 81.0, 169.0]) < 1e-12);
        let ctr = conic_center(&conic).unwrap();
        assert!(proportionality_residual(&ctr.0, &x3.0) < 1e-12);
        let d: Vec<f64> = (0..3).map(|i| distance(&ctr, &BaryPoint::vertex(i), &sd).unwrap()).collect();
        assert!(close(d[0], d[1], 1e-10) && close(d[1], d[2], 1e-10));
    }
}
