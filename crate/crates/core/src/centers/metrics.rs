//! Triangle metrics, cevian-triangle areas and the derived points Ym, Yc.

use crate::centers::shape::{Family, TriangleShape};
use crate::centers::yff::{u_f64, yff_point, yff_points, YffPoint};
use crate::error::{CoreError, GeomError, Result};
use crate::geom::{
    area, conic_center, conic_through5, distance, midpoint, normalize, validate_sides, BaryPoint, Sides,
};
use crate::real::Real;

#[derive(Clone, Debug, PartialEq)]
pub struct TriangleMetrics<T> {
    /// Area.
    pub k: T,
    /// Circumradius.
    pub r: T,
    /// Semiperimeter.
    pub s: T,
    pub sa: T,
    pub sb: T,
    pub sc: T,
}

pub fn triangle_metrics<T: Real>(sides: &Sides<T>) -> Result<TriangleMetrics<T>, GeomError> {
    validate_sides(sides)?;
    let k = area(sides)?;
    if k.is_zero() {
        return Err(GeomError::Domain("degenerate triangle".into()));
    }
    let (a, b, c) = (sides.a.clone(), sides.b.clone(), sides.c.clone());
    let r = a.clone() * b.clone() * c.clone() / (T::from_i64(4) * k.clone());
    let s = (a + b + c) / T::from_i64(2);
    let cs = sides.conway();
    Ok(TriangleMetrics { k, r, s, sa: cs.sa, sb: cs.sb, sc: cs.sc })
}

/// Lengths `BD, DC, CE, EA, AF, FB` cut by the cevians through a point
/// `(x : y : z)` inside the triangle.
pub fn cevian_segments<T: Real>(p: &BaryPoint<T>, s: &Sides<T>) -> [T; 6] {
    let [x, y, z] = p.0.clone();
    [
        s.a.clone() * z.clone() / (y.clone() + z.clone()),
        s.a.clone() * y.clone() / (y.clone() + z.clone()),
        s.b.clone() * x.clone() / (x.clone() + z.clone()),
        s.b.clone() * z.clone() / (x.clone() + z.clone()),
        s.c.clone() * y.clone() / (x.clone() + y.clone()),
        s.c.clone() * x.clone() / (x + y),
    ]
}

/// Area of a cevian triangle from its segments:
/// `(1 - c1 b2/(bc) - a1 c2/(ca) - b1 a2/(ab)) K`.
pub fn cevian_area_from_segments<T: Real>(seg: &[T; 6], s: &Sides<T>, k: &T) -> T {
    let [a1, a2, b1, b2, c1, c2] = seg.clone();
    let (a, b, c) = (s.a.clone(), s.b.clone(), s.c.clone());
    let f = T::one()
        - c1 * b2 / (b.clone() * c.clone())
        - a1 * c2 / (c.clone() * a.clone())
        - b1 * a2 / (a * b);
    f * k.clone()
}

/// Area of the triangle of the cevian feet measured in the plane.
pub fn cevian_area_direct<T: Real>(p: &BaryPoint<T>, s: &Sides<T>) -> Result<T, GeomError> {
    let [x, y, z] = p.0.clone();
    let zero = T::zero();
    let feet = [
        BaryPoint::new(zero.clone(), y.clone(), z.clone()),
        BaryPoint::new(x.clone(), zero.clone(), z),
        BaryPoint::new(x, y, zero),
    ];
    let pts: Vec<_> = feet
        .iter()
        .map(|f| crate::geom::embed_cartesian(f, s))
        .collect::<Result<_, _>>()?;
    let cr = (pts[1].x.clone() - pts[0].x.clone()) * (pts[2].y.clone() - pts[0].y.clone())
        - (pts[2].x.clone() - pts[0].x.clone()) * (pts[1].y.clone() - pts[0].y.clone());
    Ok(cr.abs() / T::from_i64(2))
}

/// Area of the cevian triangle of a Yff point, three ways.
#[derive(Clone, Debug, PartialEq)]
pub struct CevianArea<T> {
    pub segment_formula: T,
    pub direct: T,
    /// `u^3 / (2R)`.
    pub closed_form: T,
}

pub fn yff_cevian_area_with<T: Real>(sides: &Sides<T>, u: &T, which: YffPoint) -> Result<CevianArea<T>> {
    let m = triangle_metrics(sides)?;
    // The Yff cevians cut BD = CE = AF = u (Y1) or DC = EA = FB = u (Y2).
    let (a, b, c) = (sides.a.clone(), sides.b.clone(), sides.c.clone());
    let seg = match which {
        YffPoint::Y1 => [u.clone(), a.clone() - u.clone(), u.clone(), b.clone() - u.clone(), u.clone(), c - u.clone()],
        YffPoint::Y2 => [a - u.clone(), u.clone(), b - u.clone(), u.clone(), c - u.clone(), u.clone()],
    };
    let segment_formula = cevian_area_from_segments(&seg, sides, &m.k);
    let direct = cevian_area_direct(&yff_point(which, sides, u), sides)?;
    let closed_form = u.pow_u32(3) / (T::from_i64(2) * m.r);
    Ok(CevianArea { segment_formula, direct, closed_form })
}

pub fn yff_cevian_area(shape: &TriangleShape, which: YffPoint) -> Result<CevianArea<f64>> {
    yff_cevian_area_with(shape.sides_f64(), &u_f64(shape), which)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpecialPoints<T> {
    /// Midpoint of `Y1 Y2`.
    pub ym: BaryPoint<T>,
    /// Center of the conic through `A, B, C, Y1, Y2`.
    pub yc: BaryPoint<T>,
}

pub fn special_points_with<T: Real>(sides: &Sides<T>, u: &T) -> Result<SpecialPoints<T>> {
    let (y1, y2) = yff_points(sides, u);
    let n1 = normalize(&y1)?;
    let n2 = normalize(&y2)?;
    let gap = crate::geom::proportionality_residual(&n1, &n2);
    if gap < T::from_f64(1e-12) {
        return Err(GeomError::Degenerate("Y1 and Y2 coincide (equilateral triangle)".into()).into());
    }
    let ym = midpoint(&BaryPoint(n1), &BaryPoint(n2))?;
    let conic = conic_through5(&[
        BaryPoint::vertex(0),
        BaryPoint::vertex(1),
        BaryPoint::vertex(2),
        y1,
        y2,
    ])?;
    let yc = conic_center(&conic)?;
    Ok(SpecialPoints { ym, yc })
}

pub fn special_points(shape: &TriangleShape) -> Result<SpecialPoints<f64>> {
    special_points_with(shape.sides_f64(), &u_f64(shape))
}

/// Ratio `BY : YE` in which a Yff point divides the median `BE` of a
/// harmonic triangle (`b` the harmonic mean of `a` and `c`).
pub fn median_split_ratio_with<T: Real>(sides: &Sides<T>, u: &T, which: YffPoint) -> Result<T> {
    let (a, b, c) = (sides.a.clone(), sides.b.clone(), sides.c.clone());
    let defect = (b.clone() * (a.clone() + c.clone()) - T::from_i64(2) * a.clone() * c.clone()).abs();
    let scale = (a.clone() + b + c.clone()).square();
    if defect > scale * T::from_f64(1e-12) {
        return Err(CoreError::Precondition("median split ratio needs a harmonic triangle (2/b = 1/a + 1/c)".into()));
    }
    let y = yff_point(which, sides, u);
    let bv = BaryPoint::vertex(1);
    let e = BaryPoint::new(T::one(), T::zero(), T::one());
    let by = distance(&bv, &y, sides)?;
    let ye = distance(&y, &e, sides)?;
    Ok(by / ye)
}

pub fn median_split_ratio(shape: &TriangleShape, which: YffPoint) -> Result<f64> {
    if shape.family != Family::Harmonic && shape.family != Family::ScaleneRandom {
        return Err(CoreError::Precondition(format!(
            "median split ratio needs a harmonic triangle, got family {}",
            shape.family
        )));
    }
    median_split_ratio_with(shape.sides_f64(), &u_f64(shape), which)
}
