//! Shape families, the center catalog, the Yff parameter and derived points.

pub mod catalog;
pub mod metrics;
pub mod shape;
pub mod yff;

pub use catalog::{center, Catalog, CenterFormula};
pub use metrics::{
    median_split_ratio, special_points, triangle_metrics, yff_cevian_area, CevianArea, SpecialPoints,
    TriangleMetrics,
};
pub use shape::{make_shape, sample_params, sample_shape, AlgebraicReal, ExactSides, Family, Parametrization, TriangleShape};
pub use yff::{
    solve_u, u_f64, u_hp, u_radical, yff_cubic, yff_points, yff_points_symbolic, yff_points_symmetric, URadicalIntermediates,
    URoot, YffPoint,
};
