//! Numeric property detection over figures and deduplication of findings.

pub mod figure;
pub mod finding;
pub mod relation;
pub mod scan;

pub use figure::{base_points, center_points, finite_catalog_centers, reflected_points, Figure, PointPool};
pub use finding::{AngleConstant, Finding, FindingKind};
pub use relation::{AngleRelation, RelationSpace};
pub use scan::{dedupe, measure_f64, measure_hp, scan_properties, scan_with, Deduper, ScanOptions, ScanResult, TRIVIAL};
