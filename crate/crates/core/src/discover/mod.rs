//! Scan harness over shape families and center subsets, with JSON reports
//! and SVG figures.

pub mod config;
pub mod run;
pub mod svg;

pub use config::{FamilyReport, FamilyScan, FigureReport, SampleReport, ScanConfig, ScanReport, StableFinding, REPORT_VERSION};
pub use run::{global_key, run_scan};
pub use svg::{highlights_for, render_figure, statement_figure, Highlight};
