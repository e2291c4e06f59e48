//! Scan configuration and report types.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::centers::shape::Family;
use crate::detect::{Finding, FindingKind};
use crate::error::{CoreError, Result};
use crate::real::HP_BITS;

/// Report schema identifier.
pub const REPORT_VERSION: &str = "yff-scan/1";

fn default_samples() -> usize {
    3
}
fn default_range() -> [u32; 2] {
    [1, 30]
}
fn default_tolerance() -> f64 {
    1e-10
}
fn default_kinds() -> Vec<FindingKind> {
    FindingKind::ALL.to_vec()
}
fn default_max_centers() -> usize {
    2
}
fn default_precision() -> usize {
    HP_BITS
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyScan {
    pub family: Family,
    /// Number of random samples when `params` is empty.
    #[serde(default = "default_samples")]
    pub samples: usize,
    /// Explicit parameter grid (rationals such as `"3/2"`), one entry per
    /// sample; overrides random sampling.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub params: Vec<Vec<String>>,
    /// Add the reflections of the Yff points in BC.
    #[serde(default)]
    pub reflections: bool,
}

impl FamilyScan {
    pub fn new(family: Family) -> Self {
        FamilyScan {
            family,
            samples: default_samples(),
            params: Vec::new(),
            reflections: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub families: Vec<FamilyScan>,
    /// Inclusive range of catalog indices.
    #[serde(default = "default_range")]
    pub centers: [u32; 2],
    /// Largest number of centers added to one figure.
    #[serde(default = "default_max_centers")]
    pub max_centers: usize,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default = "default_kinds")]
    pub kinds: Vec<FindingKind>,
    #[serde(default)]
    pub seed: u64,
    /// Bits of precision used for re-verification (fixed by the build).
    #[serde(default = "default_precision")]
    pub precision_bits: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<PathBuf>,
    /// Directory for SVG figures of the stable findings.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub figures: Option<PathBuf>,
    /// Include wall-clock timing in the report (breaks byte-identity).
    #[serde(default)]
    pub record_timing: bool,
}

impl ScanConfig {
    pub fn new(families: Vec<FamilyScan>) -> Self {
        ScanConfig {
            families,
            centers: default_range(),
            max_centers: default_max_centers(),
            tolerance: default_tolerance(),
            kinds: default_kinds(),
            seed: 0,
            precision_bits: default_precision(),
            report: None,
            figures: None,
            record_timing: false,
        }
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CoreError::Io {
            path: path.display().to_string(),
            source,
        })?;
        let cfg: ScanConfig =
            serde_json::from_str(&text).map_err(|e| CoreError::Config(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(CoreError::Config(m));
        if self.families.is_empty() {
            return bad("no families to scan".into());
        }
        if self.centers[0] == 0 || self.centers[0] > self.centers[1] {
            return bad(format!("empty center range {:?}", self.centers));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return bad(format!("tolerance must be positive, got {}", self.tolerance));
        }
        if self.kinds.is_empty() {
            return bad("no detector kinds enabled".into());
        }
        if self.precision_bits != HP_BITS {
            return bad(format!("precision_bits must be {HP_BITS}"));
        }
        for f in &self.families {
            if f.params.is_empty() && f.samples < 3 {
                return bad(format!("{}: at least 3 samples are required", f.family));
            }
            if f.params.iter().any(|p| p.len() != f.family.param_names().len()) {
                return bad(format!("{}: expected parameters {:?}", f.family, f.family.param_names()));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FigureReport {
    pub centers: Vec<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub aliases: Vec<(String, String)>,
    pub findings: Vec<Finding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleReport {
    pub id: usize,
    pub params: Vec<String>,
    pub sides: [f64; 3],
    pub u: f64,
    /// Centers that could not be placed (at infinity or undefined).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
    pub figures_scanned: usize,
    /// Figures with at least one finding or an error.
    pub figures: Vec<FigureReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StableFinding {
    pub key: String,
    pub kind: FindingKind,
    /// Family-level class after deduplication across figures.
    pub class: String,
    /// Center subsets whose figures show the finding in every sample.
    pub figures: Vec<Vec<u32>>,
    pub max_residual: f64,
    pub max_verified_residual: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FamilyReport {
    pub family: Family,
    pub samples: Vec<SampleReport>,
    pub stable: Vec<StableFinding>,
    /// Distinct classes of the stable findings, in order of appearance.
    pub classes: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub version: String,
    pub config: ScanConfig,
    pub stability_rule: String,
    pub families: Vec<FamilyReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_seconds: Option<f64>,
}

impl ScanReport {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn family(&self, f: Family) -> Option<&FamilyReport> {
        self.families.iter().find(|r| r.family == f)
    }
}
