//! The scan harness: sample each family, scan every small center subset,
//! keep the findings present in all samples, and classify them.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::centers::shape::{make_shape, sample_params, Family, TriangleShape};
use crate::detect::scan::line_background;
use crate::detect::{
    base_points, center_points, finite_catalog_centers, reflected_points, scan_with, AngleRelation, Deduper, Finding,
    FindingKind, PointPool, ScanOptions,
};
use crate::discover::config::{
    FamilyReport, FamilyScan, FigureReport, SampleReport, ScanConfig, ScanReport, StableFinding, REPORT_VERSION,
};
use crate::discover::svg::{highlights_for, render_figure};
use crate::error::{CoreError, Result};
use crate::exact::parse_rational;

const STABILITY_RULE: &str = "a finding is stable when the same figure reports it in every sample of its family";

/// Seed of a family's sample stream.
fn family_seed(seed: u64, family: Family) -> u64 {
    let digest = Sha256::digest(format!("{seed}|{}", family.tag()).as_bytes());
    u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"))
}

fn subsets(centers: &[u32], max: usize) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for s in &frontier {
            let start = s.last().map_or(0, |&l| centers.iter().position(|&c| c == l).unwrap_or(0) + 1);
            for &c in &centers[start..] {
                let mut t: Vec<u32> = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

fn sample_shapes(fs: &FamilyScan, seed: u64) -> Result<Vec<TriangleShape>> {
    if !fs.params.is_empty() {
        return fs
            .params
            .iter()
            .map(|p| {
                let ps = p.iter().map(|x| parse_rational(x)).collect::<Result<Vec<_>>>()?;
                make_shape(fs.family, &ps)
            })
            .collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(family_seed(seed, fs.family));
    (0..fs.samples)
        .map(|_| make_shape(fs.family, &sample_params(fs.family, &mut rng)))
        .collect()
}

struct FigureScan {
    centers: Vec<u32>,
    aliases: Vec<(String, String)>,
    findings: Vec<Finding>,
    background: Vec<AngleRelation>,
    error: Option<String>,
}

/// A figure is scanned only when every center is a distinct point of the
/// pool; otherwise a smaller subset already covers it.
fn usable(pool: &PointPool, centers: &[u32]) -> bool {
    centers.iter().all(|n| {
        let l = format!("X{n}");
        pool.all.resolve(&l).is_some_and(|i| pool.all.label(i) == l)
    })
}

fn scan_figure(pool: &PointPool, centers: &[u32], reflections: bool, opts: &ScanOptions) -> FigureScan {
    let run = || {
        let fig = pool.figure(centers, reflections);
        let mut o = opts.clone();
        o.require = centers.iter().map(|n| format!("X{n}")).collect();
        (fig.aliases.clone(), scan_with(&fig, &o))
    };
    match catch_unwind(AssertUnwindSafe(run)) {
        Ok((aliases, r)) => FigureScan {
            centers: centers.to_vec(),
            aliases,
            findings: r.findings,
            background: r.background,
            error: None,
        },
        Err(e) => FigureScan {
            centers: centers.to_vec(),
            aliases: Vec::new(),
            findings: Vec::new(),
            background: Vec::new(),
            error: Some(
                e.downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "detector failure".into()),
            ),
        },
    }
}

/// Key of a finding with every line replaced by the maximal line of the
/// pool, so that the same incidence seen in different figures coincides.
pub fn global_key(pool: &PointPool, f: &Finding) -> String {
    let as_line = |a: &Vec<String>| -> Vec<String> {
        pool.global_line(&a[0], &a[1])
            .map(|l| pool.all.line_labels(l))
            .unwrap_or_else(|| a.clone())
    };
    match f.kind {
        FindingKind::Concurrent | FindingKind::Parallel | FindingKind::Perpendicular | FindingKind::Collinear => {
            Finding::new(f.kind, f.actors.iter().map(as_line).collect(), f.constant).key()
        }
        _ => f.key(),
    }
}

struct SampleRun {
    pool: PointPool,
    figures: Vec<FigureScan>,
}

fn run_sample(shape: &TriangleShape, fs: &FamilyScan, centers: &[u32], cfg: &ScanConfig) -> SampleRun {
    let mut entries = base_points();
    entries.extend(center_points(centers));
    if fs.reflections {
        entries.extend(reflected_points());
    }
    let pool = PointPool::new(shape, &entries);
    let opts = ScanOptions {
        tol: cfg.tolerance,
        kinds: cfg.kinds.clone(),
        require: Vec::new(),
        require_yff: true,
    };
    let subs: Vec<Vec<u32>> = subsets(centers, cfg.max_centers)
        .into_iter()
        .filter(|s| usable(&pool, s))
        .collect();
    let figures = subs
        .par_iter()
        .map(|s| scan_figure(&pool, s, fs.reflections, &opts))
        .collect();
    SampleRun { pool, figures }
}

fn classify(runs: &[SampleRun], tol: f64) -> (Vec<StableFinding>, Vec<String>, Vec<(Vec<u32>, Finding)>) {
    let n = runs.len();
    let mut seen: BTreeMap<(Vec<u32>, String), (usize, f64, f64)> = BTreeMap::new();
    for run in runs {
        for fig in &run.figures {
            for f in &fig.findings {
                let e = seen.entry((fig.centers.clone(), f.key())).or_insert((0, 0.0, 0.0));
                e.0 += 1;
                e.1 = e.1.max(f.residual);
                e.2 = e.2.max(f.verified_residual);
            }
        }
    }
    let first = &runs[0];
    let mut stable: Vec<(Vec<u32>, Finding)> = Vec::new();
    for fig in &first.figures {
        for f in &fig.findings {
            if seen.get(&(fig.centers.clone(), f.key())).is_some_and(|e| e.0 == n) {
                stable.push((fig.centers.clone(), f.clone()));
            }
        }
    }
    stable.sort_by(|a, b| (a.1.kind, &a.0, a.1.key()).cmp(&(b.1.kind, &b.0, b.1.key())));

    let mut known: Vec<AngleRelation> = Vec::new();
    let mut known_text = BTreeSet::new();
    for r in first
        .figures
        .iter()
        .flat_map(|f| f.background.iter())
        .chain(line_background(&first.pool.all, tol).iter())
    {
        if known_text.insert(r.to_string()) {
            known.push(r.clone());
        }
    }
    let mut dd = Deduper::new(&known);
    let mut by_global: BTreeMap<String, String> = BTreeMap::new();
    let mut out: Vec<StableFinding> = Vec::new();
    let mut classes: Vec<String> = Vec::new();
    for (centers, f) in &stable {
        let gk = global_key(&first.pool, f);
        let class = match (by_global.get(&gk), dd.implied(f)) {
            (Some(c), _) => c.clone(),
            (None, Some(c)) => c,
            (None, None) => {
                dd.add_generator(f);
                f.key()
            }
        };
        by_global.entry(gk).or_insert_with(|| class.clone());
        if !classes.contains(&class) {
            classes.push(class.clone());
        }
        let key = f.key();
        let e = seen[&(centers.clone(), key.clone())];
        match out.iter_mut().find(|s| s.key == key) {
            Some(s) => s.figures.push(centers.clone()),
            None => out.push(StableFinding {
                key,
                kind: f.kind,
                class,
                figures: vec![centers.clone()],
                max_residual: e.1,
                max_verified_residual: e.2,
            }),
        }
    }
    (out, classes, stable)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|source| CoreError::Io {
            path: dir.display().to_string(),
            source,
        })?;
    }
    std::fs::write(path, text).map_err(|source| CoreError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Runs the scan described by `cfg`. Identical configurations produce
/// byte-identical reports unless timing is requested.
pub fn run_scan(cfg: &ScanConfig) -> Result<ScanReport> {
    cfg.validate()?;
    let start = Instant::now();
    let centers: Vec<u32> = finite_catalog_centers(cfg.centers[1])
        .into_iter()
        .filter(|&c| c >= cfg.centers[0])
        .collect();
    let mut families = Vec::new();
    for fs in &cfg.families {
        let shapes = sample_shapes(fs, cfg.seed)?;
        let runs: Vec<SampleRun> = shapes.iter().map(|s| run_sample(s, fs, &centers, cfg)).collect();
        let (stable, classes, reps) = classify(&runs, cfg.tolerance);
        if let Some(dir) = &cfg.figures {
            let mut drawn = BTreeSet::new();
            for (subset, f) in &reps {
                let class = &stable.iter().find(|s| s.key == f.key()).expect("stable finding").class;
                if !drawn.insert(class.clone()) {
                    continue;
                }
                let fig = runs[0].pool.figure(subset, fs.reflections);
                let svg = render_figure(&fig, &highlights_for(f));
                write_file(&dir.join(format!("{}-{}.svg", fs.family.tag(), drawn.len())), &svg)?;
            }
        }
        let samples = runs
            .iter()
            .zip(&shapes)
            .enumerate()
            .map(|(id, (run, shape))| {
                let s = shape.sides_f64();
                SampleReport {
                    id,
                    params: shape.params.iter().map(|p| p.to_string()).collect(),
                    sides: [s.a, s.b, s.c],
                    u: run.pool.u,
                    skipped: run.pool.skipped.iter().map(|(l, why)| format!("{l}: {why}")).collect(),
                    figures_scanned: run.figures.len(),
                    figures: run
                        .figures
                        .iter()
                        .filter(|f| !f.findings.is_empty() || f.error.is_some())
                        .map(|f| FigureReport {
                            centers: f.centers.clone(),
                            aliases: f.aliases.clone(),
                            findings: f.findings.clone(),
                            error: f.error.clone(),
                        })
                        .collect(),
                }
            })
            .collect();
        families.push(FamilyReport {
            family: fs.family,
            samples,
            stable,
            classes,
        });
    }
    let report = ScanReport {
        version: REPORT_VERSION.to_string(),
        config: cfg.clone(),
        stability_rule: STABILITY_RULE.to_string(),
        families,
        timing_seconds: cfg.record_timing.then(|| start.elapsed().as_secs_f64()),
    };
    if let Some(path) = &cfg.report {
        write_file(path, &report.to_json()?)?;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_up_to_two() {
        let s = subsets(&[1, 2, 3], 2);
        assert_eq!(s.len(), 1 + 3 + 3);
        assert_eq!(s[4], vec![1, 2]);
    }

    #[test]
    fn family_seeds_differ() {
        assert_ne!(family_seed(0, Family::Ap), family_seed(0, Family::RightAtB));
        assert_eq!(family_seed(7, Family::Ap), family_seed(7, Family::Ap));
    }

    #[test]
    fn small_scan_is_deterministic() {
        let mut cfg = ScanConfig::new(vec![FamilyScan::new(Family::Ap)]);
        cfg.centers = [1, 3];
        let a = run_scan(&cfg).unwrap().to_json().unwrap();
        let b = run_scan(&cfg).unwrap().to_json().unwrap();
        assert_eq!(a, b);
        assert!(a.contains("parallel(A X1, Y1 Y2)"));
    }
}
