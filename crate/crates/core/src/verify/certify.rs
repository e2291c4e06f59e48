//! Exact certification: eliminate `u`, reduce on the family, decide.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;
use std::sync::mpsc;
use std::time::{Duration, Instant};

use polycore::{elimination_generator, reduce_mod, resultant_u, MultiPoly, Var};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::centers::shape::{sample_shape, Family, TriangleShape};
use crate::centers::yff::{u_hp, yff_cubic};
use crate::error::{CoreError, Result};
use crate::points::EvalContext;
use crate::real::Real;
use crate::verify::statement::{statement_residual, statement_to_polynomial, Statement};

/// Residual above which a sample counts as a counterexample.
pub const REFUTE_THRESHOLD: f64 = 1e-4;
/// Residual below which a high-precision sample counts as a confirmation.
pub const CONFIRM_THRESHOLD: f64 = 1e-30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Certified => "certified",
            Verdict::Refuted => "refuted",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// How `u` was eliminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Elimination {
    /// The incidence polynomial does not involve `u`.
    None,
    Resultant,
    /// Generator of the elimination ideal, used after a nonzero resultant.
    Generator,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    pub triangle: String,
    pub sides: [f64; 3],
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SampleCheck {
    pub triangle: String,
    pub residual: Option<f64>,
}

#[derive(Clone, Debug)]
pub struct CertifyOptions {
    pub timeout: Duration,
    pub samples: usize,
    pub seed: Option<u64>,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions {
            timeout: Duration::from_secs(300),
            samples: 5,
            seed: None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub statement: Statement,
    pub family: Family,
    pub parametrization: String,
    pub incidence: Option<MultiPoly>,
    pub resultant: Option<MultiPoly>,
    pub reduced: Option<MultiPoly>,
    pub elimination: Elimination,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub samples: Vec<SampleCheck>,
    pub note: String,
    /// Not part of the certificate text, which stays byte-stable.
    pub wall_time: Duration,
}

fn sha(p: &Option<MultiPoly>) -> String {
    match p {
        Some(p) => hex::encode(Sha256::digest(p.canonical_string().as_bytes())),
        None => "-".to_string(),
    }
}

impl Certificate {
    pub fn reduced_is_zero(&self) -> bool {
        self.reduced.as_ref().is_some_and(MultiPoly::is_zero)
    }

    pub fn hashes(&self) -> [String; 3] {
        [sha(&self.incidence), sha(&self.resultant), sha(&self.reduced)]
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "yff certificate v1 (yff-core {})", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(s, "statement: {}", self.statement);
        let _ = writeln!(s, "family: {}", self.family);
        let _ = writeln!(s, "parametrization: {}", self.parametrization);
        let _ = writeln!(s, "elimination: {:?}", self.elimination);
        for (name, p) in [
            ("incidence", &self.incidence),
            ("resultant", &self.resultant),
            ("reduced", &self.reduced),
        ] {
            let _ = writeln!(s, "[{name}]");
            match p {
                Some(p) => {
                    let _ = writeln!(s, "{}", p.canonical_string());
                }
                None => {
                    let _ = writeln!(s, "(not computed)");
                }
            }
        }
        let _ = writeln!(s, "verdict: {}", self.verdict);
        if !self.note.is_empty() {
            let _ = writeln!(s, "note: {}", self.note);
        }
        match &self.witness {
            Some(w) => {
                let _ = writeln!(s, "witness: {} residual {:.3e}", w.triangle, w.residual);
            }
            None => {
                let _ = writeln!(s, "witness: none");
            }
        }
        for c in &self.samples {
            match c.residual {
                Some(r) => {
                    let _ = writeln!(s, "sample: {} residual {:.3e}", c.triangle, r);
                }
                None => {
                    let _ = writeln!(s, "sample: {} degenerate", c.triangle);
                }
            }
        }
        let [h1, h2, h3] = self.hashes();
        let _ = writeln!(s, "sha256 incidence: {h1}");
        let _ = writeln!(s, "sha256 resultant: {h2}");
        let _ = writeln!(s, "sha256 reduced: {h3}");
        s
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_text()).map_err(|source| CoreError::Io {
            path: path.display().to_string(),
            source,
        })
    }
}

pub fn describe_parametrization(family: Family) -> String {
    let par = family.parametrization();
    let mut s = format!(
        "a = {}; b = {}; c = {}",
        par.sides[0], par.sides[1], par.sides[2]
    );
    if let Some(mp) = &par.minpoly {
        let _ = write!(s, "; {} = 0", mp.poly.canonical_string());
    }
    s
}

/// Substitutes the family's sides for `a, b, c` and reduces modulo the
/// minimal polynomial when the family is algebraic.
pub fn reduce_on_family(r: &MultiPoly, family: Family) -> Result<MultiPoly> {
    let par = family.parametrization();
    let map: BTreeMap<Var, MultiPoly> = [Var::A, Var::B, Var::C].into_iter().zip(par.sides.iter().cloned()).collect();
    let mut p = r.substitute(&map);
    if let Some(mp) = &par.minpoly {
        p = reduce_mod(&p, &mp.poly, Var::X)?;
    }
    Ok(p.primitive_part())
}

fn eliminate(p: &MultiPoly) -> Result<(MultiPoly, Elimination)> {
    if p.contains_var(Var::U) {
        Ok((resultant_u(p, &yff_cubic())?.primitive_part(), Elimination::Resultant))
    } else {
        Ok((p.clone(), Elimination::None))
    }
}

/// Resultant against the Yff cubic, then family reduction.
pub fn eliminate_and_reduce(p: &MultiPoly, family: Family) -> Result<MultiPoly> {
    reduce_on_family(&eliminate(p)?.0, family)
}

/// Float residual of a statement on one triangle, at high precision.
pub fn residual_on(st: &Statement, shape: &TriangleShape) -> Result<f64> {
    let ctx = EvalContext::new(shape.sides_hp().clone(), u_hp(shape));
    Ok(statement_residual(st, &ctx)?.to_f64())
}

fn derive_seed(st: &Statement, family: Family) -> u64 {
    let h = Sha256::digest(format!("{st}|{family}").as_bytes());
    u64::from_le_bytes(h[..8].try_into().expect("digest is 32 bytes"))
}

fn sample_checks(st: &Statement, family: Family, n: usize, seed: u64) -> Vec<(SampleCheck, [f64; 3])> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<(SampleCheck, [f64; 3])> = Vec::new();
    // distinct parameter sets, with a bound for families with few members
    for _ in 0..20 * n {
        if out.len() == n {
            break;
        }
        let shape = sample_shape(family, &mut rng);
        let label = shape.label();
        if out.iter().any(|(c, _)| c.triangle == label) {
            continue;
        }
        let s = shape.sides_f64();
        out.push((
            SampleCheck {
                triangle: label,
                residual: residual_on(st, &shape).ok(),
            },
            [s.a, s.b, s.c],
        ));
    }
    out
}

enum Stage {
    Incidence(MultiPoly),
    Resultant(MultiPoly, Elimination),
    Reduced(MultiPoly),
    Generator(MultiPoly),
    Failed(String),
}

fn exact_pipeline(st: Statement, family: Family, tx: mpsc::Sender<Stage>, want_generator: bool) {
    let run = || -> Result<()> {
        let p = statement_to_polynomial(&st)?;
        let _ = tx.send(Stage::Incidence(p.clone()));
        let (r, how) = eliminate(&p)?;
        let _ = tx.send(Stage::Resultant(r.clone(), how));
        let red = reduce_on_family(&r, family)?;
        let zero = red.is_zero();
        let _ = tx.send(Stage::Reduced(red));
        if !zero && want_generator && how == Elimination::Resultant {
            let g = elimination_generator(&p, &yff_cubic(), Var::U)?;
            let _ = tx.send(Stage::Generator(reduce_on_family(&g, family)?));
        }
        Ok(())
    };
    if let Err(e) = run() {
        let _ = tx.send(Stage::Failed(e.to_string()));
    }
}

/// Certifies `st` on `family`.
///
/// The verdict is `certified` when the reduced resultant is identically
/// zero and no sample contradicts it, `refuted` when some family member
/// has a residual above [`REFUTE_THRESHOLD`], and `inconclusive`
/// otherwise (including timeouts).
pub fn certify(st: &Statement, family: Family, opts: &CertifyOptions) -> Result<Certificate> {
    let started = Instant::now();
    for n in st.centers() {
        crate::centers::catalog::Catalog::builtin().get(n)?;
    }
    let seed = opts.seed.unwrap_or_else(|| derive_seed(st, family));
    let checks = sample_checks(st, family, opts.samples, seed);
    let counterexample = checks
        .iter()
        .filter_map(|(c, s)| c.residual.filter(|r| *r > REFUTE_THRESHOLD).map(|r| (c, s, r)))
        .max_by(|x, y| x.2.total_cmp(&y.2))
        .map(|(c, s, r)| Witness {
            triangle: c.triangle.clone(),
            sides: *s,
            residual: r,
        });
    let all_confirm = checks.iter().all(|(c, _)| c.residual.is_some_and(|r| r < CONFIRM_THRESHOLD));

    let (tx, rx) = mpsc::channel();
    let job_st = st.clone();
    let want_generator = counterexample.is_none();
    std::thread::spawn(move || exact_pipeline(job_st, family, tx, want_generator));

    let mut cert = Certificate {
        statement: st.clone(),
        family,
        parametrization: describe_parametrization(family),
        incidence: None,
        resultant: None,
        reduced: None,
        elimination: Elimination::None,
        verdict: Verdict::Inconclusive,
        witness: None,
        samples: checks.into_iter().map(|(c, _)| c).collect(),
        note: String::new(),
        wall_time: Duration::ZERO,
    };
    let deadline = started + opts.timeout;
    let mut generator = None;
    let mut failure = None;
    let mut timed_out = false;
    loop {
        let left = deadline.saturating_duration_since(Instant::now());
        match rx.recv_timeout(left) {
            Ok(Stage::Incidence(p)) => cert.incidence = Some(p),
            Ok(Stage::Resultant(r, how)) => {
                cert.resultant = Some(r);
                cert.elimination = how;
            }
            Ok(Stage::Reduced(r)) => cert.reduced = Some(r),
            Ok(Stage::Generator(g)) => generator = Some(g),
            Ok(Stage::Failed(e)) => failure = Some(e),
            Err(mpsc::RecvTimeoutError::Timeout) => {
                timed_out = true;
                break;
            }
            Err(mpsc::RecvTimeoutError::Disconnected) => break,
        }
    }

    if let Some(w) = counterexample {
        cert.verdict = Verdict::Refuted;
        if cert.reduced_is_zero() {
            cert.note = "reduced resultant vanishes but a family member violates the statement".into();
        }
        cert.witness = Some(w);
    } else if timed_out {
        cert.note = format!("timed out after {:?}", opts.timeout);
    } else if let Some(e) = failure {
        cert.note = format!("exact pipeline failed: {e}");
    } else if cert.reduced_is_zero() {
        cert.verdict = Verdict::Certified;
        if !all_confirm {
            cert.note = "some samples were degenerate or only loosely confirmed".into();
        }
    } else if let Some(g) = generator {
        if g.is_zero() {
            cert.verdict = Verdict::Certified;
            cert.elimination = Elimination::Generator;
            cert.note = "resultant nonzero on the family; elimination generator vanishes".into();
            cert.reduced = Some(g);
        } else {
            cert.note = "reduced polynomial is nonzero but no sample violates the statement".into();
        }
    }
    cert.wall_time = started.elapsed();
    Ok(cert)
}
