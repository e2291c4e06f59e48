use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use yff_core::centers::catalog::center;
use yff_core::centers::shape::{make_shape, sample_shape, Family, TriangleShape};
use yff_core::centers::yff::{solve_u_sides, u_radical};
use yff_core::discover::{render_figure, run_scan, statement_figure, ScanConfig};
use yff_core::exact::{parse_rational, qr};
use yff_core::geom::Sides;
use yff_core::real::rational_to_f64;
use yff_core::verify::{certify, resolve_statement, residual_on, CertifyOptions, Statement, Verdict};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] yff_core::CoreError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Parser)]
#[command(name = "yff", version, about = "Yff points: root solving, centers, scanning and certification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Solve the Yff cubic for a triangle with rational sides.
    SolveU {
        /// Side lengths `a,b,c`; rationals like `3/2` are accepted.
        #[arg(long)]
        sides: String,
        #[arg(long, default_value_t = 30)]
        digits: usize,
    },
    /// Barycentric coordinates of catalog center X(n).
    Center {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        sides: String,
    },
    /// Evaluate a statement numerically on random members of a family.
    Check {
        #[arg(long)]
        family: Option<String>,
        /// Statement text or the name of a built-in statement.
        #[arg(long)]
        statement: String,
        #[arg(long, default_value_t = 5)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Run a scan described by a JSON configuration.
    Discover {
        #[arg(long)]
        config: PathBuf,
        /// Report path; overrides the configuration.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify a statement on a family by resultant elimination.
    Verify {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        statement: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 300)]
        timeout: u64,
    },
    /// Draw a statement on one member of a family as SVG.
    Figure {
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        statement: String,
        #[arg(long)]
        out: PathBuf,
        /// Family parameters, comma separated; sampled when absent.
        #[arg(long)]
        params: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_list(s: &str) -> Result<Vec<BigRational>, CliError> {
    s.split(',')
        .map(|x| parse_rational(x.trim()).map_err(CliError::from))
        .collect()
}

fn parse_sides(s: &str) -> Result<[BigRational; 3], CliError> {
    let v = parse_list(s)?;
    <[BigRational; 3]>::try_from(v).map_err(|_| CliError::Usage("--sides needs three values a,b,c".into()))
}

fn statement_and_family(text: &str, family: Option<&str>) -> Result<(Statement, Family), CliError> {
    let (st, default) = resolve_statement(text)?;
    let fam = match family {
        Some(f) => f.parse::<Family>()?,
        None => default.ok_or_else(|| CliError::Usage("--family is required for this statement".into()))?,
    };
    Ok((st, fam))
}

fn write(path: &PathBuf, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Write {
        path: path.display().to_string(),
        source,
    })
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.cmd {
        Cmd::SolveU { sides, digits } => {
            let [a, b, c] = parse_sides(&sides)?;
            let prec = qr(1, 10).pow(i32::try_from(digits + 2).unwrap_or(i32::MAX));
            let root = solve_u_sides(&a, &b, &c, &prec)?;
            match root.exact() {
                Some(u) => println!("u = {u} (exact)"),
                None => println!("u = {}", root.to_decimal(digits)),
            }
            let s = Sides::new(rational_to_f64(&a), rational_to_f64(&b), rational_to_f64(&c));
            match u_radical(&s) {
                Ok(r) => println!("radical form: {r:.17}"),
                Err(e) => println!("radical form: {e}"),
            }
        }
        Cmd::Center { n, sides } => {
            let [a, b, c] = parse_sides(&sides)?;
            TriangleShape::from_sides(a.clone(), b.clone(), c.clone())?;
            let p = center(n, &Sides::new(a, b, c))?;
            let sum = &p.0[0] + &p.0[1] + &p.0[2];
            println!("X({n}) = ({} : {} : {})", p.0[0], p.0[1], p.0[2]);
            if sum != BigRational::from_integer(0.into()) {
                let norm: Vec<String> = p.0.iter().map(|x| (x / &sum).to_string()).collect();
                println!("normalized: ({})", norm.join(", "));
            } else {
                println!("point at infinity");
            }
        }
        Cmd::Check {
            family,
            statement,
            samples,
            seed,
            tol,
        } => {
            let (st, fam) = statement_and_family(&statement, family.as_deref())?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut ok = true;
            println!("{st} on {fam}");
            for _ in 0..samples.max(1) {
                let shape = sample_shape(fam, &mut rng);
                let r = residual_on(&st, &shape)?;
                let pass = r < tol;
                ok &= pass;
                println!("  {:<40} residual {r:.3e} {}", shape.label(), if pass { "ok" } else { "FAIL" });
            }
            println!("{}", if ok { "holds numerically" } else { "does not hold" });
            return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
        Cmd::Discover { config, out } => {
            let mut cfg = ScanConfig::load(&config)?;
            if out.is_some() {
                cfg.report = out;
            }
            let report = run_scan(&cfg)?;
            for f in &report.families {
                println!("{}: {} stable findings, {} classes", f.family, f.stable.len(), f.classes.len());
                for c in &f.classes {
                    println!("  {c}");
                }
            }
            if let Some(p) = &cfg.report {
                println!("report written to {}", p.display());
            }
        }
        Cmd::Verify {
            family,
            statement,
            out,
            timeout,
        } => {
            let (st, fam) = statement_and_family(&statement, family.as_deref())?;
            let opts = CertifyOptions {
                timeout: Duration::from_secs(timeout),
                ..CertifyOptions::default()
            };
            let cert = certify(&st, fam, &opts)?;
            match &out {
                Some(p) => {
                    cert.write(p)?;
                    println!("{}: {} ({:.2}s)", st, cert.verdict, cert.wall_time.as_secs_f64());
                    println!("certificate written to {}", p.display());
                }
                None => print!("{}", cert.to_text()),
            }
            return Ok(match cert.verdict {
                Verdict::Certified => ExitCode::SUCCESS,
                Verdict::Refuted => ExitCode::from(1),
                Verdict::Inconclusive => ExitCode::from(2),
            });
        }
        Cmd::Figure {
            family,
            statement,
            out,
            params,
            seed,
        } => {
            let (st, fam) = statement_and_family(&statement, family.as_deref())?;
            let shape = match params {
                Some(p) => make_shape(fam, &parse_list(&p)?)?,
                None => sample_shape(fam, &mut ChaCha8Rng::seed_from_u64(seed)),
            };
            let (fig, hl) = statement_figure(&shape, &st);
            write(&out, &render_figure(&fig, &hl))?;
            println!("{} on {} written to {}", st, shape.label(), out.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
