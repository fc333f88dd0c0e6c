use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use dialgebra::catalog::generate;
use dialgebra::cohomology::{h2, multiplier};
use dialgebra::extensions::{
    certify_universal, compose, extension_algebra, find_covering, universal_central_extension,
    CentralExtension,
};
use dialgebra::format::{parse_algebra_in, parse_extension_in, write_algebra, write_extension};
use dialgebra::theorems::{verify_theorems, Outcome, SuiteOptions};
use dialgebra::{Algebra, Error, FieldSpec};

#[derive(Parser)]
#[command(
    name = "dialg",
    version,
    about = "Multipliers, covers and universal central extensions of dialgebras"
)]
struct Cli {
    /// Interpret structure constants in this field instead of the declared one (`Q` or `p=<prime>`).
    #[arg(long, global = true)]
    field: Option<FieldSpec>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the five dialgebra identities on every basis triple.
    Check { algebra: PathBuf },
    /// Dimensions of L′ and Z(L), perfectness, and dim Hom(L, 𝔽).
    Invariants { algebra: PathBuf },
    /// Dimension of the multiplier M(L) ≅ H²(L, 𝔽).
    Multiplier { algebra: PathBuf },
    /// Second cohomology with coefficients in 𝔽ᵏ, with representatives.
    H2 {
        algebra: PathBuf,
        #[arg(short, default_value_t = 1)]
        k: usize,
    },
    /// Build the universal central extension of a perfect algebra.
    Cover {
        algebra: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a central extension splits and print a homomorphic section.
    Split { extension: PathBuf },
    /// Solve for covering morphisms from the first extension to the second.
    Covers { source: PathBuf, target: PathBuf },
    /// Certify universality: central, perfect total, trivial multiplier of the total.
    CertifyUniversal { extension: PathBuf },
    /// Compose G → L (first) with L → H (second) into G → H.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the structural statements about covers and universal extensions on one algebra.
    VerifyTheorems {
        algebra: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random central extensions sampled per check.
        #[arg(long, default_value_t = 8)]
        samples: usize,
    },
    /// Generate a catalog algebra, e.g. `gen matrix 2` or `gen rectquot 2 3`.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Math(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::BadField(_)
            | Error::NonPrimeModulus(_)
            | Error::FieldMismatch(..)
            | Error::InvalidParameter(_)
            | Error::ZeroDenominator => CliError::Usage(e.to_string()),
            other => CliError::Math(other.to_string()),
        }
    }
}

/// Exit code of a successful command: 0 when all checks hold, 1 otherwise.
type Status = Result<bool, CliError>;

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: Result<T, Error>) -> Result<T, CliError> {
    r.map_err(|e| match CliError::from(e) {
        CliError::Usage(m) => CliError::Usage(format!("{}: {m}", path.display())),
        CliError::Math(m) => CliError::Math(format!("{}: {m}", path.display())),
    })
}

fn load_algebra(path: &Path, field: Option<FieldSpec>) -> Result<Algebra, CliError> {
    with_path(path, parse_algebra_in(&read(path)?, field))
}

/// Loads an algebra and rejects it when the identities fail.
fn load_dialgebra(path: &Path, field: Option<FieldSpec>) -> Result<Algebra, CliError> {
    let a = load_algebra(path, field)?;
    let report = a.check_axioms();
    if !report.passed() {
        return Err(Error::AxiomFailure(report.violations.len()).into());
    }
    Ok(a)
}

fn load_extension(path: &Path, field: Option<FieldSpec>) -> Result<CentralExtension, CliError> {
    let file = with_path(path, parse_extension_in(&read(path)?, field))?;
    let report = file.base.check_axioms();
    if !report.passed() {
        return Err(CliError::Math(format!(
            "{}: base algebra violates the identities",
            path.display()
        )));
    }
    with_path(path, file.to_extension())
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn vector(v: &[dialgebra::Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn run(cli: Cli) -> Status {
    let field = cli.field;
    match cli.command {
        Command::Check { algebra } => {
            let a = load_algebra(&algebra, field)?;
            let report = a.check_axioms();
            println!("field={} dim={}", a.field(), a.dim());
            for v in &report.violations {
                let (x, y, z) = v.triple;
                println!(
                    "violation identity=\"{}\" x=e{} y=e{} z=e{} lhs={} rhs={}",
                    v.identity,
                    x + 1,
                    y + 1,
                    z + 1,
                    vector(&v.lhs),
                    vector(&v.rhs)
                );
            }
            println!("violations={}", report.violations.len());
            println!("axioms={}", if report.passed() { "pass" } else { "fail" });
            Ok(report.passed())
        }
        Command::Invariants { algebra } => {
            let a = load_dialgebra(&algebra, field)?;
            let derived = a.derived().dim();
            println!(
                "dim={} derived={} center={} perfect={}",
                a.dim(),
                derived,
                a.center().dim(),
                yes_no(derived == a.dim())
            );
            println!("hom_to_field={}", a.hom_to_field_dim());
            Ok(true)
        }
        Command::Multiplier { algebra } => {
            let a = load_dialgebra(&algebra, field)?;
            let m = multiplier(&a)?;
            println!("dim M(L) = {}", m.h2_dim);
            println!("multiplier={} z2={} b2={}", m.h2_dim, m.z2_dim, m.b2_dim);
            Ok(true)
        }
        Command::H2 { algebra, k } => {
            let a = load_dialgebra(&algebra, field)?;
            let h = h2(&a, k)?;
            println!("dim H²(L, F^{k}) = {}", h.h2_dim);
            println!("k={k} z2={} b2={} h2={}", h.z2_dim, h.b2_dim, h.h2_dim);
            for (r, rep) in h.representatives.iter().enumerate() {
                for (p, i, j, c, v) in rep.nonzero_entries() {
                    println!(
                        "representative {} {} {} {} {} {}",
                        r + 1,
                        p.keyword(),
                        i + 1,
                        j + 1,
                        c + 1,
                        v
                    );
                }
            }
            Ok(true)
        }
        Command::Cover { algebra, output } => {
            let a = load_dialgebra(&algebra, field)?;
            let e = universal_central_extension(&a)?;
            eprintln!(
                "kernel={} total_dim={} total_perfect=yes total_multiplier=0",
                e.kernel_dim(),
                e.total().dim()
            );
            emit(&write_extension(&e), output.as_deref())?;
            Ok(true)
        }
        Command::Split { extension } => {
            let e = load_extension(&extension, field)?;
            let beta = e.splits()?;
            println!("splits={}", yes_no(beta.is_some()));
            if let Some(beta) = beta {
                for i in 0..e.base().dim() {
                    println!("section e{} -> {}", i + 1, vector(&beta.matrix().column(i)));
                }
            }
            Ok(true)
        }
        Command::Covers { source, target } => {
            let e = load_extension(&source, field)?;
            let e1 = load_extension(&target, field)?;
            if e.field() != e1.field() {
                return Err(Error::FieldMismatch(e.field(), e1.field()).into());
            }
            let sol = find_covering(&e, &e1)?;
            println!(
                "covers={} unique={} solution_space_dim={}",
                yes_no(sol.covers()),
                yes_no(sol.uniquely_covers()),
                sol.solution_space_dim
            );
            if let Some(w) = &sol.witness {
                for c in 0..e.total().dim() {
                    println!("map e{} -> {}", c + 1, vector(&w.map.matrix().column(c)));
                }
            }
            Ok(true)
        }
        Command::CertifyUniversal { extension } => {
            let e = load_extension(&extension, field)?;
            let cert = certify_universal(&e)?;
            println!(
                "central={} total_perfect={} total_multiplier={} universal={}",
                yes_no(cert.central),
                yes_no(cert.total_perfect),
                cert.total_multiplier_dim,
                yes_no(cert.universal)
            );
            for r in &cert.reasons {
                println!("  {r}");
            }
            Ok(cert.universal)
        }
        Command::Compose {
            first,
            second,
            output,
        } => {
            let e1 = load_extension(&first, field)?;
            let e2 = load_extension(&second, field)?;
            if e1.field() != e2.field() {
                return Err(Error::FieldMismatch(e1.field(), e2.field()).into());
            }
            let middle = extension_algebra(e2.base(), e2.cocycle())?;
            if e1.base() != &middle {
                return Err(CliError::Math(
                    "base of the first extension differs from the total algebra of the second (kernel block first)".into(),
                ));
            }
            let e3 = compose(&e1, &e2)?;
            eprintln!(
                "kernel={} central={}",
                e3.kernel_dim(),
                yes_no(e3.is_central())
            );
            emit(&write_extension(&e3), output.as_deref())?;
            Ok(true)
        }
        Command::VerifyTheorems {
            algebra,
            seed,
            samples,
        } => {
            let a = load_dialgebra(&algebra, field)?;
            let rows = verify_theorems(&a, SuiteOptions { seed, samples })?;
            let width = rows.iter().map(|r| r.label.len()).max().unwrap_or(0);
            for r in &rows {
                println!("{} {:width$}  {}", r.outcome, r.label, r.statement);
                println!("     {:width$}  {}", "", r.detail);
            }
            let count = |o: Outcome| rows.iter().filter(|r| r.outcome == o).count();
            println!(
                "pass={} fail={} skip={}",
                count(Outcome::Pass),
                count(Outcome::Fail),
                count(Outcome::Skip)
            );
            Ok(count(Outcome::Fail) == 0)
        }
        Command::Gen {
            family,
            params,
            output,
        } => {
            let params: Vec<&str> = params.iter().map(String::as_str).collect();
            let a = generate(&family, &params, field.unwrap_or(FieldSpec::Rationals))?;
            emit(&write_algebra(&a), output.as_deref())?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}
