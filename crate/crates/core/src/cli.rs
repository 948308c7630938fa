//! Command-line front end.
//!
//! Exit codes: 0 success, 1 invalid arguments or other errors, 2 an
//! enumeration cap was exceeded, 3 the reference suite found a mismatch.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::constructs::compute_mq;
use crate::error::Error;
use crate::gfield::{poly, FieldSpec};
use crate::lattice::dot::{export_dot, DotOptions};
use crate::lattice::{SubspaceLattice, SUBSPACE_CAP};
use crate::props::PropertyReport;
use crate::reference::{run_suite, SuiteOptions};
use crate::report::{to_json, BuildDoc, CheckDoc, MqDoc};

#[derive(Parser, Debug)]
#[command(
    name = "sublat",
    version,
    about = "Subspace lattices over finite fields"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate L(GF(q)^m) and summarize it, or emit its Hasse diagram.
    Build(BuildArgs),
    /// Decide the lattice laws on L(GF(q)^m).
    Check(CheckArgs),
    /// Compute m(q) for one field or a range of orders.
    Mq(MqArgs),
    /// Recompute every reference table and figure and compare.
    PaperTables(TablesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Field order (a prime power).
    #[arg(long, conflicts_with = "p")]
    q: Option<u64>,
    /// Characteristic, with --n.
    #[arg(long)]
    p: Option<u32>,
    /// Extension degree, with --p.
    #[arg(long, requires = "p", default_value_t = 1)]
    n: u32,
    /// Modulus coefficients, constant term first (e.g. 1,0,1 for x^2+1).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Ambient dimension.
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    output: OutputArgs,
    /// Lower the subspace enumeration cap.
    #[arg(long)]
    cap: Option<u128>,
    /// DOT only: print each element's basis.
    #[arg(long)]
    show_basis: bool,
    /// DOT only: draw orthocomplement pairs.
    #[arg(long)]
    show_perp: bool,
}

#[derive(Args, Debug)]
struct CheckArgs {
    #[command(flatten)]
    field: FieldArgs,
    #[arg(long)]
    m: usize,
    #[command(flatten)]
    output: OutputArgs,
    #[arg(long)]
    cap: Option<u128>,
}

#[derive(Args, Debug)]
struct MqArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Inclusive range of orders `a..b`; non-prime-powers are skipped.
    #[arg(long, conflicts_with_all = ["q", "p"])]
    range: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct TablesArgs {
    /// Run one group only.
    #[arg(long)]
    only: Option<String>,
    /// Replacement modulus for every field it fits, constant term first.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u32>>,
    #[command(flatten)]
    output: OutputArgs,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn field_of(args: &FieldArgs) -> std::result::Result<FieldSpec, Failure> {
    let (p, n) = match (args.q, args.p) {
        (Some(q), None) => poly::prime_power(q).ok_or(Error::NotPrimePower(q))?,
        (None, Some(p)) => (p, args.n),
        _ => return Err(Failure::Usage("give either --q or --p".into())),
    };
    Ok(FieldSpec::new(p, n, args.modulus.clone())?)
}

fn cap_of(cap: Option<u128>) -> std::result::Result<u128, Failure> {
    match cap {
        Some(c) if c > SUBSPACE_CAP => Err(Failure::Usage(format!(
            "--cap may only lower the cap of {SUBSPACE_CAP}"
        ))),
        Some(c) => Ok(c),
        None => Ok(SUBSPACE_CAP),
    }
}

fn parse_range(s: &str) -> std::result::Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("range must look like a..b, got {s}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b) = (
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    );
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn no_dot(format: Format) -> std::result::Result<(), Failure> {
    if format == Format::Dot {
        return Err(Failure::Usage(
            "--format dot is only available for build".into(),
        ));
    }
    Ok(())
}

/// The rendered output, where it goes, and the exit code on success.
fn execute(
    command: Command,
) -> std::result::Result<(String, Option<std::path::PathBuf>, i32), Failure> {
    match command {
        Command::Build(a) => {
            let lattice = SubspaceLattice::build_capped(&field_of(&a.field)?, a.m, cap_of(a.cap)?)?;
            let text = match a.output.format {
                Format::Text => BuildDoc::new(&lattice).to_text(),
                Format::Json => to_json(&BuildDoc::new(&lattice)),
                Format::Dot => export_dot(
                    &lattice,
                    &DotOptions {
                        show_basis: a.show_basis,
                        show_perp: a.show_perp,
                    },
                ),
            };
            Ok((text, a.output.out, 0))
        }
        Command::Check(a) => {
            no_dot(a.output.format)?;
            let lattice = SubspaceLattice::build_capped(&field_of(&a.field)?, a.m, cap_of(a.cap)?)?;
            let doc = CheckDoc::new(&lattice, &PropertyReport::for_lattice(&lattice)?);
            let text = match a.output.format {
                Format::Json => to_json(&doc),
                _ => doc.to_text(),
            };
            Ok((text, a.output.out, 0))
        }
        Command::Mq(a) => {
            no_dot(a.output.format)?;
            let results = match &a.range {
                Some(r) => {
                    let (lo, hi) = parse_range(r)?;
                    if hi > 65536 {
                        return Err(Failure::Usage("range ends above 65536".into()));
                    }
                    let mut out = Vec::new();
                    for q in lo..=hi {
                        let Some((p, n)) = poly::prime_power(q) else {
                            continue;
                        };
                        // a modulus that does not fit this field is ignored
                        let field = a
                            .field
                            .modulus
                            .clone()
                            .and_then(|m| FieldSpec::new(p, n, Some(m)).ok())
                            .map_or_else(|| FieldSpec::new(p, n, None), Ok)?;
                        out.push(compute_mq(&field));
                    }
                    out
                }
                None => vec![compute_mq(&field_of(&a.field)?)],
            };
            let doc = MqDoc::new(&results);
            let text = match a.output.format {
                Format::Json => to_json(&doc),
                _ => doc.to_text(),
            };
            Ok((text, a.output.out, 0))
        }
        Command::PaperTables(a) => {
            no_dot(a.output.format)?;
            let suite = run_suite(&SuiteOptions {
                only: a.only,
                modulus: a.modulus,
            })?;
            let text = match a.output.format {
                Format::Json => to_json(&suite),
                _ => suite.to_text(),
            };
            let code = if suite.failures() > 0 { 3 } else { 0 };
            Ok((text, a.output.out, code))
        }
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let (text, path, code) = match execute(cli.command) {
        Ok(done) => done,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            return 1;
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            return if matches!(e, Error::CapExceeded { .. }) {
                2
            } else {
                1
            };
        }
    };
    match path {
        None => {
            let _ = out.write_all(text.as_bytes());
        }
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &text) {
                let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
    }
    if code == 3 {
        let _ = writeln!(err, "error: reference tables do not match");
    }
    code
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}
