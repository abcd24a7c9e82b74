//! Command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 for usage or configuration
//! errors, 2 when a mathematical check disagrees. Reports go to `--out` or
//! stdout; timings go to stderr only, so report bytes depend on the
//! configuration and seed alone. Randomized choices draw from a single
//! ChaCha8 stream seeded with `--seed`.

pub mod dossier;
pub mod identities;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::families::{brute_check_family, CheckStatus, FamilyId, FamilySpec};
use crate::gf::{build_tower, FieldTower, Limits};
use crate::planarity::{scan, Method};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "planarq",
    version,
    about = "Planarity of x^(q^2+1) + A x^(q+1) + B x^2 over F_(q^3)"
)]
pub struct Cli {
    /// Worker threads; 0 uses one per core.
    #[arg(long, global = true, default_value_t = 0)]
    pub workers: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// Odd characteristic.
    #[arg(long)]
    pub p: u32,
    /// q = p^m.
    #[arg(long, default_value_t = 1)]
    pub m: u32,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    /// Report path; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every pair (A, B) in F_q^2.
    Scan {
        #[command(flatten)]
        tower: TowerArgs,
        /// Comma-separated subset of theorem, det, brute.
        #[arg(long, value_delimiter = ',', default_value = "theorem,det")]
        methods: Vec<Method>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Full dossier for one pair.
    Verify {
        #[command(flatten)]
        tower: TowerArgs,
        /// Canonical encoding of A in F_q.
        #[arg(long)]
        a: u64,
        /// Canonical encoding of B in F_q.
        #[arg(long)]
        b: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Randomized and exhaustive identity batteries.
    Identities {
        #[command(flatten)]
        tower: TowerArgs,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Corrupt the determinant cubic to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Catalog of known planar families.
    Families {
        #[command(subcommand)]
        action: FamiliesAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamiliesAction {
    /// Identifiers, formulas and parameters.
    List {
        #[command(flatten)]
        out: OutArgs,
    },
    /// Validate, instantiate and brute-check; all default instances without --id.
    Check {
        #[arg(long)]
        id: Option<FamilyId>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        e: Option<u32>,
        #[arg(long)]
        u: Option<u64>,
        #[arg(long)]
        v: Option<u64>,
        #[arg(long)]
        omega: Option<u64>,
        #[arg(long)]
        beta: Option<u64>,
        #[command(flatten)]
        out: OutArgs,
    },
}

struct Io<'a> {
    stdout: &'a mut (dyn Write + Send),
    stderr: &'a mut (dyn Write + Send),
}

impl Io<'_> {
    fn emit(&mut self, out: &OutArgs, bytes: &[u8]) -> Result<(), i32> {
        let res = match &out.out {
            Some(path) => std::fs::write(path, bytes),
            None => self.stdout.write_all(bytes),
        };
        res.map_err(|e| {
            let _ = writeln!(self.stderr, "error: cannot write report: {e}");
            EXIT_USAGE
        })
    }

    fn emit_json<T: Serialize>(&mut self, out: &OutArgs, value: &T) -> Result<(), i32> {
        let mut text = serde_json::to_string_pretty(value).expect("report serializes");
        text.push('\n');
        self.emit(out, text.as_bytes())
    }

    fn usage(&mut self, msg: impl std::fmt::Display) -> i32 {
        let _ = writeln!(self.stderr, "error: {msg}");
        EXIT_USAGE
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut (dyn Write + Send), stderr: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut io = Io { stdout, stderr };
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            let sink: &mut (dyn Write + Send) = if code == EXIT_OK {
                io.stdout
            } else {
                io.stderr
            };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.workers)
        .build()
    {
        Ok(p) => p,
        Err(e) => return io.usage(format!("cannot start worker pool: {e}")),
    };
    pool.install(|| dispatch(cli.command, &mut io))
}

fn tower_from(args: &TowerArgs, io: &mut Io) -> Result<FieldTower, i32> {
    build_tower(args.p, args.m).map_err(|e| io.usage(e))
}

fn dispatch(command: Command, io: &mut Io) -> i32 {
    let result = match command {
        Command::Scan {
            tower,
            methods,
            seed,
            format,
            out,
        } => cmd_scan(&tower, &methods, seed, format, &out, io),
        Command::Verify { tower, a, b, out } => cmd_verify(&tower, a, b, &out, io),
        Command::Identities {
            tower,
            samples,
            seed,
            inject_fault,
            out,
        } => cmd_identities(&tower, samples, seed, inject_fault, &out, io),
        Command::Families { action } => cmd_families(action, io),
    };
    result.unwrap_or_else(|code| code)
}

fn cmd_scan(
    args: &TowerArgs,
    methods: &[Method],
    seed: u64,
    format: Format,
    out: &OutArgs,
    io: &mut Io,
) -> Result<i32, i32> {
    if methods.is_empty() {
        return Err(io.usage("no methods given"));
    }
    let tower = tower_from(args, io)?;
    let report = scan(&tower, methods).map_err(|e| io.usage(e))?;
    for (m, d) in &report.timing {
        let _ = writeln!(io.stderr, "{m}: {:.3}s", d.as_secs_f64());
    }
    match format {
        Format::Json => io.emit_json(out, &report::scan_json(&tower, &report, seed))?,
        Format::Csv => {
            let bytes = report::scan_csv(&tower, &report).map_err(|e| io.usage(e))?;
            io.emit(out, &bytes)?;
        }
    }
    Ok(if report::scan_passes(&report) {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    })
}

fn cmd_verify(args: &TowerArgs, a: u64, b: u64, out: &OutArgs, io: &mut Io) -> Result<i32, i32> {
    let tower = tower_from(args, io)?;
    let q = tower.q();
    if a >= q || b >= q {
        return Err(io.usage(format!("A and B must be canonical encodings below {q}")));
    }
    let d = dossier::build_dossier(&tower, a as u32, b as u32).map_err(|e| io.usage(e))?;
    io.emit_json(out, &d)?;
    Ok(if d.consistent() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    })
}

fn cmd_identities(
    args: &TowerArgs,
    samples: usize,
    seed: u64,
    inject_fault: bool,
    out: &OutArgs,
    io: &mut Io,
) -> Result<i32, i32> {
    let tower = tower_from(args, io)?;
    let r =
        identities::run_identities(&tower, samples, seed, inject_fault).map_err(|e| io.usage(e))?;
    io.emit_json(out, &r)?;
    Ok(if r.passed() {
        EXIT_OK
    } else {
        EXIT_DISAGREEMENT
    })
}

#[derive(Serialize)]
struct FamilyEntry {
    id: FamilyId,
    formula: &'static str,
    field: &'static str,
    parameters: &'static [&'static str],
}

fn cmd_families(action: FamiliesAction, io: &mut Io) -> Result<i32, i32> {
    match action {
        FamiliesAction::List { out } => {
            let entries: Vec<FamilyEntry> = FamilyId::ALL
                .into_iter()
                .map(|id| FamilyEntry {
                    id,
                    formula: id.formula(),
                    field: id.field(),
                    parameters: id.parameters(),
                })
                .collect();
            io.emit_json(&out, &entries)?;
            Ok(EXIT_OK)
        }
        FamiliesAction::Check {
            id,
            p,
            n,
            k,
            s,
            m,
            e,
            u,
            v,
            omega,
            beta,
            out,
        } => {
            let specs: Vec<FamilySpec> = match id {
                None => FamilyId::ALL
                    .into_iter()
                    .map(FamilySpec::default_instance)
                    .collect(),
                Some(id) => {
                    let mut spec = FamilySpec::default_instance(id);
                    if let Some(p) = p {
                        spec.p = p;
                    }
                    let set = |slot: &mut Option<u32>, v: Option<u32>| {
                        if v.is_some() {
                            *slot = v;
                        }
                    };
                    set(&mut spec.n, n);
                    set(&mut spec.k, k);
                    set(&mut spec.s, s);
                    set(&mut spec.m, m);
                    set(&mut spec.e, e);
                    (spec.u, spec.v, spec.omega, spec.beta) = (u, v, omega, beta);
                    vec![spec]
                }
            };
            let limits = Limits::from_env();
            let mut checks = Vec::new();
            for spec in &specs {
                checks.push(brute_check_family(spec, &limits).map_err(|e| io.usage(e))?);
            }
            io.emit_json(&out, &checks)?;
            let status = |st| checks.iter().any(|c| c.status == st);
            Ok(if status(CheckStatus::Discrepancy) {
                EXIT_DISAGREEMENT
            } else if status(CheckStatus::Invalid) {
                EXIT_USAGE
            } else {
                EXIT_OK
            })
        }
    }
}
