//! The `taulab` command line.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a suite check failed.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebra::{Algebra, DEFAULT_L_MAX};
use crate::error::{Error, Result};
use crate::homological::{ar_translate, ext_dim, projective_dimension, projective_resolution, DEFAULT_EXT_BOUND};
use crate::io::{module_to_string, parse_algebra_with_bound, parse_module};
use crate::lab::approx::minimal_right_add_approximation;
use crate::lab::enumerate::{enumerate_indecomposables, enumerate_support_tau_tilting};
use crate::lab::predicates::{
    is_partial_tilting, is_support_tau_tilting, is_tau_rigid, is_tau_tilting, is_tilting, self_orthogonal, Bounds, Tri,
};
use crate::lab::suite::{verify_theorem_suite, CheckStatus};
use crate::rep::{is_injective, is_projective, trace_submodule, Representation};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "taulab",
    version,
    about = "Exact computations with tau-tilting and tilting modules over bound quiver algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Algebra file (`field`, `vertex`, `arrow`, `relation` lines).
    #[arg(long)]
    algebra: PathBuf,
    /// Longest path length searched when checking admissibility.
    #[arg(long, default_value_t = DEFAULT_L_MAX)]
    l_max: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate an algebra and print its dimension and path basis.
    Build(AlgebraArgs),
    /// Compute a single object.
    Compute {
        #[command(subcommand)]
        what: ComputeCommand,
    },
    /// Evaluate predicates on a module.
    Check {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long)]
        module: PathBuf,
        /// Comma-separated predicates; all of them when omitted.
        #[arg(long, value_delimiter = ',')]
        props: Vec<Prop>,
        #[arg(long, default_value_t = DEFAULT_EXT_BOUND)]
        ext_bound: usize,
    },
    /// List indecomposables or support tau-tilting modules up to a dimension bound.
    Enumerate {
        what: EnumerateWhat,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    /// Run the property suite and write a JSON report.
    Verify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        #[arg(long, default_value_t = DEFAULT_EXT_BOUND)]
        ext_bound: usize,
        /// Report path; the JSON goes to stdout when omitted.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Record wall-clock time in the report (makes it non-reproducible).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args, Debug)]
struct ModuleArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[arg(long)]
    module: PathBuf,
}

#[derive(Subcommand, Debug)]
enum ComputeCommand {
    /// The Auslander-Reiten translate.
    Tau(ModuleArgs),
    /// dim Ext^i(M, N).
    Ext {
        #[command(flatten)]
        args: ModuleArgs,
        #[arg(long)]
        other: PathBuf,
        #[arg(long, default_value_t = 1)]
        degree: usize,
    },
    /// Projective dimension, exact or a lower bound.
    Pd(ModuleArgs),
    /// Tops of the terms of a minimal projective resolution.
    Resolution {
        #[command(flatten)]
        args: ModuleArgs,
        #[arg(long, default_value_t = DEFAULT_L_MAX)]
        length: usize,
    },
    /// The trace of `--module` in `--other`.
    Trace {
        #[command(flatten)]
        args: ModuleArgs,
        #[arg(long)]
        other: PathBuf,
    },
    /// Minimal right add(`--module`)-approximation of `--other`.
    Approx {
        #[command(flatten)]
        args: ModuleArgs,
        #[arg(long)]
        other: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Prop {
    TauRigid,
    TauTilting,
    SupportTauTilting,
    Tilting,
    PartialTilting,
    SelfOrthogonal,
    Injective,
    Projective,
}

const ALL_PROPS: [Prop; 8] = [
    Prop::TauRigid,
    Prop::TauTilting,
    Prop::SupportTauTilting,
    Prop::Tilting,
    Prop::PartialTilting,
    Prop::SelfOrthogonal,
    Prop::Injective,
    Prop::Projective,
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateWhat {
    Indecomposables,
    StauTilting,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn load_algebra(args: &AlgebraArgs) -> Result<Arc<Algebra>> {
    let text = read(&args.algebra)?;
    parse_algebra_with_bound(&text, args.l_max).map(Arc::new).map_err(|e| in_file(&args.algebra, e))
}

fn load_module(alg: &Arc<Algebra>, path: &Path) -> Result<Representation> {
    parse_module(alg, &read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Error {
    match e {
        Error::Parse { line, message } => Error::Parse { line, message: format!("{}: {message}", path.display()) },
        other => other,
    }
}

fn dim_line(m: &Representation) -> String {
    let dims: Vec<String> = m.dim_vector().iter().map(usize::to_string).collect();
    format!("dim vector: ({})", dims.join(", "))
}

fn tops_line(alg: &Algebra, tops: &[usize]) -> String {
    if tops.is_empty() {
        return "0".into();
    }
    tops.iter().map(|&v| format!("P({})", alg.quiver().vertices()[v])).collect::<Vec<_>>().join(" + ")
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Build(args) => {
            let alg = load_algebra(&args)?;
            let q = alg.quiver();
            writeln!(out, "field: F_{}", alg.prime())?;
            writeln!(out, "vertices: {}", q.vertex_count())?;
            writeln!(out, "arrows: {}", q.arrows().len())?;
            writeln!(out, "dim: {}", alg.dim())?;
            writeln!(out, "basis: {}", alg.basis_names().join(" "))?;
        }
        Command::Compute { what } => compute(what, out)?,
        Command::Check { algebra, module, props, ext_bound } => {
            let alg = load_algebra(&algebra)?;
            let m = load_module(&alg, &module)?;
            let bounds = Bounds { l_max: algebra.l_max, i_max: ext_bound };
            let props = if props.is_empty() { ALL_PROPS.to_vec() } else { props };
            for prop in props {
                let (name, value): (&str, Tri) = match prop {
                    Prop::TauRigid => ("tau-rigid", is_tau_rigid(&m)?.into()),
                    Prop::TauTilting => ("tau-tilting", is_tau_tilting(&m)?.into()),
                    Prop::SupportTauTilting => ("support-tau-tilting", is_support_tau_tilting(&m)?.into()),
                    Prop::Tilting => ("tilting", is_tilting(&m, bounds)?),
                    Prop::PartialTilting => ("partial-tilting", is_partial_tilting(&m, bounds)?),
                    Prop::SelfOrthogonal => ("self-orthogonal", self_orthogonal(&m, bounds)?),
                    Prop::Injective => ("injective", is_injective(&m).into()),
                    Prop::Projective => ("projective", is_projective(&m).into()),
                };
                writeln!(out, "{name}: {value}")?;
            }
            writeln!(out, "pd: {}", projective_dimension(&m, algebra.l_max))?;
        }
        Command::Enumerate { what, algebra, max_dim } => {
            let alg = load_algebra(&algebra)?;
            let indecs = enumerate_indecomposables(&alg, max_dim)?;
            match what {
                EnumerateWhat::Indecomposables => {
                    writeln!(out, "{} indecomposables of dimension <= {max_dim}", indecs.len())?;
                    for (i, m) in indecs.iter().enumerate() {
                        writeln!(out, "X{i}: {}", dim_line(m))?;
                        for line in module_to_string(m).lines() {
                            writeln!(out, "  {line}")?;
                        }
                    }
                }
                EnumerateWhat::StauTilting => {
                    let list = enumerate_support_tau_tilting(&alg, &indecs)?;
                    writeln!(
                        out,
                        "{} support tau-tilting modules (summands from {} indecomposables)",
                        list.len(),
                        indecs.len()
                    )?;
                    let names = alg.quiver().vertices();
                    for s in &list {
                        let summands = if s.is_zero() {
                            "0".to_string()
                        } else {
                            s.summands.iter().map(|i| format!("X{i}")).collect::<Vec<_>>().join(" + ")
                        };
                        let killed: Vec<&str> = s.killed.iter().map(|&v| names[v].as_str()).collect();
                        writeln!(out, "{summands}  killed: {{{}}}  tau-tilting: {}", killed.join(", "), s.tau_tilting)?;
                    }
                }
            }
        }
        Command::Verify { algebra, max_dim, ext_bound, report, timing } => {
            let alg = load_algebra(&algebra)?;
            let name = algebra.algebra.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let start = Instant::now();
            let mut r = verify_theorem_suite(&alg, &name, max_dim, Bounds { l_max: algebra.l_max, i_max: ext_bound })?;
            if timing {
                r.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let json = r.to_json();
            match report {
                Some(path) => {
                    fs::write(&path, format!("{json}\n")).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                    write!(out, "{}", r.render_table())?;
                    writeln!(out, "report written to {}", path.display())?;
                }
                None => writeln!(out, "{json}")?,
            }
            if r.checks.iter().any(|c| c.status == CheckStatus::Fail) {
                return Ok(EXIT_VIOLATION);
            }
        }
    }
    Ok(EXIT_OK)
}

fn compute(what: ComputeCommand, out: &mut dyn Write) -> Result<()> {
    match what {
        ComputeCommand::Tau(a) => {
            let alg = load_algebra(&a.algebra)?;
            let m = load_module(&alg, &a.module)?;
            let t = ar_translate(&m);
            writeln!(out, "# tau, {}", dim_line(&t))?;
            write!(out, "{}", module_to_string(&t))?;
        }
        ComputeCommand::Ext { args, other, degree } => {
            let alg = load_algebra(&args.algebra)?;
            let m = load_module(&alg, &args.module)?;
            let n = load_module(&alg, &other)?;
            writeln!(out, "dim Ext^{degree}: {}", ext_dim(&m, &n, degree)?)?;
        }
        ComputeCommand::Pd(a) => {
            let alg = load_algebra(&a.algebra)?;
            let m = load_module(&alg, &a.module)?;
            writeln!(out, "pd: {}", projective_dimension(&m, a.algebra.l_max))?;
        }
        ComputeCommand::Resolution { args, length } => {
            let alg = load_algebra(&args.algebra)?;
            let m = load_module(&alg, &args.module)?;
            let res = projective_resolution(&m, length);
            for i in 0..res.known_degrees() {
                let tops = res.term_tops(i).unwrap_or(&[]);
                writeln!(out, "P{i}: {}", tops_line(&alg, tops))?;
            }
            writeln!(out, "pd: {}", res.projective_dimension())?;
        }
        ComputeCommand::Trace { args, other } => {
            let alg = load_algebra(&args.algebra)?;
            let t = load_module(&alg, &args.module)?;
            let m = load_module(&alg, &other)?;
            let (tr, _) = trace_submodule(&t, &m)?;
            writeln!(out, "# trace, {}", dim_line(&tr))?;
            write!(out, "{}", module_to_string(&tr))?;
        }
        ComputeCommand::Approx { args, other } => {
            let alg = load_algebra(&args.algebra)?;
            let t = load_module(&alg, &args.module)?;
            let x = load_module(&alg, &other)?;
            let approx = minimal_right_add_approximation(&t, &x)?;
            let kernel = approx.kernel();
            writeln!(out, "summand types: {}", approx.types.len())?;
            writeln!(out, "copies: {:?}", approx.copies)?;
            writeln!(out, "surjective: {}", approx.map.is_surjective())?;
            writeln!(out, "# source, {}", dim_line(&approx.source))?;
            write!(out, "{}", module_to_string(&approx.source))?;
            writeln!(out, "# kernel, {}", dim_line(&kernel))?;
            write!(out, "{}", module_to_string(&kernel))?;
        }
    }
    Ok(())
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
