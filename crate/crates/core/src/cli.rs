//! The `hypernorm` command line.
//!
//! Every command prints a JSON report; floats carry 12 significant digits and
//! every report echoes its effective configuration, so the same command with
//! the same seed prints the same bytes. Axis numbers (`--constraint`,
//! `--pair`) are 1-based.
//!
//! Exit codes: 0 on success (a non-converged ascent is still a success and is
//! flagged in the report), 2 for invalid input, 3 when a hypothesis such as
//! `p ≥ 2` or symmetry is violated.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bounds::{degree_lower_bound, slice_sum_lower_bound};
use crate::error::{Error, Result};
use crate::hypergraph::{parse_edge_list, UniformHypergraph};
use crate::optimize::{maximize_pnorm, p_spectral_radius, AscentConfig, AscentResult, EqualityConstraint};
use crate::oracle::exact_2norm_2matrix;
use crate::tensor::{random, DenseHypermatrix};
use crate::verify::{self, SuiteParams, Theorem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_HYPOTHESIS: i32 = 3;

/// Worker-thread cap for the optimizer and the grid oracle.
pub const THREADS_ENV: &str = "HYPERNORM_THREADS";

#[derive(Parser, Debug)]
#[command(name = "hypernorm", version, about = "p-norms and p-spectral radii of hypermatrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Estimate ‖A‖_p by multi-restart ascent.
    Norm(NormArgs),
    /// Estimate the p-spectral radius of a symmetric tensor or a hypergraph.
    Radius(RadiusArgs),
    /// Slice-sum (or degree) lower bound on the p-spectral radius.
    Bound(BoundArgs),
    /// Run a randomized verification suite.
    Verify(VerifyArgs),
    /// Write a generated tensor or hypergraph.
    Gen(GenArgs),
}

#[derive(Args, Debug, Clone)]
pub struct AscentArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 500)]
    pub max_sweeps: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct NormArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub ascent: AscentArgs,
    /// Tie two vector positions together, e.g. `--constraint 2,3`.
    #[arg(long, value_parser = parse_pair)]
    pub constraint: Option<(usize, usize)>,
    /// Compare with the exact largest singular value (2-matrices, p = 2).
    #[arg(long)]
    pub check_exact: bool,
}

#[derive(Args, Debug)]
pub struct RadiusArgs {
    pub input: PathBuf,
    #[command(flatten)]
    pub ascent: AscentArgs,
    /// Read an edge list instead of a tensor file.
    #[arg(long)]
    pub graph: bool,
}

#[derive(Args, Debug)]
pub struct BoundArgs {
    pub input: PathBuf,
    #[arg(long)]
    pub p: f64,
    #[arg(long)]
    pub graph: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// th2p, thr2, thrp, symmetrization, sign-flip or counterexample.
    pub theorem: String,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 2.0)]
    pub p: f64,
    #[arg(long, default_value_t = 20)]
    pub cases: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub restarts: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenKind {
    Ones,
    Diagonal,
    SymNonneg,
    SymSigned,
    JkSym,
    Graph,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub kind: GenKind,
    /// Tensor dims, e.g. `2,3,3`; for `graph`, `n,r`.
    #[arg(long, value_parser = parse_list)]
    pub dims: std::vec::Vec<usize>,
    /// Symmetric pair for `jk-sym`, 1-based.
    #[arg(long, value_parser = parse_pair)]
    pub pair: Option<(usize, usize)>,
    /// Signed entries for `jk-sym`.
    #[arg(long)]
    pub signed: bool,
    /// Edge probability for `graph`.
    #[arg(long, default_value_t = 0.5)]
    pub prob: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a non-negative integer")))
        .collect()
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    match parse_list(s)?.as_slice() {
        &[j, k] if j >= 1 && k >= 1 => Ok((j, k)),
        _ => Err(format!("expected two 1-based axes `j,k`, got `{s}`")),
    }
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn sig_vec(v: &[f64]) -> Vec<f64> {
    v.iter().copied().map(sig12).collect()
}

/// Recursively applies [`sig12`] to every float in a JSON value.
fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => json!(sig12(n.as_f64().expect("f64 number"))),
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

/// What a command produced: the text to print, and where to write it.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub out: Option<PathBuf>,
}

impl Output {
    fn report(value: Value, out: Option<PathBuf>) -> Self {
        let mut text = serde_json::to_string_pretty(&round_floats(value)).expect("report serializes");
        text.push('\n');
        Self { text, out }
    }
}

pub fn execute(cli: Cli) -> Result<Output> {
    match cli.command {
        Command::Norm(args) => cmd_norm(args),
        Command::Radius(args) => cmd_radius(args),
        Command::Bound(args) => cmd_bound(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Gen(args) => cmd_gen(args),
    }
}

/// Parses `args`, runs the command, writes its output, and returns the exit
/// code. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    match execute(cli).and_then(|output| emit(&output)) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_hypothesis() {
                EXIT_HYPOTHESIS
            } else {
                EXIT_INPUT
            }
        }
    }
}

fn emit(output: &Output) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, &output.text)?,
        None => print!("{}", output.text),
    }
    Ok(())
}

/// Caps rayon's global pool from `HYPERNORM_THREADS`, if set.
pub fn configure_threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Error::InvalidArgument(format!("{THREADS_ENV} must be a positive integer, got `{raw}`")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Error::InvalidArgument(format!("cannot configure thread pool: {e}")))
}

fn read_tensor(path: &Path) -> Result<DenseHypermatrix> {
    DenseHypermatrix::from_json_str(&fs::read_to_string(path)?)
}

fn read_graph(path: &Path) -> Result<UniformHypergraph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

fn ascent_config(args: &AscentArgs, a: &DenseHypermatrix, constraint: Option<EqualityConstraint>) -> AscentConfig {
    AscentConfig {
        p: args.p,
        max_sweeps: args.max_sweeps,
        tol: args.tol,
        restarts: args.restarts,
        seed: args.seed,
        constraint,
        nonneg_mode: a.is_nonnegative(),
    }
}

#[derive(Serialize)]
struct ConfigEcho<'a> {
    p: f64,
    restarts: usize,
    seed: u64,
    tol: f64,
    max_sweeps: usize,
    nonneg_mode: bool,
    constraint: Option<Vec<Vec<usize>>>,
    input: &'a str,
}

fn echo<'a>(cfg: &AscentConfig, input: &'a Path) -> ConfigEcho<'a> {
    ConfigEcho {
        p: cfg.p,
        restarts: cfg.restarts,
        seed: cfg.seed,
        tol: cfg.tol,
        max_sweeps: cfg.max_sweeps,
        nonneg_mode: cfg.nonneg_mode,
        constraint: cfg
            .constraint
            .as_ref()
            .map(|c| c.groups().iter().map(|g| g.iter().map(|m| m + 1).collect()).collect()),
        input: input.to_str().unwrap_or("<non-utf8 path>"),
    }
}

fn ascent_report(command: &str, cfg: &AscentConfig, input: &Path, r: &AscentResult) -> Value {
    json!({
        "command": command,
        "config": echo(cfg, input),
        "value": r.value,
        "signed_value": r.signed_value,
        "converged": r.converged,
        "sweeps": r.sweeps_used,
        "restarts": cfg.restarts,
        "seed": cfg.seed,
        "best_restart": r.best_restart,
        "kkt_residual": r.kkt_residual,
        "kkt_residual_relative": r.kkt_residual_relative,
        "tuple": r.tuple.vectors.iter().map(|v| sig_vec(v)).collect::<Vec<_>>(),
        "restart_values": sig_vec(&r.restart_values),
    })
}

fn cmd_norm(args: NormArgs) -> Result<Output> {
    let a = read_tensor(&args.input)?;
    let constraint = args
        .constraint
        .map(|(j, k)| EqualityConstraint::pair(a.order(), j - 1, k - 1))
        .transpose()?;
    let cfg = ascent_config(&args.ascent, &a, constraint);
    let result = maximize_pnorm(&a, &cfg)?;
    let mut report = ascent_report("norm", &cfg, &args.input, &result);
    if args.check_exact {
        if a.order() != 2 || cfg.p != 2.0 || cfg.constraint.is_some() {
            return Err(Error::InvalidArgument(
                "--check-exact needs an unconstrained 2-matrix at p = 2".into(),
            ));
        }
        let exact = exact_2norm_2matrix(&a)?;
        report["check_exact"] = json!({ "exact": exact, "difference": result.value - exact });
    }
    Ok(Output::report(report, args.ascent.out))
}

fn cmd_radius(args: RadiusArgs) -> Result<Output> {
    let a = if args.graph { read_graph(&args.input)?.adjacency_tensor()? } else { read_tensor(&args.input)? };
    let cfg = ascent_config(&args.ascent, &a, None);
    let result = p_spectral_radius(&a, &cfg)?;
    let cfg = AscentConfig { constraint: Some(EqualityConstraint::all_equal(a.order())), ..cfg };
    let mut report = ascent_report("radius", &cfg, &args.input, &result);
    report["graph"] = json!(args.graph);
    report["order"] = json!(a.order());
    report["n"] = json!(a.dims()[0]);
    Ok(Output::report(report, args.ascent.out))
}

fn cmd_bound(args: BoundArgs) -> Result<Output> {
    let report = if args.graph {
        let g = read_graph(&args.input)?;
        json!({
            "command": "bound",
            "input": args.input.to_str(),
            "p": args.p,
            "graph": true,
            "n": g.vertex_count(),
            "r": g.uniformity(),
            "degrees": g.degrees(),
            "bound": degree_lower_bound(&g, args.p)?,
        })
    } else {
        let a = read_tensor(&args.input)?;
        json!({
            "command": "bound",
            "input": args.input.to_str(),
            "p": args.p,
            "graph": false,
            "n": a.dims()[0],
            "r": a.order(),
            "slice_sums": sig_vec(&a.slice_sums()),
            "bound": slice_sum_lower_bound(&a, args.p)?,
        })
    };
    Ok(Output::report(report, args.out))
}

fn cmd_verify(args: VerifyArgs) -> Result<Output> {
    let theorem: Theorem = args.theorem.parse()?;
    let default_n = match theorem {
        Theorem::Counterexample => 2,
        _ => 3,
    };
    let params = SuiteParams {
        r: args.r,
        n: args.n.unwrap_or(default_n),
        p: args.p,
        cases: args.cases,
        seed: args.seed,
        restarts: args.restarts,
    };
    let suite = verify::run(theorem, &params)?;
    let mut report = serde_json::to_value(&suite)?;
    report["command"] = json!("verify");
    report["pass"] = json!(suite.all_passed());
    if let Some(w) = &suite.witness {
        report["witness"] = json!({
            "matrix": serde_json::to_value(&w.matrix)?,
            "unconstrained": w.unconstrained,
            "constrained": w.constrained,
            "gap": w.gap,
            "unconstrained_tuple": w.unconstrained_tuple.vectors,
            "constrained_tuple": w.constrained_tuple.vectors,
        });
    }
    Ok(Output::report(report, args.out))
}

fn cmd_gen(args: GenArgs) -> Result<Output> {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let dims = args.dims.clone();
    let need_equal = |what: &str| -> Result<usize> {
        match dims.first() {
            Some(&n) if dims.iter().all(|&d| d == n) && dims.len() >= 2 => Ok(n),
            _ => Err(Error::InvalidArgument(format!("{what} needs at least two equal dims, got {dims:?}"))),
        }
    };
    let text = match args.kind {
        GenKind::Graph => {
            let &[n, r] = args.dims.as_slice() else {
                return Err(Error::InvalidArgument("graph needs --dims n,r".into()));
            };
            UniformHypergraph::random(n, r, args.prob, &mut rng)?.to_edge_list()
        }
        kind => {
            let t = match kind {
                GenKind::Ones => DenseHypermatrix::ones(args.dims.clone())?,
                GenKind::Diagonal => DenseHypermatrix::diagonal(need_equal("diagonal")?, args.dims.len())?,
                GenKind::SymNonneg => random::symmetric_nonnegative(need_equal("sym-nonneg")?, args.dims.len(), &mut rng)?,
                GenKind::SymSigned => random::symmetric_signed(need_equal("sym-signed")?, args.dims.len(), &mut rng)?,
                GenKind::JkSym => {
                    let (j, k) = args
                        .pair
                        .ok_or_else(|| Error::InvalidArgument("jk-sym needs --pair j,k".into()))?;
                    random::jk_symmetric(args.dims.clone(), j - 1, k - 1, !args.signed, &mut rng)?
                }
                GenKind::Graph => unreachable!(),
            };
            let mut s = t.to_json_string();
            s.push('\n');
            s
        }
    };
    Ok(Output { text, out: args.out })
}
