//! Command-line front end for `zkernel`.
//!
//! [`run`] parses an argument list, dispatches to the library and returns the
//! rendered output together with the process exit status:
//! `0` for an answer, `1` for bad input, `2` for questions outside what is known.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use zkernel::invariants::{
    e_sharp_group, first_ghost_monomial, sz_lz, z_n_group, Answer, Context, Coverage, Degree,
    GroupAnswer, Presentation, PrimeSelector, ZnQuery,
};
use zkernel::localization::{
    covering_reduction, decompose, CoveringReduction, PLocalDecomposition,
};
use zkernel::serre::{serre_family, serre_pi, SerreQuery};
use zkernel::{Error, FgAbelianGroup, LieGroupId, PsiParams};

pub mod table;

pub use table::{regular_threshold_rows, TableSpec};

/// Process exit statuses.
pub mod exit {
    pub const ANSWER: i32 = 0;
    pub const USER_ERROR: i32 = 1;
    pub const NOT_COVERED: i32 = 2;
}

#[derive(Debug, Parser)]
#[command(
    name = "zkernel",
    version,
    about = "Exact π_*-kernel invariants of compact Lie groups"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The group Z^n(G) of self-maps inducing zero on π_i for i <= n.
    Zgroup(ZgroupArgs),
    /// The group E_#^n(G) of self-equivalences inducing the identity on π_i for i <= n.
    Esharp(EsharpArgs),
    /// sz and lz, rationally or at a prime.
    Invariants(InvariantsArgs),
    /// p-local splitting into spheres and B_n(p).
    Decompose(DecomposeArgs),
    /// Whether Z^∞(G) is finite.
    Finiteness(GroupArg),
    /// Normal form of a word in Ψ(m, n).
    PsiEval(PsiArgs),
    /// p-primary π_{k+t}(S^k) in the Serre range.
    SerrePi(SerreArgs),
    /// Batch table over a family, a parameter range and a prime range.
    Table(TableArgs),
}

#[derive(Debug, Args)]
pub struct GroupArg {
    /// Group name such as SU3, Sp2, Spin8, G2, U4, SO7.
    pub group: String,
}

#[derive(Debug, Args)]
pub struct ZgroupArgs {
    pub group: String,
    /// Degree n, or `inf`.
    #[arg(long)]
    pub n: String,
    /// Localize at this prime.
    #[arg(long, conflicts_with = "odd")]
    pub p: Option<u64>,
    /// Localize away from 2.
    #[arg(long)]
    pub odd: bool,
}

#[derive(Debug, Args)]
pub struct EsharpArgs {
    pub group: String,
    /// Degree n, or `inf`.
    #[arg(long)]
    pub n: String,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    pub group: String,
    /// Prime to localize at; rational when omitted.
    #[arg(long)]
    pub p: Option<u64>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub group: String,
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct PsiArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long)]
    pub n: u64,
    /// Word over x, y, z and the inverses X, Y, Z.
    #[arg(default_value = "")]
    pub word: String,
}

#[derive(Debug, Args)]
pub struct SerreArgs {
    /// Odd sphere dimension.
    #[arg(long)]
    pub dim: u64,
    /// Stem t, so the group is π_{dim+t}.
    #[arg(long)]
    pub stem: u64,
    #[arg(long)]
    pub p: u64,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// SU, Sp, Spin, U, SO, or an exceptional label.
    #[arg(long, required_unless_present = "regular_thresholds")]
    pub family: Option<String>,
    /// Group parameter range, `a..b` inclusive or a single value.
    #[arg(long, default_value = "1..12")]
    pub ranks: String,
    /// Prime range, `a..b` inclusive or a single value.
    #[arg(long, default_value = "3..37")]
    pub primes: String,
    /// Comma-separated subset of quasi,regular,decomposition,sz,lz,finite.
    #[arg(long, default_value = "quasi,regular,decomposition,sz,lz,finite")]
    pub columns: String,
    /// Print the closed-form sz/lz statements in the p-regular range instead.
    #[arg(long, conflicts_with_all = ["family"])]
    pub regular_thresholds: bool,
}

/// Rendered output and exit status of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// A computed response before rendering.
struct Response {
    query: Value,
    result: Value,
    coverage: Coverage,
    text: String,
    code: i32,
}

impl Response {
    fn answered(query: Value, result: Value, coverage: Coverage, text: String) -> Self {
        let code = if coverage == Coverage::Unknown {
            exit::NOT_COVERED
        } else {
            exit::ANSWER
        };
        Self {
            query,
            result,
            coverage,
            text,
            code,
        }
    }
}

struct Failure {
    query: Value,
    error: Error,
}

/// Parse `args` (including the program name) and execute.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USER_ERROR
            } else {
                exit::ANSWER
            };
            let rendered = e.render().to_string();
            if code == exit::ANSWER {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(r) => {
            let stdout = if cli.json {
                let doc = json!({
                    "query": r.query,
                    "result": r.result,
                    "coverage": r.coverage,
                });
                format!("{doc}\n")
            } else {
                format!("{}\n", r.text)
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: r.code,
            }
        }
        Err(f) => {
            let code = error_code(&f.error);
            if cli.json {
                let doc = json!({
                    "query": f.query,
                    "error": { "kind": error_kind(&f.error), "message": f.error.to_string() },
                });
                Outcome {
                    stdout: format!("{doc}\n"),
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: format!("error: {}\n", f.error),
                    code,
                }
            }
        }
    }
}

pub fn error_code(e: &Error) -> i32 {
    if e.is_coverage_gap() {
        exit::NOT_COVERED
    } else {
        exit::USER_ERROR
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Domain(_) => "domain",
        Error::NotCovered(_) => "not_covered",
        Error::Unsupported(_) => "unsupported",
        Error::CoefficientMismatch { .. } => "coefficient_mismatch",
        Error::OutOfSerreRange { .. } => "out_of_serre_range",
        Error::Parse(_) => "parse",
    }
}

fn dispatch(cmd: &Command) -> Result<Response, Failure> {
    let query = query_json(cmd);
    let fail = |error: Error| Failure {
        query: query.clone(),
        error,
    };
    match cmd {
        Command::Zgroup(a) => zgroup(query.clone(), a).map_err(fail),
        Command::Esharp(a) => esharp(query.clone(), a).map_err(fail),
        Command::Invariants(a) => invariants(query.clone(), a).map_err(fail),
        Command::Decompose(a) => decomposition(query.clone(), a).map_err(fail),
        Command::Finiteness(a) => finiteness(query.clone(), a).map_err(fail),
        Command::PsiEval(a) => psi_eval(query.clone(), a).map_err(fail),
        Command::SerrePi(a) => serre(query.clone(), a).map_err(fail),
        Command::Table(a) => table::run_table(query.clone(), a).map_err(fail),
    }
}

fn query_json(cmd: &Command) -> Value {
    match cmd {
        Command::Zgroup(a) => json!({
            "verb": "zgroup", "group": a.group, "n": a.n, "p": a.p, "odd": a.odd,
        }),
        Command::Esharp(a) => json!({ "verb": "esharp", "group": a.group, "n": a.n }),
        Command::Invariants(a) => json!({ "verb": "invariants", "group": a.group, "p": a.p }),
        Command::Decompose(a) => json!({ "verb": "decompose", "group": a.group, "p": a.p }),
        Command::Finiteness(a) => json!({ "verb": "finiteness", "group": a.group }),
        Command::PsiEval(a) => json!({ "verb": "psi-eval", "m": a.m, "n": a.n, "word": a.word }),
        Command::SerrePi(a) => {
            json!({ "verb": "serre-pi", "dim": a.dim, "stem": a.stem, "p": a.p })
        }
        Command::Table(a) => json!({
            "verb": "table",
            "family": a.family,
            "ranks": a.ranks,
            "primes": a.primes,
            "columns": a.columns,
            "regular_thresholds": a.regular_thresholds,
        }),
    }
}

fn parse_group(s: &str) -> Result<LieGroupId, Error> {
    s.parse()
}

pub fn abelian_json(g: &FgAbelianGroup) -> Value {
    json!({
        "kind": "abelian",
        "free_rank": g.free_rank(),
        "torsion": g.torsion(),
        "coefficients": g.coefficients().to_string(),
        "text": g.to_string(),
    })
}

fn answer_json(a: &Answer) -> Value {
    match &a.group {
        GroupAnswer::Abelian(g) => abelian_json(g),
        GroupAnswer::Presentation {
            presentation,
            localized,
        } => {
            let mut v = json!({
                "kind": "presentation",
                "text": a.group.to_string(),
                "localized": localized.map(|s| s.to_string()),
            });
            if let Presentation::Psi(p) = presentation {
                v["psi"] = json!({ "m": p.m(), "n": p.n() });
            }
            v
        }
        GroupAnswer::Unknown(why) => json!({ "kind": "unknown", "reason": why }),
    }
}

fn zgroup(query: Value, a: &ZgroupArgs) -> Result<Response, Error> {
    let group = parse_group(&a.group)?;
    let n: Degree = a.n.parse()?;
    let selector = match (a.p, a.odd) {
        (Some(p), _) => Some(PrimeSelector::prime(p)?),
        (None, true) => Some(PrimeSelector::Odd),
        (None, false) => None,
    };
    let answer = z_n_group(&ZnQuery { group, n, selector })?;
    Ok(Response::answered(
        query,
        answer_json(&answer),
        answer.coverage,
        answer.group.to_string(),
    ))
}

fn esharp(query: Value, a: &EsharpArgs) -> Result<Response, Error> {
    let group = parse_group(&a.group)?;
    let n: Degree = a.n.parse()?;
    let answer = e_sharp_group(&group, n)?;
    Ok(Response::answered(
        query,
        answer_json(&answer),
        answer.coverage,
        answer.group.to_string(),
    ))
}

fn invariants(query: Value, a: &InvariantsArgs) -> Result<Response, Error> {
    let group = parse_group(&a.group)?;
    let context = match a.p {
        Some(p) => Context::LocalAt(p),
        None => Context::Rational,
    };
    let r = sz_lz(&group, context)?;
    let result =
        json!({ "kind": "invariants", "sz": r.sz, "lz": r.lz, "context": context.to_string() });
    let text = format!("sz = {}, lz = {} ({})", r.sz, r.lz, context);
    Ok(Response::answered(query, result, Coverage::Proved, text))
}

fn decomposition_json(d: &PLocalDecomposition, circle: bool) -> Value {
    json!({
        "kind": "decomposition",
        "group": d.group.short_name(),
        "p": d.p,
        "circle": circle,
        "factors": d.factors,
        "text": decomposition_text(d, circle),
    })
}

fn decomposition_text(d: &PLocalDecomposition, circle: bool) -> String {
    if circle {
        format!("S^1 x {d}")
    } else {
        d.to_string()
    }
}

/// Decomposition of `g` at `p`, through the covering reduction for `U(n)` and `SO(n)`.
pub fn reduced_decomposition(g: &LieGroupId, p: u64) -> Result<(PLocalDecomposition, bool), Error> {
    let reduction = covering_reduction(g, p)?;
    let d = decompose(&reduction.simply_connected(), p)?;
    Ok((d, matches!(reduction, CoveringReduction::CircleTimes(_))))
}

fn decomposition(query: Value, a: &DecomposeArgs) -> Result<Response, Error> {
    let group = parse_group(&a.group)?;
    let (d, circle) = reduced_decomposition(&group, a.p)?;
    let text = decomposition_text(&d, circle);
    Ok(Response::answered(
        query,
        decomposition_json(&d, circle),
        Coverage::Derived,
        text,
    ))
}

fn finiteness(query: Value, a: &GroupArg) -> Result<Response, Error> {
    let group = parse_group(&a.group)?;
    let degrees = group.rational_type().degrees().to_vec();
    let witness = first_ghost_monomial(&group);
    let (text, witness_json) = match &witness {
        None => (format!("Z^inf({group}) is finite"), Value::Null),
        Some(m) => {
            let parts = m.subset_degrees(&degrees);
            let target = degrees[m.target];
            let sum: Vec<String> = parts.iter().map(u32::to_string).collect();
            (
                format!("Z^inf({group}) is infinite: {} = {target}", sum.join(" + ")),
                json!({ "degrees": parts, "target": target }),
            )
        }
    };
    let result =
        json!({ "kind": "finiteness", "finite": witness.is_none(), "witness": witness_json });
    Ok(Response::answered(query, result, Coverage::Derived, text))
}

fn psi_eval(query: Value, a: &PsiArgs) -> Result<Response, Error> {
    let params = PsiParams::new(a.m, a.n)?;
    let e = params.eval_word(&a.word)?;
    let result = json!({
        "kind": "psi_element",
        "m": params.m(),
        "n": params.n(),
        "a": e.a,
        "b": e.b,
        "c": e.c,
        "text": e.to_string(),
    });
    Ok(Response::answered(
        query,
        result,
        Coverage::Derived,
        e.to_string(),
    ))
}

fn serre(query: Value, a: &SerreArgs) -> Result<Response, Error> {
    let q = SerreQuery::new(a.dim, a.stem, a.p)?;
    let g = serre_pi(&q);
    let mut result = abelian_json(&g);
    result["family"] = json!(serre_family(&q));
    Ok(Response::answered(
        query,
        result,
        Coverage::Proved,
        g.to_string(),
    ))
}
