//! Command implementations for the `galcar` binary.
//!
//! Each command returns an [`Outcome`] instead of printing, so the binary
//! stays a thin wrapper and the tests can drive everything in-process.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use galcar_core::literal::factor_name;
use galcar_core::verify::{run_suite, Suite, VerifyConfig};
use galcar_core::{
    extract_equations, format_form, format_star_table, parse_form, star_closed, star_oracle,
    star_table, Error, FieldFile, Form, Rational, SpacetimeKind, SpacetimeStructure, StarVariant,
    StructureDoc,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_OPTION: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "galcar", version, about = "Hodge stars on Lorentzian, Galilean and Carrollian spacetimes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a Hodge star to a form literal such as "dt^dx + 2/3 dy^dz".
    Star(StarArgs),
    /// Print the symbolic 1+3 star table of a spacetime.
    Table(TableArgs),
    /// Run a seeded property suite: nilpotency, oracle, naturality, kernels or all.
    Verify(VerifyArgs),
    /// Derive the field equations for E and B read from a JSON file.
    Maxwell(MaxwellArgs),
}

#[derive(Debug, Args)]
pub struct StarArgs {
    pub form: String,
    /// minkowski, galilei or carroll.
    #[arg(long)]
    pub kind: Option<String>,
    /// Force the h-based or the k-based star instead of the default.
    #[arg(long)]
    pub variant: Option<String>,
    /// Spatial dimension.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// JSON structure document; the star is then computed by contraction.
    #[arg(long)]
    pub structure: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    pub kind: String,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: String,
    #[arg(long, default_value_t = 6)]
    pub max_dim: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random frame changes per group for the invariance check.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct MaxwellArgs {
    pub fields: PathBuf,
    #[arg(long)]
    pub kind: String,
    /// Accepted for symmetry with the other commands; the report is JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn with_code(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn error(code: i32, msg: impl Into<String>) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
            code,
        }
    }
}

/// Exit code for a library error: malformed input is 2, everything else
/// (bad combinations of options) is 3.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Document(_) => EXIT_PARSE,
        _ => EXIT_OPTION,
    }
}

fn fail(err: Error) -> Outcome {
    Outcome::error(exit_code(&err), err.to_string())
}

fn parse_kind(text: &str) -> Result<SpacetimeKind, Outcome> {
    text.parse()
        .map_err(|_| Outcome::error(EXIT_OPTION, format!("unknown kind `{text}`")))
}

fn read_file(path: &Path) -> Result<String, Outcome> {
    fs::read_to_string(path)
        .map_err(|err| Outcome::error(EXIT_PARSE, format!("cannot read {}: {err}", path.display())))
}

/// Star used when no `--variant` is given. In 1+3 dimensions this is the
/// table convention; otherwise the star that is nonzero in that degree
/// (k-based only in the exceptional degree).
pub fn default_variant(kind: SpacetimeKind, dim: usize, degree: usize) -> StarVariant {
    if dim == 4 {
        return StarVariant::table(kind);
    }
    match kind {
        SpacetimeKind::Galilean if degree == dim => StarVariant::GalileanK,
        SpacetimeKind::Carrollian if degree == 0 => StarVariant::CarrollianK,
        k => StarVariant::h_based(k),
    }
}

fn form_json(form: &Form<Rational>) -> Value {
    let terms: Vec<Value> = form
        .terms()
        .map(|(m, c)| {
            let factors: Vec<String> = m.indices().map(|i| factor_name(form.dim(), i)).collect();
            json!({
                "indices": m.indices().collect::<Vec<_>>(),
                "factors": factors.join("^"),
                "coeff": c.to_string(),
            })
        })
        .collect();
    json!({
        "dim": form.dim(),
        "degree": form.degree(),
        "literal": format_form(form),
        "terms": terms,
    })
}

pub fn cmd_star(args: &StarArgs) -> Outcome {
    let kind = match args.kind.as_deref().map(parse_kind).transpose() {
        Ok(k) => k,
        Err(out) => return out,
    };
    let structure: SpacetimeStructure<Rational> = match &args.structure {
        Some(path) => {
            let text = match read_file(path) {
                Ok(t) => t,
                Err(out) => return out,
            };
            let s = match StructureDoc::from_json(&text).and_then(|d| d.to_structure()) {
                Ok(s) => s,
                Err(err) => return fail(err),
            };
            if kind.is_some_and(|k| k != s.kind()) {
                return Outcome::error(
                    EXIT_OPTION,
                    format!("--kind disagrees with the structure file ({})", s.kind()),
                );
            }
            s
        }
        None => match SpacetimeStructure::canonical(kind.unwrap_or(SpacetimeKind::Minkowski), args.n) {
            Ok(s) => s,
            Err(err) => return fail(err),
        },
    };
    let kind = structure.kind();
    let dim = structure.dim();
    let form: Form<Rational> = match parse_form(&args.form, dim) {
        Ok(f) => f,
        Err(err) => return fail(err),
    };
    let variant = match args.variant.as_deref() {
        None => default_variant(kind, dim, form.degree()),
        Some("h") => StarVariant::h_based(kind),
        Some("k") => match StarVariant::k_based(kind) {
            Some(v) => v,
            None => return Outcome::error(EXIT_OPTION, format!("{kind} has no k-based star")),
        },
        Some(other) => match other.parse::<StarVariant>() {
            Ok(v) => v,
            Err(_) => {
                return Outcome::error(EXIT_OPTION, format!("unknown variant `{other}` (use h or k)"))
            }
        },
    };
    let result = if structure.is_canonical() {
        star_closed(&form, &structure, variant)
    } else {
        star_oracle(&form, &structure, variant)
    };
    match result {
        Ok(out) if args.json => {
            let mut v = form_json(&out);
            v["kind"] = json!(kind.flat_name());
            v["variant"] = json!(variant.name());
            Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json")))
        }
        Ok(out) => Outcome::ok(format!("{}\n", format_form(&out))),
        Err(err) => fail(err),
    }
}

pub fn cmd_table(args: &TableArgs) -> Outcome {
    let kind = match parse_kind(&args.kind) {
        Ok(k) => k,
        Err(out) => return out,
    };
    if args.json {
        let v = json!({
            "kind": kind.flat_name(),
            "lines": star_table(kind),
        });
        Outcome::ok(format!("{}\n", serde_json::to_string_pretty(&v).expect("json")))
    } else {
        Outcome::ok(format_star_table(kind))
    }
}

pub fn cmd_verify(args: &VerifyArgs) -> Outcome {
    let suite: Suite = match args.suite.parse() {
        Ok(s) => s,
        Err(_) => return Outcome::error(EXIT_OPTION, format!("unknown suite `{}`", args.suite)),
    };
    if !(2..=galcar_core::MAX_DIM).contains(&args.max_dim) {
        return Outcome::error(
            EXIT_OPTION,
            format!("--max-dim must lie in 2..={}", galcar_core::MAX_DIM),
        );
    }
    let cfg = VerifyConfig {
        max_dim: args.max_dim,
        seed: args.seed,
        invariance_samples: args.samples,
        ..VerifyConfig::default()
    };
    let reports = run_suite(suite, &cfg);
    let passed = reports.iter().all(|r| r.passed());
    let code = if passed { EXIT_OK } else { EXIT_FAILURE };
    let stdout = if args.json {
        let v = json!({
            "suite": suite.name(),
            "seed": args.seed,
            "max_dim": args.max_dim,
            "passed": passed,
            "reports": reports,
        });
        format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
    } else {
        let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
        s.push_str(if passed { "all properties hold\n" } else { "property violations found\n" });
        s
    };
    Outcome::with_code(stdout, code)
}

pub fn cmd_maxwell(args: &MaxwellArgs) -> Outcome {
    let kind = match parse_kind(&args.kind) {
        Ok(k) => k,
        Err(out) => return out,
    };
    let text = match read_file(&args.fields) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let parsed = FieldFile::from_json(&text).and_then(|f| f.parse::<Rational>());
    let (e, b) = match parsed {
        Ok(p) => p,
        Err(err) => return Outcome::error(EXIT_PARSE, err.to_string()),
    };
    let report = match extract_equations(&e, &b, kind) {
        Ok(eqs) => eqs.to_report(),
        Err(err) => return fail(err),
    };
    let code = if report.satisfied { EXIT_OK } else { EXIT_FAILURE };
    Outcome::with_code(
        format!("{}\n", serde_json::to_string_pretty(&report).expect("json")),
        code,
    )
}

pub fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Star(a) => cmd_star(a),
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Maxwell(a) => cmd_maxwell(a),
    }
}

/// Parses the arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => dispatch(&cli),
        Err(err) => {
            let code = if err.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = err.render().to_string();
            if err.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}
