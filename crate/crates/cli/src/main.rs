//! `satake`: JSON front end to satake-core.
//!
//! Exit codes: 0 success, 1 malformed input, 2 domain error, 3 identity
//! violation (including a tolerance that is not met).

mod commands;
mod input;

use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use satake_core::{Error, ErrorKind};
use serde_json::{json, Map, Value};

use input::{pairs_flag, parse_job, split_flag, Job};

#[derive(Debug)]
pub enum Failure {
    Schema {
        pointer: String,
        message: String,
    },
    Core(Error),
    /// A numeric check missed its tolerance.
    Tolerance(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Schema { .. } => 1,
            Failure::Core(e) if e.kind() == ErrorKind::IdentityViolation => 3,
            Failure::Core(_) => 2,
            Failure::Tolerance(_) => 3,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Schema { pointer, message } => {
                json!({ "kind": "schema", "pointer": pointer, "message": message })
            }
            Failure::Core(e) => {
                let kind = match e.kind() {
                    ErrorKind::Domain => "domain",
                    ErrorKind::Numeric => "numeric",
                    ErrorKind::IdentityViolation => "identity_violation",
                };
                json!({ "kind": kind, "message": e.to_string() })
            }
            Failure::Tolerance(m) => json!({ "kind": "identity_violation", "message": m }),
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "satake",
    version,
    about = "Genus-two curves, Satake sextics, theta constants and K3 fibrations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Rosenhain roots l1,l2,l3 (integers, p/q or decimals).
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "L1,L2,L3"
    )]
    rosenhain: Option<String>,

    /// Igusa invariants I2,I4,I6,I10.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "I2,I4,I6,I10"
    )]
    igusa: Option<String>,

    /// Siegel modular forms psi4,psi6,chi10,chi12.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "P4,P6,C10,C12"
    )]
    siegel: Option<String>,

    /// Quintic or sextic f with y^2 = f(x), ascending coefficients.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "C0,C1,..."
    )]
    sextic: Option<String>,

    /// Satake power sums s2,s3,s5,s6.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "S2,S3,S5,S6"
    )]
    power_sums: Option<String>,

    /// Period matrix [[t1, z], [z, t2]] as re1,im1,rez,imz,re2,im2.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "RE1,IM1,REZ,IMZ,RE2,IM2"
    )]
    tau: Option<String>,

    /// Ten even theta constants as re,im pairs, instead of --tau.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "RE,IM,..."
    )]
    theta_values: Option<String>,

    /// Satake sextic to check against the computed one, ascending coefficients.
    #[arg(
        long,
        global = true,
        allow_hyphen_values = true,
        value_name = "C0,...,C6"
    )]
    claim: Option<String>,

    /// Tolerance for numeric checks.
    #[arg(long, global = true, allow_hyphen_values = true)]
    tol: Option<String>,

    /// Half-width of the summation box for theta series.
    #[arg(long, global = true)]
    theta_radius: Option<String>,

    /// Fibration model for `fibration`.
    #[arg(
        long,
        global = true,
        value_name = "kummer1|kummer23|alternate|alternate-ftheory|standard"
    )]
    model: Option<String>,

    /// JSON job file, or `-` for standard input. An array runs as a batch.
    #[arg(long, global = true)]
    input: Option<String>,

    /// Write the JSON result here instead of standard output.
    #[arg(long, global = true)]
    out: Option<String>,

    /// Also print a plain-text table to standard error.
    #[arg(long, global = true)]
    table: bool,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Command {
    /// Igusa, absolute and Siegel invariants of a curve.
    Igusa,
    /// Power sums, Satake sextic, its discriminant and numeric roots.
    SatakeSextic,
    /// The map Phi on moduli with its intermediate quantities.
    Phi,
    /// Weierstrass model and singular fibers of a fibration.
    Fibration,
    /// Curve -> Satake roots -> Rosenhain roots, compared by invariants.
    Roundtrip,
    /// Theta constants, Frobenius identities and Satake coordinates at tau.
    Theta,
    /// Humbert loci and fiber-degeneration flags.
    Predicates,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Igusa => "igusa",
            Command::SatakeSextic => "satake-sextic",
            Command::Phi => "phi",
            Command::Fibration => "fibration",
            Command::Roundtrip => "roundtrip",
            Command::Theta => "theta",
            Command::Predicates => "predicates",
        }
    }

    fn run(self, job: &Job) -> Result<commands::Fields, Failure> {
        match self {
            Command::Igusa => commands::igusa(job),
            Command::SatakeSextic => commands::satake_sextic_cmd(job),
            Command::Phi => commands::phi(job),
            Command::Fibration => commands::fibration(job),
            Command::Roundtrip => commands::roundtrip_cmd(job),
            Command::Theta => commands::theta(job),
            Command::Predicates => commands::predicates(job),
        }
    }
}

fn envelope(cmd: Command, r: Result<commands::Fields, Failure>) -> (Value, u8) {
    let mut m = Map::new();
    m.insert("command".into(), json!(cmd.name()));
    let code = match r {
        Ok(fields) => {
            m.extend(fields);
            m.insert("status".into(), json!("ok"));
            0
        }
        Err(f) => {
            m.insert("status".into(), json!("error"));
            m.insert("error".into(), f.to_json());
            f.code()
        }
    };
    (Value::Object(m), code)
}

/// Flags as a job object so they go through the same schema checks as JSON.
fn flags_document(cli: &Cli) -> Option<Value> {
    let mut m = Map::new();
    let lists = [
        ("rosenhain", &cli.rosenhain),
        ("igusa", &cli.igusa),
        ("siegel", &cli.siegel),
        ("sextic", &cli.sextic),
        ("power_sums", &cli.power_sums),
        ("tau", &cli.tau),
        ("claim", &cli.claim),
    ];
    for (k, v) in lists {
        if let Some(s) = v {
            m.insert(k.into(), split_flag(s));
        }
    }
    if let Some(s) = &cli.theta_values {
        m.insert("theta_values".into(), pairs_flag(s));
    }
    if let Some(s) = &cli.tol {
        m.insert("tol".into(), json!(s));
    }
    if let Some(s) = &cli.theta_radius {
        m.insert(
            "theta_radius".into(),
            s.trim()
                .parse::<u64>()
                .map_or_else(|_| json!(s), |n| json!(n)),
        );
    }
    if let Some(s) = &cli.model {
        m.insert("model".into(), json!(s));
    }
    (!m.is_empty()).then_some(Value::Object(m))
}

/// Fills fields missing from a JSON job with the command-line flags.
fn merge(doc: &Value, flags: &Option<Value>) -> Value {
    match (doc, flags) {
        (Value::Object(d), Some(Value::Object(f))) => {
            let mut out = d.clone();
            for (k, v) in f {
                out.entry(k.clone()).or_insert_with(|| v.clone());
            }
            Value::Object(out)
        }
        _ => doc.clone(),
    }
}

fn read_document(cli: &Cli) -> Result<Option<Value>, Failure> {
    let text = match cli.input.as_deref() {
        Some("-") => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Schema {
                    pointer: String::new(),
                    message: format!("cannot read standard input: {e}"),
                })?;
            s
        }
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Schema {
            pointer: String::new(),
            message: format!("cannot read {path}: {e}"),
        })?,
        None => return Ok(None),
    };
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| Failure::Schema {
            pointer: String::new(),
            message: format!("invalid JSON: {e}"),
        })
}

fn run(cli: &Cli) -> (Value, u8) {
    let cmd = cli.command;
    let flags = flags_document(cli);
    let doc = match read_document(cli) {
        Ok(d) => d,
        Err(f) => return envelope(cmd, Err(f)),
    };
    let doc = match (doc, &flags) {
        (Some(d), _) => d,
        (None, Some(f)) => f.clone(),
        (None, None) => {
            // nothing on the command line: read a job from standard input
            let mut s = String::new();
            if std::io::stdin().read_to_string(&mut s).is_err() || s.trim().is_empty() {
                return envelope(
                    cmd,
                    Err(Failure::Schema {
                        pointer: String::new(),
                        message: "no input: pass flags, --input FILE, or JSON on standard input"
                            .into(),
                    }),
                );
            }
            match serde_json::from_str(&s) {
                Ok(v) => v,
                Err(e) => {
                    return envelope(
                        cmd,
                        Err(Failure::Schema {
                            pointer: String::new(),
                            message: format!("invalid JSON: {e}"),
                        }),
                    )
                }
            }
        }
    };
    match &doc {
        Value::Array(items) => {
            let results: Vec<(Value, u8)> = items
                .par_iter()
                .enumerate()
                .map(|(i, item)| {
                    let r = parse_job(&merge(item, &flags), &format!("/{i}"))
                        .and_then(|job| cmd.run(&job));
                    envelope(cmd, r)
                })
                .collect();
            let code = results.iter().map(|r| r.1).max().unwrap_or(0);
            let status = if code == 0 { "ok" } else { "error" };
            let out = json!({
                "command": cmd.name(),
                "status": status,
                "results": results.into_iter().map(|r| r.0).collect::<Vec<_>>(),
            });
            (out, code)
        }
        single => {
            let r = parse_job(&merge(single, &flags), "").and_then(|job| cmd.run(&job));
            envelope(cmd, r)
        }
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(_) | Value::Number(_) | Value::Null => Some(v.to_string()),
        _ => None,
    }
}

fn table(v: &Value, out: &mut impl Write) -> std::io::Result<()> {
    let Some(m) = v.as_object() else {
        return Ok(());
    };
    if let Some(Value::Array(rs)) = m.get("results") {
        for r in rs {
            table(r, out)?;
            writeln!(out)?;
        }
        return Ok(());
    }
    for (k, val) in m {
        if let Some(s) = scalar(val) {
            writeln!(out, "{k:<22} {s}")?;
        } else if k != "fibers" {
            writeln!(out, "{k:<22} {val}")?;
        }
    }
    if let Some(Value::Array(fs)) = m.get("fibers") {
        writeln!(out, "{:<8} {:<14} location", "type", "orders")?;
        for f in fs {
            let o = &f["orders"];
            let ord = format!("({}, {}, {})", o["g2"], o["g3"], o["disc"]);
            let loc = &f["location"];
            let place = match loc["kind"].as_str() {
                Some("rational") => format!("t = {}", loc["value"].as_str().unwrap_or("")),
                Some("infinity") => "t = infinity".to_string(),
                _ => format!("t ~ {}", loc["approx"]),
            };
            writeln!(
                out,
                "{:<8} {:<14} {}",
                f["type"].as_str().unwrap_or(""),
                ord,
                place
            )?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let (value, code) = run(&cli);
    let text = serde_json::to_string_pretty(&value).expect("serializable") + "\n";
    if cli.table {
        let _ = table(&value, &mut std::io::stderr());
    }
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {path}: {e}");
                return ExitCode::from(2);
            }
        }
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    ExitCode::from(code)
}
