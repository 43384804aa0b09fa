use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use kmt_core::bounds::{heisenberg_orth_bound, orth_bound, orth_bound_for_ring, s_sequence, RankTwoType};
use kmt_core::chevalley::checks::{
    centrality_report, quotient_relations_check, engine_report, g2_v4_conjugation_check, generation_report, GenGroup,
};
use kmt_core::chevalley::{affine_pi_check, ChevalleyError, ChevalleyType};
use kmt_core::symrep::{check_transport, ledger_check, symrep_report};
use kmt_core::{
    build_sigma, build_sigma_pseudo, certify, certify_property_t, CheckReport, Gcm, GcmError, OverallVerdict,
    RingSpec, RootSlice,
};

#[derive(Parser)]
#[command(name = "kmt", version, about = "Kac-Moody root systems, generating sets and property (T) bounds")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Validate and classify a generalized Cartan matrix.
    Classify(GcmArg),
    /// Enumerate real roots up to a height cap.
    Roots {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long, default_value_t = 12)]
        height_cap: i64,
    },
    /// Build and certify the generating root set.
    Sigma {
        #[command(flatten)]
        gcm: GcmArg,
        /// Comma-separated index set for the pseudo-parabolic variant.
        #[arg(long, value_delimiter = ',')]
        pseudo: Option<Vec<usize>>,
    },
    /// Tabulate the orthogonality bounds for an ideal index or a ring.
    Bounds {
        #[arg(long, conflicts_with = "ring", required_unless_present = "ring")]
        m: Option<u64>,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Run the full property (T) certificate pipeline.
    Certify {
        #[command(flatten)]
        gcm: GcmArg,
        #[arg(long)]
        ring: String,
    },
    /// Exhaustive and sampled verification of the group-level claims.
    #[command(subcommand)]
    Verify(Verify),
}

#[derive(Args)]
struct GcmArg {
    /// GCM text file: the size d, then d rows of integers.
    #[arg(long)]
    gcm: PathBuf,
}

#[derive(Subcommand)]
enum Verify {
    Chevalley {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Centrality {
        #[arg(long = "type", value_enum)]
        ty: TypeArg,
    },
    Quotient {
        #[arg(long, default_value_t = 5)]
        q: u64,
    },
    Dictionary {
        #[arg(long, default_value_t = 5)]
        q: u64,
    },
    Generation {
        #[arg(long, value_enum)]
        group: GroupArg,
        #[arg(long)]
        q: u64,
    },
    Affine {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 6)]
        window: i64,
    },
    Symrep {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Transport {
        #[arg(long)]
        q: u64,
        #[arg(long, default_value_t = 10_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    Ledger,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    A2,
    B2,
    G2,
}

impl From<TypeArg> for ChevalleyType {
    fn from(t: TypeArg) -> Self {
        match t {
            TypeArg::A2 => ChevalleyType::A2,
            TypeArg::B2 => ChevalleyType::B2,
            TypeArg::G2 => ChevalleyType::G2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    Sl3,
    Sp4,
}

impl From<GroupArg> for GenGroup {
    fn from(g: GroupArg) -> Self {
        match g {
            GroupArg::Sl3 => GenGroup::Sl3,
            GroupArg::Sp4 => GenGroup::Sp4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
enum Status {
    Ok,
    HypothesisFailure,
    Boundary,
}

impl Status {
    fn exit_code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::HypothesisFailure | Status::Boundary => 1,
        }
    }
}

/// An input error; reported on stderr with exit code 2.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

struct Outcome {
    command: &'static str,
    status: Status,
    report: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let envelope = json!({ "command": out.command, "status": out.status, "report": out.report });
            match cli.format {
                Format::Json => emit(&serde_json::to_string_pretty(&envelope).expect("serializable")),
                Format::Text => print_text(&out),
            }
            ExitCode::from(out.status.exit_code())
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Outcome, InputError> {
    match command {
        Command::Classify(arg) => {
            let gcm = load_gcm(&arg.gcm)?;
            let report = json!({ "matrix": gcm.rows(), "classification": gcm.classify() });
            Ok(ok("classify", report))
        }
        Command::Roots { gcm, height_cap } => {
            let gcm = load_gcm(&gcm.gcm)?;
            if height_cap < 1 {
                return Err(InputError("height cap must be at least 1".into()));
            }
            let slice = RootSlice::enumerate(&gcm, height_cap)?;
            let entries: Vec<_> = slice.iter().collect();
            Ok(ok("roots", json!({ "height_cap": height_cap, "count": entries.len(), "roots": entries })))
        }
        Command::Sigma { gcm, pseudo } => {
            let gcm = load_gcm(&gcm.gcm)?;
            let sigma = match &pseudo {
                Some(set) => build_sigma_pseudo(&gcm, set)?,
                None => build_sigma(&gcm)?,
            };
            let certificates = certify(&sigma)?;
            Ok(ok("sigma", json!({ "sigma": sigma, "certificates": certificates })))
        }
        Command::Bounds { m, ring } => bounds(m, ring.as_deref()),
        Command::Certify { gcm, ring } => {
            let gcm = load_gcm(&gcm.gcm)?;
            let ring = parse_ring(&ring)?;
            let cert = certify_property_t(&gcm, &ring);
            let status = match cert.verdict {
                OverallVerdict::Certified => Status::Ok,
                OverallVerdict::Boundary => Status::Boundary,
                OverallVerdict::Failed => Status::HypothesisFailure,
            };
            Ok(Outcome {
                command: "certify",
                status,
                report: serde_json::to_value(&cert)?,
            })
        }
        Command::Verify(v) => verify(v),
    }
}

fn ok(command: &'static str, report: Value) -> Outcome {
    Outcome {
        command,
        status: Status::Ok,
        report,
    }
}

fn bounds(m: Option<u64>, ring: Option<&str>) -> Result<Outcome, InputError> {
    let ring = ring.map(parse_ring).transpose()?;
    let m = match (&ring, m) {
        (Some(r), _) => r.min_ideal_index(),
        (None, Some(m)) => m,
        (None, None) => unreachable!("clap requires --m or --ring"),
    };
    if m < 2 {
        return Err(InputError(format!("m must be at least 2, got {m}")));
    }
    let s: Vec<f64> = (0..=8).map(|i| s_sequence(m as f64, i)).collect::<Result<_, _>>()?;
    let mut orth = serde_json::Map::new();
    for t in [RankTwoType::A1xA1, RankTwoType::A2, RankTwoType::B2, RankTwoType::G2] {
        let entry = match &ring {
            Some(r) => match orth_bound_for_ring(t, r) {
                Ok(b) => json!({ "bound": b }),
                Err(e) => json!({ "bound": null, "unmet": e.to_string() }),
            },
            None => json!({ "bound": orth_bound(t, m)? }),
        };
        orth.insert(format!("{t:?}"), entry);
    }
    let report = json!({
        "ring": ring,
        "m": m,
        "s": s,
        "orth": orth,
        "heisenberg": heisenberg_orth_bound(m)?,
    });
    Ok(ok("bounds", report))
}

fn verify(v: Verify) -> Result<Outcome, InputError> {
    let report = match v {
        Verify::Chevalley { ty, q, samples, seed } => engine_report(ty.into(), q, samples, seed),
        Verify::Centrality { ty } => centrality_report(ty.into()),
        Verify::Quotient { q } => quotient_relations_check(q),
        Verify::Dictionary { q } => g2_v4_conjugation_check(q),
        Verify::Generation { group, q } => generation_report(group.into(), q),
        Verify::Affine { d, q, window } => affine_pi_check(d, q, window),
        Verify::Symrep { n, q, seed } => return check_report(symrep_report(n, q, seed)?),
        Verify::Transport { q, samples, seed } => return check_report(check_transport(q, samples, seed)?),
        Verify::Ledger => return check_report(ledger_check()),
    };
    match report {
        Ok(r) => check_report(r),
        Err(ChevalleyError::DictionaryNotFound) => Ok(Outcome {
            command: "verify",
            status: Status::HypothesisFailure,
            report: json!({ "checks": [], "error": ChevalleyError::DictionaryNotFound.to_string() }),
        }),
        Err(e) => Err(e.into()),
    }
}

fn check_report(r: CheckReport) -> Result<Outcome, InputError> {
    let status = if r.passed() { Status::Ok } else { Status::HypothesisFailure };
    Ok(Outcome {
        command: "verify",
        status,
        report: serde_json::to_value(&r)?,
    })
}

fn parse_ring(text: &str) -> Result<RingSpec, InputError> {
    text.parse::<RingSpec>().map_err(|e| InputError(format!("{text:?}: {e}")))
}

fn load_gcm(path: &Path) -> Result<Gcm, InputError> {
    let text = fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    text.parse::<Gcm>().map_err(|e| {
        let msg = match &e {
            GcmError::AxiomViolation { i, j, .. } => match locate_entry(&text, *i, *j) {
                Some((line, column)) => format!("line {line}, column {column}: {e}"),
                None => e.to_string(),
            },
            _ => e.to_string(),
        };
        InputError(format!("{}: {msg}", path.display()))
    })
}

/// Line and column of matrix entry `(i, j)` in a well-formed GCM file.
fn locate_entry(text: &str, i: usize, j: usize) -> Option<(usize, usize)> {
    let (line_no, line) = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .nth(i + 1)?;
    let token = line.split_whitespace().nth(j)?;
    Some((line_no + 1, token.as_ptr() as usize - line.as_ptr() as usize + 1))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn print_text(out: &Outcome) {
    let status = serde_json::to_value(out.status).expect("serializable");
    let mut lines = vec![format!("{} [{}]", out.command, status.as_str().unwrap_or(""))];
    match out.report.get("checks").and_then(Value::as_array) {
        Some(checks) => {
            for c in checks {
                let failed = c["failed"].as_u64().unwrap_or(0);
                let tag = if failed == 0 { "PASS" } else { "FAIL" };
                lines.push(format!("{tag} {}: {} tried, {failed} failed", c["name"].as_str().unwrap_or("?"), c["tried"]));
            }
        }
        None => lines.push(serde_json::to_string_pretty(&out.report).expect("serializable")),
    }
    emit(&lines.join("\n"));
}
