//! Command-line front end. Every subcommand prints text by default or a
//! JSON document with `--format json`.
//!
//! Exit codes: 0 on success, 1 on invalid input or parse errors, 2 when a
//! resource limit is hit.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::fields::{factor_poly2, tower_obstruction, FieldError, FieldTower, Poly2};
use crate::frings::{
    parse_poly, parse_ring_spec, RingClassifier, RingError, RingOptions, UnitMethod,
};
use crate::nt::{classify_field, NtError};
use crate::search::{
    bang_scan, catalan_scan, consecutive_prime_powers, primitive_prime_divisor,
    primitive_prime_divisor_unchecked, scan_indecomposable_fields, BangWitness, ScanReport,
    SearchError, SearchOptions,
};

/// Environment variable holding the default worker count.
pub const WORKERS_ENV: &str = "INDECOMP_WORKERS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "indecomp",
    version,
    about = "Indecomposable unit groups of finite fields and finite commutative rings"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Worker threads for scans.
    #[arg(long, global = true, env = WORKERS_ENV, value_parser = parse_workers)]
    pub workers: Option<usize>,
    /// Largest ring enumerated element by element.
    #[arg(long, global = true, default_value = "4096", value_parser = parse_u64)]
    pub cap: u64,
    /// Largest bit length handed to the factoring routines.
    #[arg(long, global = true, default_value = "160", value_parser = parse_u64)]
    pub factor_bound: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether F_{p^r} has an indecomposable unit group.
    ClassifyField {
        #[arg(long, value_parser = parse_u64)]
        p: u64,
        #[arg(long, value_parser = parse_u32)]
        r: u32,
    },
    /// Unit group, indecomposability and list membership of a ring.
    ClassifyRing {
        /// Ring spec, e.g. "Z/2 * GF(9)".
        spec: String,
    },
    /// Unit group of a ring.
    UnitGroup {
        spec: String,
        #[command(flatten)]
        method: MethodArgs,
    },
    /// Prime powers q <= N with F_q^x indecomposable.
    ScanFields {
        #[arg(long, value_parser = parse_u64)]
        max: u64,
    },
    /// Solutions of x^u - y^v = 1 with x^u <= N.
    ScanCatalan {
        #[arg(long, value_parser = parse_u64)]
        max: u64,
    },
    /// Consecutive prime powers (a, a + 1) with a + 1 <= N.
    ScanPrimePowerPairs {
        #[arg(long, value_parser = parse_u64)]
        max: u64,
    },
    /// Smallest primitive prime divisor of a^t - 1.
    Bang {
        #[arg(long, value_parser = parse_u64)]
        a: u64,
        #[arg(long, value_parser = parse_u32)]
        t: u32,
    },
    /// Primitive prime divisors for all 3 <= a <= A, 3 <= t <= T.
    BangScan {
        #[arg(long, value_parser = parse_u64)]
        a_max: u64,
        #[arg(long, value_parser = parse_u32)]
        t_max: u32,
    },
    /// First level of the p-power cyclotomic tower over F_q where
    /// q^{n_i} - 1 is not a power of p.
    Tower {
        #[arg(long, value_parser = parse_u64)]
        q: u64,
        #[arg(long, value_parser = parse_u64)]
        p: u64,
        #[arg(long, default_value = "64", value_parser = parse_u32)]
        i_max: u32,
    },
    /// Factor a polynomial over F_2, e.g. "x^3 + x".
    Ffactor { poly: String },
    /// Norm from GF(Q^D) down to GF(Q).
    Norm {
        /// Extension as GF(Q^D).
        #[arg(long)]
        field: String,
        /// Prime-field coefficients, lowest degree first, e.g. "1,1".
        #[arg(long)]
        elem: String,
    },
}

#[derive(Debug, Args)]
#[group(multiple = false)]
pub struct MethodArgs {
    /// Closed formulas only.
    #[arg(long)]
    pub structural: bool,
    /// Exhaustive search only.
    #[arg(long)]
    pub bruteforce: bool,
}

fn parse_u64(s: &str) -> Result<u64, String> {
    let digits: String = s.chars().filter(|&c| c != '_').collect();
    if digits.is_empty() || s.starts_with('_') || s.ends_with('_') {
        return Err(format!("'{s}' is not a number"));
    }
    digits.parse().map_err(|e| format!("'{s}': {e}"))
}

fn parse_u32(s: &str) -> Result<u32, String> {
    let n = parse_u64(s)?;
    u32::try_from(n).map_err(|_| format!("'{s}' is too large"))
}

fn parse_workers(s: &str) -> Result<usize, String> {
    match parse_u64(s)? {
        0 => Err("the worker count must be at least 1".into()),
        n => usize::try_from(n).map_err(|_| format!("'{s}' is too large")),
    }
}

/// Failure of a subcommand.
#[derive(Debug)]
pub enum CliError {
    Invalid(String),
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Resource(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Invalid(m) => write!(f, "error: {m}"),
            CliError::Resource(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<RingError> for CliError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::ResourceLimit(_) => CliError::Resource(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::ResourceLimit(_) => CliError::Resource(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::ResourceLimit(_) => CliError::Resource(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<NtError> for CliError {
    fn from(e: NtError) -> Self {
        match e {
            NtError::ResourceLimit(_) => CliError::Resource(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

/// A command's result: the JSON document and its text rendering.
pub struct Output {
    pub json: Value,
    pub text: String,
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn list<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn scan_text<T>(report: &ScanReport<T>, title: &str, item: impl Fn(&T) -> String) -> String {
    let mut text = format!("{title} ({} found)", report.findings.len());
    for f in &report.findings {
        text.push('\n');
        text.push_str(&item(f));
    }
    text
}

/// Executes a parsed command.
pub fn execute(cli: &Cli) -> Result<Output, CliError> {
    let search = SearchOptions {
        workers: cli
            .workers
            .unwrap_or_else(|| SearchOptions::default().workers),
        factor_bits: cli.factor_bound,
        ..SearchOptions::default()
    };
    let rings = |method| RingOptions {
        brute_force_cap: cli.cap,
        method,
    };
    Ok(match &cli.command {
        Command::ClassifyField { p, r } => {
            let class = classify_field(*p, *r)?;
            let verdict = if class.is_indecomposable() {
                format!("indecomposable: {class}")
            } else {
                format!("decomposable: F_{}", BigUint::from(*p).pow(*r))
            };
            Output {
                json: json!({
                    "p": p,
                    "r": r,
                    "order": BigUint::from(*p).pow(*r).to_string(),
                    "indecomposable": class.is_indecomposable(),
                    "class": class.to_string(),
                }),
                text: verdict,
            }
        }
        Command::ClassifyRing { spec } => {
            let spec = parse_ring_spec(spec)?;
            let report = RingClassifier::new(rings(UnitMethod::Auto)).classify(&spec)?;
            Output {
                json: to_json(&report),
                text: report.to_string(),
            }
        }
        Command::UnitGroup { spec, method } => {
            let method = if method.structural {
                UnitMethod::Structural
            } else if method.bruteforce {
                UnitMethod::BruteForce
            } else {
                UnitMethod::Auto
            };
            let spec = parse_ring_spec(spec)?;
            let report = RingClassifier::new(rings(method)).classify(&spec)?;
            Output {
                text: format!(
                    "units of {}: {} (order {})",
                    report.spec, report.unit_group, report.unit_order
                ),
                json: to_json(&report),
            }
        }
        Command::ScanFields { max } => {
            let report = scan_indecomposable_fields(*max, &search)?;
            Output {
                text: format!(
                    "indecomposable fields of order at most {max} ({} found)\n{}",
                    report.findings.len(),
                    list(&report.findings)
                ),
                json: to_json(&report),
            }
        }
        Command::ScanCatalan { max } => {
            let report = catalan_scan(*max, &search)?;
            Output {
                text: scan_text(&report, &format!("solutions with x^u <= {max}"), |s| {
                    format!("{}^{} - {}^{} = 1", s.x, s.u, s.y, s.v)
                }),
                json: to_json(&report),
            }
        }
        Command::ScanPrimePowerPairs { max } => {
            let report = consecutive_prime_powers(*max, &search)?;
            Output {
                text: scan_text(
                    &report,
                    &format!("consecutive prime powers up to {max}"),
                    |p| {
                        format!(
                            "({}, {}) = ({}^{}, {}^{})",
                            p.a, p.b, p.a_prime, p.a_exponent, p.b_prime, p.b_exponent
                        )
                    },
                ),
                json: to_json(&report),
            }
        }
        Command::Bang { a, t } => match primitive_prime_divisor(*a, *t, &search) {
            Ok(l) => Output {
                text: format!("{l} is the smallest primitive prime divisor of {a}^{t} - 1"),
                json: to_json(&BangWitness {
                    a: *a,
                    t: *t,
                    witness: l,
                }),
            },
            Err(SearchError::HypothesisViolation(m)) => {
                let note = match primitive_prime_divisor_unchecked(*a, *t, &search) {
                    Ok(None) => format!("; {a}^{t} - 1 has no primitive prime divisor"),
                    Ok(Some(l)) => format!("; {l} is nevertheless primitive for {a}^{t} - 1"),
                    Err(_) => String::new(),
                };
                return Err(CliError::Invalid(format!("hypothesis violated: {m}{note}")));
            }
            Err(e) => return Err(e.into()),
        },
        Command::BangScan { a_max, t_max } => {
            let report = bang_scan(*a_max, *t_max, &search)?;
            Output {
                text: scan_text(
                    &report,
                    &format!("primitive prime divisors for 3 <= a <= {a_max}, 3 <= t <= {t_max}"),
                    |w| format!("{}^{} - 1: {}", w.a, w.t, w.witness),
                ),
                json: to_json(&report),
            }
        }
        Command::Tower { q, p, i_max } => {
            let ob = tower_obstruction(*q, *p, *i_max)?;
            let mut text = String::new();
            for s in &ob.steps {
                text.push_str(&format!(
                    "i = {}: n_i = {}, {q}^{} - 1 {} a power of {p}\n",
                    s.i,
                    s.n_i,
                    s.n_i,
                    if s.is_p_power { "is" } else { "is not" }
                ));
            }
            text.push_str(&format!("obstruction at i = {}", ob.i));
            Output {
                json: json!({
                    "q": ob.q,
                    "p": ob.p,
                    "i": ob.i,
                    "n_i": ob.n_i,
                    "value": ob.value.to_string(),
                    "class": ob.class.label(),
                    "steps": to_json(&ob.steps),
                }),
                text,
            }
        }
        Command::Ffactor { poly } => {
            let coeffs =
                parse_poly(poly, 2).map_err(|e| CliError::Invalid(format!("parse error {e}")))?;
            let f = Poly2::from_coeffs(&coeffs);
            if f.is_zero() {
                return Err(CliError::Invalid(
                    "cannot factor the zero polynomial".into(),
                ));
            }
            let factors = factor_poly2(&f);
            let rendered: Vec<String> = factors
                .iter()
                .map(|(g, e)| {
                    let g = g.to_string();
                    match e {
                        1 => g,
                        _ if g.contains(' ') => format!("({g})^{e}"),
                        _ => format!("{g}^{e}"),
                    }
                })
                .collect();
            let product = if rendered.is_empty() {
                "1".to_string()
            } else {
                rendered.join(" * ")
            };
            Output {
                text: format!("{f} = {product}"),
                json: json!({
                    "polynomial": f.to_string(),
                    "factors": factors
                        .iter()
                        .map(|(g, e)| json!({"factor": g.to_string(), "exponent": e}))
                        .collect::<Vec<_>>(),
                }),
            }
        }
        Command::Norm { field, elem } => {
            let (q, d) = parse_tower(field)?;
            let tower = FieldTower::new(q, d)?;
            let ext = tower.ext();
            let coeffs = elem
                .split(',')
                .map(|c| parse_u64(c.trim()).map_err(CliError::Invalid))
                .collect::<Result<Vec<_>, _>>()?;
            let a = ext.from_coeffs(&coeffs)?;
            let n = tower.norm(a);
            Output {
                text: format!(
                    "N({}) = {} in the subfield of order {q}",
                    ext.render(a),
                    ext.render(n)
                ),
                json: json!({
                    "field": format!("GF({q}^{d})"),
                    "base_order": q,
                    "degree": d,
                    "modulus": ext.modulus().to_string(),
                    "element": ext.coeffs(a),
                    "norm": ext.coeffs(n),
                }),
            }
        }
    })
}

/// Parses `GF(Q^D)`.
fn parse_tower(s: &str) -> Result<(u64, u32), CliError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| CliError::Invalid(format!("expected GF(Q^D), found '{s}'")))?;
    let (q, d) = inner
        .split_once('^')
        .ok_or_else(|| CliError::Invalid(format!("expected GF(Q^D), found '{s}'")))?;
    Ok((
        parse_u64(q).map_err(CliError::Invalid)?,
        parse_u32(d).map_err(CliError::Invalid)?,
    ))
}

/// Parses `args` (program name first), runs the command and writes its
/// output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{rendered}");
                1
            } else {
                let _ = write!(out, "{rendered}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let written = match cli.format {
                Format::Text => writeln!(out, "{}", output.text),
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&output.json).expect("json renders")
                ),
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.exit_code()
        }
    }
}
