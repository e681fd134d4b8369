//! The `carlitz` command line: table generation, single values, and
//! verification suites, emitted as JSON lines, CSV, or plain text.
//!
//! Exit codes: 0 success, 2 bad flags, 3 size guard exceeded, 4 a method
//! mismatch or failed identity, 1 any other error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::carlitz::{CarlitzContext, CarlitzKind};
use crate::classical::{hyper_numbers, AssocKind, AssocStirlingTable, HyperFamily, Method};
use crate::error::Error;
use crate::ff::PolyStyle;
use crate::limits::Limits;
use crate::stirling::{StirlingCarlitzTable, StirlingKind};
use crate::verify::{self, VerifyReport};

pub const SCHEMA_VERSION: u32 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;
pub const EXIT_MISMATCH: i32 = 4;

/// Column order of CSV output.
pub const CSV_HEADER: [&str; 13] = [
    "schema_version",
    "command",
    "r",
    "N",
    "m",
    "n",
    "k",
    "kind",
    "method",
    "value",
    "agree",
    "checked",
    "detail",
];

/// One emitted value. `value` is a polynomial in the `c*T^k + ...` text
/// format, a `num / den` rational function, or a `num/den` rational.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: u32,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    #[serde(rename = "N", default, skip_serializing_if = "Option::is_none")]
    pub big_n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub method: String,
    pub value: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checked: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl OutputRecord {
    fn new(command: &str, method: &str, value: String) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            r: None,
            big_n: None,
            m: None,
            n: None,
            k: None,
            kind: None,
            method: method.to_string(),
            value,
            agree: None,
            checked: None,
            detail: None,
        }
    }

    fn csv_row(&self) -> Vec<String> {
        let opt = |v: Option<String>| v.unwrap_or_default();
        vec![
            self.schema_version.to_string(),
            self.command.clone(),
            opt(self.r.map(|v| v.to_string())),
            opt(self.big_n.map(|v| v.to_string())),
            opt(self.m.map(|v| v.to_string())),
            opt(self.n.map(|v| v.to_string())),
            opt(self.k.map(|v| v.to_string())),
            opt(self.kind.clone()),
            self.method.clone(),
            self.value.clone(),
            opt(self.agree.map(|v| v.to_string())),
            opt(self.checked.map(|v| v.to_string())),
            opt(self.detail.clone()),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Series,
    Strict,
    Weak,
    Assoc,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Hb,
    Hc,
}

impl From<FamilyArg> for HyperFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Hb => HyperFamily::Bernoulli,
            FamilyArg::Hc => HyperFamily::Cauchy,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "carlitz", version, about = "Exact Carlitz and hypergeometric number tables")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "json")]
    pub format: Format,
    /// Show coefficients mod p as signed residues (-1 instead of p-1).
    #[arg(long, global = true)]
    pub balanced: bool,
    /// Disable the degree and enumeration guards.
    #[arg(long, global = true)]
    pub unsafe_limits: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FieldArgs {
    /// Size of the finite field (a prime power).
    #[arg(long = "r")]
    pub r: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// [i], D_i and L_i for i = 0..=max-n.
    Brackets {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
    /// Coefficients of e_n(z) = prod over deg < n of (z + a).
    En {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long = "n")]
        n: u32,
    },
    /// A-Stirling-Carlitz numbers of the first or second kind.
    StirlingA {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_enum, default_value = "first")]
        kind: KindArg,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
    /// Bernoulli-Carlitz numbers BC_n (default max-n = r^2).
    Bc {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Cauchy-Carlitz numbers CC_n (default max-n = r^2).
    Cc {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        max_n: Option<usize>,
    },
    /// Hypergeometric Bernoulli numbers B_{N,n}.
    Hb(HyperArgs),
    /// Hypergeometric Cauchy numbers c_{N,n}.
    Hc(HyperArgs),
    /// Associated Stirling numbers (>= m) of the first or second kind.
    AssocStirling {
        #[arg(long, value_enum, default_value = "first")]
        kind: KindArg,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, default_value_t = 10)]
        max_n: u64,
        /// Query a single entry (requires --k).
        #[arg(long = "n", requires = "k")]
        n: Option<u64>,
        #[arg(long = "k", requires = "n")]
        k: Option<u64>,
    },
    /// Identity-verification suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Args)]
pub struct HyperArgs {
    #[arg(long = "N")]
    pub big_n: u64,
    #[arg(long, default_value_t = 10)]
    pub max_n: u64,
    #[arg(long, value_enum, default_value = "series")]
    pub method: MethodArg,
}

#[derive(Debug, Subcommand)]
pub enum Suite {
    /// Both orthogonality relations between the A-Stirling-Carlitz tables.
    Orthogonality {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
    /// sum_a (-1)^a / (L_a D_{l-a}^(r^a)) = [l = 0].
    Delta {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 6)]
        max_l: u32,
    },
    /// Product and quotient rules on random series over Q and F_3(T).
    HtRules {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Associated Stirling numbers vs. weak-composition sums.
    Compositions {
        #[arg(long = "max-N", default_value_t = 3)]
        max_big_n: u64,
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        #[arg(long, default_value_t = 4)]
        max_k: u64,
    },
    /// All four hypergeometric methods agree.
    CrossMethod {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long = "N")]
        big_n: u64,
        #[arg(long, default_value_t = 8)]
        max_n: u64,
    },
    /// Closed forms vs. expanded e_n and the triangular linear system.
    ClosedForm {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, default_value_t = 3)]
        max_n: u32,
    },
    /// BC_n and CC_n by series inversion vs. the quotient rule.
    CarlitzCoeffs {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

struct Emitter<'a> {
    format: Format,
    out: &'a mut dyn Write,
    csv_started: bool,
}

impl Emitter<'_> {
    fn record(&mut self, rec: &OutputRecord, text: impl FnOnce() -> String) -> std::io::Result<()> {
        match self.format {
            Format::Json => {
                let line = serde_json::to_string(rec).expect("records serialize");
                writeln!(self.out, "{line}")
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
                if !self.csv_started {
                    w.write_record(CSV_HEADER)?;
                    self.csv_started = true;
                }
                w.write_record(rec.csv_row())?;
                let bytes = w.into_inner().map_err(|e| e.into_error())?;
                self.out.write_all(&bytes)
            }
            Format::Text => writeln!(self.out, "{}", text()),
        }
    }

    fn finish(&mut self) -> std::io::Result<()> {
        if self.format == Format::Csv && !self.csv_started {
            let mut w = csv::WriterBuilder::new().from_writer(Vec::new());
            w.write_record(CSV_HEADER)?;
            let bytes = w.into_inner().map_err(|e| e.into_error())?;
            self.out.write_all(&bytes)?;
        }
        self.out.flush()
    }
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing records to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.exit_code() == 0 {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let _ = write!(err, "{}", e.render());
            return EXIT_USAGE;
        }
    };
    let limits = if cli.unsafe_limits {
        let _ = writeln!(err, "warning: --unsafe-limits disables all size guards");
        Limits::unlimited()
    } else {
        match Limits::from_env() {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_USAGE;
            }
        }
    };
    let style = if cli.balanced { PolyStyle::Balanced } else { PolyStyle::Canonical };
    let mut emitter = Emitter { format: cli.format, out, csv_started: false };
    let result = dispatch(&cli.command, &limits, style, &mut emitter);
    let result = result.and_then(|code| {
        emitter.finish()?;
        Ok(code)
    });
    match result {
        Ok(code) => code,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                e if e.is_guard() => EXIT_GUARD,
                Error::InvalidArgument(_) | Error::InvalidField(_) | Error::IndexOutOfRange { .. } => EXIT_USAGE,
                Error::InexactDivision { .. } | Error::SparsityViolation { .. } => EXIT_MISMATCH,
                _ => EXIT_ERROR,
            }
        }
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn context(field: &FieldArgs, limits: &Limits) -> Result<CarlitzContext, Error> {
    CarlitzContext::with_limits(field.r, *limits)
}

fn stirling_kind(k: KindArg) -> StirlingKind {
    match k {
        KindArg::First => StirlingKind::First,
        KindArg::Second => StirlingKind::Second,
    }
}

fn assoc_kind(k: KindArg) -> AssocKind {
    match k {
        KindArg::First => AssocKind::First,
        KindArg::Second => AssocKind::Second,
    }
}

fn dispatch(cmd: &Command, limits: &Limits, style: PolyStyle, em: &mut Emitter<'_>) -> Result<i32, Failure> {
    match cmd {
        Command::Brackets { field, max_n } => {
            let ctx = context(field, limits)?;
            for i in 0..=*max_n {
                let mut items = vec![("D", ctx.d(i)?), ("L", ctx.l(i)?)];
                if i >= 1 {
                    items.insert(0, ("bracket", ctx.bracket(i)?));
                }
                for (what, poly) in items {
                    let mut rec = OutputRecord::new("brackets", what, poly.display(style));
                    rec.r = Some(ctx.r());
                    rec.n = Some(i as u64);
                    let label = if what == "bracket" { format!("[{i}]") } else { format!("{what}_{i}") };
                    em.record(&rec, || format!("{label} = {}", rec.value))?;
                }
            }
        }
        Command::En { field, n } => {
            let ctx = context(field, limits)?;
            let e = ctx.e_n(*n)?;
            for (i, c) in e.coeffs().iter().enumerate() {
                let mut rec = OutputRecord::new("en", "product", c.display(style));
                rec.r = Some(ctx.r());
                rec.n = Some(*n as u64);
                rec.k = Some(i as u64);
                if em.format != Format::Text {
                    em.record(&rec, String::new)?;
                }
            }
            if em.format == Format::Text {
                writeln!(em.out, "e_{n}(z) = {}", e.display(style))?;
            }
        }
        Command::StirlingA { field, kind, max_n } => {
            let ctx = context(field, limits)?;
            let kind = stirling_kind(*kind);
            let table = StirlingCarlitzTable::build(&ctx, kind, *max_n)?;
            let sym = if kind == StirlingKind::First { "stf" } else { "sts" };
            for (n, k, v) in table.entries() {
                let mut rec = OutputRecord::new("stirling-a", "closed-form", v.display(style));
                rec.r = Some(ctx.r());
                rec.n = Some(n as u64);
                rec.k = Some(k as u64);
                rec.kind = Some(kind.label().into());
                em.record(&rec, || format!("{sym}{{{n}}}{{{k}}}_A = {}", rec.value))?;
            }
        }
        Command::Bc { field, max_n } | Command::Cc { field, max_n } => {
            let ctx = context(field, limits)?;
            let (kind, name) = match cmd {
                Command::Bc { .. } => (CarlitzKind::Bernoulli, "bc"),
                _ => (CarlitzKind::Cauchy, "cc"),
            };
            let max_n = max_n.unwrap_or_else(|| ctx.default_max_n());
            let seq = ctx.bc_cc_numbers(kind, max_n)?;
            for (n, v) in seq.values.iter().enumerate() {
                let mut rec = OutputRecord::new(name, "series", v.display(style));
                rec.r = Some(ctx.r());
                rec.n = Some(n as u64);
                em.record(&rec, || format!("{}_{n} = {}", kind.label(), rec.value))?;
            }
        }
        Command::Hb(args) | Command::Hc(args) => {
            let family = if matches!(cmd, Command::Hb(_)) { HyperFamily::Bernoulli } else { HyperFamily::Cauchy };
            return hyper(family, args, limits, em);
        }
        Command::AssocStirling { kind, m, max_n, n, k } => {
            let kind = assoc_kind(*kind);
            let top = n.unwrap_or(*max_n);
            let table = AssocStirlingTable::build(kind, *m, top)?;
            let sym = if kind == AssocKind::First { "stf" } else { "sts" };
            let entries: Vec<(u64, u64, &BigRational)> = match (n, k) {
                (Some(n), Some(k)) => {
                    let v = table.get(*n, *k).ok_or(Error::IndexOutOfRange { n: *n, k: *k })?;
                    vec![(*n, *k, v)]
                }
                _ => table.entries().collect(),
            };
            for (n, k, v) in entries {
                let mut rec = OutputRecord::new("assoc-stirling", "generating-function", v.to_string());
                rec.m = Some(*m);
                rec.n = Some(n);
                rec.k = Some(k);
                rec.kind = Some(kind.label().into());
                em.record(&rec, || format!("{sym}{{{n}}}{{{k}}}_{{>={m}}} = {}", rec.value))?;
            }
        }
        Command::Verify { suite } => return run_suite(suite, limits, em),
    }
    Ok(EXIT_OK)
}

fn hyper(family: HyperFamily, args: &HyperArgs, limits: &Limits, em: &mut Emitter<'_>) -> Result<i32, Failure> {
    let methods: Vec<Method> = match args.method {
        MethodArg::Series => vec![Method::Series],
        MethodArg::Strict => vec![Method::Strict],
        MethodArg::Weak => vec![Method::Weak],
        MethodArg::Assoc => vec![Method::Assoc],
        MethodArg::All => Method::ALL.to_vec(),
    };
    let runs = methods
        .iter()
        .map(|&m| hyper_numbers(family, args.big_n, args.max_n, m, limits))
        .collect::<Result<Vec<_>, _>>()?;
    let compare = runs.len() > 1;
    let sym = if family == HyperFamily::Bernoulli { "B" } else { "c" };
    let mut all_agree = true;
    for n in 0..=args.max_n as usize {
        let agree = runs.iter().all(|run| run.values[n] == runs[0].values[n]);
        all_agree &= agree;
        if em.format == Format::Text && compare {
            let cols: Vec<String> = runs.iter().map(|run| run.values[n].to_string()).collect();
            let flag = if agree { "ok" } else { "MISMATCH" };
            writeln!(em.out, "{sym}_{{{},{n}}}: {}  [{flag}]", args.big_n, cols.join("  "))?;
            continue;
        }
        for run in &runs {
            let mut rec = OutputRecord::new(family.label(), run.method.label(), run.values[n].to_string());
            rec.big_n = Some(args.big_n);
            rec.n = Some(n as u64);
            if compare {
                rec.agree = Some(agree);
            }
            em.record(&rec, || format!("{sym}_{{{},{n}}} = {}", args.big_n, rec.value))?;
        }
    }
    Ok(if all_agree { EXIT_OK } else { EXIT_MISMATCH })
}

fn run_suite(suite: &Suite, limits: &Limits, em: &mut Emitter<'_>) -> Result<i32, Failure> {
    let mut rec_r = None;
    let rec_n;
    let report: VerifyReport = match suite {
        Suite::Orthogonality { field, max_n } => {
            let ctx = context(field, limits)?;
            rec_r = Some(ctx.r());
            rec_n = Some(*max_n as u64);
            verify::orthogonality(&ctx, *max_n)?
        }
        Suite::Delta { field, max_l } => {
            let ctx = context(field, limits)?;
            rec_r = Some(ctx.r());
            rec_n = Some(*max_l as u64);
            verify::delta(&ctx, *max_l)?
        }
        Suite::HtRules { cases, max_n, seed } => {
            rec_n = Some(*max_n as u64);
            verify::ht_rules(*cases, *max_n, *seed)?
        }
        Suite::Compositions { max_big_n, max_n, max_k } => {
            rec_n = Some(*max_n);
            verify::compositions(*max_big_n, *max_n, *max_k)?
        }
        Suite::CrossMethod { family, big_n, max_n } => {
            rec_n = Some(*max_n);
            verify::cross_method((*family).into(), *big_n, *max_n, limits)?
        }
        Suite::ClosedForm { field, max_n } => {
            let ctx = context(field, limits)?;
            rec_r = Some(ctx.r());
            rec_n = Some(*max_n as u64);
            verify::closed_form(&ctx, *max_n)?
        }
        Suite::CarlitzCoeffs { field, max_n } => {
            let ctx = context(field, limits)?;
            rec_r = Some(ctx.r());
            let max_n = max_n.unwrap_or_else(|| ctx.default_max_n());
            rec_n = Some(max_n as u64);
            verify::carlitz_coeffs(&ctx, max_n)?
        }
    };
    let status = if report.passed() { "pass" } else { "fail" };
    let mut rec = OutputRecord::new("verify", report.suite, status.into());
    rec.r = rec_r;
    rec.n = rec_n;
    rec.checked = Some(report.checked);
    if let Suite::CrossMethod { big_n, .. } = suite {
        rec.big_n = Some(*big_n);
    }
    if !report.passed() {
        rec.detail = Some(report.failures.join("; "));
    }
    em.record(&rec, || {
        let mut line = format!("{} {} ({} checks)", status.to_uppercase(), report.suite, report.checked);
        for f in &report.failures {
            line.push_str(&format!("\n  {f}"));
        }
        line
    })?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}
