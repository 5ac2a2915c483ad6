//! The `monogen` command line.
//!
//! Exit codes: 0 on success, 2 for malformed input or usage errors, 3 when a
//! run finishes but one of its internal checks fails (a bound violated, a
//! triple that does not verify, or a disagreement with the oracle).

pub mod corpus;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use monogen_core::algebra::BinaryForm;
use monogen_core::monogenize::{compare_with_oracle, PipelineConfig, PipelineReport};
use monogen_core::oracle::SearchBox;
use monogen_core::thue::{solve_bounded, ThueProblem};
use monogen_core::{enumerate_monogenizations, QuarticGenerator};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use corpus::{file_stem, parse_corpus, Rejected};
use report::{oracle_text, report_text, thue_text, to_csv, OracleDoc, ReportDoc, ThueDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "monogen", version, about = "Monogenizations of quartic orders Z[ξ]")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Enumerate the monogenizations of Z[ξ] for one minimal polynomial.
    Analyze {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every entry of a corpus file (`label a1 a2 a3 a4` per line).
    Corpus {
        file: PathBuf,
        /// Write one report per entry plus `summary.<ext>` into this directory.
        #[arg(long)]
        out_dir: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Solve F(U, V) ∈ rhs for a binary form of degree 3 or 4 with |v| ≤ height.
    Thue {
        /// Coefficients of U^n, U^(n-1)V, ..., V^n.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        form: Vec<BigInt>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,-1")]
        rhs: Vec<BigInt>,
        #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
        height: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compare the pipeline with the exhaustive oracle on a box.
    OracleCheck {
        #[command(flatten)]
        poly: PolyArgs,
        #[command(flatten)]
        run: RunArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
pub struct PolyArgs {
    /// a1,a2,a3,a4 of T^4 + a1 T^3 + a2 T^2 + a3 T + a4.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true, num_args = 1)]
    pub coeffs: Vec<BigInt>,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub cubic_height: u64,
    #[arg(long, default_value_t = 1_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub quartic_height: u64,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub conic_bound: u64,
    /// Box for the direct system search on branches without a conic point.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub fallback_box: u64,
    /// Box for the oracle comparison.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub oracle_box: u64,
    /// Attach an oracle comparison to the report.
    #[arg(long)]
    pub oracle: bool,
    /// Search every non-trivial branch system directly and merge what the
    /// parametrization missed.
    #[arg(long)]
    pub cross_validate: bool,
    /// Record Q'1 composed with the trivial parametrization for every branch.
    #[arg(long)]
    pub literal: bool,
}

impl RunArgs {
    pub fn config(&self, with_oracle: bool) -> PipelineConfig {
        PipelineConfig {
            cubic_height: self.cubic_height,
            quartic_height: self.quartic_height,
            conic_point_bound: self.conic_bound,
            fallback_box: self.fallback_box,
            cross_validate: self.cross_validate,
            literal_comparison: self.literal,
            oracle_box: (with_oracle || self.oracle).then_some(self.oracle_box),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    configure_threads();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("monogen: {}", f.message);
            f.code
        }
    }
}

/// `MONOGEN_THREADS` sets the size of the worker pool.
fn configure_threads() {
    if let Some(n) = std::env::var("MONOGEN_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn dispatch(cmd: Command) -> Result<i32, Failure> {
    match cmd {
        Command::Analyze { poly, run, out } => {
            let p = generator(&poly)?;
            let report = enumerate_monogenizations(&p, &run.config(false));
            emit(&out, &render_report(&report, out.format))?;
            Ok(report_status(&report))
        }
        Command::OracleCheck { poly, run, out } => {
            let p = generator(&poly)?;
            let cfg = PipelineConfig { oracle_box: None, ..run.config(false) };
            let report = enumerate_monogenizations(&p, &cfg);
            let b = SearchBox::new(run.oracle_box).expect("bound is at least 1");
            let cmp = OracleDoc::of(&compare_with_oracle(&report, b));
            let text = match out.format {
                Format::Json => json(&cmp),
                Format::Csv => to_csv(&cmp),
                Format::Text => oracle_text(&cmp),
            };
            emit(&out, &text)?;
            Ok(if cmp.agrees { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Thue { form, rhs, height, out } => {
            let f = BinaryForm::new(form);
            let problem = ThueProblem::new(f.clone(), rhs, height).map_err(|e| usage(e.to_string()))?;
            if f.degree() > 4 {
                return Err(usage(format!("form degree must be 3 or 4, got {}", f.degree())));
            }
            let doc = ThueDoc::of(&f, &solve_bounded(&problem));
            let text = match out.format {
                Format::Json => json(&doc),
                Format::Csv => to_csv(&doc),
                Format::Text => thue_text(&doc),
            };
            emit(&out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Corpus { file, out_dir, run, out } => run_corpus(&file, out_dir.as_deref(), &run, &out),
    }
}

fn generator(poly: &PolyArgs) -> Result<QuarticGenerator, Failure> {
    let [a1, a2, a3, a4]: [BigInt; 4] = poly
        .coeffs
        .clone()
        .try_into()
        .map_err(|c: Vec<BigInt>| usage(format!("expected 4 coefficients, got {}", c.len())))?;
    QuarticGenerator::new(a1, a2, a3, a4).map_err(|e| usage(e.to_string()))
}

fn report_status(r: &PipelineReport) -> i32 {
    let verified = r.branches.iter().all(|b| b.discrepancies.is_empty());
    let oracle_ok = r.oracle.as_ref().map_or(true, |c| c.agrees());
    if r.diagnostics.pass() && verified && oracle_ok {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn render_report(r: &PipelineReport, format: Format) -> String {
    match format {
        Format::Json => json(&ReportDoc::of(r)),
        Format::Csv => to_csv(&ReportDoc::of(r)),
        Format::Text => report_text(r),
    }
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| usage(format!("cannot write to stdout: {e}")))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryRow {
    pub label: String,
    pub line: String,
    pub status: String,
    pub reason: Option<String>,
    pub discriminant: Option<String>,
    pub discriminant_sign: Option<String>,
    pub cubic: Option<String>,
    pub classes: Option<String>,
    pub bounds_pass: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub entries: Vec<SummaryRow>,
    pub processed: String,
    pub rejected: String,
    pub failed: String,
    pub max_classes: String,
    pub total_max: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledReport {
    pub label: String,
    pub report: ReportDoc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusDoc {
    pub reports: Vec<LabeledReport>,
    pub summary: CorpusSummary,
}

fn run_corpus(file: &Path, out_dir: Option<&Path>, run: &RunArgs, out: &OutputArgs) -> Result<i32, Failure> {
    let text = fs::read_to_string(file).map_err(|e| usage(format!("cannot read {}: {e}", file.display())))?;
    let cfg = run.config(false);
    let parsed = parse_corpus(&text);
    let results: Vec<Result<(String, usize, PipelineReport), Rejected>> = parsed
        .into_par_iter()
        .map(|entry| entry.map(|e| {
            let report = enumerate_monogenizations(&e.generator, &cfg);
            (e.label, e.line, report)
        }))
        .collect();

    let mut rows = Vec::new();
    let mut reports = Vec::new();
    let (mut rejected, mut failed, mut max_classes) = (0usize, 0usize, 0usize);
    for r in &results {
        match r {
            Ok((label, line, report)) => {
                let ok = report_status(report) == EXIT_OK;
                if !ok {
                    failed += 1;
                }
                max_classes = max_classes.max(report.classes.len());
                rows.push(SummaryRow {
                    label: label.clone(),
                    line: line.to_string(),
                    status: if ok { "ok" } else { "check-failed" }.into(),
                    reason: None,
                    discriminant: Some(report.discriminant.to_string()),
                    discriminant_sign: Some(report.diagnostics.discriminant_sign.to_string()),
                    cubic: Some(report.counts.cubic.to_string()),
                    classes: Some(report.classes.len().to_string()),
                    bounds_pass: Some(report.diagnostics.pass()),
                });
                reports.push((label.clone(), report));
            }
            Err(rej) => {
                rejected += 1;
                rows.push(SummaryRow {
                    label: rej.label.clone(),
                    line: rej.line.to_string(),
                    status: "rejected".into(),
                    reason: Some(rej.reason.clone()),
                    discriminant: None,
                    discriminant_sign: None,
                    cubic: None,
                    classes: None,
                    bounds_pass: None,
                });
            }
        }
    }
    let summary = CorpusSummary {
        processed: reports.len().to_string(),
        rejected: rejected.to_string(),
        failed: failed.to_string(),
        max_classes: max_classes.to_string(),
        total_max: monogen_core::monogenize::TOTAL_CLASS_MAX.to_string(),
        entries: rows,
    };

    match out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
            for (i, (label, report)) in reports.iter().enumerate() {
                let name = format!("{:03}-{}.{}", i, file_stem(label), out.format.extension());
                fs::write(dir.join(name), render_report(report, out.format))
                    .map_err(|e| usage(format!("cannot write report: {e}")))?;
            }
            let summary_text = render_summary(&summary, out.format);
            fs::write(dir.join(format!("summary.{}", out.format.extension())), &summary_text)
                .map_err(|e| usage(format!("cannot write summary: {e}")))?;
            emit(out, &summary_text)?;
        }
        None => {
            let text = match out.format {
                Format::Text => {
                    let mut t = String::new();
                    for (label, report) in &reports {
                        t.push_str(&format!("== {label}\n"));
                        t.push_str(&report_text(report));
                    }
                    t.push_str(&render_summary(&summary, Format::Text));
                    t
                }
                f => {
                    let doc = CorpusDoc {
                        reports: reports
                            .iter()
                            .map(|(label, r)| LabeledReport { label: label.clone(), report: ReportDoc::of(r) })
                            .collect(),
                        summary,
                    };
                    if f == Format::Json {
                        json(&doc)
                    } else {
                        to_csv(&doc)
                    }
                }
            };
            emit(out, &text)?;
        }
    }
    Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn render_summary(s: &CorpusSummary, format: Format) -> String {
    match format {
        Format::Json => json(s),
        Format::Csv => to_csv(s),
        Format::Text => {
            let mut t = format!(
                "{:<24} {:>5} {:<13} {:>5} {:>6} {:>8}\n",
                "label", "line", "status", "sign", "cubic", "classes"
            );
            for r in &s.entries {
                let dash = || "-".to_string();
                t.push_str(&format!(
                    "{:<24} {:>5} {:<13} {:>5} {:>6} {:>8}{}\n",
                    r.label,
                    r.line,
                    r.status,
                    r.discriminant_sign.clone().unwrap_or_else(dash),
                    r.cubic.clone().unwrap_or_else(dash),
                    r.classes.clone().unwrap_or_else(dash),
                    r.reason.as_ref().map(|x| format!("  {x}")).unwrap_or_default(),
                ));
            }
            t.push_str(&format!(
                "processed {}  rejected {}  failed {}  max classes {} (bound {})\n",
                s.processed, s.rejected, s.failed, s.max_classes, s.total_max
            ));
            t
        }
    }
}
