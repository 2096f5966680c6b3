//! `matsing`: command-line front end for the invariant computations.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use matsing::complexes::{homology_dimension, verify_complex};
use matsing::families::{catalog, parse_family, FamilySpec};
use matsing::groebner::with_step_limit;
use matsing::invariants::{Analysis, Check, IdentityId, InvariantReport, Quantity, Verdict};
use matsing::{Dim, Error};

const EXIT_PARSE: u8 = 1;
const EXIT_HYPOTHESIS: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_FAILS: u8 = 4;

#[derive(Parser)]
#[command(name = "matsing", version, about = "Milnor and Tjurina numbers of matrix singularities")]
struct Cli {
    /// Cap on Gröbner reduction steps per basis computation (0 = unlimited).
    #[arg(long, global = true, default_value_t = 20_000_000)]
    max_steps: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute all invariants of a family or section and run every identity check.
    Analyze {
        /// Input file, or a catalog name such as `catalog:diag-sym(1,2)`.
        input: String,
        #[arg(long)]
        json: bool,
        /// Exit with status 2 when a hypothesis of some identity is violated.
        #[arg(long)]
        strict: bool,
    },
    /// Check a single identity.
    Verify {
        input: String,
        /// One of betas, imax, submax, gorenstein, eqeq, ck, gorp, diag.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        strict: bool,
    },
    /// Build the pulled-back resolution and report its homology.
    Resolution {
        input: String,
        /// Also verify that consecutive differentials compose to zero.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
    /// Analyze every file of a directory.
    Batch {
        dir: PathBuf,
        /// Print the summary as JSON.
        #[arg(long)]
        json: bool,
        /// Also write the JSON summary to this file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ResourceExhausted { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn load(input: &str) -> Result<FamilySpec, Failure> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{input}: {e}")))?;
        return parse_family(&text).map_err(|e| Failure::Input(format!("{input}: {e}")));
    }
    let name = input.strip_prefix("catalog:").unwrap_or(input);
    match catalog(name) {
        Ok(spec) => Ok(spec),
        Err(Error::UnknownCatalog(_)) if !input.starts_with("catalog:") => {
            Err(Failure::Input(format!("{input}: no such file or catalog entry")))
        }
        Err(e) => Err(Failure::Input(e.to_string())),
    }
}

fn limit(max_steps: u64) -> Option<u64> {
    (max_steps > 0).then_some(max_steps)
}

#[derive(Serialize)]
struct NamedReport {
    name: Option<String>,
    #[serde(flatten)]
    report: InvariantReport,
}

/// Comparisons of the report against the expectations stored with the input.
fn expectation_checks(spec: &FamilySpec, report: &InvariantReport) -> Vec<Check> {
    spec.expected
        .iter()
        .map(|(key, want)| {
            let got = report.value(key).map_or(Quantity::Unknown, Quantity::from);
            Check::compare(format!("expect:{key}"), got, Quantity::from(*want), "stored expectation")
        })
        .collect()
}

fn analyze_spec(spec: &FamilySpec) -> Result<InvariantReport, Failure> {
    let analysis = Analysis::new(spec.germ()?);
    let mut report = analysis.report()?;
    report.checks.extend(expectation_checks(spec, &report));
    Ok(report)
}

fn dim_line(label: &str, d: Option<Dim>) -> Option<String> {
    d.map(|d| format!("{label:<22}{d}"))
}

fn print_checks(checks: &[Check]) {
    for c in checks {
        let mut line = format!("{:<30} {:<15} lhs={} rhs={}", c.name, c.verdict.to_string(), c.lhs, c.rhs);
        if !c.note.is_empty() {
            line.push_str(&format!("  ({})", c.note));
        }
        println!("{line}");
    }
}

fn print_report(spec: &FamilySpec, r: &InvariantReport) {
    if let Some(name) = &spec.name {
        println!("{name}");
    }
    let (special, general) = match spec.kind() {
        Some(matsing::MatrixKind::General) => ("tau_sg", "tau_gg"),
        _ => ("tau_ss", "tau_gs"),
    };
    let betti: Vec<String> = r.betti.iter().map(|d| d.to_string()).collect();
    let lines = [
        Some(format!("{:<22}{}", "m", r.m)),
        Some(format!("{:<22}{}", "m0", r.m0)),
        dim_line("mu", Some(r.mu)),
        dim_line("tau", Some(r.tau)),
        dim_line("tau_kf", Some(r.tau_function_right)),
        dim_line("tau_kv", Some(r.tau_function_contact)),
        dim_line(special, r.tau_matrix_special),
        dim_line(general, r.tau_matrix_general),
        dim_line("dim O/F*(J_f)", Some(r.dim_pullback_jacobian)),
        dim_line("codim_minors", r.codim_minors),
        Some(format!("{:<22}[{}]", "betti", betti.join(", "))),
        r.cohen_macaulay.map(|b| format!("{:<22}{b}", "cohen_macaulay")),
    ];
    for line in lines.into_iter().flatten() {
        println!("{line}");
    }
    println!();
    print_checks(&r.checks);
    for v in &r.hypothesis_violations {
        println!("hypothesis: {v}");
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn run_analyze(input: &str, json: bool, strict: bool) -> Result<u8, Failure> {
    let spec = load(input)?;
    let report = analyze_spec(&spec)?;
    if json {
        println!(
            "{}",
            to_json(&NamedReport {
                name: spec.name.clone(),
                report: report.clone()
            })
        );
    } else {
        print_report(&spec, &report);
    }
    Ok(if strict && !report.hypothesis_violations.is_empty() {
        EXIT_HYPOTHESIS
    } else if report.checks.iter().any(|c| c.verdict == Verdict::Fails) {
        EXIT_FAILS
    } else {
        0
    })
}

fn run_verify(input: &str, theorem: &str, json: bool, strict: bool) -> Result<u8, Failure> {
    let id: IdentityId = theorem.parse().map_err(Failure::Input)?;
    let spec = load(input)?;
    let checks = Analysis::new(spec.germ()?).verify(id)?;
    if json {
        println!("{}", to_json(&checks));
    } else {
        print_checks(&checks);
    }
    Ok(if checks.iter().any(|c| c.verdict == Verdict::Fails) {
        EXIT_FAILS
    } else if strict && checks.iter().any(|c| c.verdict == Verdict::NotApplicable) {
        EXIT_HYPOTHESIS
    } else {
        0
    })
}

#[derive(Serialize)]
struct ResolutionReport {
    name: Option<String>,
    ranks: Vec<usize>,
    d_squared_zero: Option<bool>,
    homology: Vec<Dim>,
}

fn run_resolution(input: &str, check: bool, json: bool) -> Result<u8, Failure> {
    let spec = load(input)?;
    let c = Analysis::new(spec.germ()?).pulled_back_resolution()?;
    let d2 = check.then(|| verify_complex(&c));
    let homology = (0..=c.length())
        .map(|k| homology_dimension(&c, k))
        .collect::<Result<Vec<_>, _>>()?;
    let out = ResolutionReport {
        name: spec.name.clone(),
        ranks: c.ranks().to_vec(),
        d_squared_zero: d2,
        homology,
    };
    if json {
        println!("{}", to_json(&out));
    } else {
        if let Some(name) = &out.name {
            println!("{name}");
        }
        let ranks: Vec<String> = out.ranks.iter().map(|r| r.to_string()).collect();
        println!("ranks   {}", ranks.join(" "));
        if let Some(ok) = d2 {
            println!("d^2=0   {}", if ok { "yes" } else { "NO" });
        }
        for (k, h) in out.homology.iter().enumerate() {
            println!("H{k}      {h}");
        }
    }
    Ok(if d2 == Some(false) { EXIT_FAILS } else { 0 })
}

#[derive(Serialize, Default)]
struct Counts {
    holds: usize,
    fails: usize,
    not_applicable: usize,
}

#[derive(Serialize)]
struct FileSummary {
    file: String,
    name: Option<String>,
    error: Option<String>,
    counts: Counts,
    failed_checks: Vec<String>,
    report: Option<InvariantReport>,
}

#[derive(Serialize, Default)]
struct BatchSummary {
    files: usize,
    errors: usize,
    totals: Counts,
    results: Vec<FileSummary>,
}

fn batch_one(path: &Path, max_steps: u64) -> FileSummary {
    let file = path.file_name().map_or_else(String::new, |f| f.to_string_lossy().into_owned());
    let outcome = with_step_limit(limit(max_steps), || {
        let spec = load(&path.to_string_lossy())?;
        let report = analyze_spec(&spec)?;
        Ok::<_, Failure>((spec, report))
    });
    match outcome {
        Ok((spec, report)) => {
            let mut counts = Counts::default();
            let mut failed = Vec::new();
            for c in &report.checks {
                match c.verdict {
                    Verdict::Holds => counts.holds += 1,
                    Verdict::NotApplicable => counts.not_applicable += 1,
                    Verdict::Fails => {
                        counts.fails += 1;
                        failed.push(c.name.clone());
                    }
                }
            }
            FileSummary {
                file,
                name: spec.name,
                error: None,
                counts,
                failed_checks: failed,
                report: Some(report),
            }
        }
        Err(Failure::Input(e) | Failure::Resource(e)) => FileSummary {
            file,
            name: None,
            error: Some(e),
            counts: Counts::default(),
            failed_checks: Vec::new(),
            report: None,
        },
    }
}

fn run_batch(dir: &Path, json: bool, output: Option<&Path>, max_steps: u64) -> Result<u8, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let results: Vec<FileSummary> = paths.par_iter().map(|p| batch_one(p, max_steps)).collect();
    let mut summary = BatchSummary {
        files: results.len(),
        ..Default::default()
    };
    for r in &results {
        if r.error.is_some() {
            summary.errors += 1;
        }
        summary.totals.holds += r.counts.holds;
        summary.totals.fails += r.counts.fails;
        summary.totals.not_applicable += r.counts.not_applicable;
    }
    summary.results = results;
    let text = to_json(&summary);
    if let Some(out) = output {
        fs::write(out, &text).map_err(|e| Failure::Input(format!("{}: {e}", out.display())))?;
    }
    if json {
        println!("{text}");
    } else {
        for r in &summary.results {
            match &r.error {
                Some(e) => println!("{:<32}ERROR {e}", r.file),
                None => {
                    let mut line = format!(
                        "{:<32}holds={} fails={} n/a={}",
                        r.file, r.counts.holds, r.counts.fails, r.counts.not_applicable
                    );
                    if !r.failed_checks.is_empty() {
                        line.push_str(&format!("  failed: {}", r.failed_checks.join(", ")));
                    }
                    println!("{line}");
                }
            }
        }
        println!(
            "{} files, {} errors, holds={} fails={} n/a={}",
            summary.files, summary.errors, summary.totals.holds, summary.totals.fails, summary.totals.not_applicable
        );
    }
    Ok(if summary.totals.fails > 0 { EXIT_FAILS } else { 0 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let steps = cli.max_steps;
    let result = with_step_limit(limit(steps), || match &cli.command {
        Command::Analyze { input, json, strict } => run_analyze(input, *json, *strict),
        Command::Verify {
            input,
            theorem,
            json,
            strict,
        } => run_verify(input, theorem, *json, *strict),
        Command::Resolution { input, check, json } => run_resolution(input, *check, *json),
        Command::Batch { dir, json, output } => run_batch(dir, *json, output.as_deref(), steps),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Resource(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_RESOURCE)
        }
    }
}
