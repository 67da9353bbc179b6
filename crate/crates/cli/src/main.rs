//! `multilog`: print the number-family tables and series coefficients, and
//! run the exact identity-verification suite.
//!
//! Exit codes are stable for scripting: 0 success, 1 at least one
//! verification cell failed, 2 usage or I/O error.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::{env, fs};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use multilog_core::identity::{index_grid, run_suite, SuiteConfig, VerificationReport};
use multilog_core::multi::{family_table, Family, NumberTable};
use multilog_core::multilog::li_series;
use multilog_core::series::{nested_map, one_minus_exp_neg, TruncSeries};
use multilog_core::MultiIndex;

/// Cap on any requested order unless MULTILOG_MAX_ORDER overrides it; exact
/// arithmetic cost grows fast enough that a runaway order is better refused
/// than attempted.
const DEFAULT_MAX_ORDER: usize = 64;

#[derive(Parser)]
#[command(
    name = "multilog",
    version,
    about = "Exact tables, series and identity checks for multiple-logarithm number families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one family's values for n = 0..=max-n
    Table {
        /// multi-stirling2, unsigned-multi-stirling1, signed-multi-stirling1,
        /// multi-lah or multi-bernoulli
        #[arg(long)]
        family: String,
        /// Comma-separated integer entries, e.g. "1,2"
        #[arg(long)]
        index: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print series coefficients alongside their n!-scaled values
    Series {
        /// The raw series, or one of the two substituted forms
        #[arg(value_enum)]
        name: SeriesName,
        /// Comma-separated integer entries, e.g. "1,2"
        #[arg(long)]
        index: String,
        #[arg(long, default_value_t = 16)]
        order: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        /// Write to this file instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the identity checks over an index grid and report failures
    Verify {
        /// Comma-separated subset of 1..=7 (default: all seven)
        #[arg(long)]
        theorems: Option<String>,
        /// Check a single index instead of the grid
        #[arg(long)]
        index: Option<String>,
        /// Grid depth bound (ignored with --index)
        #[arg(long, default_value_t = 3)]
        max_depth: usize,
        /// Comma-separated grid entry values (default: -1,0,1,2,3)
        #[arg(long)]
        entries: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// Write the JSON report array to this file
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    /// Li_index(t) itself
    Li,
    /// Li_index(1 - e^(1 - e^t)), the second-kind generating series
    LiNested,
    /// Li_index(1 - e^(-t)), the first-kind-transform generating series
    LiOneMinusExpNeg,
}

impl SeriesName {
    fn name(self) -> &'static str {
        match self {
            SeriesName::Li => "li",
            SeriesName::LiNested => "li-nested",
            SeriesName::LiOneMinusExpNeg => "li-one-minus-exp-neg",
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version arrive here too; only real parse errors
            // are usage failures.
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Table {
            family,
            index,
            max_n,
            format,
            out,
        } => {
            let family: Family = family.parse().map_err(|e| format!("{e}"))?;
            let index: MultiIndex = index.parse().map_err(|e| format!("{e}"))?;
            check_order_cap(max_n)?;
            let table = family_table(family, &index, max_n);
            let text = match format {
                Format::Csv => table_csv(&table),
                Format::Json => table_json(&table),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Series {
            name,
            index,
            order,
            format,
            out,
        } => {
            let index: MultiIndex = index.parse().map_err(|e| format!("{e}"))?;
            check_order_cap(order)?;
            let series = build_series(name, &index, order);
            let text = match format {
                Format::Csv => series_csv(&series),
                Format::Json => series_json(name, &index, &series),
            };
            emit(out.as_deref(), &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorems,
            index,
            max_depth,
            entries,
            max_n,
            out,
        } => {
            check_order_cap(max_n)?;
            let config = build_config(theorems, index, max_depth, entries, max_n)?;
            let reports = run_suite(&config);
            print_summary(&reports);
            if let Some(path) = out {
                write_file(&path, &reports_json(&reports))?;
            }
            if reports.iter().all(|r| r.passed) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn check_order_cap(requested: usize) -> Result<(), String> {
    let cap = match env::var("MULTILOG_MAX_ORDER") {
        Ok(text) => text
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("MULTILOG_MAX_ORDER must be a nonnegative integer, got {text:?}"))?,
        Err(env::VarError::NotPresent) => DEFAULT_MAX_ORDER,
        Err(err) => return Err(format!("MULTILOG_MAX_ORDER: {err}")),
    };
    if requested > cap {
        return Err(format!(
            "requested order {requested} exceeds the MULTILOG_MAX_ORDER cap of {cap}"
        ));
    }
    Ok(())
}

fn build_series(name: SeriesName, index: &MultiIndex, order: usize) -> TruncSeries {
    let li = li_series(index, order);
    match name {
        SeriesName::Li => li,
        SeriesName::LiNested => li
            .compose(&nested_map(order))
            .expect("substituted series has zero constant term"),
        SeriesName::LiOneMinusExpNeg => li
            .compose(&one_minus_exp_neg(order))
            .expect("substituted series has zero constant term"),
    }
}

fn build_config(
    theorems: Option<String>,
    index: Option<String>,
    max_depth: usize,
    entries: Option<String>,
    max_n: usize,
) -> Result<SuiteConfig, String> {
    let theorems = match theorems {
        None => (1..=7).collect(),
        Some(text) => {
            let list = parse_csv_list::<u32>(&text, "--theorems")?;
            if let Some(bad) = list.iter().find(|t| !(1..=7).contains(*t)) {
                return Err(format!("--theorems entries must be in 1..=7, got {bad}"));
            }
            list
        }
    };
    let indices = match index {
        Some(text) => vec![text.parse::<MultiIndex>().map_err(|e| format!("{e}"))?],
        None => {
            if max_depth == 0 {
                return Err(String::from("--max-depth must be at least 1"));
            }
            let entries = match entries {
                None => SuiteConfig::DEFAULT_ENTRIES.to_vec(),
                Some(text) => parse_csv_list::<i64>(&text, "--entries")?,
            };
            index_grid(max_depth, &entries)
        }
    };
    Ok(SuiteConfig {
        theorems,
        indices,
        max_n,
    })
}

fn parse_csv_list<T: std::str::FromStr>(text: &str, flag: &str) -> Result<Vec<T>, String> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<T>()
                .map_err(|_| format!("{flag}: cannot parse {part:?}"))
        })
        .collect()
}

fn table_csv(table: &NumberTable) -> String {
    let mut out = String::from("n,value\n");
    for (n, value) in table.values().iter().enumerate() {
        writeln!(out, "{n},{value}").expect("writing to a String");
    }
    out
}

fn table_json(table: &NumberTable) -> String {
    let values: Vec<_> = table
        .values()
        .iter()
        .enumerate()
        .map(|(n, value)| json!({ "n": n, "value": value.to_string() }))
        .collect();
    let doc = json!({
        "family": table.family().name(),
        "index": table.index().to_string(),
        "values": values,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

fn series_csv(series: &TruncSeries) -> String {
    let mut out = String::from("n,coeff,egf_coeff\n");
    for n in 0..=series.order() {
        let egf = series.nfact_coeff(n).expect("n within order");
        writeln!(out, "{n},{},{egf}", series.coeff(n)).expect("writing to a String");
    }
    out
}

fn series_json(name: SeriesName, index: &MultiIndex, series: &TruncSeries) -> String {
    let values: Vec<_> = (0..=series.order())
        .map(|n| {
            let egf = series.nfact_coeff(n).expect("n within order");
            json!({
                "n": n,
                "coeff": series.coeff(n).to_string(),
                "egf_coeff": egf.to_string(),
            })
        })
        .collect();
    let doc = json!({
        "series": name.name(),
        "index": index.to_string(),
        "order": series.order(),
        "values": values,
    });
    let mut text = serde_json::to_string_pretty(&doc).expect("serializable");
    text.push('\n');
    text
}

fn reports_json(reports: &[VerificationReport]) -> String {
    let docs: Vec<_> = reports
        .iter()
        .map(|r| {
            let failures: Vec<_> = r
                .failures
                .iter()
                .map(|w| {
                    json!({
                        "n": w.n,
                        "lhs": w.lhs.to_string(),
                        "rhs": w.rhs.to_string(),
                    })
                })
                .collect();
            json!({
                "theorem": r.theorem,
                "index": r.index.to_string(),
                "range": [r.range.0, r.range.1],
                "passed": r.passed,
                "failures": failures,
                "notes": r.notes,
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&docs).expect("serializable");
    text.push('\n');
    text
}

fn print_summary(reports: &[VerificationReport]) {
    let mut failed_cells = 0usize;
    for t in 1..=7u32 {
        let group: Vec<_> = reports.iter().filter(|r| r.theorem == t).collect();
        if group.is_empty() {
            continue;
        }
        let failing: Vec<_> = group.iter().filter(|r| !r.passed).collect();
        println!("check {t}: {} cells, {} passed", group.len(), group.len() - failing.len());
        for report in failing {
            failed_cells += 1;
            println!(
                "  FAIL at index {} (range {}..={})",
                report.index, report.range.0, report.range.1
            );
            for witness in report.failures.iter().take(3) {
                println!(
                    "    n={}: lhs {} != rhs {}",
                    witness.n, witness.lhs, witness.rhs
                );
            }
            if report.failures.len() > 3 {
                println!("    ... {} more", report.failures.len() - 3);
            }
        }
    }
    if failed_cells == 0 {
        println!("PASS ({} cells)", reports.len());
    } else {
        println!("FAIL ({failed_cells} of {} cells)", reports.len());
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}
