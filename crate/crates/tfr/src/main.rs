//! `tfr` — validate toric face ring inputs and compute reports.
//!
//! The heavy lifting lives in the library; this binary only parses
//! arguments, resolves fixtures, and prints.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tfr::cli_io::{
    builtin_fixture, cmd_report, cmd_validate, parse_document, render_report, InputDocument,
    ReportFlags, FIXTURE_NAMES,
};
use tfr::field::FieldSpec;

#[derive(Parser)]
#[command(name = "tfr", about = "Toric face rings: presentations, duality, local cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate an input document (a file path or a builtin fixture name).
    Validate {
        input: String,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Compute a report over an input document.
    Report {
        input: String,
        /// Emit the presentation ideal up to this total degree.
        #[arg(long, value_name = "D")]
        ideal: Option<usize>,
        /// Include the graded local cohomology tables.
        #[arg(long)]
        cohomology: bool,
        /// Include the Buchsbaum / Cohen-Macaulay / Gorenstein* verdicts,
        /// canonical module and Poincaré table.
        #[arg(long)]
        props: bool,
        /// Check the duality involution on randomized small modules.
        #[arg(long)]
        duality_check: bool,
        /// Sweep the Čech oracle against the topological route for all
        /// degrees up to this generator length.
        #[arg(long, value_name = "B")]
        oracle_check: Option<usize>,
        /// Override the document's coefficient field: `rationals` or a
        /// prime number.
        #[arg(long)]
        field: Option<String>,
        /// Emit machine-readable JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Print a builtin fixture as a JSON input document.
    Fixture { name: String },
}

fn load(input: &str) -> Result<InputDocument, String> {
    if FIXTURE_NAMES.contains(&input) {
        return builtin_fixture(input).map_err(|e| e.to_string());
    }
    let path = PathBuf::from(input);
    let text = std::fs::read_to_string(&path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_document(&text).map_err(|e| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    let spec = match s {
        "rationals" | "q" | "Q" => FieldSpec::Rationals,
        other => {
            let p: u64 = other.parse().map_err(|_| format!("bad field `{other}`"))?;
            FieldSpec::Prime(p)
        }
    };
    spec.validate()?;
    Ok(spec)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Validate { input, json } => {
            let doc = load(&input)?;
            let report = cmd_validate(&doc);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                for w in &report.warnings {
                    println!("warning: {w}");
                }
                if report.ok {
                    println!("valid: {} cells, dim {}", report.cells, report.dim);
                    let bad: Vec<&str> = report
                        .sphere_checks
                        .iter()
                        .filter(|s| !s.is_homology_sphere)
                        .map(|s| s.cell.as_str())
                        .collect();
                    if !bad.is_empty() {
                        println!("note: interval homology-sphere check failed at: {bad:?}");
                    }
                } else {
                    for d in &report.diagnostics {
                        println!("invalid: {d}");
                    }
                }
            }
            Ok(if report.ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Report {
            input,
            ideal,
            cohomology,
            props,
            duality_check,
            oracle_check,
            field,
            json,
        } => {
            let doc = load(&input)?;
            let field_override = field.as_deref().map(parse_field).transpose()?;
            let flags = ReportFlags {
                ideal,
                cohomology,
                props,
                duality_check,
                oracle_check,
                field_override,
            };
            let report = cmd_report(&doc, &flags).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
            } else {
                print!("{}", render_report(&report));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fixture { name } => {
            let doc = builtin_fixture(&name).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
    }
}
