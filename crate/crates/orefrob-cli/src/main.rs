//! Command line front end for the Ore extension analyzers.
//!
//! Exit codes: 0 when the requested command completed with no budget or
//! validation errors, 2 on usage errors, 3 when a description fails to
//! load or validate, 4 when a decision hit its enumeration budget.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orefrob::builtin::{biseparable_not_frobenius, semi_not_frobenius};
use orefrob::decide::{analyze, check_separability_element, AnalyzeOptions, Budget, CheckSet};
use orefrob::ore::OreExtension;
use orefrob::spec::{
    extension_from_path, extension_to_json, report_to_dto, report_to_json, tensor_from_path,
    ChecksDto, ReportDto,
};

const EXIT_VALIDATION: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "orefrob",
    version,
    about = "Decide Frobenius-type properties of an Ore extension F[x] in A[x; sigma, delta]"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze an extension description file.
    Analyze {
        /// Extension description JSON file.
        spec: PathBuf,
        #[command(flatten)]
        flags: AnalysisFlags,
    },
    /// Build a shipped example, optionally writing its description file.
    Example {
        /// Which example to build.
        #[arg(value_enum)]
        name: ExampleName,
        /// Base field characteristic (semi-not-frobenius only).
        #[arg(long)]
        p: Option<u64>,
        /// Extension degree (semi-not-frobenius only).
        #[arg(long)]
        n: Option<usize>,
        /// Write the extension description JSON to this path.
        #[arg(long, value_name = "PATH")]
        emit_spec: Option<PathBuf>,
        #[command(flatten)]
        flags: AnalysisFlags,
    },
    /// Run the four separability certificate checks on a candidate element.
    VerifySep {
        /// Extension description JSON file.
        spec: PathBuf,
        /// Candidate element JSON file (a table of field-element rows).
        #[arg(long, value_name = "FILE")]
        element: PathBuf,
        /// Emit the check results as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct AnalysisFlags {
    /// Which property to decide.
    #[arg(long, value_enum, default_value_t = CheckArg::All)]
    check: CheckArg,
    /// Include witnesses in the output.
    #[arg(long)]
    witness: bool,
    /// Cap on enumerated candidates per decision.
    #[arg(long, value_name = "N")]
    max_enum: Option<u128>,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckArg {
    All,
    Frobenius,
    Semi,
    SecondKind,
    Split,
    Separable,
}

impl From<CheckArg> for CheckSet {
    fn from(c: CheckArg) -> CheckSet {
        match c {
            CheckArg::All => CheckSet::All,
            CheckArg::Frobenius => CheckSet::Frobenius,
            CheckArg::Semi => CheckSet::Semi,
            CheckArg::SecondKind => CheckSet::SecondKind,
            CheckArg::Split => CheckSet::Split,
            CheckArg::Separable => CheckSet::Separable,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ExampleName {
    /// M2(F8) over F2 with the entrywise Frobenius twist and an inner delta.
    PaperCounterexample,
    /// A field extension with the normal-basis derivation.
    SemiNotFrobenius,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_VALIDATION)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Analyze { spec, flags } => {
            let ore = extension_from_path(&spec).map_err(|e| e.to_string())?;
            Ok(run_analysis(&ore, &flags))
        }
        Command::Example {
            name,
            p,
            n,
            emit_spec,
            flags,
        } => {
            let ore = match name {
                ExampleName::PaperCounterexample => {
                    if p.is_some() || n.is_some() {
                        // a usage error, not a validation error
                        eprintln!(
                            "error: --p and --n apply only to the semi-not-frobenius example"
                        );
                        return Ok(ExitCode::from(2));
                    }
                    biseparable_not_frobenius().ore
                }
                ExampleName::SemiNotFrobenius => {
                    semi_not_frobenius(p.unwrap_or(2), n.unwrap_or(3))
                        .map_err(|e| e.to_string())?
                }
            };
            if let Some(path) = emit_spec {
                std::fs::write(&path, extension_to_json(&ore))
                    .map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            }
            Ok(run_analysis(&ore, &flags))
        }
        Command::VerifySep {
            spec,
            element,
            json,
        } => {
            let ore = extension_from_path(&spec).map_err(|e| e.to_string())?;
            let p = tensor_from_path(ore.algebra(), &element).map_err(|e| e.to_string())?;
            let checks = ChecksDto::from(check_separability_element(&ore, &p));
            if json {
                print!(
                    "{}",
                    serde_json::to_string_pretty(&checks).expect("plain data")
                );
                println!();
            } else {
                print_checks(&checks);
            }
            // a completed verification is a success even when checks fail
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_analysis(ore: &OreExtension, flags: &AnalysisFlags) -> ExitCode {
    let options = AnalyzeOptions {
        checks: flags.check.into(),
        budget: flags.max_enum.map_or_else(Budget::default, Budget::new),
    };
    let report = analyze(ore, &options);
    let dto = report_to_dto(&report, flags.witness);
    if flags.json {
        print!("{}", report_to_json(&dto));
    } else {
        print_report(&dto);
    }
    if report.hit_budget() {
        ExitCode::from(EXIT_BUDGET)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_report(dto: &ReportDto) {
    fn functional(name: &str, e: &Option<orefrob::spec::FunctionalEntryDto>) {
        if let Some(e) = e {
            println!("{name}: {}", e.status.as_str());
            if let Some(w) = &e.witness {
                println!("  witness: {}", serde_json::to_string(w).expect("plain data"));
            }
            if let Some(d) = &e.detail {
                println!("  note: {d}");
            }
        }
    }
    fn tensor(name: &str, e: &Option<orefrob::spec::TensorEntryDto>) {
        if let Some(e) = e {
            println!("{name}: {}", e.status.as_str());
            if let Some(w) = &e.witness {
                println!("  witness: {}", serde_json::to_string(w).expect("plain data"));
            }
            if let Some(d) = &e.detail {
                println!("  note: {d}");
            }
        }
    }
    functional("frobenius", &dto.frobenius);
    functional("semi-frobenius", &dto.semi_frobenius);
    if let Some(s) = dto.base_frobenius {
        println!("base-frobenius: {}", s.as_str());
    }
    if let Some(e) = &dto.second_kind {
        println!("second-kind: {}", e.status.as_str());
        if let Some(w) = &e.witness {
            println!("  witness: {}", serde_json::to_string(w).expect("plain data"));
        }
        if let Some(d) = &e.detail {
            println!("  note: {d}");
        }
    }
    functional("split-certificate", &dto.split_certificate);
    tensor("base-separable", &dto.base_separable);
    tensor("separability-certificate", &dto.separability_certificate);
    if !dto.notes.is_empty() {
        println!("notes:");
        for n in &dto.notes {
            println!("  - {n}");
        }
    }
}

fn print_checks(checks: &ChecksDto) {
    let line = |name: &str, ok: bool| {
        println!("{name}: {}", if ok { "pass" } else { "FAIL" });
    };
    line("mu-is-one", checks.mu_is_one);
    line("casimir-defects-vanish", checks.is_casimir);
    line("sigma-twist-fixes-element", checks.sigma_fixed);
    line("delta-twist-kills-element", checks.delta_killed);
    if checks.all_pass {
        println!("result: separability element verified");
    } else {
        println!("result: not a compatible separability element");
    }
}
