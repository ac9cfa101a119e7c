use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, ArgMatches, Args, CommandFactory, FromArgMatches, Parser, Subcommand};
use clifford_morph::morph::{apply_plan, base_table, plan_signature_change, tilt_table, vee_table, verify_isomorphism, ProductTable};
use clifford_morph::{Sign, Signature};
use serde_json::json;

use clifford_workbench::args::{parse_rational, parse_signature};
use clifford_workbench::eval::{coefficient_pairs, render, Session};
use clifford_workbench::reports::{dirac_report, selfdual_report};
use clifford_workbench::suite::{self, SuiteConfig};
use clifford_workbench::table_doc::{declared_squares, read_table, write_table};
use clifford_workbench::WorkbenchError;

/// Exact Clifford algebra workbench: signature-changing products, table
/// export and verification, Dirac and Maxwell demos.
#[derive(Parser)]
#[command(name = "cliffbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// `p,q` (positive squares first) or a square pattern like `-+++`
    #[arg(long, default_value = "4,0", allow_hyphen_values = true)]
    signature: String,
    /// Generator kept by the `v` operator
    #[arg(long, default_value_t = 0)]
    preserve: usize,
    /// Morph the product with a tilt; repeatable, applied in command-line order with --vee
    #[arg(long, action = ArgAction::Append, num_args = 0, default_missing_value = "true")]
    tilt: Vec<bool>,
    /// Morph the product with a vee keeping this generator; repeatable
    #[arg(long)]
    vee: Vec<usize>,
    /// Seed for the randomized checks
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Emit JSON instead of text
    #[arg(long)]
    structured: bool,
    /// Table document to load (verify: the table to check)
    #[arg(long)]
    table_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the product table as a JSON document
    Table {
        #[command(flatten)]
        common: Common,
    },
    /// Run the invariant suite
    Verify {
        #[command(flatten)]
        common: Common,
    },
    /// Shortest vee/tilt chain from --signature to --to
    Plan {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
    },
    /// Compare the two written forms of the Dirac-Hestenes equation component by component
    Dirac {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        mass: String,
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        with_potential: bool,
    },
    /// Self-dual (+1) or anti-self-dual (-1) Maxwell fields
    Selfdual {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        sign: String,
    },
    /// Evaluate an expression, e.g. "e01 v e02"
    Eval {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        expression: String,
    },
}

enum Step {
    Vee(usize),
    Tilt,
}

/// `--vee` and `--tilt` occurrences in the order they were typed.
fn morph_steps(common: &Common, matches: &ArgMatches) -> Vec<Step> {
    let mut steps: Vec<(usize, Step)> = Vec::new();
    if let Some(idx) = matches.indices_of("vee") {
        steps.extend(idx.zip(&common.vee).map(|(i, mu)| (i, Step::Vee(*mu))));
    }
    if let Some(idx) = matches.indices_of("tilt") {
        steps.extend(idx.zip(&common.tilt).map(|(i, _)| (i, Step::Tilt)));
    }
    steps.sort_by_key(|(i, _)| *i);
    steps.into_iter().map(|(_, s)| s).collect()
}

fn read_file(path: &PathBuf) -> Result<String, WorkbenchError> {
    std::fs::read_to_string(path)
        .map_err(|e| WorkbenchError::Usage(format!("cannot read {}: {e}", path.display())))
}

/// The session product: the base table (or the loaded file) morphed by the steps.
fn session_product(common: &Common, matches: &ArgMatches) -> Result<(Signature, ProductTable), WorkbenchError> {
    let (sig, mut table) = match &common.table_file {
        Some(path) => {
            let text = read_file(path)?;
            let sig = Signature::from_squares(declared_squares(&text)?)?;
            (sig, read_table(&text)?)
        }
        None => {
            let sig = parse_signature(&common.signature)?;
            let table = base_table(&sig);
            (sig, table)
        }
    };
    for step in morph_steps(common, matches) {
        table = match step {
            Step::Vee(mu) if mu >= sig.dim() => {
                return Err(WorkbenchError::Usage(format!("--vee {mu} is out of range for {} generators", sig.dim())))
            }
            Step::Vee(mu) => vee_table(&table, mu)?,
            Step::Tilt => tilt_table(&table),
        };
    }
    Ok((sig, table))
}

fn parse_sign(text: &str) -> Result<Sign, WorkbenchError> {
    match text.trim() {
        "1" | "+1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        other => Err(WorkbenchError::Usage(format!("--sign must be 1 or -1, got `{other}`"))),
    }
}

fn require_spacetime(common: &Common) -> Result<(), WorkbenchError> {
    let sig = parse_signature(&common.signature)?;
    if sig.dim() != 4 {
        return Err(WorkbenchError::Usage(format!("this command needs a 4-dimensional signature, got {sig}")));
    }
    Ok(())
}

fn pretty(value: &serde_json::Value) -> String {
    serde_json::to_string_pretty(value).expect("json values serialize") + "\n"
}

/// Runs a command; `Ok(true)` means every check it made passed.
fn run(command: &Command, matches: &ArgMatches) -> Result<bool, WorkbenchError> {
    match command {
        Command::Table { common } => {
            let (_, table) = session_product(common, matches)?;
            print!("{}", write_table(&table));
            Ok(true)
        }
        Command::Verify { common } => {
            let sig = parse_signature(&common.signature)?;
            let table_file = match &common.table_file {
                Some(path) => Some((path.display().to_string(), read_file(path)?)),
                None => None,
            };
            let cfg = SuiteConfig { sig, preserve: common.preserve, seed: common.seed, table_file };
            let report = suite::run(&cfg)?;
            print!("{}", if common.structured { report.structured() } else { report.human() });
            Ok(report.passed)
        }
        Command::Plan { common, to } => {
            let src = parse_signature(&common.signature)?;
            let dst = parse_signature(to)?;
            let plan = plan_signature_change(&src, &dst)?;
            let table = apply_plan(&base_table(&src), &plan)?;
            let report = verify_isomorphism(&table, &base_table(&dst))?;
            let steps: Vec<String> = plan.steps.iter().map(ToString::to_string).collect();
            if common.structured {
                print!(
                    "{}",
                    pretty(&json!({
                        "source": src.to_string(),
                        "target": dst.to_string(),
                        "steps": steps,
                        "verified": report.equal,
                        "pairs_checked": report.pairs_checked,
                    }))
                );
            } else {
                let chain = if steps.is_empty() { "(no steps)".to_string() } else { steps.join(", ") };
                println!("{src} -> {dst}: {chain}");
                let status = if report.equal { "equals" } else { "DIFFERS FROM" };
                println!("result {status} {dst} ({} pairs checked)", report.pairs_checked);
            }
            Ok(report.equal)
        }
        Command::Dirac { common, mass, charge, with_potential } => {
            require_spacetime(common)?;
            let report = dirac_report(&parse_rational(mass)?, &parse_rational(charge)?, *with_potential)?;
            if common.structured {
                print!("{}", pretty(&serde_json::to_value(&report).expect("report serializes")));
            } else {
                print!("{}", report.human());
            }
            Ok(report.passed())
        }
        Command::Selfdual { common, sign } => {
            require_spacetime(common)?;
            let report = selfdual_report(parse_sign(sign)?)?;
            if common.structured {
                print!("{}", pretty(&serde_json::to_value(&report).expect("report serializes")));
            } else {
                print!("{}", report.human());
            }
            Ok(report.passed())
        }
        Command::Eval { common, expression } => {
            let (sig, table) = session_product(common, matches)?;
            let session = Session::with_product(sig.clone(), common.preserve, table)?;
            let value = session.eval_str(expression)?;
            if common.structured {
                let coefficients: Vec<serde_json::Value> =
                    coefficient_pairs(&value).into_iter().map(|(b, c)| json!([b, c])).collect();
                print!(
                    "{}",
                    pretty(&json!({
                        "expression": expression,
                        "signature": sig.to_string(),
                        "result": render(&value),
                        "coefficients": coefficients,
                    }))
                );
            } else {
                println!("{}", render(&value));
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let sub = matches.subcommand().map(|(_, m)| m).expect("a subcommand is required");
    match run(&cli.command, sub) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
