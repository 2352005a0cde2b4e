// SPDX-License-Identifier: MIT OR Apache-2.0

//! Command-line front end: rule audits, canonical forms, scenario runs,
//! golden-trace verification and the rotation table.
//!
//! Exit status: 0 success, 1 verification mismatch or failed audit,
//! 2 usage or parse error, 3 missing rule during a run.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dodecagrid::engine::{frame_metamorphic_check, EngineError};
use dodecagrid::geometry::{rotation_from_image, rotation_group, FaceIndex};
use dodecagrid::rules::{
    archive, builtin_table, check_coherence, minimal_form, parse_rule, parse_rules, scenario_table, supplement,
    RuleTable,
};
use dodecagrid::scenarios::{self, Scenario, NAMES};

const OK: u8 = 0;
const MISMATCH: u8 = 1;
const USAGE: u8 = 2;
const MISSING: u8 = 3;

#[derive(Parser)]
#[command(name = "dodecagrid", version, about = "Cellular automaton on the hyperbolic dodecagrid")]
struct Cli {
    /// Rule file replacing the embedded scenario table for `sim` and `verify`.
    #[arg(long, global = true, value_name = "FILE")]
    rules: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rule auditing and canonical forms.
    #[command(subcommand)]
    Rules(RulesCommand),
    /// Run a scenario and print its trace.
    Sim {
        /// Scenario name.
        scenario: String,
        /// Number of steps instead of the scenario default.
        #[arg(long)]
        steps: Option<usize>,
        /// Write the trace to this file instead of standard output.
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
    },
    /// Compare scenario traces with their golden traces.
    Verify {
        /// Scenario name, or `all`.
        scenario: String,
        /// Also re-run with random per-tile frames drawn from this seed.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Query the rotation group.
    Rotations(RotationsArgs),
}

#[derive(Subcommand)]
enum RulesCommand {
    /// Audit coherence and determinism of a rule file or of the embedded archive.
    Check {
        /// Rule file; the embedded archive when omitted.
        file: Option<PathBuf>,
    },
    /// Print the minimal form of a rule.
    Canon {
        /// Rule text `X:YYYYYYYYYYYY:Z`.
        rule: String,
    },
    /// Print the embedded rules with their labels.
    Dump {
        /// Print the supplementary rules instead of the archive.
        #[arg(long)]
        supplement: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RotationsArgs {
    /// Classify the rotation sending faces 0 and 1 to the given faces.
    #[arg(long, num_args = 2, value_names = ["IMG0", "IMG1"])]
    classify: Option<Vec<u8>>,
    /// List all sixty rotations.
    #[arg(long)]
    list: bool,
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn load_table(path: &Option<PathBuf>) -> Result<RuleTable, ExitCode> {
    match path {
        None => Ok(scenario_table().clone()),
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| fail(USAGE, format!("{}: {e}", p.display())))?;
            let rules = parse_rules(&text).map_err(|e| fail(USAGE, format!("{}: {e}", p.display())))?;
            RuleTable::deterministic(rules).map_err(|e| fail(USAGE, format!("{}: {e}", p.display())))
        }
    }
}

fn engine_failure(e: EngineError) -> ExitCode {
    match e {
        EngineError::MissingRule { .. } => fail(MISSING, e),
        other => fail(USAGE, other),
    }
}

fn find_scenario(name: &str) -> Result<Scenario, ExitCode> {
    scenarios::build(name).map_err(|e| fail(USAGE, format!("{e}; known scenarios: {}", NAMES.join(", "))))
}

fn rules_check(file: &Option<PathBuf>) -> ExitCode {
    match file {
        None => {
            let report = check_coherence(archive());
            let conflicts: Vec<String> = report.conflicts.iter().map(|(a, b)| format!("rules {a}/{b}")).collect();
            println!(
                "{} rules, coherence violations: {}, archived conflicts: {} ({})",
                report.rules,
                report.violations.len(),
                report.conflicts.len(),
                conflicts.join(", ")
            );
            for (a, b) in &report.violations {
                println!("violation: rules {a} and {b} have the same minimal form");
            }
            let exec = builtin_table();
            let exec_report = check_coherence(exec);
            println!("executable table: {} rules, conflicts: {}", exec.len(), exec_report.conflicts.len());
            let full = check_coherence(scenario_table());
            println!(
                "supplement: {} rules, conflicts with the executable table: {}",
                supplement().len(),
                full.conflicts.len()
            );
            let ok = report.violations.is_empty() && exec.is_deterministic() && scenario_table().is_deterministic();
            ExitCode::from(if ok { OK } else { MISMATCH })
        }
        Some(p) => {
            let text = match fs::read_to_string(p) {
                Ok(t) => t,
                Err(e) => return fail(USAGE, format!("{}: {e}", p.display())),
            };
            let rules = match parse_rules(&text) {
                Ok(r) => r,
                Err(e) => return fail(USAGE, format!("{}: {e}", p.display())),
            };
            let report = check_coherence(&RuleTable::new(rules));
            println!(
                "{} rules, coherence violations: {}, conflicts: {}",
                report.rules,
                report.violations.len(),
                report.conflicts.len()
            );
            for (a, b) in &report.violations {
                println!("violation: rules {a} and {b} have the same minimal form");
            }
            for (a, b) in &report.conflicts {
                println!("conflict: rules {a} and {b} have the same left-hand side");
            }
            ExitCode::from(if report.is_clean() { OK } else { MISMATCH })
        }
    }
}

fn rules_command(cmd: &RulesCommand) -> ExitCode {
    match cmd {
        RulesCommand::Check { file } => rules_check(file),
        RulesCommand::Canon { rule } => match parse_rule(rule) {
            Ok(r) => {
                println!("{}", minimal_form(&r));
                ExitCode::from(OK)
            }
            Err(e) => fail(USAGE, e),
        },
        RulesCommand::Dump { supplement: supp } => {
            let rules = if *supp { supplement() } else { archive().rules() };
            for r in rules {
                println!("{r}");
            }
            ExitCode::from(OK)
        }
    }
}

fn sim(table: &RuleTable, name: &str, steps: Option<usize>, trace: &Option<PathBuf>) -> ExitCode {
    let s = match find_scenario(name) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let run = match s.run_on(table, steps.unwrap_or(s.steps)) {
        Ok(r) => r,
        Err(e) => return engine_failure(e),
    };
    let mut text = s.render(&run).join("\n");
    text.push('\n');
    match trace {
        Some(p) => {
            if let Err(e) = fs::write(p, text) {
                return fail(USAGE, format!("{}: {e}", p.display()));
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(OK)
}

fn verify(table: &RuleTable, which: &str, seed: Option<u64>) -> ExitCode {
    let names: Vec<&str> = if which == "all" { NAMES.to_vec() } else { vec![which] };
    let mut worst = OK;
    for name in names {
        let s = match find_scenario(name) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let v = match s.verify_on(table) {
            Ok(v) => v,
            Err(e) => {
                eprintln!("{name}: {e}");
                worst = worst.max(MISSING);
                continue;
            }
        };
        match s.golden {
            None => println!("{name}: ran {} steps, no golden trace", s.steps),
            Some(_) if v.passed() => println!("{name}: ok"),
            Some(_) => {
                println!("{name}: MISMATCH in {} rows", v.mismatches.len());
                let first = &v.mismatches[0];
                println!("  first diverging row {}", first.row);
                println!("  expected: {}", first.expected.as_deref().unwrap_or("<none>"));
                println!("  produced: {}", first.actual.as_deref().unwrap_or("<none>"));
                worst = worst.max(MISMATCH);
            }
        }
        if let Some(seed) = seed {
            match frame_metamorphic_check(&s.initial, table, s.steps, seed) {
                Ok(true) => println!("{name}: random frames agree (seed {seed})"),
                Ok(false) => {
                    println!("{name}: random frames DISAGREE (seed {seed})");
                    worst = worst.max(MISMATCH);
                }
                Err(e) => {
                    eprintln!("{name}: {e}");
                    worst = worst.max(MISSING);
                }
            }
        }
    }
    ExitCode::from(worst)
}

fn rotations(args: &RotationsArgs) -> ExitCode {
    if let Some(pair) = &args.classify {
        let face = |x: u8| FaceIndex::new(x);
        let result = face(pair[0]).and_then(|a| face(pair[1]).and_then(|b| rotation_from_image(a, b)));
        return match result {
            Ok(r) => {
                println!("{r}");
                ExitCode::from(OK)
            }
            Err(e) => fail(USAGE, e),
        };
    }
    for r in rotation_group() {
        println!("{} {}: {} {}", r.map[0], r.map[1], r, r.map);
    }
    ExitCode::from(OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Rules(cmd) => rules_command(cmd),
        Command::Rotations(args) => rotations(args),
        Command::Sim { scenario, steps, trace } => match load_table(&cli.rules) {
            Ok(t) => sim(&t, scenario, *steps, trace),
            Err(code) => code,
        },
        Command::Verify { scenario, seed } => match load_table(&cli.rules) {
            Ok(t) => verify(&t, scenario, *seed),
            Err(code) => code,
        },
    }
}
