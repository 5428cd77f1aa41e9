//! The `ringcode` command line: argument parsing, subcommands and the
//! reproduction report. Every subcommand produces one JSON value.

pub mod args;
pub mod commands;
pub mod error;
pub mod reproduce;
pub mod search;

use serde_json::Value;

use args::{Cli, Command};
use commands::{distance_options, field_structure};
use error::{CliError, EXIT_MISMATCH};

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Result<Value, CliError> {
    let jobs = cli.jobs;
    match &cli.command {
        Command::Factor(a) => commands::cmd_factor(a),
        Command::Code { code, dist, distance } => commands::cmd_code(code, dist, *distance, jobs),
        Command::Dual { code } => commands::cmd_dual(code),
        Command::Gray { code, gray, dual, dist, distance } => {
            commands::cmd_gray(code, gray, *dual, dist, *distance, jobs)
        }
        Command::Quantum { code, construction, gray, dist } => {
            commands::cmd_quantum(code, *construction, gray, dist, jobs)
        }
        Command::Search { field, construction, gray, dist, top, region_cap } => {
            let cs = field_structure(field)?;
            search::search(&cs, *construction, gray, &distance_options(dist, jobs), *top, *region_cap)
        }
        Command::Reproduce { target, dist } => {
            let report = reproduce::reproduce(*target, &distance_options(dist, jobs))?;
            let value = serde_json::to_value(&report).expect("serializable");
            if report.summary.mismatch > 0 {
                return Err(CliError::new(
                    EXIT_MISMATCH,
                    format!("{} target(s) do not match", report.summary.mismatch),
                )
                .with_detail(value));
            }
            Ok(value)
        }
    }
}

/// Short human-readable rendering for `--pretty`.
pub fn pretty(cli: &Cli, value: &Value) -> String {
    let mut out = String::new();
    match &cli.command {
        Command::Reproduce { .. } => {
            for t in value["targets"].as_array().into_iter().flatten() {
                let computed = t["computed"]
                    .get("quantum")
                    .or_else(|| t["computed"].get("quantum_from_printed_dual"))
                    .or_else(|| t["computed"].get("image"))
                    .map(|v| v.to_string())
                    .unwrap_or_default();
                out.push_str(&format!("{:<14} {:<11} {}\n", t["target"].as_str().unwrap_or(""), t["status"].as_str().unwrap_or(""), computed));
                for n in t["notes"].as_array().into_iter().flatten() {
                    out.push_str(&format!("    note: {}\n", n.as_str().unwrap_or("")));
                }
            }
        }
        Command::Quantum { .. } => {
            out.push_str(&format!("[[{},{},{}]]_{}{}\n", value["n"], value["k"], value["d"], value["q"], if value["mds"] == true { " MDS" } else { "" }));
        }
        Command::Search { .. } => {
            out.push_str(&format!("region: {} exponent vectors\n", value["region_size"]));
            for r in value["results"].as_array().into_iter().flatten() {
                let q = &r["quantum"];
                out.push_str(&format!("[[{},{},{}]]_{} {}\n", q["n"], q["k"], q["d"], q["q"], r["code"]["exponents"]));
            }
        }
        Command::Factor(_) => {
            for c in value["cosets"].as_array().into_iter().flatten() {
                out.push_str(&format!("C{:<5} deg {:<3} {:<5} partner C{}\n", c["rep"], c["degree"], c["kind"].as_str().unwrap_or(""), c["partner"]));
            }
        }
        _ => out.push_str(&serde_json::to_string_pretty(value).expect("serializable")),
    }
    out
}
