use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use ringcode_cli::args::Cli;
use ringcode_cli::error::EXIT_PARAMETER;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARAMETER } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(1);
        }
    }
    match ringcode_cli::run(&cli) {
        Ok(value) => {
            if cli.pretty {
                eprint!("{}", ringcode_cli::pretty(&cli, &value));
            }
            emit(&value);
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let Some(detail) = &e.detail {
                if cli.pretty {
                    eprint!("{}", ringcode_cli::pretty(&cli, detail));
                }
                emit(detail);
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}

/// Write JSON to stdout; a closed pipe is not an error.
fn emit(value: &serde_json::Value) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{text}").and_then(|_| out.flush());
}
