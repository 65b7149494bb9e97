mod args;
mod commands;
mod table;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::{CliError, Rendered};

fn run(cli: Cli) -> Result<(Rendered, Option<std::path::PathBuf>), CliError> {
    match cli.command {
        Command::Lambda(c) => commands::lambda(&c).map(|r| (r, c.out)),
        Command::Bounds { which, common } => commands::bounds(&common, which).map(|r| (r, common.out)),
        Command::Check {
            builtin,
            series,
            condition,
            common,
        } => commands::check(&common, builtin.as_deref(), series.as_deref(), condition)
            .map(|r| (r, common.out)),
        Command::Extremal(c) => commands::extremal(&c).map(|r| (r, c.out)),
        Command::Plotdata { what, common } => commands::plotdata(&common, what).map(|r| (r, common.out)),
        Command::Verify {
            suites,
            seed,
            format,
            out,
        } => commands::verify(&suites, seed, format).map(|r| (r, out)),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let (rendered, out) = match run(cli) {
        Ok(v) => v,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(CliError::Semantic(msg)) => {
            eprintln!("failure: {msg}");
            return ExitCode::from(1);
        }
    };
    let written = match &out {
        Some(path) => std::fs::write(path, &rendered.text),
        None => std::io::stdout().lock().write_all(rendered.text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    if rendered.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
