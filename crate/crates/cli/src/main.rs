mod args;
mod commands;
mod config;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;
use limcom_core::Error;

use args::Cli;
use config::Settings;

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(if err.is_size_cap() { 2 } else { 1 })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let settings = match Settings::resolve(&cli) {
        Ok(s) => s,
        Err(e) => return fail(&e),
    };
    if let Some(jobs) = settings.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: cannot start {jobs} workers: {e}");
            return ExitCode::from(1);
        }
    }
    match commands::run(&cli.command, &settings) {
        Ok(value) => {
            // a closed pipe on stdout is not an error of the computation
            let _ = writeln!(std::io::stdout().lock(), "{}", render::render(&value, settings.format));
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}
