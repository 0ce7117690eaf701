use std::process::ExitCode;

use clap::Parser;
use closed_chroma::args::Cli;
use closed_chroma::Status;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match closed_chroma::run(&cli) {
        Ok(Status::Completed) => ExitCode::SUCCESS,
        Ok(Status::Failures) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
