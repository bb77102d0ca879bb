use std::process::ExitCode;

use clap::Parser;
use rado_cli::app::{run, Cli};
use rado_cli::formats::VerdictDoc;
use rado_cli::CliError;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // --help and --version are not errors
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(outcome) => {
            println!("{}", outcome.doc);
            ExitCode::from(outcome.code as u8)
        }
        Err(err) => {
            if let CliError::Core(rado_core::Error::Indeterminate { reason, .. }) = &err {
                let doc = VerdictDoc::Indeterminate {
                    reason: (*reason).to_string(),
                };
                println!("{}", serde_json::to_string(&doc).expect("documents serialize"));
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
