use std::process::ExitCode;

use clap::Parser;
use tphopf_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                print!("{}", outcome.to_json(cli.seed));
            } else {
                println!("{}", outcome.text);
            }
            ExitCode::from(outcome.exit_code())
        }
        Err(e) => {
            eprintln!("tpcheck: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
