use clap::error::ErrorKind;
use clap::Parser;

use crabmeet_cli::{run, RunConfig};

fn main() {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(err) => {
            // help and version are not usage errors
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                std::process::exit(0);
            }
            eprintln!("{err}");
            std::process::exit(1);
        }
    };
    std::process::exit(run(&config));
}
