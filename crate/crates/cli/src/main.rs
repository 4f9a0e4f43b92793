// SPDX-License-Identifier: Apache-2.0

use std::io;
use std::process::ExitCode;

use clap::Parser;
use trisynth_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = run(cli, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(status.code())
}
