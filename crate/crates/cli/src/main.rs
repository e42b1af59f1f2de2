use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;
use cupsq_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    let code = run(&cli, &mut out, &mut err);
    let _ = out.flush();
    ExitCode::from(code as u8)
}
