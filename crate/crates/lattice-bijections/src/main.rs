use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use lattice_bijections::cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdin = io::stdin().lock();
    let mut out = BufWriter::new(io::stdout().lock());
    let result = run(cli, &mut stdin, &mut out).and_then(|()| Ok(out.flush()?));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        // the reader went away, e.g. `latbij enumerate ... | head`
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("latbij: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
