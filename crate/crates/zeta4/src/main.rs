use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use zeta4::{run, Cli, RunConfig};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cfg = RunConfig::from(cli);
    let mut out = BufWriter::new(io::stdout().lock());
    let result = run(&cfg, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(report), Ok(())) => {
            eprintln!("{}", report.summary);
            ExitCode::from(report.status.code() as u8)
        }
        (Err(e), _) => {
            eprintln!("zeta4: {e}");
            ExitCode::from(e.code() as u8)
        }
        (Ok(_), Err(e)) => {
            eprintln!("zeta4: writing output: {e}");
            ExitCode::from(1)
        }
    }
}
