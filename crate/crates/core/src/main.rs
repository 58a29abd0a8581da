use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let outcome = qgauss::cli::run_from_args(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    for w in &outcome.warnings {
        eprint!("{w}");
        if !w.ends_with('\n') {
            eprintln!();
        }
    }
    ExitCode::from(outcome.exit_code)
}
