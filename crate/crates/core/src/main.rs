use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let out = auslander::cli::run_args(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.stdout.as_bytes());
    ExitCode::from(out.code as u8)
}
