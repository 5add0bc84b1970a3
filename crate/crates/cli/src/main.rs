use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let e = pythole_cli::execute(std::env::args_os());
    let _ = std::io::stdout().lock().write_all(e.stdout.as_bytes());
    let _ = std::io::stderr().lock().write_all(e.stderr.as_bytes());
    ExitCode::from(e.code)
}
