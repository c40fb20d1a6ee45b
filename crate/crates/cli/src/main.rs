use std::io::Write;

fn main() -> std::process::ExitCode {
    let out = eqsurf_cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    std::process::ExitCode::from(out.code.0)
}
