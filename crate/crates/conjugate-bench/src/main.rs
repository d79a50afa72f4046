use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(conjugate_bench::cli::run() as u8)
}
