use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(gapcert::cli::main_entry())
}
