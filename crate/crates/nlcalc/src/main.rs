use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(nlcalc::cli::main_entry() as u8)
}
