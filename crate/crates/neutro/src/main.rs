use std::process::ExitCode;

fn main() -> ExitCode {
    neutro::cli::main_entry()
}
