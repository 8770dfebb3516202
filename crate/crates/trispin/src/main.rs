use std::process::ExitCode;

fn main() -> ExitCode {
    trispin::cli::main_entry()
}
