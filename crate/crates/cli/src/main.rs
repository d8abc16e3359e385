use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out) = polyk0_cli::run_subcommand(std::env::args_os());
    if code == polyk0_cli::EXIT_USAGE {
        eprint!("{}", out);
    } else {
        print!("{}", out);
    }
    ExitCode::from(code as u8)
}
