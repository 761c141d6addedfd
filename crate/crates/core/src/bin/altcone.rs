use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, report) = altcone::cli::run_command(std::env::args_os());
    if code == altcone::cli::EXIT_OK {
        print!("{report}");
    } else {
        eprint!("{report}");
    }
    ExitCode::from(code as u8)
}
