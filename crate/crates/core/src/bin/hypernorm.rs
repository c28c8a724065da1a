use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = hypernorm::cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(hypernorm::cli::EXIT_INPUT as u8);
    }
    ExitCode::from(hypernorm::cli::run(std::env::args_os()) as u8)
}
