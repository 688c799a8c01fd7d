use std::process::ExitCode;

fn main() -> ExitCode {
    match qosc_cli::run_command(std::env::args_os()) {
        Ok((cli, report)) => {
            println!("{}", qosc_cli::render(&cli, &report));
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(qosc_cli::CliError::Usage(e)) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("qosc: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
