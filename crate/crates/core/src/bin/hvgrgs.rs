use std::process::ExitCode;

fn main() -> ExitCode {
    match hvgrgs::cli::run(std::env::args_os()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            print!("{}", e.stdout);
            eprintln!("hvgrgs: error: {}", e.message);
            ExitCode::from(e.code as u8)
        }
    }
}
