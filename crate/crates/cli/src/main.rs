use std::process::ExitCode;

fn main() -> ExitCode {
    let (output, code) = jones_cli::commands::run(std::env::args_os());
    if code == 2 {
        eprint!("{output}");
    } else {
        print!("{output}");
        if !output.ends_with('\n') {
            println!();
        }
    }
    ExitCode::from(code as u8)
}
