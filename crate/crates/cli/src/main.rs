use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    match subshift::run(std::env::args_os()) {
        Ok(outcome) => {
            let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
            ExitCode::from(outcome.exit)
        }
        Err((message, code)) => {
            let stream: &mut dyn Write = if code == 0 {
                &mut std::io::stdout()
            } else {
                &mut std::io::stderr()
            };
            let _ = stream.write_all(message.as_bytes());
            ExitCode::from(code)
        }
    }
}
