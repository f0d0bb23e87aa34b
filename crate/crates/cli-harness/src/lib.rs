//! Report-oriented command-line front end for the peakon laboratory.

pub mod acceptance;
pub mod args;
pub mod commands;
pub mod io;

/// Parse and execute one invocation; returns the process exit code.
pub fn run(argv: &[String]) -> i32 {
    let parsed = match args::parse(argv) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("usage error: {e}\n\n{}", commands::USAGE);
            return 2;
        }
    };
    match commands::dispatch(&parsed) {
        Ok(summary) => {
            println!("{summary}");
            0
        }
        Err(failure) => {
            if failure.code == 2 {
                eprintln!("usage error: {}\n\n{}", failure.message, commands::USAGE);
            } else {
                println!("{}", failure.message);
            }
            failure.code
        }
    }
}
