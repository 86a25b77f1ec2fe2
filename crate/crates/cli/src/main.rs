use std::process;

use clap::Parser;

use sandhi_forge_cli::commands::{run, Cli};

fn main() {
    // Clap's own exit convention is 2 for usage errors; this tool reserves
    // 2 for data errors, so usage failures are remapped to 1 here.
    let cli = Cli::try_parse().unwrap_or_else(|err| {
        let code = if err.exit_code() == 0 { 0 } else { 1 };
        let _ = err.print();
        process::exit(code);
    });
    if let Err(err) = run(cli.command) {
        eprintln!("error: {err}");
        process::exit(err.exit_code());
    }
}
