use clap::Parser;

fn main() {
    let cli = xpoly_cli::Cli::parse();
    match xpoly_cli::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(e.exit_code());
        }
    }
}
