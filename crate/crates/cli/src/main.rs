use clap::error::ErrorKind;
use clap::Parser;

fn main() {
    let cli = match superiso_cli::Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let outcome = superiso_cli::run(&cli);
    let text = outcome.report.canonical_json();
    println!("{text}");
    if let Some(path) = &cli.output_path {
        if let Err(e) = std::fs::write(path, format!("{text}\n")) {
            eprintln!("cannot write report to {}: {e}", path.display());
            std::process::exit(1);
        }
    }
    eprintln!("elapsed: {}ms", outcome.report.wall_ms);
    std::process::exit(outcome.exit);
}
