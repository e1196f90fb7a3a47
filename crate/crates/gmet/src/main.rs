use clap::Parser;

fn main() {
    let cli = gmet::io::Cli::parse();
    std::process::exit(gmet::io::cli::run(cli));
}
