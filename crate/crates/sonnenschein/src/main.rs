use clap::Parser;

fn main() {
    let cli = sonnenschein::cli::Cli::parse();
    std::process::exit(sonnenschein::cli::run(cli));
}
