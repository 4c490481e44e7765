use clap::Parser;

fn main() {
    let cli = qsv::Cli::parse();
    std::process::exit(qsv::run(cli));
}
