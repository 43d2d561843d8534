fn main() {
    std::process::exit(antiresolve_cli::run(std::env::args_os()));
}
