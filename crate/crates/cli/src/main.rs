fn main() {
    std::process::exit(hyperphase_cli::run(std::env::args_os()));
}
