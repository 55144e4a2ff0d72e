fn main() {
    std::process::exit(qcreg::cli::run_from(std::env::args_os()));
}
