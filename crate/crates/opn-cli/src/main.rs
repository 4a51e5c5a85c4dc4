fn main() {
    std::process::exit(opn_cli::run(std::env::args_os()));
}
