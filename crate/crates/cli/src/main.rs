fn main() {
    std::process::exit(sumset_cli::run(std::env::args_os()));
}
