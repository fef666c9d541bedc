fn main() {
    std::process::exit(wcw_cli::run(std::env::args_os()));
}
