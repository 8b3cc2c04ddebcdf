fn main() {
    std::process::exit(arithmat_cli::run(std::env::args_os()));
}
