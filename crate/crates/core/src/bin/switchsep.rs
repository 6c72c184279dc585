fn main() {
    std::process::exit(switchsep::cli::run(std::env::args_os()));
}
