fn main() {
    std::process::exit(sublat::cli::run(std::env::args_os()));
}
