fn main() {
    std::process::exit(davis_rigidity::cli::run(std::env::args_os()));
}
