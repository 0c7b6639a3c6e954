fn main() {
    std::process::exit(balanced_bergman::cli::run(std::env::args_os()));
}
