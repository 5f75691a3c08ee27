fn main() {
    std::process::exit(lefforge::cli::run());
}
