fn main() {
    std::process::exit(fim::cli::run());
}
