fn main() {
    std::process::exit(egflab::cli::run());
}
