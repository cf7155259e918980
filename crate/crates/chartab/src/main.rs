fn main() {
    std::process::exit(chartab::cli::run());
}
