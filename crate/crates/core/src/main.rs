fn main() {
    std::process::exit(orbipoly::cli::run());
}
