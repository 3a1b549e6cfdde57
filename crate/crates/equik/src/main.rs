fn main() {
    std::process::exit(equik::cli::main());
}
