fn main() {
    std::process::exit(lucaslab::cli::main());
}
