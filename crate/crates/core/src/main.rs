fn main() {
    std::process::exit(mockmod4::cli::main_exit());
}
