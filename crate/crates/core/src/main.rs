fn main() {
    std::process::exit(qrat::cli::main_entry());
}
