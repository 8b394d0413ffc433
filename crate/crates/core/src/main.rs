fn main() {
    std::process::exit(om_core::cli::main());
}
