fn main() {
    std::process::exit(ncmod::cli::main());
}
