fn main() {
    std::process::exit(qfourier::cli::run(std::env::args()));
}
