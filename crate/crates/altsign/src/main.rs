fn main() {
    std::process::exit(altsign::cli::run());
}
