fn main() {
    std::process::exit(geogrow::cli::run());
}
