fn main() {
    std::process::exit(bicycle_geodesics::cli::run(std::env::args_os()));
}
