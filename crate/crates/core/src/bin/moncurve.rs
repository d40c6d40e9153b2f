fn main() {
    std::process::exit(moncurve::cli::main_with_args(std::env::args_os()));
}
