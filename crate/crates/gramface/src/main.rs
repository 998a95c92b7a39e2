fn main() {
    let code = gramface::cli::run(std::env::args_os());
    std::process::exit(code);
}
