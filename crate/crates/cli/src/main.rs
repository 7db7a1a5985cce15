fn main() {
    std::process::exit(ltype_cli::run(std::env::args_os()));
}
