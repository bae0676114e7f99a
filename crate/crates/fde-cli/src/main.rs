fn main() {
    std::process::exit(fde_cli::run(std::env::args_os()));
}
