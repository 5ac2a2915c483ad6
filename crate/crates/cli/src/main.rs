fn main() {
    std::process::exit(monogen_cli::run(std::env::args_os()));
}
