fn main() {
    std::process::exit(cyclerad::cli::main_with_args(std::env::args_os()));
}
