fn main() {
    std::process::exit(cyclepoly::cli::main_with_args(std::env::args_os()));
}
