fn main() {
    std::process::exit(periplectiq::cli::main_with_args(std::env::args_os()));
}
