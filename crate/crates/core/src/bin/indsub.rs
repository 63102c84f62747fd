fn main() {
    std::process::exit(indsub::cli::main_with(std::env::args_os()));
}
