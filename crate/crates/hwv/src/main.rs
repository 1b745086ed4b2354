fn main() {
    std::process::exit(hwv::cli::main(std::env::args_os()));
}
