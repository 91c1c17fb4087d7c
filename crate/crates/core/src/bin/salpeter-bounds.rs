fn main() {
    std::process::exit(salpeter_bounds::cli::main_with_args(std::env::args_os()));
}
