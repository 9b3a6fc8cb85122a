fn main() {
    std::process::exit(meet_ideal::cli::main_with_args(std::env::args_os()));
}
