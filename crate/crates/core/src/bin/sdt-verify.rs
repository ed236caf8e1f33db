fn main() {
    std::process::exit(subdiv_ldt::cli::main_with_args(std::env::args_os()));
}
