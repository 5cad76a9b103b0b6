fn main() {
    std::process::exit(invcat::harness::main_with_args(std::env::args_os()));
}
