fn main() {
    std::process::exit(signless::cli::cli_main(std::env::args_os()));
}
