fn main() {
    std::process::exit(dedekind::cli::run(std::env::args_os()));
}
