fn main() {
    std::process::exit(mdlc::cli::run(std::env::args_os()));
}
