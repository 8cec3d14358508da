fn main() {
    std::process::exit(weyl_clifford::cli::run(std::env::args_os()));
}
