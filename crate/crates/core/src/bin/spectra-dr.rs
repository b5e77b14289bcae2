fn main() {
    std::process::exit(spectra_dr::cli::main_with_args(std::env::args_os()));
}
