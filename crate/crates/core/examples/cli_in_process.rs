//! Running CLI commands in-process.

use spectra_dr::cli::main_with_args;

fn main() {
    let spec = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/iwasawa.json");
    let code = main_with_args(["spectra-dr", "truncate", "--input", spec]);
    println!("exit {code}");
    let code = main_with_args(["spectra-dr", "verify", "--suite", "models", "--count", "1"]);
    println!("exit {code}");
}
