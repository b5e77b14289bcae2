//! Pages of the column-filtration spectral sequence of a random double
//! complex, down to the limit.

use spectra_dr::random::{random_double_complex, seeded, BicomplexShape};
use spectra_dr::spectral;

fn main() {
    let k = random_double_complex(&mut seeded(17), BicomplexShape::default());
    let total = k.total();
    for page in spectral::pages(&k) {
        let diag: Vec<usize> = k
            .support()
            .total_degrees()
            .map(|d| page.diagonal_dim(d))
            .collect();
        println!("E_{}: diagonals {diag:?}", page.r());
    }
    let betti: Vec<usize> = k
        .support()
        .total_degrees()
        .map(|d| total.betti(d))
        .collect();
    println!("H(total):   {betti:?}");
    for d in k.support().total_degrees() {
        let f = spectral::filtration_dims(&k, d);
        println!("F^p H^{d}: from p = {} {:?}", f.start, f.dims);
    }
}
