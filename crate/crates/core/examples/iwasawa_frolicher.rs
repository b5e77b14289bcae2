//! Hodge and Betti numbers of the Iwasawa model and where the Frölicher
//! inequality is strict.

use spectra_dr::geomodels::{lie_model, LieModelSpec};
use spectra_dr::spectral;
use spectra_dr::truncation::{frolicher_inequality, Window};

fn main() -> spectra_dr::Result<()> {
    let m = lie_model(&LieModelSpec::iwasawa())?;
    let e1 = spectral::first_page(m.base());
    for p in 0..=3 {
        let row: Vec<usize> = (0..=3).map(|q| e1.dim(p, q)).collect();
        println!("h^{{{p},*}} = {row:?}");
    }
    let report = frolicher_inequality(m.base(), Window::new(0, 3));
    for row in &report.rows {
        let mark = if row.betti < row.hodge_sum {
            "  strict"
        } else {
            ""
        };
        println!(
            "k = {}: b = {:>2}, sum h = {:>2}{mark}",
            row.k, row.betti, row.hodge_sum
        );
    }
    println!(
        "degenerates at E_1: {}",
        spectral::degenerates_at_e1(m.base())
    );
    Ok(())
}
