//! Product models against the window-by-window Künneth sum.

use spectra_dr::geomodels::{kunneth_predict, lie_model, product_model, torus_model, LieModelSpec};
use spectra_dr::truncation::{hypercohomology, Window};

fn main() -> spectra_dr::Result<()> {
    let t1 = torus_model(1, 1)?;
    let iw = lie_model(&LieModelSpec::iwasawa())?;
    let product = product_model(&iw, &t1)?;
    println!(
        "iwasawa x T1: n = {}, b_1 = {}",
        product.n(),
        product.base().total().betti(1)
    );
    let w = Window::new(1, 3);
    for c in 0..=8 {
        println!(
            "c = {c}: product {:>2}, predicted {:>2}",
            hypercohomology(product.base(), w, c),
            kunneth_predict(&iw, &t1, c, w)
        );
    }
    Ok(())
}
