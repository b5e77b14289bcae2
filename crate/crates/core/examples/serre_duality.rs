//! The duality map on truncated hypercohomology of a torus and of the
//! Iwasawa model, checked to be bijective on every window.

use spectra_dr::exactla::rank;
use spectra_dr::geomodels::{lie_model, torus_model, LieModelSpec};
use spectra_dr::truncation::Window;

fn main() -> spectra_dr::Result<()> {
    for (name, m) in [
        ("torus(2)", torus_model(2, 1)?),
        ("iwasawa", lie_model(&LieModelSpec::iwasawa())?),
    ] {
        let n = m.n() as i64;
        let mut bijective = 0;
        let mut total = 0;
        for s in 0..=n {
            for t in s..=n {
                let f = m.duality_map(Window::new(s, t))?.total_map();
                for k in 0..=2 * n {
                    let c = f.cohomology_map(k)?;
                    total += 1;
                    if c.is_square() && rank(&c) == c.cols() {
                        bijective += 1;
                    }
                }
            }
        }
        println!("{name}: {bijective} of {total} cohomology maps bijective");
    }
    Ok(())
}
