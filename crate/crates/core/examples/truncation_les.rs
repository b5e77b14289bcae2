//! Column truncations of the Iwasawa model: hypercohomology per window and
//! long exact sequences of nested windows.

use spectra_dr::geomodels::{lie_model, LieModelSpec};
use spectra_dr::random::{random_double_complex, seeded, BicomplexShape};
use spectra_dr::truncation::{hypercohomology_all, les_of_truncations, Window};

fn main() -> spectra_dr::Result<()> {
    let m = lie_model(&LieModelSpec::iwasawa())?;
    for s in 0..=3 {
        for t in s..=3 {
            let h: Vec<usize> = hypercohomology_all(m.base(), Window::new(s, t))
                .into_values()
                .collect();
            println!("[{s},{t}] {h:?}");
        }
    }
    // On a random double complex some connecting maps are nonzero.
    let k = random_double_complex(&mut seeded(54), BicomplexShape::default());
    let c = k.support().columns();
    let (lo, hi) = (*c.start(), *c.end());
    for s in lo + 1..=hi {
        let les = les_of_truncations(&k, lo, s, hi)?;
        println!(
            "[{s},{hi}] -> [{lo},{hi}] -> [{lo},{}]: exact {}, nonzero connecting map {}, alternating sum {}",
            s - 1,
            les.is_exact(),
            les.has_nonzero_connecting_map(),
            les.alternating_sum()
        );
    }
    Ok(())
}
