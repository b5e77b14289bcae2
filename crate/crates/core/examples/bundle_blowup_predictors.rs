//! Leray–Hirsch, projective bundle and blowup predictions on a torus.

use spectra_dr::geomodels::{
    blowup_predict, hodge_filtration_projective_predict, leray_hirsch_predict, point_model,
    projective_bundle_predict, torus_model,
};
use spectra_dr::truncation::Window;

fn main() -> spectra_dr::Result<()> {
    let t2 = torus_model(2, 1)?;
    let pt = point_model();
    let w = Window::new(0, 2);
    for k in 0..=6 {
        let proj = projective_bundle_predict(&t2, 3, k, w)?;
        let lh = leray_hirsch_predict(&t2, &[(0, 0), (1, 1), (2, 2)], k, w);
        let blow = blowup_predict(&t2, &pt, 2, k, w)?;
        println!(
            "k = {k}: P^2-bundle {proj:>2} (Leray-Hirsch {lh:>2}), blowup at a point {blow:>2}"
        );
    }
    let f = hodge_filtration_projective_predict(&t2, 2, 2, 1)?;
    println!("F^1 H^2 of a P^1-bundle: {f}");
    Ok(())
}
