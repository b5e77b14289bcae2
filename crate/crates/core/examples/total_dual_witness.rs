//! The isomorphism between the total complex of the dual and the dual of
//! the total complex, built explicitly and checked degree by degree.

use spectra_dr::bicomplex::verify_total_dual_iso;
use spectra_dr::exactla::rank;
use spectra_dr::random::{random_double_complex, seeded, BicomplexShape};

fn main() -> spectra_dr::Result<()> {
    let mut rng = seeded(17);
    let k = random_double_complex(&mut rng, BicomplexShape::default());
    println!("support {:?}, total dim {}", k.support(), k.total_dim());
    let witness = verify_total_dual_iso(&k)?;
    for d in witness.source().degrees() {
        let m = witness.mat(d);
        println!(
            "degree {d:>3}: {}x{} of rank {}",
            m.rows(),
            m.cols(),
            rank(&m)
        );
    }
    let dd = k.dual2().dual2();
    let negated = k
        .support()
        .bidegrees()
        .all(|(p, q)| dd.d1(p, q).signed(1) == *k.d1(p, q) && dd.d2(p, q).signed(1) == *k.d2(p, q));
    println!("dual2 twice negates both differentials: {negated}");
    Ok(())
}
