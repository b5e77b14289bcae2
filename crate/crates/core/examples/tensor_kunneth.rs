//! Tensor products of complexes and of double complexes, with the
//! Künneth checks the library runs on them.

use spectra_dr::random::{
    random_complex, random_double_complex, seeded, BicomplexShape, ComplexShape,
};
use spectra_dr::tensorops::{
    bicomplex_kunneth_check, kunneth_complex_check, quad_tensor, ss_collapse,
};

fn main() -> spectra_dr::Result<()> {
    let mut rng = seeded(5);
    let shape = ComplexShape {
        span: 3,
        max_dim: 2,
    };
    let (k, l) = (
        random_complex(&mut rng, shape),
        random_complex(&mut rng, shape),
    );
    let report = kunneth_complex_check(&k, &l, 0);
    println!(
        "complex Künneth: {} checks, passed {}",
        report.len(),
        report.passed()
    );

    let shape = BicomplexShape {
        width: 3,
        height: 3,
        max_dim: 2,
    };
    let kb = random_double_complex(&mut rng, shape);
    let lb = random_double_complex(&mut rng, shape);
    let quad = quad_tensor(&kb, &lb)?;
    let collapsed = ss_collapse(&quad)?;
    println!(
        "collapsed support {:?}, total dim {}",
        collapsed.support(),
        collapsed.total_dim()
    );
    let report = bicomplex_kunneth_check(&kb, &lb)?;
    println!(
        "bicomplex Künneth: {} checks, passed {}",
        report.len(),
        report.passed()
    );
    Ok(())
}
