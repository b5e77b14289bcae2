//! A random bounded complex, its dual and its shifts.

use spectra_dr::random::{random_complex, seeded, ComplexShape};

fn main() {
    let mut rng = seeded(11);
    let k = random_complex(
        &mut rng,
        ComplexShape {
            span: 6,
            max_dim: 4,
        },
    );
    let dual = k.dual();
    println!("{:>4} {:>5} {:>8} {:>10}", "k", "dim", "H^k(K)", "H^-k(K*)");
    for d in k.degrees() {
        println!(
            "{d:>4} {:>5} {:>8} {:>10}",
            k.dim(d),
            k.betti(d),
            dual.betti(-d)
        );
    }
    println!("euler characteristic {}", k.euler_characteristic());
    let shifted = k.shift(2);
    println!("K[2] starts at degree {}", shifted.lo());
}
