//! Rank, kernel, inverse and a subquotient over ℚ.

use spectra_dr::exactla::{inverse, kernel_basis, rank, rat, subquotient, RatMatrix};

fn main() -> spectra_dr::Result<()> {
    let a = RatMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank {}", rank(&a));
    let ker = kernel_basis(&a);
    println!("kernel basis ({} column):", ker.cols());
    for i in 0..ker.rows() {
        println!("  {}", ker.get(i, 0));
    }

    let b = RatMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
    let inv = inverse(&b).expect("invertible");
    println!(
        "inverse {:?}",
        inv.entries()
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
    );
    println!(
        "b * inv is identity: {}",
        b.try_mul(&inv)? == RatMatrix::identity(2)
    );

    // span{e1, e2} modulo span{e1 + e2}
    let cycles = RatMatrix::from_i64_rows(&[&[1, 0], &[0, 1], &[0, 0]]);
    let bounds = RatMatrix::from_i64_rows(&[&[1], &[1], &[0]]);
    let q = subquotient(&cycles, &bounds)?;
    println!("subquotient dim {}", q.dim());
    println!(
        "e1 - e2 is a boundary: {}",
        q.is_boundary(&[rat(1), rat(-1), rat(0)])
    );
    println!(
        "e1 + e2 is a boundary: {}",
        q.is_boundary(&[rat(1), rat(1), rat(0)])
    );
    Ok(())
}
