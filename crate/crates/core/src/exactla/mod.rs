//! Exact linear algebra over the rationals.
//!
//! Everything downstream (cohomology, spectral pages, connecting maps) is a
//! question about ranks, kernels, images and subquotients of rational
//! matrices; this module answers those exactly.

mod echelon;
mod matrix;
mod subquotient;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use matrix::RatMatrix;
pub use subquotient::{induced_map, subquotient, Subquotient};

use echelon::{Echelon, Pivoting};

/// Exact rational number. Serialized as `"a/b"`, or `"a"` when `b = 1`.
pub type Rational = BigRational;

/// Integer as a rational.
pub fn rat(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

#[cfg(test)]
pub(crate) fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

/// Parses `"a/b"` or `"a"`. The denominator must be nonzero.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n
        .parse()
        .map_err(|_| format!("bad rational numerator in {s:?}"))?;
    let d: BigInt = d
        .parse()
        .map_err(|_| format!("bad rational denominator in {s:?}"))?;
    if d == BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

/// Rank over ℚ.
pub fn rank(m: &RatMatrix) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    Echelon::new(m, m.cols(), Pivoting::Full).rank()
}

/// Columns form a basis of `ker(m)`; each column is a primitive integer
/// vector.
pub fn kernel_basis(m: &RatMatrix) -> RatMatrix {
    let n = m.cols();
    if m.rows() == 0 {
        return RatMatrix::identity(n);
    }
    let ech = Echelon::new(m, n, Pivoting::Full);
    RatMatrix::from_columns(n, &ech.null_space(n))
}

/// The leftmost independent subset of the columns of `m`.
pub fn image_basis(m: &RatMatrix) -> RatMatrix {
    m.select_columns(&pivot_columns(m))
}

/// Indices of the greedy leftmost independent set of columns.
pub fn pivot_columns(m: &RatMatrix) -> Vec<usize> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    Echelon::new(m, m.cols(), Pivoting::ColumnOrder)
        .pivots()
        .to_vec()
}

/// One solution `X` of `a · X = b`, or `None` if some column of `b` is not in
/// the column span of `a`.
pub fn solve(a: &RatMatrix, b: &RatMatrix) -> Option<RatMatrix> {
    assert_eq!(a.rows(), b.rows(), "solve: row mismatch");
    let n = a.cols();
    if b.cols() == 0 {
        return Some(RatMatrix::zeros(n, 0));
    }
    if a.rows() == 0 {
        return Some(RatMatrix::zeros(n, b.cols()));
    }
    let aug = a.hstack(b).expect("row counts checked");
    let ech = Echelon::new(&aug, n, Pivoting::Full);
    let sols = ech.solutions(n)?;
    Some(RatMatrix::from_columns(n, &sols))
}

/// Inverse of a square matrix, if it is invertible.
pub fn inverse(a: &RatMatrix) -> Option<RatMatrix> {
    if !a.is_square() || rank(a) != a.rows() {
        return None;
    }
    solve(a, &RatMatrix::identity(a.rows()))
}

/// True iff every column of `sub` lies in the column span of `span`.
pub fn spans_contain(span: &RatMatrix, sub: &RatMatrix) -> bool {
    if sub.cols() == 0 || sub.is_zero() {
        return true;
    }
    if span.cols() == 0 {
        return false;
    }
    rank(&span.hstack(sub).expect("ambient mismatch")) == rank(span)
}
