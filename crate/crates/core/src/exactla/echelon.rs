//! Fraction-free (Bareiss) elimination.
//!
//! Rows are cleared of denominators first, so the elimination itself runs on
//! integers and every division is exact. Back substitution is the only place
//! rationals reappear.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{RatMatrix, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Pivoting {
    /// Any nonzero entry of the remaining block, smallest bit size first.
    Full,
    /// Leftmost column that still has a nonzero entry. Pivot columns are
    /// then the greedy leftmost independent set of columns.
    ColumnOrder,
}

/// Result of eliminating a matrix: the nonzero rows of a fraction-free
/// echelon form and the column each row pivots on.
pub(crate) struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    cols: usize,
    /// Rows beyond the rank, kept for consistency checks in `solve`.
    rest: Vec<Vec<BigInt>>,
}

fn integer_rows(m: &RatMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect()
}

impl Echelon {
    /// Eliminates `m`, choosing pivots only among its first `pivotable`
    /// columns. The remaining columns ride along (augmented right-hand sides).
    pub(crate) fn new(m: &RatMatrix, pivotable: usize, mode: Pivoting) -> Self {
        let cols = m.cols();
        let mut a = integer_rows(m);
        let n = a.len();
        let mut used = vec![false; cols];
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut k = 0;
        let mut scan_from = 0;

        while k < n {
            let choice = match mode {
                Pivoting::Full => {
                    let mut best: Option<(usize, usize, u64)> = None;
                    for (i, row) in a.iter().enumerate().skip(k) {
                        for (j, x) in row.iter().enumerate().take(pivotable) {
                            if used[j] || x.is_zero() {
                                continue;
                            }
                            let bits = x.bits();
                            if best.is_none_or(|(_, _, b)| bits < b) {
                                best = Some((i, j, bits));
                            }
                        }
                    }
                    best.map(|(i, j, _)| (i, j))
                }
                Pivoting::ColumnOrder => {
                    let mut found = None;
                    for j in scan_from..pivotable {
                        let mut best: Option<(usize, u64)> = None;
                        for (i, row) in a.iter().enumerate().skip(k) {
                            if !row[j].is_zero() {
                                let bits = row[j].bits();
                                if best.is_none_or(|(_, b)| bits < b) {
                                    best = Some((i, bits));
                                }
                            }
                        }
                        if let Some((i, _)) = best {
                            found = Some((i, j));
                            break;
                        }
                    }
                    found
                }
            };
            let Some((pi, pj)) = choice else { break };
            a.swap(k, pi);
            used[pj] = true;
            scan_from = pj + 1;
            pivots.push(pj);

            let (head, tail) = a.split_at_mut(k + 1);
            let prow = &head[k];
            let p = &prow[pj];
            for row in tail.iter_mut() {
                let f = row[pj].clone();
                for j in 0..cols {
                    if j == pj {
                        continue;
                    }
                    let mut v = p * &row[j];
                    if !f.is_zero() && !prow[j].is_zero() {
                        v -= &f * &prow[j];
                    }
                    if !prev.is_one() {
                        v /= &prev;
                    }
                    row[j] = v;
                }
                row[pj] = BigInt::zero();
            }
            prev = a[k][pj].clone();
            k += 1;
        }

        let rest = a.split_off(k);
        Echelon {
            rows: a,
            pivots,
            cols,
            rest,
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub(crate) fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Solves for the pivot unknowns by back substitution. `value(j)` gives
    /// the already fixed non-pivot unknowns; `rhs(k)` the right-hand side of
    /// echelon row `k`.
    fn back_substitute(
        &self,
        unknowns: usize,
        fixed: &[Rational],
        rhs: impl Fn(usize) -> Rational,
    ) -> Vec<Rational> {
        let mut x = fixed.to_vec();
        debug_assert_eq!(x.len(), unknowns);
        for k in (0..self.rows.len()).rev() {
            let row = &self.rows[k];
            let pj = self.pivots[k];
            let mut acc = rhs(k);
            for (j, xj) in x.iter().enumerate().take(unknowns) {
                if j != pj && !row[j].is_zero() && !xj.is_zero() {
                    acc -= Rational::from_integer(row[j].clone()) * xj;
                }
            }
            x[pj] = acc / Rational::from_integer(row[pj].clone());
        }
        x
    }

    /// Basis of the null space of the first `unknowns` columns, one primitive
    /// integer vector per free column.
    pub(crate) fn null_space(&self, unknowns: usize) -> Vec<Vec<Rational>> {
        let mut is_pivot = vec![false; unknowns];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..unknowns)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut fixed = vec![Rational::zero(); unknowns];
                fixed[f] = Rational::one();
                primitive(self.back_substitute(unknowns, &fixed, |_| Rational::zero()))
            })
            .collect()
    }

    /// For an augmented elimination `[A | B]` with `unknowns = A.cols`,
    /// returns one solution of `A x = b` per right-hand column, or `None` if
    /// any system is inconsistent. Free unknowns are set to zero.
    pub(crate) fn solutions(&self, unknowns: usize) -> Option<Vec<Vec<Rational>>> {
        let nrhs = self.cols - unknowns;
        for row in &self.rest {
            if row[unknowns..].iter().any(|x| !x.is_zero()) {
                return None;
            }
        }
        let zero = vec![Rational::zero(); unknowns];
        Some(
            (0..nrhs)
                .map(|b| {
                    self.back_substitute(unknowns, &zero, |k| {
                        Rational::from_integer(self.rows[k][unknowns + b].clone())
                    })
                })
                .collect(),
        )
    }
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
pub(crate) fn primitive(v: Vec<Rational>) -> Vec<Rational> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return v;
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    let g = g * sign;
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}
