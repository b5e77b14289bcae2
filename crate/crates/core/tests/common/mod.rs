//! Independent oracles: ranks over large prime fields, a naive exterior
//! algebra on sorted index lists, and binomial counts.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use spectra_dr::bicomplex::DoubleComplex;
use spectra_dr::cochain::CochainComplex;
use spectra_dr::exactla::RatMatrix;

const PRIMES: [i64; 2] = [2_147_483_647, 1_000_000_007];

fn pow_mod(mut b: i64, mut e: i64, p: i64) -> i64 {
    let mut r = 1i64;
    b = b.rem_euclid(p);
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as i128 * b as i128) % p as i128) as i64;
        }
        b = ((b as i128 * b as i128) % p as i128) as i64;
        e >>= 1;
    }
    r
}

fn reduce(x: &BigInt, p: i64) -> i64 {
    let r = x % BigInt::from(p);
    r.to_i64().unwrap().rem_euclid(p)
}

/// Rank of an integer-row matrix over `F_p` by plain Gaussian elimination.
pub fn rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut a: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..a.len()).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(rank, piv);
        let inv = pow_mod(a[rank][c], p - 2, p);
        let pivot = a[rank].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != rank && row[c] != 0 {
                let f = row[c] as i128 * inv as i128 % p as i128;
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x = (*x as i128 - f * *y as i128).rem_euclid(p as i128) as i64;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Rank of a rational matrix: the largest rank over two prime fields whose
/// characteristic divides no denominator.
pub fn rank(m: &RatMatrix) -> usize {
    PRIMES
        .iter()
        .filter_map(|&p| {
            let mut rows = vec![vec![0i64; m.cols()]; m.rows()];
            for (i, row) in rows.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    let q = m.get(i, j);
                    let den = reduce(q.denom(), p);
                    if den == 0 {
                        return None;
                    }
                    *x = (reduce(q.numer(), p) as i128 * pow_mod(den, p - 2, p) as i128 % p as i128)
                        as i64;
                }
            }
            Some(rank_mod(&rows, p))
        })
        .max()
        .expect("some prime divides no denominator")
}

/// `dim H^k` from ranks of the differentials.
pub fn betti(k: &CochainComplex, deg: i64) -> usize {
    let dim = k.dim(deg);
    if dim == 0 {
        return 0;
    }
    dim - rank(&k.diff(deg)) - rank(&k.diff(deg - 1))
}

/// Total differential of a double complex assembled block by block, with
/// summands ordered by ascending column.
fn total_differential(k: &DoubleComplex, deg: i64) -> Vec<Vec<Rational>> {
    let s = k.support();
    let offsets = |d: i64| -> (BTreeMap<i64, usize>, usize) {
        let mut map = BTreeMap::new();
        let mut n = 0;
        for p in s.columns() {
            if s.contains(p, d - p) {
                map.insert(p, n);
                n += k.dim(p, d - p);
            }
        }
        (map, n)
    };
    let (src, cols) = offsets(deg);
    let (dst, rows) = offsets(deg + 1);
    let mut out = vec![vec![Rational::zero(); cols]; rows];
    for (&p, &c0) in &src {
        let q = deg - p;
        for (m, target) in [(k.d1(p, q), p + 1), (k.d2(p, q), p)] {
            let Some(&r0) = dst.get(&target) else {
                continue;
            };
            for i in 0..m.rows() {
                for j in 0..m.cols() {
                    out[r0 + i][c0 + j] += m.get(i, j);
                }
            }
        }
    }
    out
}

type Rational = spectra_dr::exactla::Rational;

fn to_matrix(rows: Vec<Vec<Rational>>, cols: usize) -> RatMatrix {
    let r = rows.len();
    RatMatrix::from_vec(r, cols, rows.into_iter().flatten().collect()).unwrap()
}

/// `dim H^k` of the total complex, assembled independently.
pub fn total_betti(k: &DoubleComplex, deg: i64) -> usize {
    let dim: usize = k.support().columns().map(|p| k.dim(p, deg - p)).sum();
    if dim == 0 {
        return 0;
    }
    let prev_dim: usize = k.support().columns().map(|p| k.dim(p, deg - 1 - p)).sum();
    let out = to_matrix(total_differential(k, deg), dim);
    let inc = to_matrix(total_differential(k, deg - 1), prev_dim);
    dim - rank(&out) - rank(&inc)
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `h^{p,q}` of a complex torus of dimension `n`.
pub fn torus_hodge(n: i64, p: i64, q: i64) -> i64 {
    binomial(n, p) * binomial(n, q)
}

/// `dim ℍ^k([s,t])` of a torus: the direct sum of `h^{p,k-p}` over the
/// window, all differentials being zero.
pub fn torus_hyper(n: i64, s: i64, t: i64, k: i64) -> i64 {
    (s.max(0)..=t.min(n))
        .map(|p| torus_hodge(n, p, k - p))
        .sum()
}

/// Exterior algebra on generators `0..2n` (`ω^1..ω^n` then `ω̄^1..ω̄^n`),
/// with monomials as sorted index lists.
pub struct Exterior {
    pub n: usize,
    /// `d` of each generator as a sum of `coeff · [a, b]`.
    pub dgen: Vec<Vec<(i64, Vec<usize>)>>,
}

/// Sorts a list of generators, returning the sign, or `None` on a repeat.
fn normalize(mut v: Vec<usize>) -> Option<(i64, Vec<usize>)> {
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, v))
}

impl Exterior {
    /// `dω^3 = -ω^1∧ω^2` and its conjugate.
    pub fn iwasawa() -> Self {
        let mut dgen = vec![Vec::new(); 6];
        dgen[2] = vec![(-1, vec![0, 1])];
        dgen[5] = vec![(-1, vec![3, 4])];
        Exterior { n: 3, dgen }
    }

    pub fn torus(n: usize) -> Self {
        Exterior {
            n,
            dgen: vec![Vec::new(); 2 * n],
        }
    }

    /// `d(g_1 ∧ … ∧ g_k) = Σ_j (-1)^j g_1 ∧ … ∧ dg_j ∧ … ∧ g_k`.
    pub fn d(&self, m: &[usize]) -> BTreeMap<Vec<usize>, i64> {
        let mut out = BTreeMap::new();
        for (j, &g) in m.iter().enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            for (c, two) in &self.dgen[g] {
                let mut v = m[..j].to_vec();
                v.extend(two);
                v.extend(&m[j + 1..]);
                if let Some((s, sorted)) = normalize(v) {
                    *out.entry(sorted).or_insert(0) += sign * s * c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    fn subsets(&self, lo: usize, hi: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![Vec::new()];
        }
        (lo..hi)
            .flat_map(|i| {
                self.subsets(i + 1, hi, k - 1)
                    .into_iter()
                    .map(move |mut rest| {
                        rest.insert(0, i);
                        rest
                    })
            })
            .collect()
    }

    pub fn basis(&self, p: usize, q: usize) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut out = Vec::new();
        for h in self.subsets(0, n, p) {
            for a in self.subsets(n, 2 * n, q) {
                let mut m = h.clone();
                m.extend(a);
                out.push(m);
            }
        }
        out
    }

    pub fn degree_basis(&self, k: usize) -> Vec<Vec<usize>> {
        self.subsets(0, 2 * self.n, k)
    }

    /// Matrix of the part of `d` landing in `target` monomials.
    fn matrix(&self, source: &[Vec<usize>], target: &[Vec<usize>]) -> Vec<Vec<i64>> {
        let index: BTreeMap<&Vec<usize>, usize> =
            target.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows = vec![vec![0i64; source.len()]; target.len()];
        for (j, m) in source.iter().enumerate() {
            for (t, c) in self.d(m) {
                if let Some(&i) = index.get(&t) {
                    rows[i][j] += c;
                }
            }
        }
        rows
    }

    fn r(rows: &[Vec<i64>]) -> usize {
        if rows.is_empty() {
            0
        } else {
            rank_mod(rows, PRIMES[0])
        }
    }

    /// `h^{p,q} = dim ker ∂̄ / im ∂̄`.
    pub fn hodge(&self, p: usize, q: usize) -> usize {
        let here = self.basis(p, q);
        let next = if q < self.n {
            self.basis(p, q + 1)
        } else {
            Vec::new()
        };
        let out = Self::r(&self.matrix(&here, &next));
        let inc = if q > 0 {
            Self::r(&self.matrix(&self.basis(p, q - 1), &here))
        } else {
            0
        };
        here.len() - out - inc
    }

    /// de Rham `b_k`.
    pub fn betti(&self, k: usize) -> usize {
        let here = self.degree_basis(k);
        let out = Self::r(&self.matrix(&here, &self.degree_basis(k + 1)));
        let inc = if k > 0 {
            Self::r(&self.matrix(&self.degree_basis(k - 1), &here))
        } else {
            0
        };
        here.len() - out - inc
    }

    /// Holomorphic degree of a monomial.
    fn p_of(&self, m: &[usize]) -> i64 {
        m.iter().filter(|&&g| g < self.n).count() as i64
    }

    fn windowed(&self, k: i64, s: i64, t: i64) -> Vec<Vec<usize>> {
        if k < 0 {
            return Vec::new();
        }
        self.degree_basis(k as usize)
            .into_iter()
            .filter(|m| (s..=t).contains(&self.p_of(m)))
            .collect()
    }

    /// `dim ℍ^k([s,t])`: forms with holomorphic degree in `[s,t]`, with
    /// every component of `d` leaving the window dropped.
    pub fn hyper(&self, s: i64, t: i64, k: i64) -> usize {
        let here = self.windowed(k, s, t);
        let out = Self::r(&self.matrix(&here, &self.windowed(k + 1, s, t)));
        let inc = Self::r(&self.matrix(&self.windowed(k - 1, s, t), &here));
        here.len() - out - inc
    }

    /// `T¹ × Iwasawa` with generators `ω^1` (torus), `ω^2..ω^4` (Iwasawa)
    /// and their conjugates.
    pub fn torus_times_iwasawa() -> Self {
        let mut dgen = vec![Vec::new(); 8];
        dgen[3] = vec![(-1, vec![1, 2])];
        dgen[7] = vec![(-1, vec![5, 6])];
        Exterior { n: 4, dgen }
    }
}
