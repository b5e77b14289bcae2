//! The spectral sequence of a bounded double complex filtered by columns.
//!
//! With `T = sK`, `D = d1 + d2` and `F^p T` the columns `≥ p`:
//!
//! ```text
//! Z_r^{p,k} = { x ∈ F^p T^k : D x ∈ F^{p+r} T^{k+1} }
//! E_r^{p,q} = Z_r^{p,k} / (Z_{r-1}^{p+1,k} + D Z_{r-1}^{p-r+1,k-1}),   k = p + q
//! ```
//!
//! and `d_r` is induced by `D` on these subquotients of `T^k`.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::bicomplex::{BicomplexMap, Bidegree, DoubleComplex};
use crate::cochain::ChainMap;
use crate::error::Result;
use crate::exactla::{induced_map, kernel_basis, rank, subquotient, RatMatrix, Subquotient};
use crate::serde_util::{key, OrderedMap};

/// Page `E_r` with its differential `d_r : E_r^{p,q} → E_r^{p+r,q-r+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralPage {
    r: usize,
    terms: BTreeMap<Bidegree, Subquotient>,
    diffs: BTreeMap<Bidegree, RatMatrix>,
}

impl SpectralPage {
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn term(&self, p: i64, q: i64) -> Option<&Subquotient> {
        self.terms.get(&(p, q))
    }

    pub fn dim(&self, p: i64, q: i64) -> usize {
        self.terms.get(&(p, q)).map_or(0, Subquotient::dim)
    }

    pub fn dims(&self) -> BTreeMap<Bidegree, usize> {
        self.terms.iter().map(|(&b, t)| (b, t.dim())).collect()
    }

    /// `Σ_{p+q=k} dim E_r^{p,q}`.
    pub fn diagonal_dim(&self, k: i64) -> usize {
        self.terms
            .iter()
            .filter(|((p, q), _)| p + q == k)
            .map(|(_, t)| t.dim())
            .sum()
    }

    /// `d_r` leaving `(p, q)`; a zero matrix where nothing is stored.
    pub fn differential(&self, p: i64, q: i64) -> RatMatrix {
        let r = self.r as i64;
        self.diffs
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| RatMatrix::zeros(self.dim(p + r, q - r + 1), self.dim(p, q)))
    }

    pub fn differential_rank(&self, p: i64, q: i64) -> usize {
        self.diffs.get(&(p, q)).map_or(0, rank)
    }

    pub fn has_zero_differentials(&self) -> bool {
        self.diffs.values().all(RatMatrix::is_zero)
    }

    /// `{"r", "terms": {"p,q": dim}, "d_r_ranks": {"p,q": rank}}`.
    pub fn summary(&self) -> PageSummary {
        PageSummary {
            r: self.r,
            terms: OrderedMap(
                self.terms
                    .iter()
                    .map(|(&(p, q), t)| (key(&[p, q]), t.dim()))
                    .collect(),
            ),
            d_r_ranks: OrderedMap(
                self.terms
                    .keys()
                    .map(|&(p, q)| (key(&[p, q]), self.differential_rank(p, q)))
                    .collect(),
            ),
        }
    }
}

#[derive(Serialize)]
pub struct PageSummary {
    pub r: usize,
    terms: OrderedMap<usize>,
    d_r_ranks: OrderedMap<usize>,
}

/// Column-filtered total complex with cached differentials.
struct Filtered<'a> {
    k: &'a DoubleComplex,
    diffs: HashMap<i64, RatMatrix>,
}

impl<'a> Filtered<'a> {
    fn new(k: &'a DoubleComplex) -> Self {
        Filtered {
            k,
            diffs: HashMap::new(),
        }
    }

    fn total_diff(&mut self, deg: i64) -> &RatMatrix {
        let k = self.k;
        self.diffs
            .entry(deg)
            .or_insert_with(|| k.total_differential(deg))
    }

    /// Coordinates of `T^deg` lying in columns `≥ p` (or `< p`).
    fn column_indices(&self, deg: i64, p: i64, at_least: bool) -> Vec<usize> {
        self.k
            .blocks(deg)
            .into_iter()
            .filter(|b| (b.p >= p) == at_least)
            .flat_map(|b| b.offset..b.offset + b.dim)
            .collect()
    }

    /// `Z_r^{p,deg}` as columns in `T^deg`.
    fn cycles(&mut self, r: i64, p: i64, deg: i64) -> RatMatrix {
        let n = self.k.total_dim_at(deg);
        let src = self.column_indices(deg, p, true);
        let low = self.column_indices(deg + 1, p + r, false);
        let m = self.total_diff(deg).select_rows(&low).select_columns(&src);
        let ker = kernel_basis(&m);
        let mut out = RatMatrix::zeros(n, ker.cols());
        for (i, &row) in src.iter().enumerate() {
            for j in 0..ker.cols() {
                out.set(row, j, ker.get(i, j).clone());
            }
        }
        out
    }

    fn term(&mut self, r: i64, p: i64, deg: i64) -> Subquotient {
        let z = self.cycles(r, p, deg);
        let upper = self.cycles(r - 1, p + 1, deg);
        let earlier = self.cycles(r - 1, p - r + 1, deg - 1);
        let bounded = self.total_diff(deg - 1) * &earlier;
        let n = upper.hstack(&bounded).expect("same ambient");
        subquotient(&z, &n).expect("filtration boundaries lie in filtration cycles")
    }

    fn page(&mut self, r: usize) -> SpectralPage {
        let ri = r as i64;
        let support = self.k.support();
        let terms: BTreeMap<Bidegree, Subquotient> = support
            .bidegrees()
            .map(|(p, q)| ((p, q), self.term(ri, p, p + q)))
            .collect();
        let mut diffs = BTreeMap::new();
        for (&(p, q), src) in &terms {
            let Some(tgt) = terms.get(&(p + ri, q - ri + 1)) else {
                continue;
            };
            if src.dim() == 0 || tgt.dim() == 0 {
                continue;
            }
            let d = self.total_diff(p + q).clone();
            let m = induced_map(&d, src, tgt).expect("D respects the filtration");
            diffs.insert((p, q), m);
        }
        SpectralPage { r, terms, diffs }
    }
}

/// `E_r` computed directly from filtration cycles, for `r ≥ 1`.
pub fn page(k: &DoubleComplex, r: usize) -> SpectralPage {
    assert!(r >= 1, "pages start at r = 1");
    Filtered::new(k).page(r)
}

/// `E_1^{p,q} = H^q(K^{p,•})` with `d_1` induced by `d1`.
pub fn first_page(k: &DoubleComplex) -> SpectralPage {
    page(k, 1)
}

/// `E_{r+1}` from `E_r`.
pub fn next_page(prev: &SpectralPage, k: &DoubleComplex) -> SpectralPage {
    page(k, prev.r + 1)
}

/// Pages `E_1, …, E_{w+1}` where `w` is the number of columns; every later
/// page equals the last one.
pub fn pages(k: &DoubleComplex) -> Vec<SpectralPage> {
    let s = k.support();
    let width = (s.p1 - s.p0 + 1).max(0) as usize;
    let mut f = Filtered::new(k);
    (1..=width + 1).map(|r| f.page(r)).collect()
}

/// `E_∞`: the first page after which every differential vanishes.
pub fn limit_page(k: &DoubleComplex) -> SpectralPage {
    let mut all = pages(k);
    let last = all.pop().expect("at least one page");
    assert!(
        last.has_zero_differentials(),
        "pages past the support width carry no differentials"
    );
    let mut result = last;
    while let Some(prev) = all.pop() {
        if !prev.has_zero_differentials() {
            break;
        }
        debug_assert_eq!(prev.dims(), result.dims());
        result = prev;
    }
    result
}

/// `dim F^p H^k(sK)` for consecutive `p`, starting at `start`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiltrationDims {
    pub start: i64,
    pub dims: Vec<usize>,
}

impl FiltrationDims {
    /// `F^p` for any `p`: everything below `start`, zero past the end.
    pub fn at(&self, p: i64) -> usize {
        if p < self.start {
            self.dims.first().copied().unwrap_or(0)
        } else {
            self.dims
                .get((p - self.start) as usize)
                .copied()
                .unwrap_or(0)
        }
    }

    /// `F^p / F^{p+1}`.
    pub fn graded(&self, p: i64) -> usize {
        self.at(p) - self.at(p + 1)
    }
}

/// Images of `H^k(F^p sK) → H^k(sK)` for `p` in `p0 ..= p1 + 1`.
pub fn filtration_dims(k: &DoubleComplex, deg: i64) -> FiltrationDims {
    let s = k.support();
    let total = k.total();
    let h = total.cohomology(deg);
    let mut f = Filtered::new(k);
    let dims = (s.p0..=s.p1 + 1)
        .map(|p| {
            if h.dim() == 0 {
                return 0;
            }
            // Cycles of F^p are the vectors in F^p with D x = 0, i.e. Z_r for
            // r past the top column.
            let z = f.cycles(s.p1 - p + 2, p, deg);
            let c = h.coordinates(&z).expect("filtration cycles are cycles");
            rank(&c)
        })
        .collect();
    FiltrationDims { start: s.p0, dims }
}

/// `Σ_{p+q=k} dim E_1^{p,q}` for every total degree `k`, via row cohomology.
pub fn e1_diagonal_dims(k: &DoubleComplex) -> BTreeMap<i64, usize> {
    let s = k.support();
    let mut out: BTreeMap<i64, usize> = s.total_degrees().map(|d| (d, 0)).collect();
    for p in s.columns() {
        let row = k.row(p);
        for q in s.rows() {
            *out.entry(p + q).or_default() += row.betti(q);
        }
    }
    out
}

/// True iff `dim H^k(sK) = Σ_{p+q=k} dim E_1^{p,q}` for every `k`.
pub fn degenerates_at_e1(k: &DoubleComplex) -> bool {
    let total = k.total();
    e1_diagonal_dims(k)
        .into_iter()
        .all(|(d, e)| total.betti(d) == e)
}

/// Matrices of the map induced by `f` on `E_1`, one per bidegree.
pub fn first_page_map(f: &BicomplexMap) -> Result<BTreeMap<Bidegree, RatMatrix>> {
    let (src, tgt) = (f.source(), f.target());
    let mut out = BTreeMap::new();
    for p in src.support().columns().chain(tgt.support().columns()) {
        let (rs, rt) = (src.row(p), tgt.row(p));
        let mats = rs
            .degrees()
            .chain(rt.degrees())
            .map(|q| (q, f.mat(p, q).into_owned()))
            .collect();
        let row_map = ChainMap::new(rs.clone(), rt, mats)?;
        for q in rs.degrees().chain(row_map.target().degrees()) {
            out.insert((p, q), row_map.cohomology_map(q)?);
        }
    }
    Ok(out)
}

/// True iff every induced map on `E_1` is bijective.
pub fn is_first_page_isomorphism(f: &BicomplexMap) -> Result<bool> {
    Ok(first_page_map(f)?
        .values()
        .all(|m| m.is_square() && rank(m) == m.rows()))
}
