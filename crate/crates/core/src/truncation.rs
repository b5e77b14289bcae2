//! Column truncations `S(s,t)` of a double complex, their hypercohomology,
//! and the exact sequences relating different windows.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bicomplex::{BicomplexMap, DoubleComplex};
use crate::cochain::ChainMap;
use crate::error::{Error, Result};
use crate::exactla::{rank, solve, RatMatrix};
use crate::report::Report;
use crate::spectral::{self, FiltrationDims, SpectralPage};

/// The column window `[s, t]`; empty when `s > t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Window {
    pub s: i64,
    pub t: i64,
}

impl Window {
    pub fn new(s: i64, t: i64) -> Self {
        Window { s, t }
    }

    pub fn contains(&self, p: i64) -> bool {
        self.s <= p && p <= self.t
    }

    pub fn shifted(&self, by: i64) -> Self {
        Window {
            s: self.s + by,
            t: self.t + by,
        }
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.s, self.t)
    }
}

/// Zeroes the columns outside `[s, t]`, keeps `d1` for `s ≤ p < t` and `d2`
/// for `s ≤ p ≤ t`. The support rectangle and the bases are unchanged.
pub fn truncate(k: &DoubleComplex, w: Window) -> DoubleComplex {
    let support = k.support();
    let dims = support
        .bidegrees()
        .map(|(p, q)| ((p, q), if w.contains(p) { k.dim(p, q) } else { 0 }))
        .collect();
    let mut d1 = BTreeMap::new();
    let mut d2 = BTreeMap::new();
    for (p, q) in support.bidegrees() {
        if w.contains(p) && p < w.t {
            d1.insert((p, q), k.d1(p, q).into_owned());
        }
        if w.contains(p) {
            d2.insert((p, q), k.d2(p, q).into_owned());
        }
    }
    DoubleComplex::new(support, dims, d1, d2).expect("column truncation of a double complex")
}

/// `dim ℍ^k([s,t]) = dim H^k(s S(s,t))`.
pub fn hypercohomology(k: &DoubleComplex, w: Window, deg: i64) -> usize {
    truncate(k, w).total().betti(deg)
}

/// All `ℍ^k([s,t])` for `k` over the total degrees of the support.
pub fn hypercohomology_all(k: &DoubleComplex, w: Window) -> BTreeMap<i64, usize> {
    let total = truncate(k, w).total();
    let degrees = k.support().total_degrees();
    let ranks: BTreeMap<i64, usize> = (degrees.start() - 1..=*degrees.end())
        .map(|d| (d, rank(&total.diff(d))))
        .collect();
    degrees
        .map(|d| {
            let dim = total.dim(d);
            let betti = if dim == 0 {
                0
            } else {
                dim - ranks[&d] - ranks[&(d - 1)]
            };
            (d, betti)
        })
        .collect()
}

/// The map `S(from) → S(to)` that is the identity on shared columns and zero
/// elsewhere. Fails unless this is a map of double complexes.
pub fn window_map(k: &DoubleComplex, from: Window, to: Window) -> Result<BicomplexMap> {
    let (src, tgt) = (truncate(k, from), truncate(k, to));
    let mats = k
        .support()
        .bidegrees()
        .filter(|&(p, q)| from.contains(p) && to.contains(p) && k.dim(p, q) > 0)
        .map(|(p, q)| ((p, q), RatMatrix::identity(k.dim(p, q))))
        .collect();
    BicomplexMap::new(src, tgt, mats)
}

/// Checks `0 → S(t+1,t') → S(s',t') → S(s,t) → S(s,s'-1) → 0` is exact at
/// every bidegree.
pub fn four_term_check(k: &DoubleComplex, s: i64, s2: i64, t: i64, t2: i64) -> Result<Report> {
    if !(s <= s2 && s2 <= t && t <= t2) {
        return Err(Error::PreconditionViolation(format!(
            "need s ≤ s' ≤ t ≤ t', got {s}, {s2}, {t}, {t2}"
        )));
    }
    let (wa, wb, wc, wd) = (
        Window::new(t + 1, t2),
        Window::new(s2, t2),
        Window::new(s, t),
        Window::new(s, s2 - 1),
    );
    let f = window_map(k, wa, wb)?;
    let g = window_map(k, wb, wc)?;
    let h = window_map(k, wc, wd)?;
    let mut report = Report::new();
    for (p, q) in k.support().bidegrees() {
        let b = (p, q);
        let (fm, gm, hm) = (f.mat(p, q), g.mat(p, q), h.mat(p, q));
        let (rf, rg, rh) = (rank(&fm), rank(&gm), rank(&hm));
        let (da, db, dc, dd) = (
            f.source().dim(p, q),
            g.source().dim(p, q),
            h.source().dim(p, q),
            h.target().dim(p, q),
        );
        report.equal("four_term_injective", b, rf, da);
        report.equal("four_term_exact_middle_left", b, rf, db - rg);
        report.equal("four_term_exact_middle_right", b, rg, dc - rh);
        report.equal("four_term_surjective", b, rh, dd);
        report.holds(
            "four_term_composites_vanish",
            b,
            (&*gm * &*fm).is_zero() && (&*hm * &*gm).is_zero(),
        );
    }
    Ok(report)
}

/// Which term of the short exact sequence `0 → A → B → C → 0` a node of the
/// long exact sequence sits in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Term {
    Sub,
    Whole,
    Quotient,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LesNode {
    pub degree: i64,
    pub term: Term,
    pub window: Window,
    pub dim: usize,
    pub rank_in: usize,
    pub rank_out: usize,
    pub exact: bool,
}

/// The long exact sequence
/// `⋯ → ℍ^k([s,t]) → ℍ^k([r,t]) → ℍ^k([r,s-1]) → ℍ^{k+1}([s,t]) → ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LongExactReport {
    pub r: i64,
    pub s: i64,
    pub t: i64,
    pub nodes: Vec<LesNode>,
    /// Rank of `δ : ℍ^k([r,s-1]) → ℍ^{k+1}([s,t])`, by `k`.
    pub connecting_ranks: BTreeMap<i64, usize>,
}

impl LongExactReport {
    pub fn is_exact(&self) -> bool {
        self.nodes.iter().all(|n| n.exact)
    }

    pub fn has_nonzero_connecting_map(&self) -> bool {
        self.connecting_ranks.values().any(|&r| r > 0)
    }

    /// `Σ_k (-1)^k (dim A^k - dim B^k + dim C^k)`.
    pub fn alternating_sum(&self) -> i64 {
        self.nodes
            .iter()
            .map(|n| {
                let sign = if n.degree.rem_euclid(2) == 0 { 1 } else { -1 };
                let term = if n.term == Term::Whole { -1 } else { 1 };
                sign * term * n.dim as i64
            })
            .sum()
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new();
        for n in &self.nodes {
            let label = match n.term {
                Term::Sub => "les_exact_sub",
                Term::Whole => "les_exact_whole",
                Term::Quotient => "les_exact_quotient",
            };
            // Exact iff rank in + rank out = dim and the composite vanishes.
            report.push(
                label,
                n.degree.into(),
                (n.rank_in + n.rank_out) as i64,
                n.dim as i64,
                n.exact,
            );
        }
        report
    }
}

/// Matrix of the connecting map `H^k(C) → H^{k+1}(A)` of `0 → A → B → C → 0`
/// by the snake construction: lift, apply the differential, pull back.
pub fn connecting_map(i: &ChainMap, pi: &ChainMap, k: i64) -> Result<RatMatrix> {
    let (a, b, c) = (i.source(), i.target(), pi.target());
    let hc = c.cohomology(k);
    let ha = a.cohomology(k + 1);
    if hc.dim() == 0 || ha.dim() == 0 {
        return Ok(RatMatrix::zeros(ha.dim(), hc.dim()));
    }
    let lift = solve(&pi.mat(k), hc.representative_basis()).ok_or_else(|| {
        Error::NotChainCompatible(format!("projection is not surjective in degree {k}"))
    })?;
    let db = &*b.diff(k) * &lift;
    let pulled = solve(&i.mat(k + 1), &db).ok_or_else(|| {
        Error::NotChainCompatible(format!(
            "boundary does not land in the subcomplex in degree {}",
            k + 1
        ))
    })?;
    ha.coordinates(&pulled)
        .ok_or_else(|| Error::NotChainCompatible("pulled-back boundary is not a cycle".into()))
}

/// Builds the long exact sequence of `0 → S(s,t) → S(r,t) → S(r,s-1) → 0`
/// and checks exactness at every node.
pub fn les_of_truncations(k: &DoubleComplex, r: i64, s: i64, t: i64) -> Result<LongExactReport> {
    if !(r <= s && s <= t) {
        return Err(Error::PreconditionViolation(format!(
            "need r ≤ s ≤ t, got {r}, {s}, {t}"
        )));
    }
    let (wa, wb, wc) = (Window::new(s, t), Window::new(r, t), Window::new(r, s - 1));
    let i = window_map(k, wa, wb)?.total_map();
    let pi = window_map(k, wb, wc)?.total_map();
    let degrees: Vec<i64> = {
        let d = k.support().total_degrees();
        (*d.start() - 1..=*d.end() + 1).collect()
    };
    let mut i_star = BTreeMap::new();
    let mut pi_star = BTreeMap::new();
    let mut delta = BTreeMap::new();
    let mut dims = BTreeMap::new();
    for &d in &degrees {
        i_star.insert(d, i.cohomology_map(d)?);
        pi_star.insert(d, pi.cohomology_map(d)?);
        delta.insert(d, connecting_map(&i, &pi, d)?);
        dims.insert(
            d,
            [
                i.source().betti(d),
                i.target().betti(d),
                pi.target().betti(d),
            ],
        );
    }
    let zero = |rows, cols| RatMatrix::zeros(rows, cols);
    let mut nodes = Vec::new();
    for &d in &degrees {
        let [da, db, dc] = dims[&d];
        let dc_prev = dims.get(&(d - 1)).map_or(0, |x| x[2]);
        let da_next = dims.get(&(d + 1)).map_or(0, |x| x[0]);
        let delta_in = delta
            .get(&(d - 1))
            .cloned()
            .unwrap_or_else(|| zero(da, dc_prev));
        let delta_out = delta.get(&d).cloned().unwrap_or_else(|| zero(da_next, dc));
        let triples = [
            (Term::Sub, wa, da, &delta_in, &i_star[&d]),
            (Term::Whole, wb, db, &i_star[&d], &pi_star[&d]),
            (Term::Quotient, wc, dc, &pi_star[&d], &delta_out),
        ];
        for (term, window, dim, inc, out) in triples {
            let (rank_in, rank_out) = (rank(inc), rank(out));
            let composite_zero = inc.cols() == 0 || out.rows() == 0 || (out * inc).is_zero();
            nodes.push(LesNode {
                degree: d,
                term,
                window,
                dim,
                rank_in,
                rank_out,
                exact: composite_zero && rank_in + rank_out == dim,
            });
        }
    }
    let connecting_ranks = delta.iter().map(|(&d, m)| (d, rank(m))).collect();
    Ok(LongExactReport {
        r,
        s,
        t,
        nodes,
        connecting_ranks,
    })
}

/// `E_1` of the truncated complex.
pub fn truncated_e1(k: &DoubleComplex, w: Window) -> SpectralPage {
    spectral::first_page(&truncate(k, w))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrolicherRow {
    pub k: i64,
    pub betti: usize,
    pub hodge_sum: usize,
}

/// `b^k([s,t]) ≤ Σ_{p+q=k, s≤p≤t} h^{p,q}` for every `k`, and whether
/// equality holds throughout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrolicherReport {
    pub window: Window,
    pub rows: Vec<FrolicherRow>,
    pub degenerates: bool,
}

impl FrolicherReport {
    pub fn inequality_holds(&self) -> bool {
        self.rows.iter().all(|r| r.betti <= r.hodge_sum)
    }

    pub fn row(&self, k: i64) -> Option<&FrolicherRow> {
        self.rows.iter().find(|r| r.k == k)
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new();
        for r in &self.rows {
            report.at_most("frolicher_inequality", r.k, r.betti, r.hodge_sum);
        }
        report
    }
}

pub fn frolicher_inequality(k: &DoubleComplex, w: Window) -> FrolicherReport {
    let support = k.support();
    let total = truncate(k, w).total();
    let mut hodge: BTreeMap<i64, usize> = support.total_degrees().map(|d| (d, 0)).collect();
    for p in support.columns().filter(|&p| w.contains(p)) {
        let row = k.row(p);
        for q in support.rows() {
            *hodge.entry(p + q).or_default() += row.betti(q);
        }
    }
    let rows: Vec<FrolicherRow> = hodge
        .into_iter()
        .map(|(d, h)| FrolicherRow {
            k: d,
            betti: total.betti(d),
            hodge_sum: h,
        })
        .collect();
    let degenerates = rows.iter().all(|r| r.betti == r.hodge_sum);
    FrolicherReport {
        window: w,
        rows,
        degenerates,
    }
}

/// `dim F^p ℍ^k`: the image of `ℍ^k([p,p1]) → ℍ^k([p0,p1])` for `p` in
/// `p0 ..= p1 + 1`.
pub fn hodge_filtration_dims(k: &DoubleComplex, deg: i64) -> Result<FiltrationDims> {
    let s = k.support();
    let full = Window::new(s.p0, s.p1);
    let dims = (s.p0..=s.p1 + 1)
        .map(|p| {
            let f = window_map(k, Window::new(p, s.p1), full)?.total_map();
            Ok(rank(&f.cohomology_map(deg)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(FiltrationDims { start: s.p0, dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicomplex::Support;

    fn zigzag() -> DoubleComplex {
        let one = || RatMatrix::from_i64_rows(&[&[1]]);
        let dims = BTreeMap::from([((0, 1), 1), ((1, 1), 1), ((1, 0), 1), ((2, 0), 1)]);
        let d1 = BTreeMap::from([((0, 1), one()), ((1, 0), one())]);
        let d2 = BTreeMap::from([((1, 0), RatMatrix::from_i64_rows(&[&[-1]]))]);
        DoubleComplex::new(Support::new(0, 2, 0, 1), dims, d1, d2).unwrap()
    }

    fn torus1() -> DoubleComplex {
        let dims = Support::new(0, 1, 0, 1)
            .bidegrees()
            .map(|b| (b, 1))
            .collect();
        DoubleComplex::with_zero_differentials(Support::new(0, 1, 0, 1), dims).unwrap()
    }

    #[test]
    fn full_window_is_identity_and_empty_window_is_zero() {
        let k = zigzag();
        assert_eq!(truncate(&k, Window::new(0, 2)), k);
        assert_eq!(truncate(&k, Window::new(-5, 9)), k);
        assert_eq!(truncate(&k, Window::new(2, 1)).total_dim(), 0);
        assert_eq!(hypercohomology(&k, Window::new(2, 1), 1), 0);
    }

    #[test]
    fn single_column_is_shifted_row_cohomology() {
        let k = zigzag();
        for p in 0..=2 {
            for deg in -1..=4 {
                assert_eq!(
                    hypercohomology(&k, Window::new(p, p), deg),
                    k.row(p).betti(deg - p)
                );
            }
        }
    }

    #[test]
    fn torus_curve_numbers() {
        let k = torus1();
        assert_eq!(hypercohomology(&k, Window::new(0, 1), 1), 2);
        assert!(frolicher_inequality(&k, Window::new(0, 1)).degenerates);
        assert_eq!(hodge_filtration_dims(&k, 1).unwrap().dims, vec![2, 1, 0]);
    }

    #[test]
    fn four_term_precondition() {
        let k = zigzag();
        assert!(matches!(
            four_term_check(&k, 1, 0, 2, 2),
            Err(Error::PreconditionViolation(_))
        ));
        assert!(four_term_check(&k, 0, 0, 2, 2).unwrap().passed());
        assert!(four_term_check(&k, 0, 1, 1, 2).unwrap().passed());
    }

    #[test]
    fn les_has_nonzero_connecting_map_on_zigzag() {
        let k = zigzag();
        let les = les_of_truncations(&k, 0, 1, 2).unwrap();
        assert!(les.is_exact(), "{les:#?}");
        assert!(les.has_nonzero_connecting_map());
        assert_eq!(les.alternating_sum(), 0);
        let trivial = les_of_truncations(&k, 1, 1, 2).unwrap();
        assert!(trivial.is_exact());
        assert!(!trivial.has_nonzero_connecting_map());
        assert!(matches!(
            les_of_truncations(&k, 2, 1, 2),
            Err(Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn truncated_e1_keeps_window_rows() {
        let k = zigzag();
        let e1 = truncated_e1(&k, Window::new(1, 2));
        assert_eq!(e1.dim(0, 1), 0);
        assert_eq!(e1.dim(2, 0), 1);
        let report = frolicher_inequality(&k, Window::new(0, 2));
        assert!(report.inequality_holds());
        assert!(!report.degenerates);
    }
}
