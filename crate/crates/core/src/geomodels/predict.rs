//! Dimension predictors for products, projective bundles and blowups,
//! evaluated from hypercohomology of the factor models.

use std::collections::BTreeMap;

use serde::Serialize;

use super::model::ModelDoubleComplex;
use crate::error::{Error, Result};
use crate::report::Report;
use crate::truncation::{
    frolicher_inequality, hodge_filtration_dims, hypercohomology_all, FrolicherRow, Window,
};

/// `ℍ^k(S, [s,t])` of one model, memoized per window. The predictor methods
/// share the table across calls.
#[derive(Debug)]
pub struct HyperTable<'a> {
    model: &'a ModelDoubleComplex,
    cache: BTreeMap<Window, BTreeMap<i64, usize>>,
}

impl<'a> HyperTable<'a> {
    pub fn new(model: &'a ModelDoubleComplex) -> Self {
        HyperTable {
            model,
            cache: BTreeMap::new(),
        }
    }

    pub fn model(&self) -> &'a ModelDoubleComplex {
        self.model
    }

    /// `dim ℍ^k([s,t])`. Windows are clipped to the columns `[0, n]`.
    pub fn get(&mut self, w: Window, k: i64) -> usize {
        let n = self.model.n() as i64;
        let clipped = Window::new(w.s.max(0), w.t.min(n));
        if clipped.s > clipped.t {
            return 0;
        }
        let model = self.model;
        self.cache
            .entry(clipped)
            .or_insert_with(|| hypercohomology_all(model.base(), clipped))
            .get(&k)
            .copied()
            .unwrap_or(0)
    }

    /// See [`kunneth_predict`].
    pub fn kunneth(&mut self, y: &mut HyperTable<'_>, c: i64, w: Window) -> usize {
        if w.s > w.t {
            return 0;
        }
        let top = 2 * self.model.n() as i64;
        let mut total = 0;
        for col in 0..=y.model.n() as i64 {
            let wx = w.shifted(-col);
            for a in 0..=top.min(c) {
                let left = self.get(wx, a);
                if left > 0 {
                    total += left * y.get(Window::new(col, col), c - a);
                }
            }
        }
        total
    }

    /// See [`leray_hirsch_predict`].
    pub fn leray_hirsch(&mut self, degrees: &[(i64, i64)], k: i64, w: Window) -> usize {
        degrees
            .iter()
            .map(|&(u, v)| self.get(w.shifted(-u), k - u - v))
            .sum()
    }

    /// See [`projective_bundle_predict`].
    pub fn projective(&mut self, r: i64, k: i64, w: Window) -> Result<usize> {
        if r < 1 {
            return Err(Error::PreconditionViolation(format!(
                "bundle rank must be ≥ 1, got {r}"
            )));
        }
        let degrees: Vec<(i64, i64)> = (0..r).map(|i| (i, i)).collect();
        Ok(self.leray_hirsch(&degrees, k, w))
    }

    /// See [`blowup_predict`].
    pub fn blowup(&mut self, y: &mut HyperTable<'_>, r: i64, k: i64, w: Window) -> Result<usize> {
        if r < 2 {
            return Err(Error::PreconditionViolation(format!(
                "blowup center needs codimension ≥ 2, got {r}"
            )));
        }
        if y.model.n() as i64 + r != self.model.n() as i64 {
            log::warn!(
                "center of dimension {} and codimension {r} does not fit ambient dimension {}",
                y.model.n(),
                self.model.n()
            );
        }
        Ok(self.get(w, k)
            + (1..r)
                .map(|i| y.get(w.shifted(-i), k - 2 * i))
                .sum::<usize>())
    }
}

/// `Σ ℍ^a(X,[u,v]) · ℍ^b(Y,[w,w])` over `a + b = c`, `u + w = s`, `v + w = t`.
pub fn kunneth_predict(x: &ModelDoubleComplex, y: &ModelDoubleComplex, c: i64, w: Window) -> usize {
    HyperTable::new(x).kunneth(&mut HyperTable::new(y), c, w)
}

/// `Σ_i ℍ^{k-u_i-v_i}(X, [s-u_i, t-u_i])`.
pub fn leray_hirsch_predict(
    x: &ModelDoubleComplex,
    degrees: &[(i64, i64)],
    k: i64,
    w: Window,
) -> usize {
    HyperTable::new(x).leray_hirsch(degrees, k, w)
}

/// `Σ_{i<r} ℍ^{k-2i}(X, [s-i, t-i])`.
pub fn projective_bundle_predict(
    x: &ModelDoubleComplex,
    r: i64,
    k: i64,
    w: Window,
) -> Result<usize> {
    HyperTable::new(x).projective(r, k, w)
}

/// `ℍ^k(X,[s,t]) + Σ_{0<i<r} ℍ^{k-2i}(Y, [s-i, t-i])` for a center `Y` of
/// codimension `r`.
pub fn blowup_predict(
    x: &ModelDoubleComplex,
    y: &ModelDoubleComplex,
    r: i64,
    k: i64,
    w: Window,
) -> Result<usize> {
    HyperTable::new(x).blowup(&mut HyperTable::new(y), r, k, w)
}

/// `Σ_{i<r} dim F^{p-i} H^{k-2i}(X)`.
pub fn hodge_filtration_projective_predict(
    x: &ModelDoubleComplex,
    r: i64,
    k: i64,
    p: i64,
) -> Result<usize> {
    if r < 1 {
        return Err(Error::PreconditionViolation(format!(
            "bundle rank must be ≥ 1, got {r}"
        )));
    }
    (0..r)
        .map(|i| Ok(hodge_filtration_dims(x.base(), k - 2 * i)?.at(p - i)))
        .sum()
}

/// Degeneration at `E_1` of the windows `[s-i, t-i]`, `i < r`, against the
/// aggregate predicted for the bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegenerationReport {
    pub r: i64,
    pub window: Window,
    pub windows: Vec<(Window, bool)>,
    /// Predicted `b^k` and `Σ h^{p,q}` of the bundle per total degree.
    pub aggregate_rows: Vec<FrolicherRow>,
    pub aggregate: bool,
    pub all_windows: bool,
}

impl DegenerationReport {
    /// The biconditional: the bundle degenerates iff every window does.
    pub fn equivalent(&self) -> bool {
        self.aggregate == self.all_windows
    }

    pub fn to_report(&self) -> Report {
        let mut report = Report::new();
        for (w, ok) in &self.windows {
            report.holds(&format!("window_degenerates{w}"), w.s, *ok);
        }
        for row in &self.aggregate_rows {
            report.at_most("aggregate_frolicher", row.k, row.betti, row.hodge_sum);
        }
        report.holds("degeneration_equivalence", self.r, self.equivalent());
        report
    }
}

pub fn degeneration_equivalence(
    x: &ModelDoubleComplex,
    r: i64,
    w: Window,
) -> Result<DegenerationReport> {
    if r < 1 {
        return Err(Error::PreconditionViolation(format!(
            "bundle rank must be ≥ 1, got {r}"
        )));
    }
    if w.s > w.t {
        return Err(Error::PreconditionViolation(format!(
            "window {w} has s > t"
        )));
    }
    let mut windows = Vec::new();
    let mut sums: BTreeMap<i64, (usize, usize)> = BTreeMap::new();
    for i in 0..r {
        let wi = w.shifted(-i);
        let f = frolicher_inequality(x.base(), wi);
        for row in &f.rows {
            let e = sums.entry(row.k + 2 * i).or_default();
            e.0 += row.betti;
            e.1 += row.hodge_sum;
        }
        windows.push((wi, f.degenerates));
    }
    let aggregate_rows: Vec<FrolicherRow> = sums
        .into_iter()
        .map(|(k, (betti, hodge_sum))| FrolicherRow {
            k,
            betti,
            hodge_sum,
        })
        .collect();
    let aggregate = aggregate_rows.iter().all(|row| row.betti == row.hodge_sum);
    let all_windows = windows.iter().all(|(_, ok)| *ok);
    Ok(DegenerationReport {
        r,
        window: w,
        windows,
        aggregate_rows,
        aggregate,
        all_windows,
    })
}
