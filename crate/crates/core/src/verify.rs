//! Seeded verification suites. Every check lands in a [`Report`]; a suite
//! passes when all of its checks do.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;

use crate::bicomplex::{verify_total_dual_iso, DoubleComplex};
use crate::cochain::CochainComplex;
use crate::error::{Error, Result};
use crate::exactla::rank;
use crate::geomodels::{
    degeneration_equivalence, lie_model, point_model, product_model, torus_model, HyperTable,
    LieModelSpec, ModelDoubleComplex,
};
use crate::random::{random_complex, random_double_complex, seeded, BicomplexShape, ComplexShape};
use crate::report::Report;
use crate::spectral::{self, filtration_dims};
use crate::tensorops::{
    bicomplex_kunneth_check, kunneth_complex_check, parity_iso, quad_tensor, tensor_complexes,
    verify_row_collapse, verify_total_collapse,
};
use crate::truncation::{
    four_term_check, frolicher_inequality, hypercohomology, hypercohomology_all,
    les_of_truncations, Window,
};

/// Shapes used by the randomized suites.
pub const COMPLEX_SHAPE: ComplexShape = ComplexShape {
    span: 6,
    max_dim: 4,
};
pub const BICOMPLEX_SHAPE: BicomplexShape = BicomplexShape {
    width: 4,
    height: 4,
    max_dim: 3,
};
/// Factors of tensor products are kept smaller: the quadruple complex has
/// the product of both sizes.
pub const TENSOR_COMPLEX_SHAPE: ComplexShape = ComplexShape {
    span: 3,
    max_dim: 2,
};
pub const TENSOR_BICOMPLEX_SHAPE: BicomplexShape = BicomplexShape {
    width: 3,
    height: 3,
    max_dim: 2,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Cochain,
    Bicomplex,
    Tensor,
    Spectral,
    Truncation,
    Models,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Cochain,
        Suite::Bicomplex,
        Suite::Tensor,
        Suite::Spectral,
        Suite::Truncation,
        Suite::Models,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Cochain => "cochain",
            Suite::Bicomplex => "bicomplex",
            Suite::Tensor => "tensor",
            Suite::Spectral => "spectral",
            Suite::Truncation => "truncation",
            Suite::Models => "models",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Runs `suite` on `count` random instances drawn from `seed`. The model
/// suite is deterministic and ignores both.
pub fn run_suite(suite: Suite, seed: u64, count: usize) -> Result<Report> {
    let mut rng = seeded(seed);
    let mut report = Report::new();
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                report.extend(run_suite(s, seed, count)?);
            }
        }
        Suite::Cochain => {
            for _ in 0..count {
                report.extend(cochain_laws(&random_complex(&mut rng, COMPLEX_SHAPE)));
            }
        }
        Suite::Bicomplex => {
            for _ in 0..count {
                report.extend(bicomplex_laws(&random_double_complex(
                    &mut rng,
                    BICOMPLEX_SHAPE,
                )));
            }
        }
        Suite::Tensor => {
            for _ in 0..count {
                let k = random_complex(&mut rng, TENSOR_COMPLEX_SHAPE);
                let l = random_complex(&mut rng, TENSOR_COMPLEX_SHAPE);
                report.extend(complex_tensor_laws(&k, &l));
                let kb = random_double_complex(&mut rng, TENSOR_BICOMPLEX_SHAPE);
                let lb = random_double_complex(&mut rng, TENSOR_BICOMPLEX_SHAPE);
                report.extend(bicomplex_tensor_laws(&kb, &lb)?);
            }
        }
        Suite::Spectral => {
            for _ in 0..count {
                report.extend(spectral_laws(&random_double_complex(
                    &mut rng,
                    BICOMPLEX_SHAPE,
                )));
            }
        }
        Suite::Truncation => {
            for _ in 0..count {
                let k = random_double_complex(&mut rng, BICOMPLEX_SHAPE);
                report.extend(truncation_laws(&k, &mut rng)?);
            }
        }
        Suite::Models => report.extend(model_laws()?),
    }
    Ok(report)
}

/// Duality and shift laws for one complex.
pub fn cochain_laws(k: &CochainComplex) -> Report {
    let mut report = Report::new();
    let dual = k.dual();
    for d in k.degrees() {
        report.equal("dual_cohomology", d, dual.betti(-d), k.betti(d));
    }
    for m in [-2, 1] {
        let shifted = k.shift(m);
        for d in k.degrees() {
            report.equal("shift_cohomology", d, shifted.betti(d - m), k.betti(d));
        }
    }
    report.equal(
        "dual_euler",
        0,
        dual.euler_characteristic(),
        k.euler_characteristic(),
    );
    report
}

/// Total-dual witness, shift and dual laws for one double complex.
pub fn bicomplex_laws(k: &DoubleComplex) -> Report {
    let mut report = Report::new();
    report.holds("total_dual_witness", 0, verify_total_dual_iso(k).is_ok());
    let total = k.total();
    let shifted = k.shift2(1, -2).total();
    let dual = k.dual2().total();
    for d in total.degrees() {
        report.equal("shift2_cohomology", d, shifted.betti(d + 1), total.betti(d));
        report.equal("dual2_cohomology", d, dual.betti(-d), total.betti(d));
    }
    // Dualizing twice negates both differentials.
    let kk = k.dual2().dual2();
    let negated = kk.dims() == k.dims()
        && k.support()
            .bidegrees()
            .all(|(p, q)| *kk.d1(p, q) == -&*k.d1(p, q) && *kk.d2(p, q) == -&*k.d2(p, q));
    report.holds("double_dual", 0, negated);
    report
}

/// Parity isomorphism and Künneth for a pair of complexes.
pub fn complex_tensor_laws(k: &CochainComplex, l: &CochainComplex) -> Report {
    let mut report = Report::new();
    report.holds("parity_iso", 0, parity_iso(k, l).is_ok());
    for m in [0, 1] {
        report.extend(kunneth_complex_check(k, l, m));
    }
    report
}

/// Slice identity, row and total collapse, and both Künneth identities for
/// a pair of double complexes.
pub fn bicomplex_tensor_laws(kb: &DoubleComplex, lb: &DoubleComplex) -> Result<Report> {
    let mut report = Report::new();
    let quad = quad_tensor(kb, lb)?;
    for p in kb.support().columns() {
        for q in lb.support().columns() {
            let expected = tensor_complexes(&kb.row(p), &lb.row(q), p);
            report.holds("slice_identity", (p, q), quad.slice(p, q) == expected);
        }
    }
    let (k0, k1) = (
        kb.support().p0 + lb.support().p0,
        kb.support().p1 + lb.support().p1,
    );
    for k in k0..=k1 {
        match verify_row_collapse(kb, lb, k) {
            Ok(r) => report.extend(r),
            Err(_) => report.holds("row_collapse_witness", k, false),
        }
    }
    report.extend(verify_total_collapse(kb, lb)?);
    report.extend(bicomplex_kunneth_check(kb, lb)?);
    Ok(report)
}

/// Convergence of the column-filtration spectral sequence.
pub fn spectral_laws(k: &DoubleComplex) -> Report {
    let mut report = Report::new();
    let pages = spectral::pages(k);
    for pair in pages.windows(2) {
        let (a, b) = (pair[0].dims(), pair[1].dims());
        for (at, &d) in &b {
            report.at_most("page_decreasing", *at, d, a.get(at).copied().unwrap_or(0));
        }
    }
    let limit = spectral::limit_page(k);
    let total = k.total();
    let s = k.support();
    for d in total.degrees() {
        report.equal("convergence", d, limit.diagonal_dim(d), total.betti(d));
        let f = filtration_dims(k, d);
        for p in s.columns() {
            report.equal(
                "filtration_graded",
                (p, d),
                f.graded(p),
                limit.dim(p, d - p),
            );
        }
    }
    report
}

/// Four-term exactness, the long exact sequence and the Frölicher
/// inequality on randomly chosen windows of one double complex.
pub fn truncation_laws<R: Rng>(k: &DoubleComplex, rng: &mut R) -> Result<Report> {
    let s = k.support();
    let mut pick = |n: usize| -> Vec<i64> {
        let mut v: Vec<i64> = (0..n)
            .map(|_| rng.random_range(s.p0 - 1..=s.p1 + 1))
            .collect();
        v.sort();
        v
    };
    let mut report = Report::new();
    let c = pick(4);
    report.extend(four_term_check(k, c[0], c[1], c[2], c[3])?);
    let t = pick(3);
    let les = les_of_truncations(k, t[0], t[1], t[2])?;
    report.extend(les.to_report());
    report.equal(
        "les_alternating_sum",
        (t[0], t[1]),
        les.alternating_sum(),
        0,
    );
    let w = pick(2);
    let fr = frolicher_inequality(k, Window::new(w[0], w[1]));
    report.extend(fr.to_report());
    Ok(report)
}

fn all_windows(n: i64) -> impl Iterator<Item = Window> {
    (0..=n).flat_map(move |s| (s..=n).map(move |t| Window::new(s, t)))
}

/// Künneth against the product model, across all windows and degrees.
pub fn kunneth_model_laws(x: &ModelDoubleComplex, y: &ModelDoubleComplex) -> Result<Report> {
    let product = product_model(x, y)?;
    let n = product.n() as i64;
    let (mut hx, mut hy) = (HyperTable::new(x), HyperTable::new(y));
    let mut report = Report::new();
    for w in all_windows(n) {
        let actual = hypercohomology_all(product.base(), w);
        for c in 0..=2 * n {
            report.equal(
                "kunneth_predict",
                (w.s, w.t),
                hx.kunneth(&mut hy, c, w),
                actual.get(&c).copied().unwrap_or(0),
            );
        }
    }
    Ok(report)
}

/// Bijectivity of the duality map on hypercohomology, for every window and
/// degree.
pub fn duality_laws(model: &ModelDoubleComplex) -> Result<Report> {
    let n = model.n() as i64;
    let mut report = Report::new();
    for w in all_windows(n) {
        let f = model.duality_map(w)?.total_map();
        for k in 0..=2 * n {
            let m = f.cohomology_map(k)?;
            let bijective = m.rows() == m.cols() && rank(&m) == m.cols();
            report.holds("duality_bijective", (w.s, w.t), bijective);
            report.equal(
                "duality_dims",
                (w.s, w.t),
                hypercohomology(model.base(), w, k),
                hypercohomology(model.base(), Window::new(n - w.t, n - w.s), 2 * n - k),
            );
        }
    }
    Ok(report)
}

/// Blowup, projective bundle and Leray–Hirsch predictors agree termwise.
pub fn predictor_laws(x: &ModelDoubleComplex, y: &ModelDoubleComplex) -> Result<Report> {
    let n = x.n() as i64;
    let (mut hx, mut hy) = (HyperTable::new(x), HyperTable::new(y));
    let mut report = Report::new();
    for w in all_windows(n) {
        let direct_x = hypercohomology_all(x.base(), w);
        let direct_y = hypercohomology_all(y.base(), w);
        for k in -1..=2 * n + 1 {
            let at = |m: &BTreeMap<i64, usize>| m.get(&k).copied().unwrap_or(0);
            for r in 1..=3 {
                if r >= 2 {
                    let lhs = hx.blowup(&mut hy, r, k, w)?;
                    let rhs = at(&direct_x) + hy.projective(r, k, w)? - at(&direct_y);
                    report.equal("blowup_identity", (k, r), lhs, rhs);
                }
                let degrees: Vec<(i64, i64)> = (0..r).map(|i| (i, i)).collect();
                report.equal(
                    "leray_hirsch_projective",
                    (k, r),
                    hx.leray_hirsch(&degrees, k, w),
                    hx.projective(r, k, w)?,
                );
            }
        }
    }
    Ok(report)
}

/// Model-level checks on tori and the Iwasawa manifold.
pub fn model_laws() -> Result<Report> {
    let t1 = torus_model(1, 1)?;
    let t2 = torus_model(2, 1)?;
    let iw = lie_model(&LieModelSpec::iwasawa())?;
    let mut report = Report::new();
    let e1 = spectral::first_page(iw.base());
    report.equal("iwasawa_h10", (1, 0), e1.dim(1, 0), 3);
    report.equal("iwasawa_h01", (0, 1), e1.dim(0, 1), 2);
    report.equal(
        "iwasawa_b1",
        1,
        hypercohomology(iw.base(), Window::new(0, 3), 1),
        4,
    );
    report.holds(
        "iwasawa_not_degenerate",
        0,
        !spectral::degenerates_at_e1(iw.base()),
    );
    report.extend(kunneth_model_laws(&t1, &t1)?);
    report.extend(duality_laws(&t1)?);
    report.extend(duality_laws(&t2)?);
    report.extend(predictor_laws(&t2, &point_model())?);
    report.extend(predictor_laws(&t2, &t1)?);
    for w in all_windows(2) {
        for r in 1..=3 {
            let rep = degeneration_equivalence(&t2, r, w)?;
            report.holds(
                "torus_degeneration",
                (w.s, w.t),
                rep.all_windows && rep.aggregate,
            );
        }
    }
    let rep = degeneration_equivalence(&iw, 2, Window::new(0, 3))?;
    report.holds(
        "iwasawa_aggregate_false",
        2,
        !rep.aggregate && rep.equivalent(),
    );
    Ok(report)
}
