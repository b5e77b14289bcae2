//! Tensor products: the sign-twisted double complex `(K⊗L)_m`, the
//! quadruple complex of two double complexes and its collapse `ss`.

use std::borrow::Cow;
use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bicomplex::{BicomplexMap, Bidegree, DoubleComplex, Support};
use crate::cochain::{ChainMap, CochainComplex};
use crate::error::{Error, Result};
use crate::exactla::RatMatrix;
use crate::report::Report;
use crate::serde_util::{key, parse_key, OrderedMap};

/// `(K⊗L)_m`: `d1 = d_K ⊗ 1`, `d2 = (-1)^{m+p} 1 ⊗ d_L`, with `K` indices
/// major in the Kronecker order.
pub fn tensor_complexes(k: &CochainComplex, l: &CochainComplex, m: i64) -> DoubleComplex {
    let support = Support::new(k.lo(), k.hi(), l.lo(), l.hi());
    let dims = support
        .bidegrees()
        .map(|(p, q)| ((p, q), k.dim(p) * l.dim(q)))
        .collect();
    let mut d1 = BTreeMap::new();
    let mut d2 = BTreeMap::new();
    for (p, q) in support.bidegrees() {
        let dk = k.diff(p);
        if !dk.is_zero() {
            d1.insert((p, q), dk.kron(&RatMatrix::identity(l.dim(q))));
        }
        let dl = l.diff(q);
        if !dl.is_zero() {
            d2.insert(
                (p, q),
                RatMatrix::identity(k.dim(p)).kron(&dl).signed(m + p),
            );
        }
    }
    DoubleComplex::new(support, dims, d1, d2).expect("tensor of complexes is a double complex")
}

/// The isomorphism `(K⊗L)_0 → (K⊗L)_1` acting by `(-1)^q` on `K^p ⊗ L^q`.
pub fn parity_iso(k: &CochainComplex, l: &CochainComplex) -> Result<BicomplexMap> {
    let even = tensor_complexes(k, l, 0);
    let odd = tensor_complexes(k, l, 1);
    let mats = even
        .support()
        .bidegrees()
        .map(|(p, q)| ((p, q), RatMatrix::identity(even.dim(p, q)).signed(q)))
        .collect();
    BicomplexMap::new(even, odd, mats).map_err(|e| Error::WitnessFailure(e.to_string()))
}

/// Compares `dim H^k(s(K⊗L)_m)` with `Σ_{p+q=k} h^p(K) h^q(L)` for every `k`.
pub fn kunneth_complex_check(k: &CochainComplex, l: &CochainComplex, m: i64) -> Report {
    let total = tensor_complexes(k, l, m).total();
    let hk: BTreeMap<i64, usize> = k.degrees().map(|p| (p, k.betti(p))).collect();
    let hl: BTreeMap<i64, usize> = l.degrees().map(|q| (q, l.betti(q))).collect();
    let mut report = Report::new();
    for deg in total.degrees() {
        let predicted: usize = hk
            .iter()
            .map(|(&p, &a)| a * hl.get(&(deg - p)).copied().unwrap_or(0))
            .sum();
        report.equal("tensor_cohomology", deg, total.betti(deg), predicted);
    }
    report
}

pub type QuadDegree = [i64; 4];

/// Direction of `d_i` in `(p, q, r, s)`.
const STEPS: [QuadDegree; 4] = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];

fn step(a: QuadDegree, i: usize) -> QuadDegree {
    let e = STEPS[i];
    [a[0] + e[0], a[1] + e[1], a[2] + e[2], a[3] + e[3]]
}

/// `A^{p,q;r,s}` with four differentials `d1..d4` raising `p, q, r, s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadComplex {
    /// `[p0, p1, q0, q1, r0, r1, s0, s1]`.
    support: [i64; 8],
    dims: BTreeMap<QuadDegree, usize>,
    diffs: [BTreeMap<QuadDegree, RatMatrix>; 4],
}

impl QuadComplex {
    /// Validates shapes, `d_i² = 0` and anticommutation of every pair.
    pub fn new(
        support: [i64; 8],
        dims: BTreeMap<QuadDegree, usize>,
        diffs: [BTreeMap<QuadDegree, RatMatrix>; 4],
    ) -> Result<Self> {
        let mut q = QuadComplex {
            support,
            dims: BTreeMap::new(),
            diffs: Default::default(),
        };
        for (a, n) in dims {
            if n == 0 {
                continue;
            }
            if !q.in_support(a) {
                return Err(Error::InvalidComplex(format!(
                    "dimension at {a:?} outside the support"
                )));
            }
            q.dims.insert(a, n);
        }
        for (i, maps) in diffs.into_iter().enumerate() {
            for (a, m) in maps {
                let want = (q.dim(step(a, i)), q.dim(a));
                if m.shape() != want {
                    return Err(Error::InvalidComplex(format!(
                        "d{} at {a:?} has shape {:?}, expected {want:?}",
                        i + 1,
                        m.shape()
                    )));
                }
                if !m.is_zero() {
                    q.diffs[i].insert(a, m);
                }
            }
        }
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        for &a in self.dims.keys() {
            for i in 0..4 {
                let sq = &*self.diff(i, step(a, i)) * &*self.diff(i, a);
                if !sq.is_zero() {
                    return Err(Error::InvalidComplex(format!("d{}² ≠ 0 at {a:?}", i + 1)));
                }
                for j in i + 1..4 {
                    let ij = &*self.diff(i, step(a, j)) * &*self.diff(j, a);
                    let ji = &*self.diff(j, step(a, i)) * &*self.diff(i, a);
                    if !(&ij + &ji).is_zero() {
                        return Err(Error::InvalidComplex(format!(
                            "d{} and d{} do not anticommute at {a:?}",
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn in_support(&self, a: QuadDegree) -> bool {
        (0..4).all(|i| self.support[2 * i] <= a[i] && a[i] <= self.support[2 * i + 1])
    }

    pub fn support(&self) -> [i64; 8] {
        self.support
    }

    pub fn dim(&self, a: QuadDegree) -> usize {
        self.dims.get(&a).copied().unwrap_or(0)
    }

    /// `d_{i+1}` at `a`, for `i` in `0..4`.
    pub fn diff(&self, i: usize, a: QuadDegree) -> Cow<'_, RatMatrix> {
        match self.diffs[i].get(&a) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(RatMatrix::zeros(self.dim(step(a, i)), self.dim(a))),
        }
    }

    /// The slice `(A^{p,q;•,•}, d3, d4)` as a double complex in `(r, s)`.
    pub fn slice(&self, p: i64, q: i64) -> DoubleComplex {
        let s = self.support;
        let support = Support::new(s[4], s[5], s[6], s[7]);
        let at = |(r, t): Bidegree| [p, q, r, t];
        let dims = support.bidegrees().map(|b| (b, self.dim(at(b)))).collect();
        let d3 = support
            .bidegrees()
            .map(|b| (b, self.diff(2, at(b)).into_owned()))
            .collect();
        let d4 = support
            .bidegrees()
            .map(|b| (b, self.diff(3, at(b)).into_owned()))
            .collect();
        DoubleComplex::new(support, dims, d3, d4)
            .expect("slices of a quadruple complex are double complexes")
    }
}

/// `A^{p,q;r,s} = K^{p,r} ⊗ L^{q,s}` with `d1 = d_{K1}⊗1`,
/// `d2 = (-1)^{p+r} 1⊗d_{L1}`, `d3 = d_{K2}⊗1`, `d4 = (-1)^{p+r} 1⊗d_{L2}`.
pub fn quad_tensor(kb: &DoubleComplex, lb: &DoubleComplex) -> Result<QuadComplex> {
    let (ks, ls) = (kb.support(), lb.support());
    let support = [ks.p0, ks.p1, ls.p0, ls.p1, ks.q0, ks.q1, ls.q0, ls.q1];
    let mut dims = BTreeMap::new();
    let mut diffs: [BTreeMap<QuadDegree, RatMatrix>; 4] = Default::default();
    for (p, r) in ks.bidegrees() {
        let kd = kb.dim(p, r);
        if kd == 0 {
            continue;
        }
        for (q, s) in ls.bidegrees() {
            let ld = lb.dim(q, s);
            if ld == 0 {
                continue;
            }
            let a = [p, q, r, s];
            dims.insert(a, kd * ld);
            let (ik, il) = (RatMatrix::identity(kd), RatMatrix::identity(ld));
            let parts = [
                kb.d1(p, r).kron(&il),
                ik.kron(&lb.d1(q, s)).signed(p + r),
                kb.d2(p, r).kron(&il),
                ik.kron(&lb.d2(q, s)).signed(p + r),
            ];
            for (i, m) in parts.into_iter().enumerate() {
                diffs[i].insert(a, m);
            }
        }
    }
    QuadComplex::new(support, dims, diffs).map_err(|e| Error::WitnessFailure(e.to_string()))
}

/// Summands `(p, q, r, s)` of `ss^{k,l}` in lexicographic `(p, r)` order,
/// with offsets.
fn collapse_blocks(q: &QuadComplex, k: i64, l: i64) -> Vec<(QuadDegree, usize)> {
    let s = q.support;
    let mut out = Vec::new();
    let mut offset = 0;
    for p in s[0]..=s[1] {
        for r in s[4]..=s[5] {
            let a = [p, k - p, r, l - r];
            if !q.in_support(a) {
                continue;
            }
            out.push((a, offset));
            offset += q.dim(a);
        }
    }
    out
}

/// `ss^{k,l} = ⊕_{p+q=k, r+s=l} A^{p,q;r,s}` with `D1 = d1 + d2` and
/// `D2 = d3 + d4`. The result is validated as a double complex.
pub fn ss_collapse(q: &QuadComplex) -> Result<DoubleComplex> {
    let s = q.support;
    let support = Support::new(s[0] + s[2], s[1] + s[3], s[4] + s[6], s[5] + s[7]);
    let mut dims = BTreeMap::new();
    let mut blocks = BTreeMap::new();
    for (k, l) in support.bidegrees() {
        let b = collapse_blocks(q, k, l);
        dims.insert((k, l), b.iter().map(|(a, _)| q.dim(*a)).sum::<usize>());
        blocks.insert((k, l), b);
    }
    let offset_of = |(k, l): Bidegree, a: QuadDegree| -> Option<usize> {
        blocks
            .get(&(k, l))?
            .iter()
            .find(|(x, _)| *x == a)
            .map(|(_, o)| *o)
    };
    let mut d1 = BTreeMap::new();
    let mut d2 = BTreeMap::new();
    for (k, l) in support.bidegrees() {
        let src = dims[&(k, l)];
        let mut m1 = RatMatrix::zeros(dims.get(&(k + 1, l)).copied().unwrap_or(0), src);
        let mut m2 = RatMatrix::zeros(dims.get(&(k, l + 1)).copied().unwrap_or(0), src);
        for &(a, col) in &blocks[&(k, l)] {
            if q.dim(a) == 0 {
                continue;
            }
            for i in 0..4 {
                if let Some(d) = q.diffs[i].get(&a) {
                    let (target, m) = if i < 2 {
                        ((k + 1, l), &mut m1)
                    } else {
                        ((k, l + 1), &mut m2)
                    };
                    let row =
                        offset_of(target, step(a, i)).expect("differential lands in a summand");
                    m.add_block(row, col, d);
                }
            }
        }
        d1.insert((k, l), m1);
        d2.insert((k, l), m2);
    }
    DoubleComplex::new(support, dims, d1, d2)
}

/// Row complex `(ss^{k,•}, D2)` against `⊕_{p+q=k} s((K^{p,•}⊗L^{q,•})_p)`
/// through the summand-matching witness, plus `H^l` on both sides.
pub fn verify_row_collapse(kb: &DoubleComplex, lb: &DoubleComplex, k: i64) -> Result<Report> {
    let ss = ss_collapse(&quad_tensor(kb, lb)?)?;
    let lhs = ss.row(k);
    let parts: Vec<CochainComplex> = kb
        .support()
        .columns()
        .filter(|p| lb.support().columns().contains(&(k - p)))
        .map(|p| tensor_complexes(&kb.row(p), &lb.row(k - p), p).total())
        .collect();
    let rhs = CochainComplex::direct_sum(&parts);
    let mut mats = BTreeMap::new();
    for l in lhs.degrees().chain(rhs.degrees()) {
        if lhs.dim(l) != rhs.dim(l) {
            return Err(Error::WitnessFailure(format!(
                "row {k}, degree {l}: dimensions {} and {} differ",
                lhs.dim(l),
                rhs.dim(l)
            )));
        }
        mats.insert(l, RatMatrix::identity(lhs.dim(l)));
    }
    ChainMap::new(lhs.clone(), rhs.clone(), mats)
        .map_err(|e| Error::WitnessFailure(e.to_string()))?;
    let mut report = Report::new();
    for l in lhs.degrees() {
        report.equal("row_collapse", (k, l), lhs.betti(l), rhs.betti(l));
    }
    Ok(report)
}

/// `dim H^a(s(ss(K⊗L)))` against `dim H^a(s((sK ⊗ sL)_0))` for every `a`.
pub fn verify_total_collapse(kb: &DoubleComplex, lb: &DoubleComplex) -> Result<Report> {
    let lhs = ss_collapse(&quad_tensor(kb, lb)?)?.total();
    let rhs = tensor_complexes(&kb.total(), &lb.total(), 0).total();
    let mut report = Report::new();
    let lo = lhs.lo().min(rhs.lo());
    let hi = lhs.hi().max(rhs.hi());
    for a in lo..=hi {
        report.equal("total_collapse", a, lhs.betti(a), rhs.betti(a));
    }
    Ok(report)
}

/// Künneth for double complexes: total cohomology for every `a`, and row
/// cohomology for every `(k, l)`.
pub fn bicomplex_kunneth_check(kb: &DoubleComplex, lb: &DoubleComplex) -> Result<Report> {
    let ss = ss_collapse(&quad_tensor(kb, lb)?)?;
    let mut report = Report::new();
    let (tk, tl, ts) = (kb.total(), lb.total(), ss.total());
    for a in ts.degrees() {
        let predicted: usize = tk.degrees().map(|k| tk.betti(k) * tl.betti(a - k)).sum();
        report.equal("total_kunneth", a, ts.betti(a), predicted);
    }
    let row_h = |b: &DoubleComplex| -> BTreeMap<Bidegree, usize> {
        let s = b.support();
        s.columns()
            .flat_map(|p| {
                let row = b.row(p);
                s.rows().map(move |q| ((p, q), row.betti(q)))
            })
            .collect()
    };
    let (hk, hl) = (row_h(kb), row_h(lb));
    for k in ss.support().columns() {
        let row = ss.row(k);
        for l in ss.support().rows() {
            let mut predicted = 0;
            for (&(p, r), &a) in &hk {
                if a > 0 {
                    predicted += a * hl.get(&(k - p, l - r)).copied().unwrap_or(0);
                }
            }
            report.equal("row_kunneth", (k, l), row.betti(l), predicted);
        }
    }
    Ok(report)
}

fn quad_key(a: &QuadDegree) -> String {
    key(a)
}

impl Serialize for QuadComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            support: [i64; 8],
            dims: OrderedMap<usize>,
            d1: OrderedMap<&'a RatMatrix>,
            d2: OrderedMap<&'a RatMatrix>,
            d3: OrderedMap<&'a RatMatrix>,
            d4: OrderedMap<&'a RatMatrix>,
        }
        let maps = |i: usize| {
            OrderedMap(
                self.diffs[i]
                    .iter()
                    .map(|(a, m)| (quad_key(a), m))
                    .collect(),
            )
        };
        Out {
            support: self.support,
            dims: OrderedMap(self.dims.iter().map(|(a, n)| (quad_key(a), *n)).collect()),
            d1: maps(0),
            d2: maps(1),
            d3: maps(2),
            d4: maps(3),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QuadComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct In {
            support: [i64; 8],
            dims: BTreeMap<String, usize>,
            #[serde(default)]
            d1: BTreeMap<String, RatMatrix>,
            #[serde(default)]
            d2: BTreeMap<String, RatMatrix>,
            #[serde(default)]
            d3: BTreeMap<String, RatMatrix>,
            #[serde(default)]
            d4: BTreeMap<String, RatMatrix>,
        }
        fn keyed<T, E: serde::de::Error>(
            m: BTreeMap<String, T>,
        ) -> std::result::Result<BTreeMap<QuadDegree, T>, E> {
            m.into_iter()
                .map(|(k, v)| parse_key::<4>(&k).map(|a| (a, v)).map_err(E::custom))
                .collect()
        }
        let r = In::deserialize(deserializer)?;
        let diffs = [keyed(r.d1)?, keyed(r.d2)?, keyed(r.d3)?, keyed(r.d4)?];
        QuadComplex::new(r.support, keyed(r.dims)?, diffs).map_err(D::Error::custom)
    }
}
