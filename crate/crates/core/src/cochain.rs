//! Bounded cochain complexes of finite-dimensional rational vector spaces.

use std::borrow::Cow;
use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactla::{induced_map, kernel_basis, subquotient, RatMatrix, Subquotient};
use crate::serde_util::{key, parse_key, OrderedMap};

/// A complex `K^lo → … → K^hi`. Degrees outside `[lo, hi]` are zero;
/// missing differentials are zero maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainComplex {
    lo: i64,
    hi: i64,
    dims: Vec<usize>,
    diffs: BTreeMap<i64, RatMatrix>,
}

impl CochainComplex {
    /// Validates shapes and `d^{k+1} ∘ d^k = 0`. `dims[i]` is the dimension in
    /// degree `lo + i`; `hi = lo + dims.len() - 1`. Zero matrices are dropped.
    pub fn new(lo: i64, dims: Vec<usize>, diffs: BTreeMap<i64, RatMatrix>) -> Result<Self> {
        let hi = lo + dims.len() as i64 - 1;
        let mut c = CochainComplex {
            lo,
            hi,
            dims,
            diffs: BTreeMap::new(),
        };
        for (k, d) in diffs {
            let want = (c.dim(k + 1), c.dim(k));
            if d.shape() != want {
                return Err(Error::InvalidComplex(format!(
                    "d^{k} has shape {:?}, expected {:?}",
                    d.shape(),
                    want
                )));
            }
            if !d.is_zero() {
                c.diffs.insert(k, d);
            }
        }
        for (&k, d) in &c.diffs {
            if let Some(next) = c.diffs.get(&(k + 1)) {
                if !(next * d).is_zero() {
                    return Err(Error::InvalidComplex(format!("d^{} ∘ d^{k} ≠ 0", k + 1)));
                }
            }
        }
        Ok(c)
    }

    /// The zero complex on `[lo, hi]`.
    pub fn zero(lo: i64, hi: i64) -> Self {
        let len = (hi - lo + 1).max(0) as usize;
        CochainComplex {
            lo,
            hi: lo + len as i64 - 1,
            dims: vec![0; len],
            diffs: BTreeMap::new(),
        }
    }

    /// A complex with zero differentials.
    pub fn with_zero_differential(lo: i64, dims: Vec<usize>) -> Self {
        let hi = lo + dims.len() as i64 - 1;
        CochainComplex {
            lo,
            hi,
            dims,
            diffs: BTreeMap::new(),
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn degrees(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn dim(&self, k: i64) -> usize {
        if k < self.lo || k > self.hi {
            0
        } else {
            self.dims[(k - self.lo) as usize]
        }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// `d^k : K^k → K^{k+1}`.
    pub fn diff(&self, k: i64) -> Cow<'_, RatMatrix> {
        match self.diffs.get(&k) {
            Some(d) => Cow::Borrowed(d),
            None => Cow::Owned(RatMatrix::zeros(self.dim(k + 1), self.dim(k))),
        }
    }

    /// `H^k = ker d^k / im d^{k-1}`.
    pub fn cohomology(&self, k: i64) -> Subquotient {
        let n = self.dim(k);
        if n == 0 {
            return Subquotient::zero(0);
        }
        let z = kernel_basis(&self.diff(k));
        let b = self.diff(k - 1);
        subquotient(&z, &b).expect("image of d^{k-1} lies in ker d^k")
    }

    pub fn betti(&self, k: i64) -> usize {
        self.cohomology(k).dim()
    }

    /// `dim H^k` for `k` in `lo..=hi`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.degrees().map(|k| self.betti(k)).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.degrees().map(|k| sign(k) * self.dim(k) as i64).sum()
    }

    /// `K[m]^k = K^{k+m}`, `d[m]^k = d^{k+m}`, with no sign.
    pub fn shift(&self, m: i64) -> Self {
        CochainComplex {
            lo: self.lo - m,
            hi: self.hi - m,
            dims: self.dims.clone(),
            diffs: self.diffs.iter().map(|(k, d)| (k - m, d.clone())).collect(),
        }
    }

    /// `(K^*)^k = (K^{-k})^*` with `d^{*k} = (-1)^{k+1} (d^{-k-1})^T`.
    pub fn dual(&self) -> Self {
        let dims = (-self.hi..=-self.lo).map(|k| self.dim(-k)).collect();
        let diffs = self
            .diffs
            .iter()
            .map(|(&j, d)| {
                // d^j is the transpose source for degree k = -j - 1.
                let k = -j - 1;
                (k, d.transpose().signed(k + 1))
            })
            .collect();
        CochainComplex {
            lo: -self.hi,
            hi: -self.lo,
            dims,
            diffs,
        }
    }

    /// Degreewise direct sum with block-diagonal differentials.
    pub fn direct_sum(parts: &[CochainComplex]) -> Self {
        if parts.is_empty() {
            return CochainComplex::zero(0, -1);
        }
        let lo = parts.iter().map(|c| c.lo).min().unwrap();
        let hi = parts.iter().map(|c| c.hi).max().unwrap();
        let dims = (lo..=hi)
            .map(|k| parts.iter().map(|c| c.dim(k)).sum())
            .collect();
        let mut diffs = BTreeMap::new();
        for k in lo..hi {
            let blocks: Vec<RatMatrix> = parts.iter().map(|c| c.diff(k).into_owned()).collect();
            let d = RatMatrix::block_diag(&blocks);
            if !d.is_zero() {
                diffs.insert(k, d);
            }
        }
        CochainComplex {
            lo,
            hi,
            dims,
            diffs,
        }
    }
}

pub(crate) fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// A chain map `f : K → L`, validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainMap {
    source: CochainComplex,
    target: CochainComplex,
    mats: BTreeMap<i64, RatMatrix>,
}

impl ChainMap {
    /// Checks shapes and `f^{k+1} ∘ d_K^k = d_L^k ∘ f^k` in every degree.
    pub fn new(
        source: CochainComplex,
        target: CochainComplex,
        mats: BTreeMap<i64, RatMatrix>,
    ) -> Result<Self> {
        let mut clean = BTreeMap::new();
        for (k, f) in mats {
            let want = (target.dim(k), source.dim(k));
            if f.shape() != want {
                return Err(Error::NotChainCompatible(format!(
                    "f^{k} has shape {:?}, expected {:?}",
                    f.shape(),
                    want
                )));
            }
            if !f.is_zero() {
                clean.insert(k, f);
            }
        }
        let map = ChainMap {
            source,
            target,
            mats: clean,
        };
        let lo = map.source.lo.min(map.target.lo) - 1;
        let hi = map.source.hi.max(map.target.hi) + 1;
        for k in lo..=hi {
            let lhs = &*map.mat(k + 1) * &*map.source.diff(k);
            let rhs = &*map.target.diff(k) * &*map.mat(k);
            if lhs != rhs {
                return Err(Error::NotChainCompatible(format!(
                    "square at degree {k} does not commute"
                )));
            }
        }
        Ok(map)
    }

    pub fn identity(k: &CochainComplex) -> Self {
        let mats = k
            .degrees()
            .filter(|&d| k.dim(d) > 0)
            .map(|d| (d, RatMatrix::identity(k.dim(d))))
            .collect();
        ChainMap {
            source: k.clone(),
            target: k.clone(),
            mats,
        }
    }

    pub fn zero(source: &CochainComplex, target: &CochainComplex) -> Self {
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            mats: BTreeMap::new(),
        }
    }

    pub fn source(&self) -> &CochainComplex {
        &self.source
    }

    pub fn target(&self) -> &CochainComplex {
        &self.target
    }

    pub fn mat(&self, k: i64) -> Cow<'_, RatMatrix> {
        match self.mats.get(&k) {
            Some(m) => Cow::Borrowed(m),
            None => Cow::Owned(RatMatrix::zeros(self.target.dim(k), self.source.dim(k))),
        }
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &ChainMap) -> Result<ChainMap> {
        if first.target != self.source {
            return Err(Error::NotChainCompatible(
                "composition of mismatched maps".into(),
            ));
        }
        let lo = first.source.lo.min(self.target.lo);
        let hi = first.source.hi.max(self.target.hi);
        let mats = (lo..=hi)
            .map(|k| (k, &*self.mat(k) * &*first.mat(k)))
            .collect();
        ChainMap::new(first.source.clone(), self.target.clone(), mats)
    }

    /// Matrix of `H^k(f)` on the representative bases of `H^k(K)` and
    /// `H^k(L)`.
    pub fn cohomology_map(&self, k: i64) -> Result<RatMatrix> {
        let hs = self.source.cohomology(k);
        let ht = self.target.cohomology(k);
        if hs.ambient_dim() == 0 || ht.ambient_dim() == 0 {
            return Ok(RatMatrix::zeros(ht.dim(), hs.dim()));
        }
        induced_map(&self.mat(k), &hs, &ht)
    }
}

#[derive(Serialize, Deserialize)]
struct ComplexRepr {
    lo: i64,
    hi: i64,
    dims: BTreeMap<String, usize>,
    #[serde(default)]
    diffs: BTreeMap<String, RatMatrix>,
}

impl Serialize for CochainComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            lo: i64,
            hi: i64,
            dims: OrderedMap<usize>,
            diffs: OrderedMap<&'a RatMatrix>,
        }
        Out {
            lo: self.lo,
            hi: self.hi,
            dims: OrderedMap(self.degrees().map(|k| (key(&[k]), self.dim(k))).collect()),
            diffs: OrderedMap(self.diffs.iter().map(|(k, d)| (key(&[*k]), d)).collect()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CochainComplex {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = ComplexRepr::deserialize(deserializer)?;
        if repr.hi < repr.lo - 1 {
            return Err(D::Error::custom("hi must be at least lo - 1"));
        }
        let mut dims = vec![0; (repr.hi - repr.lo + 1) as usize];
        for (k, n) in &repr.dims {
            let [k] = parse_key::<1>(k).map_err(D::Error::custom)?;
            if k < repr.lo || k > repr.hi {
                if *n != 0 {
                    return Err(D::Error::custom(format!(
                        "dimension at degree {k} outside [lo, hi]"
                    )));
                }
                continue;
            }
            dims[(k - repr.lo) as usize] = *n;
        }
        let mut diffs = BTreeMap::new();
        for (k, d) in repr.diffs {
            let [k] = parse_key::<1>(&k).map_err(D::Error::custom)?;
            diffs.insert(k, d);
        }
        CochainComplex::new(repr.lo, dims, diffs).map_err(D::Error::custom)
    }
}

impl Serialize for ChainMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            source: &'a CochainComplex,
            target: &'a CochainComplex,
            mats: OrderedMap<&'a RatMatrix>,
        }
        Out {
            source: &self.source,
            target: &self.target,
            mats: OrderedMap(self.mats.iter().map(|(k, m)| (key(&[*k]), m)).collect()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChainMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct In {
            source: CochainComplex,
            target: CochainComplex,
            #[serde(default)]
            mats: BTreeMap<String, RatMatrix>,
        }
        let repr = In::deserialize(deserializer)?;
        let mut mats = BTreeMap::new();
        for (k, m) in repr.mats {
            let [k] = parse_key::<1>(&k).map_err(D::Error::custom)?;
            mats.insert(k, m);
        }
        ChainMap::new(repr.source, repr.target, mats).map_err(D::Error::custom)
    }
}
