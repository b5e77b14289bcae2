//! Seeded random complexes: direct sums of small indecomposable shapes,
//! disguised by a random change of basis in every degree.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bicomplex::{Bidegree, DoubleComplex, Support};
use crate::cochain::CochainComplex;
use crate::exactla::{inverse, rat, RatMatrix};

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Invertible `n × n` integer matrix: a lower times an upper unitriangular.
pub fn random_invertible<R: Rng>(rng: &mut R, n: usize) -> RatMatrix {
    let mut lower = RatMatrix::identity(n);
    let mut upper = RatMatrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, rat(rng.random_range(-2..=2)));
            upper.set(j, i, rat(rng.random_range(-2..=2)));
        }
    }
    &lower * &upper
}

fn conjugated(
    g: &BTreeMap<Bidegree, (RatMatrix, RatMatrix)>,
    m: &RatMatrix,
    from: Bidegree,
    to: Bidegree,
) -> RatMatrix {
    &(&g[&to].0 * m) * &g[&from].1
}

/// Bounds for random complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComplexShape {
    /// Number of degrees.
    pub span: usize,
    /// Largest dimension in any degree.
    pub max_dim: usize,
}

/// A complex on `lo ..= lo + span - 1` with `lo ∈ [-3, 3]`, built from
/// points and arrows `k → k+1`.
pub fn random_complex<R: Rng>(rng: &mut R, shape: ComplexShape) -> CochainComplex {
    let span = shape.span.max(1);
    let lo = rng.random_range(-3..=3);
    let mut dims = vec![0usize; span];
    let mut arrows: Vec<(usize, usize, usize)> = Vec::new();
    for _ in 0..rng.random_range(0..=2 * span * shape.max_dim) {
        let k = rng.random_range(0..span);
        let arrow = k + 1 < span && rng.random_bool(0.5);
        if dims[k] >= shape.max_dim || (arrow && dims[k + 1] >= shape.max_dim) {
            continue;
        }
        if arrow {
            arrows.push((k, dims[k], dims[k + 1]));
            dims[k + 1] += 1;
        }
        dims[k] += 1;
    }
    let mut diffs: BTreeMap<i64, RatMatrix> = BTreeMap::new();
    for k in 0..span.saturating_sub(1) {
        diffs.insert(k as i64, RatMatrix::zeros(dims[k + 1], dims[k]));
    }
    for &(k, from, to) in &arrows {
        diffs
            .get_mut(&(k as i64))
            .expect("arrow inside span")
            .set(to, from, rat(1));
    }
    let g: Vec<(RatMatrix, RatMatrix)> = dims
        .iter()
        .map(|&n| {
            let m = random_invertible(rng, n);
            let inv = inverse(&m).expect("unitriangular product is invertible");
            (m, inv)
        })
        .collect();
    let diffs = diffs
        .into_iter()
        .map(|(k, d)| {
            let k = k as usize;
            ((lo + k as i64), &(&g[k + 1].0 * &d) * &g[k].1)
        })
        .collect();
    CochainComplex::new(lo, dims, diffs).expect("conjugated direct sum of arrows is a complex")
}

/// Bounds for random double complexes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BicomplexShape {
    pub width: usize,
    pub height: usize,
    pub max_dim: usize,
}

impl Default for BicomplexShape {
    fn default() -> Self {
        BicomplexShape {
            width: 4,
            height: 4,
            max_dim: 3,
        }
    }
}

struct Builder {
    support: Support,
    max_dim: usize,
    dims: BTreeMap<Bidegree, usize>,
    d1: Vec<(Bidegree, usize, usize, i64)>,
    d2: Vec<(Bidegree, usize, usize, i64)>,
}

/// Node of a shape, relative to its anchor, and arrows between nodes.
struct Shape {
    nodes: Vec<Bidegree>,
    d1: Vec<(usize, usize, i64)>,
    d2: Vec<(usize, usize, i64)>,
}

impl Shape {
    fn dot() -> Self {
        Shape {
            nodes: vec![(0, 0)],
            d1: vec![],
            d2: vec![],
        }
    }

    fn vertical() -> Self {
        Shape {
            nodes: vec![(0, 0), (0, 1)],
            d1: vec![],
            d2: vec![(0, 1, 1)],
        }
    }

    /// `x ↦ a` horizontally, `x ↦ b` vertically, `d2 a = c = -d1 b`.
    fn square() -> Self {
        Shape {
            nodes: vec![(0, 0), (1, 0), (0, 1), (1, 1)],
            d1: vec![(0, 1, 1), (2, 3, -1)],
            d2: vec![(0, 2, 1), (1, 3, 1)],
        }
    }

    /// A staircase of `steps` descending steps: `d1 h = b_0`, and for each
    /// step `d2 c_i = -b_{i-1}`, `d1 c_i = b_i`. With `tail`, the last
    /// corner maps horizontally onward. Produces `d_{steps+1}` on the
    /// spectral sequence.
    fn staircase(steps: usize, tail: bool) -> Self {
        let s = steps as i64;
        let mut nodes = vec![(0, s)];
        let (mut d1, mut d2) = (Vec::new(), Vec::new());
        let mut prev_corner = 0;
        for i in 0..=s {
            if i > 0 {
                nodes.push((i, s - i));
                let c = nodes.len() - 1;
                d2.push((c, prev_corner + 1, -1));
                prev_corner = c;
            }
            if i < s || tail {
                nodes.push((i + 1, s - i));
                d1.push((prev_corner, nodes.len() - 1, 1));
            }
        }
        Shape { nodes, d1, d2 }
    }
}

impl Builder {
    fn try_place(&mut self, shape: &Shape, at: Bidegree) -> bool {
        let cells: Vec<Bidegree> = shape
            .nodes
            .iter()
            .map(|&(p, q)| (at.0 + p, at.1 + q))
            .collect();
        let mut need: BTreeMap<Bidegree, usize> = BTreeMap::new();
        for &c in &cells {
            if !self.support.contains(c.0, c.1) {
                return false;
            }
            *need.entry(c).or_default() += 1;
        }
        if need.iter().any(|(c, n)| self.dims[c] + n > self.max_dim) {
            return false;
        }
        let mut index = Vec::new();
        for &c in &cells {
            let e = self.dims.get_mut(&c).expect("inside support");
            index.push(*e);
            *e += 1;
        }
        for &(a, b, x) in &shape.d1 {
            self.d1.push((cells[a], index[a], index[b], x));
        }
        for &(a, b, x) in &shape.d2 {
            self.d2.push((cells[a], index[a], index[b], x));
        }
        true
    }

    /// Assembles the differentials, conjugated by a random basis change.
    fn finish<R: Rng>(self, rng: &mut R) -> DoubleComplex {
        let g: BTreeMap<Bidegree, (RatMatrix, RatMatrix)> = self
            .dims
            .iter()
            .map(|(&c, &n)| {
                let m = random_invertible(rng, n);
                let inv = inverse(&m).expect("unitriangular product is invertible");
                (c, (m, inv))
            })
            .collect();
        let assemble = |arrows: &[(Bidegree, usize, usize, i64)],
                        step: Bidegree|
         -> BTreeMap<Bidegree, RatMatrix> {
            let mut out: BTreeMap<Bidegree, RatMatrix> = BTreeMap::new();
            for &(c, from, to, x) in arrows {
                let t = (c.0 + step.0, c.1 + step.1);
                out.entry(c)
                    .or_insert_with(|| RatMatrix::zeros(self.dims[&t], self.dims[&c]))
                    .set(to, from, rat(x));
            }
            out.into_iter()
                .map(|(c, m)| (c, conjugated(&g, &m, c, (c.0 + step.0, c.1 + step.1))))
                .collect()
        };
        let d1 = assemble(&self.d1, (1, 0));
        let d2 = assemble(&self.d2, (0, 1));
        DoubleComplex::new(self.support, self.dims, d1, d2)
            .expect("conjugated direct sum of shapes is a double complex")
    }
}

/// A double complex on a support of at most `width × height` with corner in
/// `[-2, 2]²`, built from dots, vertical arrows, squares and staircases.
pub fn random_double_complex<R: Rng>(rng: &mut R, shape: BicomplexShape) -> DoubleComplex {
    let w = rng.random_range(1..=shape.width.max(1)) as i64;
    let h = rng.random_range(1..=shape.height.max(1)) as i64;
    let (p0, q0) = (rng.random_range(-2..=2), rng.random_range(-2..=2));
    let support = Support::new(p0, p0 + w - 1, q0, q0 + h - 1);
    let mut b = Builder {
        support,
        max_dim: shape.max_dim,
        dims: support.bidegrees().map(|c| (c, 0)).collect(),
        d1: Vec::new(),
        d2: Vec::new(),
    };
    let attempts = rng.random_range(0..=(w * h) as usize * shape.max_dim);
    for _ in 0..attempts {
        let piece = match rng.random_range(0..6) {
            0 => Shape::dot(),
            1 => Shape::vertical(),
            2 => Shape::square(),
            _ => Shape::staircase(rng.random_range(0..w.min(h) as usize), rng.random_bool(0.5)),
        };
        let at = (
            rng.random_range(p0..=p0 + w - 1),
            rng.random_range(q0..=q0 + h - 1),
        );
        b.try_place(&piece, at);
    }
    b.finish(rng)
}
