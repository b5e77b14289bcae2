//! Finite invariant-form models of twisted Dolbeault double complexes.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::form::{bidegree, bits_of, wedge_sign, Form, Generator, Mask};
use super::lie::{Leibniz, LieModelSpec};
use crate::bicomplex::{BicomplexMap, Bidegree, DoubleComplex, Support};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, rat, subquotient, RatMatrix, Rational};
use crate::serde_util::{key, OrderedMap};
use crate::tensorops::{quad_tensor, ss_collapse};
use crate::truncation::{truncate, Window};

/// Largest complex dimension a model may have; the algebra has `4^n`
/// monomials per copy.
pub const MAX_MODEL_DIM: usize = 8;

/// Basis vector `sign · mask` in copy `copy` of the twist.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisElement {
    pub copy: usize,
    pub mask: Mask,
    pub sign: i64,
}

/// A double complex `S^{p,q}` on columns and rows `[0, n]` with an explicit
/// exterior-algebra basis in every bidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelDoubleComplex {
    n: usize,
    twist_rank: usize,
    base: DoubleComplex,
    basis: BTreeMap<Bidegree, Vec<BasisElement>>,
    index: HashMap<(usize, Mask), (Bidegree, usize)>,
    gens: Vec<BTreeMap<Mask, Rational>>,
}

/// Subsets of `0..n` of size `k` as bitmasks, in lexicographic order of
/// their sorted elements.
fn combinations(n: usize, k: usize) -> Vec<Mask> {
    fn go(start: usize, n: usize, k: usize, acc: Mask, out: &mut Vec<Mask>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            go(i + 1, n, k - 1, acc | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    go(0, n, k, 0, &mut out);
    out
}

/// Native monomials of bidegree `(p, q)`: holomorphic part major.
fn native_masks(n: usize, p: usize, q: usize) -> Vec<Mask> {
    let anti = combinations(n, q);
    combinations(n, p)
        .into_iter()
        .flat_map(|h| anti.iter().map(move |a| h | (a << n)))
        .collect()
}

impl ModelDoubleComplex {
    /// Builds the model from the differentials of the `2n` generators.
    pub(crate) fn from_generators(
        n: usize,
        twist_rank: usize,
        gens: Vec<BTreeMap<Mask, Rational>>,
    ) -> Result<Self> {
        if n > MAX_MODEL_DIM {
            return Err(Error::PreconditionViolation(format!(
                "model dimension {n} exceeds {MAX_MODEL_DIM}"
            )));
        }
        if twist_rank == 0 {
            return Err(Error::PreconditionViolation(
                "twist rank must be positive".into(),
            ));
        }
        let mut basis = BTreeMap::new();
        let mut local: HashMap<Mask, usize> = HashMap::new();
        for p in 0..=n {
            for q in 0..=n {
                let masks = native_masks(n, p, q);
                for (i, &m) in masks.iter().enumerate() {
                    local.insert(m, i);
                }
                let elems: Vec<BasisElement> = (0..twist_rank)
                    .flat_map(|copy| {
                        masks.iter().map(move |&mask| BasisElement {
                            copy,
                            mask,
                            sign: 1,
                        })
                    })
                    .collect();
                basis.insert((p as i64, q as i64), elems);
            }
        }
        let mut leibniz = Leibniz::new(gens.clone());
        let id = RatMatrix::identity(twist_rank);
        let mut d1 = BTreeMap::new();
        let mut d2 = BTreeMap::new();
        for p in 0..=n {
            for q in 0..=n {
                let src = native_masks(n, p, q);
                let rows1 = if p < n {
                    native_masks(n, p + 1, q).len()
                } else {
                    0
                };
                let rows2 = if q < n {
                    native_masks(n, p, q + 1).len()
                } else {
                    0
                };
                let mut m1 = RatMatrix::zeros(rows1, src.len());
                let mut m2 = RatMatrix::zeros(rows2, src.len());
                for (j, &mask) in src.iter().enumerate() {
                    for (t, c) in leibniz.d_mask(mask) {
                        let row = local[&t];
                        match bidegree(t, n) {
                            b if b == (p as i64 + 1, q as i64) => m1.set(row, j, c),
                            b if b == (p as i64, q as i64 + 1) => m2.set(row, j, c),
                            b => {
                                return Err(Error::NotIntegrable(format!(
                                    "d maps ({p},{q}) into ({},{})",
                                    b.0, b.1
                                )))
                            }
                        }
                    }
                }
                let at = (p as i64, q as i64);
                d1.insert(at, id.kron(&m1));
                d2.insert(at, id.kron(&m2));
            }
        }
        let ni = n as i64;
        let dims = basis.iter().map(|(&b, v)| (b, v.len())).collect();
        let base = DoubleComplex::new(Support::new(0, ni, 0, ni), dims, d1, d2)?;
        Ok(Self::assemble(n, twist_rank, base, basis, gens))
    }

    fn assemble(
        n: usize,
        twist_rank: usize,
        base: DoubleComplex,
        basis: BTreeMap<Bidegree, Vec<BasisElement>>,
        gens: Vec<BTreeMap<Mask, Rational>>,
    ) -> Self {
        let index = basis
            .iter()
            .flat_map(|(&b, elems)| {
                elems
                    .iter()
                    .enumerate()
                    .map(move |(i, e)| ((e.copy, e.mask), (b, i)))
            })
            .collect();
        ModelDoubleComplex {
            n,
            twist_rank,
            base,
            basis,
            index,
            gens,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn twist_rank(&self) -> usize {
        self.twist_rank
    }

    pub fn base(&self) -> &DoubleComplex {
        &self.base
    }

    pub fn basis(&self, p: i64, q: i64) -> &[BasisElement] {
        self.basis.get(&(p, q)).map_or(&[], Vec::as_slice)
    }

    /// The `i`-th basis vector at `(p, q)` as a form.
    pub fn element(&self, p: i64, q: i64, i: usize) -> Form {
        let e = self.basis(p, q)[i];
        Form::term(self.twist_rank, e.copy, e.mask, rat(e.sign))
    }

    /// Coordinates of a form of bidegree `(p, q)` in the basis at `(p, q)`.
    pub fn coordinates(&self, form: &Form, p: i64, q: i64) -> Result<Vec<Rational>> {
        if form.rank() != self.twist_rank {
            return Err(Error::Shape(format!(
                "form has twist rank {}, model has {}",
                form.rank(),
                self.twist_rank
            )));
        }
        let mut v = vec![Rational::zero(); self.basis(p, q).len()];
        for (copy, mask, c) in form.terms() {
            match self.index.get(&(copy, mask)) {
                Some(&(b, i)) if b == (p, q) => v[i] += c * rat(self.basis(p, q)[i].sign),
                _ => {
                    return Err(Error::PreconditionViolation(format!(
                        "form has a component outside bidegree ({p},{q})"
                    )))
                }
            }
        }
        Ok(v)
    }

    pub fn form_from_coordinates(&self, p: i64, q: i64, v: &[Rational]) -> Form {
        let mut f = Form::zero(self.twist_rank);
        for (e, c) in self.basis(p, q).iter().zip(v) {
            f.add_term(e.copy, e.mask, c * rat(e.sign));
        }
        f
    }

    /// `ω^i` or `ω̄^i` as a rank-one form.
    pub fn generator(&self, g: Generator) -> Form {
        Form::from_generators(&[g], self.n)
    }

    /// The wedge of generators named like `"1"` or `"b2"`.
    pub fn monomial(&self, labels: &[&str]) -> Result<Form> {
        let gens = labels
            .iter()
            .map(|l| Generator::parse(l, self.n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Form::from_generators(&gens, self.n))
    }

    /// `d = ∂ + ∂̄`, extended from the generators by the Leibniz rule and
    /// applied copywise.
    pub fn d(&self, form: &Form) -> Form {
        let mut leibniz = Leibniz::new(self.gens.clone());
        let mut out = Form::zero(form.rank());
        for (copy, mask, c) in form.terms() {
            for (t, x) in leibniz.d_mask(mask) {
                out.add_term(copy, t, c * x);
            }
        }
        out
    }

    /// The part of `d` raising the holomorphic degree.
    pub fn del(&self, form: &Form) -> Form {
        self.graded_part(form, 1, 0)
    }

    /// The part of `d` raising the antiholomorphic degree.
    pub fn delbar(&self, form: &Form) -> Form {
        self.graded_part(form, 0, 1)
    }

    fn graded_part(&self, form: &Form, dp: i64, dq: i64) -> Form {
        let mut out = Form::zero(form.rank());
        let mut leibniz = Leibniz::new(self.gens.clone());
        for (copy, mask, c) in form.terms() {
            let (p, q) = bidegree(mask, self.n);
            for (t, x) in leibniz.d_mask(mask) {
                if bidegree(t, self.n) == (p + dp, q + dq) {
                    out.add_term(copy, t, c * x);
                }
            }
        }
        out
    }

    /// `α ∧ β`. Monomials past the top degree vanish.
    pub fn wedge(&self, a: &Form, b: &Form) -> Form {
        a.wedge(b)
    }

    fn top_mask(&self) -> Mask {
        if self.n == 0 {
            0
        } else {
            (1 << (2 * self.n)) - 1
        }
    }

    /// Coefficient of the top monomial, one value per copy.
    pub fn integral(&self, form: &Form) -> Vec<Rational> {
        let top = self.top_mask();
        (0..form.rank()).map(|c| form.coefficient(c, top)).collect()
    }

    /// `∫ tr(α ∧ β)` with the copywise dot pairing on the twist.
    pub fn trace_integral(&self, a: &Form, b: &Form) -> Rational {
        let top = self.top_mask();
        let mut total = Rational::zero();
        for (ca, ma, xa) in a.terms() {
            for (cb, mb, xb) in b.terms() {
                if ca == cb && ma | mb == top {
                    if let Some(s) = wedge_sign(ma, mb) {
                        total += xa * xb * rat(s);
                    }
                }
            }
        }
        total
    }

    /// Checks `∫ d x = 0` for every basis element of total degree `2n - 1`.
    pub fn check_stokes(&self) -> Result<()> {
        let n = self.n as i64;
        for (p, q) in [(n - 1, n), (n, n - 1)] {
            for i in 0..self.basis(p, q).len() {
                let x = self.element(p, q, i);
                if self.integral(&self.d(&x)).iter().any(|c| !c.is_zero()) {
                    return Err(Error::IntegralNotClosed(format!(
                        "∫ d of basis element {i} at ({p},{q})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// The same structure constants with a different trivial twist.
    pub fn with_twist(&self, rank: usize) -> Result<Self> {
        if rank == self.twist_rank {
            return Ok(self.clone());
        }
        Self::from_generators(self.n, rank, self.gens.clone())
    }

    /// `dim (ker ∂ ∩ ker ∂̄) / im ∂∂̄` at `(p, q)`.
    pub fn bott_chern_dim(&self, p: i64, q: i64) -> usize {
        bott_chern_dim(&self.base, p, q)
    }

    /// `• ∧ α : S(s,t) → S'(s+a, t+a)[a, b]` for closed `α` of bidegree
    /// `(a, b)`, where `S'` carries the product twist.
    pub fn cup_map(&self, alpha: &Form, w: Window) -> Result<BicomplexMap> {
        let (a, b) = alpha.bidegree(self.n).ok_or_else(|| {
            Error::PreconditionViolation("α must be a nonzero homogeneous form".into())
        })?;
        if !self.d(alpha).is_zero() {
            return Err(Error::NotClosed(alpha.display(self.n)));
        }
        let target_model = self.with_twist(self.twist_rank * alpha.rank())?;
        let source = truncate(&self.base, w);
        let target = truncate(&target_model.base, w.shifted(a)).shift2(a, b);
        let mut mats = BTreeMap::new();
        for (p, q) in self.base.support().bidegrees() {
            let cols = source.dim(p, q);
            if cols == 0 {
                continue;
            }
            let rows = target.dim(p, q);
            let mut m = RatMatrix::zeros(rows, cols);
            if rows > 0 {
                for i in 0..cols {
                    let image = self.element(p, q, i).wedge(alpha);
                    for (r, c) in target_model
                        .coordinates(&image, p + a, q + b)?
                        .into_iter()
                        .enumerate()
                    {
                        m.set(r, i, c);
                    }
                }
            }
            mats.insert((p, q), m);
        }
        BicomplexMap::new(source, target, mats)
    }

    /// `α ↦ ∫ tr(α ∧ •)` from `S(s,t)` to the dual of `S(n-t, n-s)`, shifted
    /// by `(-n, -n)`.
    pub fn duality_map(&self, w: Window) -> Result<BicomplexMap> {
        self.check_stokes()?;
        let n = self.n as i64;
        let source = truncate(&self.base, w);
        let target = truncate(&self.base, Window::new(n - w.t, n - w.s))
            .dual2()
            .shift2(-n, -n);
        let mut mats = BTreeMap::new();
        for (p, q) in self.base.support().bidegrees() {
            let cols = source.dim(p, q);
            if cols == 0 {
                continue;
            }
            let rows = target.dim(p, q);
            let mut m = RatMatrix::zeros(rows, cols);
            for i in 0..cols {
                let alpha = self.element(p, q, i);
                for j in 0..rows {
                    m.set(
                        j,
                        i,
                        self.trace_integral(&alpha, &self.element(n - p, n - q, j)),
                    );
                }
            }
            mats.insert((p, q), m);
        }
        BicomplexMap::new(source, target, mats)
    }

    /// Labels like `w1^b2`, with a leading `-` for negated basis vectors
    /// and a `[copy]` suffix for twists of rank above one.
    pub fn basis_labels(&self, p: i64, q: i64) -> Vec<String> {
        self.basis(p, q)
            .iter()
            .map(|e| {
                let mono = if e.mask == 0 {
                    "1".to_string()
                } else {
                    bits_of(e.mask)
                        .map(|b| Generator::from_bit(b, self.n).label())
                        .collect::<Vec<_>>()
                        .join("^")
                };
                let sign = if e.sign < 0 { "-" } else { "" };
                let copy = if self.twist_rank > 1 {
                    format!("[{}]", e.copy)
                } else {
                    String::new()
                };
                format!("{sign}{mono}{copy}")
            })
            .collect()
    }

    /// `∂` and `∂̄` of the generators expressed in this model's basis.
    fn native_differentials(
        &self,
    ) -> Result<(BTreeMap<Bidegree, RatMatrix>, BTreeMap<Bidegree, RatMatrix>)> {
        let mut d1 = BTreeMap::new();
        let mut d2 = BTreeMap::new();
        for (p, q) in self.base.support().bidegrees() {
            let cols = self.basis(p, q).len();
            let mut m1 = RatMatrix::zeros(self.basis(p + 1, q).len(), cols);
            let mut m2 = RatMatrix::zeros(self.basis(p, q + 1).len(), cols);
            for i in 0..cols {
                let x = self.element(p, q, i);
                if m1.rows() > 0 {
                    for (r, c) in self
                        .coordinates(&self.del(&x), p + 1, q)?
                        .into_iter()
                        .enumerate()
                    {
                        m1.set(r, i, c);
                    }
                }
                if m2.rows() > 0 {
                    for (r, c) in self
                        .coordinates(&self.delbar(&x), p, q + 1)?
                        .into_iter()
                        .enumerate()
                    {
                        m2.set(r, i, c);
                    }
                }
            }
            d1.insert((p, q), m1);
            d2.insert((p, q), m2);
        }
        Ok((d1, d2))
    }
}

/// `dim (ker d1 ∩ ker d2) / im d1∘d2` at `(p, q)` of any double complex.
pub fn bott_chern_dim(k: &DoubleComplex, p: i64, q: i64) -> usize {
    let n = k.dim(p, q);
    if n == 0 {
        return 0;
    }
    let both = k.d1(p, q).vstack(&k.d2(p, q)).expect("same source");
    let z = kernel_basis(&both);
    let b = &*k.d1(p - 1, q) * &*k.d2(p - 1, q - 1);
    subquotient(&z, &b)
        .expect("∂∂̄-exact forms are closed")
        .dim()
}

/// The complex torus of dimension `n ≥ 1`: all differentials vanish.
pub fn torus_model(n: usize, twist_rank: usize) -> Result<ModelDoubleComplex> {
    if n == 0 {
        return Err(Error::PreconditionViolation(
            "torus needs n ≥ 1; use point_model for n = 0".into(),
        ));
    }
    ModelDoubleComplex::from_generators(n, twist_rank, vec![BTreeMap::new(); 2 * n])
}

/// The point: one basis element in bidegree (0,0).
pub fn point_model() -> ModelDoubleComplex {
    ModelDoubleComplex::from_generators(0, 1, Vec::new()).expect("point model")
}

/// Invariant-form model of a nilmanifold with the given structure constants.
pub fn lie_model(spec: &LieModelSpec) -> Result<ModelDoubleComplex> {
    let gens = spec.generator_differentials()?;
    ModelDoubleComplex::from_generators(spec.n, spec.twist_rank, gens)
}

/// `ss(S_X ⊗ S_Y)` with basis `pr_1^* x ∧ pr_2^* y`. Generators are ordered
/// `ω_X, ω_Y, ω̄_X, ω̄_Y`; the Leibniz differential in this basis is checked
/// against the collapsed tensor differentials.
pub fn product_model(x: &ModelDoubleComplex, y: &ModelDoubleComplex) -> Result<ModelDoubleComplex> {
    let (nx, ny) = (x.n, y.n);
    let n = nx + ny;
    if n > MAX_MODEL_DIM {
        return Err(Error::PreconditionViolation(format!(
            "product dimension {n} exceeds {MAX_MODEL_DIM}"
        )));
    }
    let embed = |mask: Mask, own: usize, hol_at: usize, anti_at: usize| -> Mask {
        bits_of(mask)
            .map(|b| {
                let b = b as usize;
                if b < own {
                    1 << (hol_at + b)
                } else {
                    1 << (anti_at + b - own)
                }
            })
            .fold(0, |acc, bit| acc | bit)
    };
    let ex = |m: Mask| embed(m, nx, 0, n);
    let ey = |m: Mask| embed(m, ny, nx, n + nx);
    let base = ss_collapse(&quad_tensor(&x.base, &y.base)?)?;
    let my = y.twist_rank;
    let mut basis = BTreeMap::new();
    for (k, l) in base.support().bidegrees() {
        let mut elems = Vec::new();
        for p in 0..=nx as i64 {
            for r in 0..=nx as i64 {
                let (q, s) = (k - p, l - r);
                if !(0..=ny as i64).contains(&q) || !(0..=ny as i64).contains(&s) {
                    continue;
                }
                for a in x.basis(p, r) {
                    for b in y.basis(q, s) {
                        let (ma, mb) = (ex(a.mask), ey(b.mask));
                        let sign =
                            a.sign * b.sign * wedge_sign(ma, mb).expect("disjoint generators");
                        elems.push(BasisElement {
                            copy: a.copy * my + b.copy,
                            mask: ma | mb,
                            sign,
                        });
                    }
                }
            }
        }
        if elems.len() != base.dim(k, l) {
            return Err(Error::WitnessFailure(format!(
                "product basis size mismatch at ({k},{l})"
            )));
        }
        basis.insert((k, l), elems);
    }
    let mut gens = vec![BTreeMap::new(); 2 * n];
    for (g, d) in x.gens.iter().enumerate() {
        gens[ex(1 << g).trailing_zeros() as usize] =
            d.iter().map(|(&m, c)| (ex(m), c.clone())).collect();
    }
    for (g, d) in y.gens.iter().enumerate() {
        gens[ey(1 << g).trailing_zeros() as usize] =
            d.iter().map(|(&m, c)| (ey(m), c.clone())).collect();
    }
    let model = ModelDoubleComplex::assemble(n, x.twist_rank * my, base, basis, gens);
    let (d1, d2) = model.native_differentials()?;
    for (p, q) in model.base.support().bidegrees() {
        if d1[&(p, q)] != *model.base.d1(p, q) || d2[&(p, q)] != *model.base.d2(p, q) {
            return Err(Error::WitnessFailure(format!(
                "Leibniz differential differs from the collapsed tensor differential at ({p},{q})"
            )));
        }
    }
    Ok(model)
}

impl Serialize for ModelDoubleComplex {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let labels = OrderedMap(
            self.base
                .support()
                .bidegrees()
                .map(|(p, q)| (key(&[p, q]), self.basis_labels(p, q)))
                .collect(),
        );
        let mut s = serializer.serialize_struct("ModelDoubleComplex", 4)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("twist_rank", &self.twist_rank)?;
        s.serialize_field("base", &self.base)?;
        s.serialize_field("basis_labels", &labels)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rank;
    use crate::spectral;
    use crate::truncation::hypercohomology;

    #[test]
    fn torus_dims() {
        let t1 = torus_model(1, 1).unwrap();
        assert!(t1.base().dims().values().all(|&d| d == 1));
        let t2 = torus_model(2, 1).unwrap();
        assert_eq!(t2.base().dim(1, 1), 4);
        assert_eq!(hypercohomology(t2.base(), Window::new(1, 2), 2), 5);
        let t3 = torus_model(2, 3).unwrap();
        assert_eq!(t3.base().dim(1, 1), 12);
        assert!(torus_model(0, 1).is_err());
    }

    #[test]
    fn lex_basis_order() {
        let t = torus_model(3, 1).unwrap();
        assert_eq!(t.basis_labels(2, 0), vec!["w1^w2", "w1^w3", "w2^w3"]);
        assert_eq!(t.basis_labels(1, 1)[..3], ["w1^b1", "w1^b2", "w1^b3"]);
    }

    #[test]
    fn abelian_lie_model_is_torus() {
        let a = lie_model(&LieModelSpec::abelian(2, 1)).unwrap();
        assert_eq!(a, torus_model(2, 1).unwrap());
    }

    #[test]
    fn iwasawa_numbers() {
        let m = lie_model(&LieModelSpec::iwasawa()).unwrap();
        let e1 = spectral::first_page(m.base());
        assert_eq!(e1.dim(1, 0), 3);
        assert_eq!(e1.dim(0, 1), 2);
        assert_eq!(hypercohomology(m.base(), Window::new(0, 3), 1), 4);
        assert!(!spectral::degenerates_at_e1(m.base()));
    }

    #[test]
    fn iwasawa_leibniz_example() {
        let m = lie_model(&LieModelSpec::iwasawa()).unwrap();
        let x = m.monomial(&["3", "b1"]).unwrap();
        assert_eq!(
            m.del(&x),
            m.monomial(&["1", "2", "b1"]).unwrap().scale(&rat(-1))
        );
    }

    #[test]
    fn bott_chern_examples() {
        let t1 = torus_model(1, 1).unwrap();
        assert_eq!(t1.bott_chern_dim(1, 1), 1);
        assert_eq!(t1.bott_chern_dim(0, 0), 1);
        assert_eq!(t1.bott_chern_dim(3, 0), 0);
    }

    #[test]
    fn cup_with_one_is_identity() {
        let t = torus_model(2, 1).unwrap();
        let f = t.cup_map(&Form::one(), Window::new(0, 2)).unwrap();
        assert_eq!(f, BicomplexMap::identity(t.base()));
    }

    #[test]
    fn cup_with_mixed_form() {
        let t = torus_model(2, 1).unwrap();
        let alpha = t.monomial(&["1", "b1"]).unwrap();
        let f = t.cup_map(&alpha, Window::new(0, 0)).unwrap();
        assert_eq!(rank(&f.total_map().cohomology_map(0).unwrap()), 1);
        // s + p beyond the top column: zero target.
        let g = t
            .cup_map(&t.monomial(&["1", "2"]).unwrap(), Window::new(1, 2))
            .unwrap();
        assert_eq!(g.target().total_dim(), 0);
    }

    #[test]
    fn cup_rejects_non_closed() {
        let m = lie_model(&LieModelSpec::iwasawa()).unwrap();
        let w3 = m.monomial(&["3"]).unwrap();
        assert!(matches!(
            m.cup_map(&w3, Window::new(0, 3)),
            Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn duality_on_curve() {
        let t = torus_model(1, 1).unwrap();
        let f = t.duality_map(Window::new(0, 1)).unwrap().total_map();
        for k in 0..=2 {
            let m = f.cohomology_map(k).unwrap();
            assert!(m.is_square());
            assert_eq!(rank(&m), m.rows());
        }
        let empty = t.duality_map(Window::new(1, 0)).unwrap();
        assert_eq!(empty.source().total_dim(), 0);
    }

    #[test]
    fn product_with_point_is_unchanged() {
        let t = torus_model(1, 1).unwrap();
        let p = product_model(&t, &point_model()).unwrap();
        assert_eq!(p.base(), t.base());
        let q = product_model(&point_model(), &t).unwrap();
        assert_eq!(q.base().dims(), t.base().dims());
    }

    #[test]
    fn product_of_curves_matches_surface_dims() {
        let t1 = torus_model(1, 1).unwrap();
        let p = product_model(&t1, &t1).unwrap();
        assert_eq!(p.base().dims(), torus_model(2, 1).unwrap().base().dims());
    }

    #[test]
    fn product_with_iwasawa_checks_leibniz() {
        let t1 = torus_model(1, 1).unwrap();
        let iw = lie_model(&LieModelSpec::iwasawa()).unwrap();
        let p = product_model(&t1, &iw).unwrap();
        assert_eq!(hypercohomology(p.base(), Window::new(0, 4), 1), 6);
        assert!(p.check_stokes().is_ok());
    }

    #[test]
    fn model_json_has_labels() {
        let s = serde_json::to_string(&point_model()).unwrap();
        assert_eq!(
            s,
            r#"{"n":0,"twist_rank":1,"base":{"support":[0,0,0,0],"dims":{"0,0":1},"d1":{},"d2":{}},"basis_labels":{"0,0":["1"]}}"#
        );
    }
}
