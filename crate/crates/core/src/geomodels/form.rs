//! Exterior algebra on `2n` generators with trivial twist of finite rank.
//!
//! A monomial is a bitmask: bit `i < n` is `ω^{i+1}`, bit `n + i` is
//! `ω̄^{i+1}`. Monomials are always stored in increasing bit order.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::Rational;

pub type Mask = u32;

/// A generator of the exterior algebra, 1-indexed as `ω^i` or `ω̄^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Hol(usize),
    Antihol(usize),
}

impl Generator {
    /// Parses `"3"` as `ω^3` and `"b3"` as `ω̄^3`.
    pub fn parse(label: &str, n: usize) -> Result<Self> {
        let (anti, digits) = match label.strip_prefix('b') {
            Some(rest) => (true, rest),
            None => (false, label),
        };
        let i: usize = digits.parse().map_err(|_| {
            Error::Parse(format!(
                "generator label {label:?} is not of the form K or bK"
            ))
        })?;
        if i == 0 || i > n {
            return Err(Error::Parse(format!("generator {label:?} outside 1..={n}")));
        }
        Ok(if anti {
            Generator::Antihol(i)
        } else {
            Generator::Hol(i)
        })
    }

    pub fn bit(self, n: usize) -> u32 {
        match self {
            Generator::Hol(i) => (i - 1) as u32,
            Generator::Antihol(i) => (n + i - 1) as u32,
        }
    }

    pub fn from_bit(bit: u32, n: usize) -> Self {
        let b = bit as usize;
        if b < n {
            Generator::Hol(b + 1)
        } else {
            Generator::Antihol(b - n + 1)
        }
    }

    pub fn label(self) -> String {
        match self {
            Generator::Hol(i) => format!("w{i}"),
            Generator::Antihol(i) => format!("b{i}"),
        }
    }
}

/// Sign of `a ∧ b` relative to the sorted monomial `a | b`, or `None` when
/// they share a generator.
pub fn wedge_sign(a: Mask, b: Mask) -> Option<i64> {
    if a & b != 0 {
        return None;
    }
    let mut swaps = 0;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        swaps += (a >> j >> 1).count_ones();
    }
    Some(if swaps % 2 == 0 { 1 } else { -1 })
}

/// Sorts a product of generators into a monomial and its sign.
pub fn monomial(bits: &[u32]) -> Option<(Mask, i64)> {
    let mut mask: Mask = 0;
    let mut sign = 1;
    for &b in bits {
        sign *= wedge_sign(mask, 1 << b)?;
        mask |= 1 << b;
    }
    Some((mask, sign))
}

pub fn bits_of(mask: Mask) -> impl Iterator<Item = u32> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let j = rest.trailing_zeros();
            rest &= rest - 1;
            Some(j)
        }
    })
}

/// `(holomorphic degree, antiholomorphic degree)` of a monomial.
pub fn bidegree(mask: Mask, n: usize) -> (i64, i64) {
    let low: Mask = if n >= 32 { Mask::MAX } else { (1 << n) - 1 };
    (
        (mask & low).count_ones() as i64,
        (mask & !low).count_ones() as i64,
    )
}

/// Swaps `ω^i ↔ ω̄^i`, returning the sorted monomial and its sign.
pub fn conjugate(mask: Mask, n: usize) -> (Mask, i64) {
    let bits: Vec<u32> = bits_of(mask)
        .map(|b| {
            if (b as usize) < n {
                b + n as u32
            } else {
                b - n as u32
            }
        })
        .collect();
    monomial(&bits).expect("conjugation is a bijection on generators")
}

/// A form with coefficients in a trivial local system of rank `rank`:
/// `rank` independent copies of the exterior algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct Form {
    rank: usize,
    terms: BTreeMap<(usize, Mask), Rational>,
}

impl Form {
    pub fn zero(rank: usize) -> Self {
        Form {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1` in a rank-one system.
    pub fn one() -> Self {
        Form::monomial(0)
    }

    /// A single monomial with coefficient `1` in a rank-one system.
    pub fn monomial(mask: Mask) -> Self {
        Form::term(1, 0, mask, Rational::one())
    }

    pub fn term(rank: usize, copy: usize, mask: Mask, coeff: Rational) -> Self {
        assert!(copy < rank, "copy {copy} out of range for rank {rank}");
        let mut f = Form::zero(rank);
        f.add_term(copy, mask, coeff);
        f
    }

    /// The wedge of the given generators, in order.
    pub fn from_generators(gens: &[Generator], n: usize) -> Self {
        let bits: Vec<u32> = gens.iter().map(|g| g.bit(n)).collect();
        match monomial(&bits) {
            Some((mask, sign)) => Form::term(1, 0, mask, Rational::from_integer(sign.into())),
            None => Form::zero(1),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, Mask, &Rational)> {
        self.terms.iter().map(|(&(c, m), x)| (c, m, x))
    }

    pub fn coefficient(&self, copy: usize, mask: Mask) -> Rational {
        self.terms
            .get(&(copy, mask))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, copy: usize, mask: Mask, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((copy, mask))
            .or_insert_with(Rational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(copy, mask));
        }
    }

    pub fn add(&self, other: &Form) -> Form {
        assert_eq!(self.rank, other.rank, "adding forms with different twists");
        let mut out = self.clone();
        for (c, m, x) in other.terms() {
            out.add_term(c, m, x.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Form {
        let mut out = Form::zero(self.rank);
        for (copy, m, x) in self.terms() {
            out.add_term(copy, m, x * c);
        }
        out
    }

    /// `self ∧ other`; twists multiply, copy `(a, b)` becoming
    /// `a * other.rank + b`.
    pub fn wedge(&self, other: &Form) -> Form {
        let mut out = Form::zero(self.rank * other.rank);
        for (ca, ma, xa) in self.terms() {
            for (cb, mb, xb) in other.terms() {
                if let Some(sign) = wedge_sign(ma, mb) {
                    let coeff = xa * xb * Rational::from_integer(sign.into());
                    out.add_term(ca * other.rank + cb, ma | mb, coeff);
                }
            }
        }
        out
    }

    /// Total degree if homogeneous.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|(_, m)| m.count_ones());
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Bidegree if homogeneous.
    pub fn bidegree(&self, n: usize) -> Option<(i64, i64)> {
        let mut degs = self.terms.keys().map(|(_, m)| bidegree(*m, n));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Keeps only monomials of bidegree `(p, q)`.
    pub fn component(&self, n: usize, p: i64, q: i64) -> Form {
        Form {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|((_, m), _)| bidegree(*m, n) == (p, q))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn display(&self, n: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(&(c, m), x)| {
                let mono = if m == 0 {
                    "1".to_string()
                } else {
                    bits_of(m)
                        .map(|b| Generator::from_bit(b, n).label())
                        .collect::<Vec<_>>()
                        .join("^")
                };
                let copy = if self.rank > 1 {
                    format!("[{c}]")
                } else {
                    String::new()
                };
                format!("{x}*{mono}{copy}")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Form")
            .field("rank", &self.rank)
            .field("terms", &self.terms)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn wedge_signs() {
        assert_eq!(wedge_sign(0b01, 0b10), Some(1));
        assert_eq!(wedge_sign(0b10, 0b01), Some(-1));
        assert_eq!(wedge_sign(0b11, 0b01), None);
        assert_eq!(monomial(&[2, 0, 1]), Some((0b111, 1)));
        assert_eq!(monomial(&[1, 0, 2]), Some((0b111, -1)));
    }

    #[test]
    fn conjugation_of_mixed_monomial() {
        // n = 3: conj(ω¹∧ω̄²) = ω̄¹∧ω² = -ω²∧ω̄¹.
        let (m, s) = monomial(&[0, 4]).unwrap();
        assert_eq!(conjugate(m, 3), ((1 << 1) | (1 << 3), -s));
    }

    #[test]
    fn unit_and_square() {
        let w1 = Form::from_generators(&[Generator::Hol(1)], 2);
        assert_eq!(w1.wedge(&Form::one()), w1);
        assert!(w1.wedge(&w1).is_zero());
    }

    #[test]
    fn twisted_wedge_is_tensor_product() {
        let a = Form::term(2, 1, 0b01, rat(2));
        let b = Form::term(3, 2, 0b10, rat(5));
        let c = a.wedge(&b);
        assert_eq!(c.rank(), 6);
        assert_eq!(c.coefficient(5, 0b11), rat(10));
    }

    #[test]
    fn generator_labels() {
        assert_eq!(Generator::parse("b2", 3).unwrap(), Generator::Antihol(2));
        assert_eq!(Generator::parse("3", 3).unwrap().bit(3), 2);
        assert!(Generator::parse("4", 3).is_err());
        assert!(Generator::parse("x", 3).is_err());
    }
}
