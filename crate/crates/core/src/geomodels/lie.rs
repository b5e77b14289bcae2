//! Structure constants of a nilpotent Lie algebra with complex structure,
//! given as `dω^i` in terms of degree-two invariant forms.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::form::{conjugate, monomial, wedge_sign, Generator, Mask};
use crate::error::{Error, Result};
use crate::exactla::{parse_rational, Rational};

/// One term `coeff · g₁ ∧ g₂` of some `dω^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureTerm {
    pub wedge: Vec<String>,
    pub coeff: String,
}

/// `{"n": 3, "twist_rank": 1, "d": {"3": [{"wedge": ["1","2"], "coeff": "-1"}]}}`.
///
/// Keys of `d` are holomorphic indices; `"bK"` in a wedge names `ω̄^K`. The
/// differentials of `ω̄^i` are the conjugates of those of `ω^i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieModelSpec {
    pub n: usize,
    #[serde(default = "one")]
    pub twist_rank: usize,
    #[serde(default)]
    pub d: BTreeMap<String, Vec<StructureTerm>>,
}

fn one() -> usize {
    1
}

impl LieModelSpec {
    /// All structure constants zero: a complex torus.
    pub fn abelian(n: usize, twist_rank: usize) -> Self {
        LieModelSpec {
            n,
            twist_rank,
            d: BTreeMap::new(),
        }
    }

    /// `dω¹ = dω² = 0`, `dω³ = -ω¹∧ω²`.
    pub fn iwasawa() -> Self {
        let term = StructureTerm {
            wedge: vec!["1".into(), "2".into()],
            coeff: "-1".into(),
        };
        LieModelSpec {
            n: 3,
            twist_rank: 1,
            d: BTreeMap::from([("3".into(), vec![term])]),
        }
    }

    /// Differentials of all `2n` generators as sparse 2-forms, indexed by bit.
    pub(crate) fn generator_differentials(&self) -> Result<Vec<BTreeMap<Mask, Rational>>> {
        let n = self.n;
        let mut hol: Vec<BTreeMap<Mask, Rational>> = vec![BTreeMap::new(); n];
        for (key, terms) in &self.d {
            let i = match Generator::parse(key, n)? {
                Generator::Hol(i) => i,
                Generator::Antihol(_) => {
                    return Err(Error::Parse(format!(
                        "differential key {key:?}: only holomorphic generators are given, ω̄ follows by conjugation"
                    )))
                }
            };
            for t in terms {
                if t.wedge.len() != 2 {
                    return Err(Error::Parse(format!(
                        "dω^{i}: terms must be wedges of two generators"
                    )));
                }
                let bits: Vec<u32> = t
                    .wedge
                    .iter()
                    .map(|g| Generator::parse(g, n).map(|g| g.bit(n)))
                    .collect::<Result<_>>()?;
                let coeff = parse_rational(&t.coeff).map_err(Error::Parse)?;
                if let Some((mask, sign)) = monomial(&bits) {
                    add(
                        &mut hol[i - 1],
                        mask,
                        coeff * Rational::from_integer(sign.into()),
                    );
                }
            }
        }
        for (i, d) in hol.iter().enumerate() {
            if d.keys().any(|&m| super::form::bidegree(m, n) == (0, 2)) {
                return Err(Error::NotIntegrable(format!(
                    "dω^{} has a (0,2) component",
                    i + 1
                )));
            }
        }
        let anti: Vec<BTreeMap<Mask, Rational>> = hol
            .iter()
            .map(|d| {
                let mut out = BTreeMap::new();
                for (&m, c) in d {
                    let (cm, s) = conjugate(m, n);
                    add(&mut out, cm, c * Rational::from_integer(s.into()));
                }
                out
            })
            .collect();
        let all: Vec<_> = hol.into_iter().chain(anti).collect();
        let mut leibniz = Leibniz::new(all.clone());
        for (g, form) in all.iter().enumerate() {
            let dd = leibniz.d_of(form);
            if !dd.is_empty() {
                return Err(Error::JacobiViolation(
                    Generator::from_bit(g as u32, n).label(),
                ));
            }
        }
        Ok(all)
    }
}

fn add(map: &mut BTreeMap<Mask, Rational>, m: Mask, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(m).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&m);
    }
}

/// `d` extended from generators by `d(g∧x) = dg∧x - g∧dx`, memoized per
/// monomial.
pub(crate) struct Leibniz {
    gens: Vec<BTreeMap<Mask, Rational>>,
    memo: HashMap<Mask, BTreeMap<Mask, Rational>>,
}

impl Leibniz {
    pub(crate) fn new(gens: Vec<BTreeMap<Mask, Rational>>) -> Self {
        Leibniz {
            gens,
            memo: HashMap::new(),
        }
    }

    pub(crate) fn d_mask(&mut self, mask: Mask) -> BTreeMap<Mask, Rational> {
        if mask == 0 {
            return BTreeMap::new();
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let g = mask.trailing_zeros();
        let rest = mask & !(1 << g);
        let mut out = BTreeMap::new();
        for (&m, c) in &self.gens[g as usize] {
            if let Some(s) = wedge_sign(m, rest) {
                add(&mut out, m | rest, c * Rational::from_integer(s.into()));
            }
        }
        let d_rest = self.d_mask(rest);
        for (m, c) in d_rest {
            if let Some(s) = wedge_sign(1 << g, m) {
                add(
                    &mut out,
                    m | (1 << g),
                    -(c * Rational::from_integer(s.into())),
                );
            }
        }
        self.memo.insert(mask, out.clone());
        out
    }

    pub(crate) fn d_of(&mut self, x: &BTreeMap<Mask, Rational>) -> BTreeMap<Mask, Rational> {
        let mut out = BTreeMap::new();
        for (&m, c) in x {
            for (dm, dc) in self.d_mask(m) {
                add(&mut out, dm, c * dc);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::rat;

    #[test]
    fn iwasawa_differentials() {
        let d = LieModelSpec::iwasawa().generator_differentials().unwrap();
        assert!(d[0].is_empty() && d[1].is_empty());
        assert_eq!(d[2], BTreeMap::from([(0b000_011, rat(-1))]));
        // dω̄³ = -ω̄¹∧ω̄².
        assert_eq!(d[5], BTreeMap::from([(0b011_000, rat(-1))]));
    }

    #[test]
    fn json_layout() {
        let s = r#"{"n":3,"twist_rank":1,"d":{"3":[{"wedge":["1","2"],"coeff":"-1"}]}}"#;
        let spec: LieModelSpec = serde_json::from_str(s).unwrap();
        assert_eq!(spec, LieModelSpec::iwasawa());
        assert_eq!(serde_json::to_string(&spec).unwrap(), s);
    }

    #[test]
    fn jacobi_violation_is_reported() {
        // dω¹ = ω²∧ω̄², dω² = ω¹∧ω̄¹ gives d²ω¹ = ω¹∧ω̄¹∧ω̄² + ω²∧ω¹∧ω̄¹ ≠ 0.
        let t = |a: &str, b: &str| StructureTerm {
            wedge: vec![a.into(), b.into()],
            coeff: "1".into(),
        };
        let spec = LieModelSpec {
            n: 2,
            twist_rank: 1,
            d: BTreeMap::from([
                ("1".into(), vec![t("2", "b2")]),
                ("2".into(), vec![t("1", "b1")]),
            ]),
        };
        assert!(matches!(
            spec.generator_differentials(),
            Err(Error::JacobiViolation(_))
        ));
    }

    #[test]
    fn non_integrable_is_reported() {
        let spec = LieModelSpec {
            n: 2,
            twist_rank: 1,
            d: BTreeMap::from([(
                "2".into(),
                vec![StructureTerm {
                    wedge: vec!["b1".into(), "b2".into()],
                    coeff: "1".into(),
                }],
            )]),
        };
        assert!(matches!(
            spec.generator_differentials(),
            Err(Error::NotIntegrable(_))
        ));
    }

    #[test]
    fn bad_labels_are_parse_errors() {
        let spec = LieModelSpec {
            n: 2,
            twist_rank: 1,
            d: BTreeMap::from([("b1".into(), vec![])]),
        };
        assert!(matches!(
            spec.generator_differentials(),
            Err(Error::Parse(_))
        ));
    }
}
