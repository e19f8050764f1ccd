//! Tensor powers of characters, their decompositions, and covering exponents.
//!
//! For a character `chi`, `e(chi)` is the smallest `t` with every irreducible
//! character occurring in `chi^t`, and `t(chi)` the smallest `t` with every
//! irreducible occurring in at least one of `chi, chi^2, ..., chi^t`. The
//! covering number of the group is the maximum of `e(chi)` over nontrivial
//! `chi`.

mod claims;

pub use claims::{compare_claims, stated_claims, Claim, ClaimFinding, ClaimOutcome};

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::tables::{CharLabel, Character, CharacterTable, ParityCase};

pub const DEFAULT_TMAX: u32 = 8;

/// A class function on the classes of one table, e.g. a power of a character.
#[derive(Debug, Clone)]
pub struct ClassFunction<'t> {
    table: &'t CharacterTable,
    values: Vec<Cyclotomic>,
}

impl<'t> ClassFunction<'t> {
    pub fn new(table: &'t CharacterTable, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), table.classes.len(), "one value per class");
        ClassFunction { table, values }
    }

    pub fn of_character(table: &'t CharacterTable, chi: &Character) -> Self {
        Self::new(table, chi.values.clone())
    }

    pub fn table(&self) -> &'t CharacterTable {
        self.table
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    /// Pointwise product, unreduced.
    pub fn times(&self, other: &[Cyclotomic]) -> Self {
        let values = self.values.iter().zip(other).map(|(a, b)| a * b).collect();
        Self::new(self.table, values)
    }

    pub fn conjugate(&self) -> Self {
        Self::new(
            self.table,
            self.values.iter().map(Cyclotomic::conjugate).collect(),
        )
    }
}

/// `chi^t`, computed by repeated pointwise multiplication.
pub fn pointwise_power<'t>(
    table: &'t CharacterTable,
    chi: &Character,
    t: u32,
) -> ClassFunction<'t> {
    assert!(t >= 1, "power must be positive");
    let mut f = ClassFunction::of_character(table, chi);
    for _ in 1..t {
        f = f.times(&chi.values);
    }
    f
}

/// `<f, chi>` as an exact integer.
pub fn inner_product(f: &ClassFunction<'_>, chi: &Character) -> Result<BigInt> {
    f.table.inner_product_values(&f.values, &chi.values)
}

/// Multiplicities of the irreducible constituents of a character.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub multiplicities: BTreeMap<CharLabel, u64>,
}

impl Decomposition {
    pub fn multiplicity(&self, label: CharLabel) -> u64 {
        self.multiplicities.get(&label).copied().unwrap_or(0)
    }

    pub fn constituents(&self) -> BTreeSet<CharLabel> {
        self.multiplicities
            .iter()
            .filter(|(_, m)| **m > 0)
            .map(|(l, _)| *l)
            .collect()
    }

    /// Whether every irreducible character of `table` occurs.
    pub fn is_complete(&self, table: &CharacterTable) -> bool {
        table.labels().all(|l| self.multiplicity(l) > 0)
    }

    /// `sum multiplicity * degree`.
    pub fn degree(&self, table: &CharacterTable) -> BigInt {
        table
            .characters
            .iter()
            .map(|c| BigInt::from(self.multiplicity(c.label)) * BigInt::from(c.degree))
            .sum()
    }

    /// `sum multiplicity * chi`, class by class.
    pub fn reconstruct(&self, table: &CharacterTable) -> Vec<Cyclotomic> {
        let n = table.params.conductor;
        let mut out = vec![Cyclotomic::zero(n); table.classes.len()];
        for chi in &table.characters {
            let m = self.multiplicity(chi.label);
            if m == 0 {
                continue;
            }
            let m = BigInt::from(m);
            for (acc, v) in out.iter_mut().zip(&chi.values) {
                *acc += &v.scale(&m);
            }
        }
        out
    }
}

pub fn decompose(f: &ClassFunction<'_>) -> Result<Decomposition> {
    let mut multiplicities = BTreeMap::new();
    for chi in &f.table.characters {
        let m = inner_product(f, chi)?;
        if m.is_negative() {
            return Err(Error::NegativeMultiplicity {
                label: chi.label.to_string(),
                value: m,
            });
        }
        let m = m.to_u64().ok_or_else(|| Error::MultiplicityOverflow {
            label: chi.label.to_string(),
            value: m.clone(),
        })?;
        multiplicities.insert(chi.label, m);
    }
    Ok(Decomposition { multiplicities })
}

pub fn constituents(f: &ClassFunction<'_>) -> Result<BTreeSet<CharLabel>> {
    Ok(decompose(f)?.constituents())
}

/// `(e(chi), t(chi))` computed from one pass over `chi, chi^2, ...`.
pub fn covering_exponents(
    table: &CharacterTable,
    chi: &Character,
    tmax: u32,
) -> Result<(u32, u32)> {
    let cap = || Error::ExponentCapExceeded {
        label: chi.label.to_string(),
        tmax,
    };
    let all: BTreeSet<CharLabel> = table.labels().collect();
    let mut union = BTreeSet::new();
    let mut t_found = None;
    let mut power = ClassFunction::of_character(table, chi);
    for t in 1..=tmax {
        if t > 1 {
            power = power.times(&chi.values);
        }
        let cons = constituents(&power)?;
        union.extend(cons.iter().copied());
        if t_found.is_none() && union == all {
            t_found = Some(t);
        }
        if cons == all {
            return Ok((t, t_found.expect("union contains the full set")));
        }
    }
    Err(cap())
}

pub fn e_number(table: &CharacterTable, chi: &Character, tmax: u32) -> Result<u32> {
    covering_exponents(table, chi, tmax).map(|(e, _)| e)
}

pub fn t_number(table: &CharacterTable, chi: &Character, tmax: u32) -> Result<u32> {
    let all: BTreeSet<CharLabel> = table.labels().collect();
    let mut union = BTreeSet::new();
    let mut power = ClassFunction::of_character(table, chi);
    for t in 1..=tmax {
        if t > 1 {
            power = power.times(&chi.values);
        }
        union.extend(constituents(&power)?);
        if union == all {
            return Ok(t);
        }
    }
    Err(Error::ExponentCapExceeded {
        label: chi.label.to_string(),
        tmax,
    })
}

/// Covering number predicted for `q >= 8`: 4 when `q` is an odd power of two
/// (equivalently `q` even with `3 | q + 1`), 3 otherwise.
pub fn theorem_expected(q: u64) -> Option<u32> {
    if q < crate::tables::THEOREM_MIN_Q {
        None
    } else if q.is_multiple_of(2) && (q + 1).is_multiple_of(3) {
        Some(4)
    } else {
        Some(3)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterCovering {
    pub label: CharLabel,
    pub e: u32,
    pub t: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub q: u64,
    pub case: ParityCase,
    pub tmax: u32,
    pub characters: Vec<CharacterCovering>,
    pub covering_number: u32,
    /// `None` outside the theorem's range `q >= 8`.
    pub theorem_expected: Option<u32>,
    pub matches_theorem: Option<bool>,
}

pub fn covering_report(table: &CharacterTable, tmax: u32) -> Result<CoveringReport> {
    let mut characters = Vec::new();
    for chi in table.characters.iter().filter(|c| !c.label.is_trivial()) {
        let (e, t) = covering_exponents(table, chi, tmax)?;
        characters.push(CharacterCovering {
            label: chi.label,
            e,
            t,
        });
    }
    let covering_number = characters.iter().map(|c| c.e).max().unwrap_or(0);
    let theorem_expected = theorem_expected(table.params.q);
    Ok(CoveringReport {
        q: table.params.q,
        case: table.params.case,
        tmax,
        characters,
        covering_number,
        theorem_expected,
        matches_theorem: theorem_expected.map(|x| x == covering_number),
    })
}

/// Whether `sum multiplicity * chi` equals `f` at every class.
pub fn reconstructs(f: &ClassFunction<'_>, d: &Decomposition) -> bool {
    d.reconstruct(f.table)
        .iter()
        .zip(&f.values)
        .all(|(a, b)| (a - b).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{character_table, group_params, ClassLabel};

    fn table(q: u64) -> CharacterTable {
        character_table(&group_params(q).unwrap())
    }

    #[test]
    fn power_values() {
        let t8 = table(8);
        let triv = t8.require(CharLabel::Trivial).unwrap();
        assert!(pointwise_power(&t8, triv, 5)
            .values()
            .iter()
            .all(|v| v.as_integer() == Some(1.into())));

        let sq = pointwise_power(&t8, t8.require(CharLabel::Steinberg).unwrap(), 2);
        assert_eq!(sq.values()[0].as_integer(), Some(64.into()));
        assert_eq!(sq.values()[1].as_integer(), Some(0.into()));
        let s1 = t8.class_index(ClassLabel::Split(1)).unwrap();
        assert_eq!(sq.values()[s1].as_integer(), Some(1.into()));

        let t11 = table(11);
        let f = pointwise_power(&t11, t11.require(CharLabel::Discrete(2)).unwrap(), 2);
        let half = t11.class_index(ClassLabel::NonSplitHalf).unwrap();
        assert_eq!(f.values()[half].as_integer(), Some(4.into()));
    }

    #[test]
    fn inner_product_examples() {
        let t8 = table(8);
        let st2 = pointwise_power(&t8, t8.require(CharLabel::Steinberg).unwrap(), 2);
        assert_eq!(
            inner_product(&st2, t8.require(CharLabel::Trivial).unwrap()).unwrap(),
            1.into()
        );

        let t13 = table(13);
        let st2 = pointwise_power(&t13, t13.require(CharLabel::Steinberg).unwrap(), 2);
        for k in [2, 4] {
            assert_eq!(
                inner_product(&st2, t13.require(CharLabel::Principal(k)).unwrap()).unwrap(),
                2.into()
            );
        }
        let hp2 = pointwise_power(&t13, t13.require(CharLabel::HalfPlus1).unwrap(), 2);
        assert_eq!(
            inner_product(&hp2, t13.require(CharLabel::HalfPlus2).unwrap()).unwrap(),
            0.into()
        );
    }

    #[test]
    fn decomposition_examples() {
        let t8 = table(8);
        let st2 = pointwise_power(&t8, t8.require(CharLabel::Steinberg).unwrap(), 2);
        let d = decompose(&st2).unwrap();
        assert!(d.multiplicities.values().all(|m| *m == 1));
        assert!(d.is_complete(&t8));
        assert!(reconstructs(&st2, &d));

        let f = pointwise_power(&t8, t8.require(CharLabel::Discrete(3)).unwrap(), 4);
        let d = decompose(&f).unwrap();
        assert_eq!(d.multiplicity(CharLabel::Trivial), 7);
        assert_eq!(d.multiplicity(CharLabel::Steinberg), 36);
        for k in 1..=3 {
            assert_eq!(d.multiplicity(CharLabel::Principal(k)), 43);
        }
        assert_eq!(d.multiplicity(CharLabel::Discrete(3)), 30);
        for j in [1, 2, 4] {
            assert_eq!(d.multiplicity(CharLabel::Discrete(j)), 35);
        }
        assert_eq!(d.degree(&t8), BigInt::from(7u64.pow(4)));

        let dd2 = pointwise_power(&t8, t8.require(CharLabel::Discrete(1)).unwrap(), 2);
        assert!(!constituents(&dd2).unwrap().contains(&CharLabel::Steinberg));
    }

    #[test]
    fn negative_multiplicity_is_an_error() {
        let t8 = table(8);
        let st = t8.require(CharLabel::Steinberg).unwrap();
        let neg = ClassFunction::new(&t8, st.values.iter().map(|v| -v).collect());
        assert!(matches!(
            decompose(&neg),
            Err(Error::NegativeMultiplicity { .. })
        ));
    }

    #[test]
    fn exponent_examples() {
        let t8 = table(8);
        let st = t8.require(CharLabel::Steinberg).unwrap();
        assert_eq!(e_number(&t8, st, 8).unwrap(), 2);
        assert_eq!(t_number(&t8, st, 8).unwrap(), 2);
        let d3 = t8.require(CharLabel::Discrete(3)).unwrap();
        assert_eq!(e_number(&t8, d3, 8).unwrap(), 4);
        assert_eq!(t_number(&t8, d3, 8).unwrap(), 3);
        assert!(matches!(
            e_number(&t8, d3, 3),
            Err(Error::ExponentCapExceeded { .. })
        ));

        // (psi'_-)^3 never contains psi'_- when q = 3 mod 4: the weighted sum
        // (q-1)^4/16 - (q^2-1)^2/16 + q(q-1)^2/4 vanishes identically. At
        // q = 11 this matches the float evaluation over the ATLAS values
        // (5, 1, -1, 0, 0, 1, b11, b11*), so e = 4.
        let t11 = table(11);
        let hm = t11.require(CharLabel::HalfMinus1).unwrap();
        let cube = decompose(&pointwise_power(&t11, hm, 3)).unwrap();
        assert_eq!(cube.multiplicity(CharLabel::HalfMinus1), 0);
        assert_eq!(e_number(&t11, hm, 8).unwrap(), 4);
        assert_eq!(t_number(&t11, hm, 8).unwrap(), 3);
    }

    #[test]
    fn covering_examples() {
        for (q, expect) in [(8, 4), (13, 3), (16, 3)] {
            let r = covering_report(&table(q), DEFAULT_TMAX).unwrap();
            assert_eq!(r.covering_number, expect, "q = {q}");
            assert_eq!(r.matches_theorem, Some(true));
        }
        let r5 = covering_report(&table(5), DEFAULT_TMAX).unwrap();
        assert_eq!(r5.theorem_expected, None);
        assert_eq!(r5.matches_theorem, None);
    }
}
