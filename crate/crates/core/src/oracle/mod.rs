//! Brute-force construction of `PSL_2(q)` for small `q`, used to check the
//! parametric class data and character values independently.

mod field;
mod group;

pub use field::{Elem, ExtElem, ExtFieldSpec, FieldSpec};
pub use group::{conjugacy_orbits, enumerate, generators, ProjMatrix};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::numtheory::prime_power;
use crate::tables::{CharacterTable, ClassLabel};

pub const DEFAULT_CAP: u64 = 32;
pub const CAP_ENV: &str = "PSL2COV_ORACLE_CAP";

/// The largest `q` the oracle accepts, from `PSL2COV_ORACLE_CAP` if set.
pub fn oracle_cap() -> u64 {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CAP)
}

fn check(q: u64) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::NotAPrimePower(q));
    }
    let cap = oracle_cap();
    if q > cap {
        return Err(Error::CapExceeded { q, cap });
    }
    Ok(())
}

pub fn build_field(q: u64) -> Result<FieldSpec> {
    check(q)?;
    FieldSpec::new(q)
}

pub fn build_ext(q: u64) -> Result<ExtFieldSpec> {
    Ok(ExtFieldSpec::new(build_field(q)?))
}

pub fn enumerate_group(q: u64) -> Result<Vec<ProjMatrix>> {
    Ok(enumerate(&build_field(q)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitClass {
    pub representative: [Elem; 4],
    pub size: u64,
    pub order: u64,
    pub trace_up_to_sign: Elem,
}

/// The explicit group with its classes, kept together so conjugacy tests can
/// reuse the element-to-class map.
#[derive(Debug, Clone)]
pub struct ExplicitGroup {
    pub ext: ExtFieldSpec,
    pub order: u64,
    pub classes: Vec<ExplicitClass>,
    class_of: Vec<u32>,
}

impl ExplicitGroup {
    pub fn build(q: u64) -> Result<Self> {
        let ext = build_ext(q)?;
        let f = &ext.base;
        let elements = enumerate(f);
        let (orbits, class_of) = conjugacy_orbits(f, &elements);
        let classes = orbits
            .iter()
            .map(|orbit| {
                let rep = orbit[0];
                ExplicitClass {
                    representative: rep.0,
                    size: orbit.len() as u64,
                    order: rep.order(f),
                    trace_up_to_sign: rep.trace_up_to_sign(f),
                }
            })
            .collect();
        Ok(ExplicitGroup {
            order: elements.len() as u64,
            ext,
            classes,
            class_of,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.ext.base
    }

    pub fn q(&self) -> u64 {
        self.ext.base.q
    }

    pub fn class_of(&self, m: &ProjMatrix) -> usize {
        self.class_of[m.canonical(self.field()).dense_id(self.q())] as usize
    }

    /// The matrix the parametric tables use for a class.
    pub fn representative(&self, label: ClassLabel, param: Option<u64>) -> Result<ProjMatrix> {
        let f = self.field();
        let missing = || Error::MatchFailure {
            signature: format!("{label}: no parameter"),
        };
        let m = match label {
            ClassLabel::Identity => [1, 0, 0, 1],
            ClassLabel::UnipN => [1, 1, 0, 1],
            ClassLabel::UnipNPrime => {
                let eta = f.first_non_square().ok_or_else(|| Error::MatchFailure {
                    signature: format!("{label}: no non-square in GF({})", f.q),
                })?;
                [1, eta, 0, 1]
            }
            ClassLabel::Split(_) | ClassLabel::SplitHalf => {
                let a = param.ok_or_else(missing)? as i64;
                [self.ext.sigma_pow(a), 0, 0, self.ext.sigma_pow(-a)]
            }
            ClassLabel::NonSplit(_) | ClassLabel::NonSplitHalf => {
                let b = param.ok_or_else(missing)?;
                [0, 1, f.neg(1), self.ext.trace_tau0(b)]
            }
        };
        Ok(ProjMatrix::new(f, m))
    }
}

pub fn explicit_classes(q: u64) -> Result<Vec<ExplicitClass>> {
    Ok(ExplicitGroup::build(q)?.classes)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchedClass {
    pub label: ClassLabel,
    pub explicit_index: usize,
    pub size: u64,
    pub order: u64,
}

/// One entry per parametric class, in table order.
pub fn match_to_parametric(
    group: &ExplicitGroup,
    table: &CharacterTable,
) -> Result<Vec<MatchedClass>> {
    let mut used = vec![false; group.classes.len()];
    let mut out = Vec::with_capacity(table.classes.len());
    for class in &table.classes {
        let rep = group.representative(class.label, class.param)?;
        let idx = group.class_of(&rep);
        let explicit = &group.classes[idx];
        if used[idx] || explicit.size != class.size {
            return Err(Error::MatchFailure {
                signature: format!(
                    "{} (size {}, order {}, trace {} up to sign)",
                    class.label,
                    class.size,
                    rep.order(group.field()),
                    rep.trace_up_to_sign(group.field())
                ),
            });
        }
        used[idx] = true;
        out.push(MatchedClass {
            label: class.label,
            explicit_index: idx,
            size: explicit.size,
            order: explicit.order,
        });
    }
    if let Some(idx) = used.iter().position(|u| !u) {
        let c = &group.classes[idx];
        return Err(Error::MatchFailure {
            signature: format!(
                "explicit class (size {}, order {}, trace {} up to sign)",
                c.size, c.order, c.trace_up_to_sign
            ),
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityEntry {
    pub label: ClassLabel,
    /// `sum_chi |chi(g)|^2`, or `None` if it failed to be an integer.
    pub column_norm: Option<i64>,
    pub centralizer_order: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalityReport {
    pub q: u64,
    pub entries: Vec<OrthogonalityEntry>,
}

impl OrthogonalityReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

/// Checks `sum_chi |chi(g)|^2 = |G| / |g^G|` with class sizes taken from the
/// explicit group and character values from the table.
pub fn second_orthogonality_check(
    table: &CharacterTable,
    group: &ExplicitGroup,
    matching: &[MatchedClass],
) -> OrthogonalityReport {
    let n = table.params.conductor;
    let entries = matching
        .iter()
        .map(|m| {
            let j = table
                .class_index(m.label)
                .expect("matched label is in the table");
            let mut norm = Cyclotomic::zero(n);
            for chi in &table.characters {
                let v = &chi.values[j];
                norm.add_scaled_product(v, &v.conjugate(), &BigInt::from(1));
            }
            let column_norm = norm.as_integer().and_then(|v| i64::try_from(v).ok());
            let centralizer_order = group.order / group.classes[m.explicit_index].size;
            let pass = column_norm == Some(centralizer_order as i64);
            OrthogonalityEntry {
                label: m.label,
                column_norm,
                centralizer_order,
                pass,
            }
        })
        .collect();
    OrthogonalityReport {
        q: table.params.q,
        entries,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub q: u64,
    pub group_order: u64,
    pub expected_order: u64,
    pub class_count: usize,
    pub expected_class_count: usize,
    pub matching: Vec<MatchedClass>,
    pub orthogonality: OrthogonalityReport,
}

impl OracleReport {
    pub fn all_pass(&self) -> bool {
        self.group_order == self.expected_order
            && self.class_count == self.expected_class_count
            && self.orthogonality.all_pass()
    }
}

/// Builds the explicit group, matches it against `table` and runs the
/// column orthogonality check.
pub fn cross_validate(table: &CharacterTable) -> Result<OracleReport> {
    let group = ExplicitGroup::build(table.params.q)?;
    let matching = match_to_parametric(&group, table)?;
    let orthogonality = second_orthogonality_check(table, &group, &matching);
    Ok(OracleReport {
        q: table.params.q,
        group_order: group.order,
        expected_order: table.params.order,
        class_count: group.classes.len(),
        expected_class_count: table.classes.len(),
        matching,
        orthogonality,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{character_table, group_params};

    fn table(q: u64) -> CharacterTable {
        character_table(&group_params(q).unwrap())
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            build_field(49).unwrap_err(),
            Error::CapExceeded {
                q: 49,
                cap: DEFAULT_CAP
            }
        );
        assert_eq!(build_field(10).unwrap_err(), Error::NotAPrimePower(10));
    }

    #[test]
    fn half_classes() {
        let g = ExplicitGroup::build(11).unwrap();
        let m = match_to_parametric(&g, &table(11)).unwrap();
        let half: Vec<_> = m.iter().filter(|c| c.size == 55).collect();
        assert_eq!(half.len(), 1);
        assert_eq!(half[0].label, ClassLabel::NonSplitHalf);

        let g = ExplicitGroup::build(13).unwrap();
        let m = match_to_parametric(&g, &table(13)).unwrap();
        let half: Vec<_> = m.iter().filter(|c| c.size == 91).collect();
        assert_eq!(half.len(), 1);
        assert_eq!(half[0].label, ClassLabel::SplitHalf);
    }

    #[test]
    fn column_norms() {
        let r = cross_validate(&table(8)).unwrap();
        assert!(r.all_pass());
        assert_eq!(r.orthogonality.entries[0].column_norm, Some(504));
        let r = cross_validate(&table(11)).unwrap();
        let half = r
            .orthogonality
            .entries
            .iter()
            .find(|e| e.label == ClassLabel::NonSplitHalf)
            .unwrap();
        assert_eq!(half.centralizer_order, 12);
        let r = cross_validate(&table(9)).unwrap();
        let n = r
            .orthogonality
            .entries
            .iter()
            .find(|e| e.label == ClassLabel::UnipN)
            .unwrap();
        assert_eq!(n.centralizer_order, 9);
        assert!(r.all_pass());
    }
}
