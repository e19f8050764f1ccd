//! Sums of roots of unity over the split and non-split torus parameters.
//!
//! For each parity case there are two sums, one over the split classes
//! (powers of `epsilon`, a primitive `(q-1)`-th root) and one over the
//! non-split classes (powers of `eta0`, a primitive `(q+1)`-th root). Both
//! are evaluated literally ([`direct_sum`]) and in closed form
//! ([`closed_sum`]). The closed forms come from summing over a full residue
//! system: the index ranges below together with `0`, their negatives and
//! the self-inverse half class form one.
//!
//! | case  | kind      | sum                                                | closed form: `n ∤ e` / `n | e` |
//! |-------|-----------|----------------------------------------------------|-------------------------------|
//! | even  | split     | `sum_{a=1}^{q/2-1} eps^{ea} + eps^{-ea}`           | `-1` / `q - 2`                |
//! | even  | non-split | `sum_{b=1}^{q/2} eta^{eb} + eta^{-eb}`             | `-1` / `q`                    |
//! | 3 mod 4 | split   | `sum_{a=1}^{(q-3)/4}`                              | `-1` / `(q-3)/2`              |
//! | 3 mod 4 | non-split | `sum_{b=1}^{(q-3)/4}`                            | `-1 - eta^{(q+1)e/4}` / `(q-3)/2` |
//! | 1 mod 4 | split   | `sum_{a=1}^{(q-5)/4} + 2 eps^{(q-1)e/4}`           | `-1 + (-1)^{e/2}` / `(q-1)/2` |
//! | 1 mod 4 | non-split | `sum_{b=1}^{(q-1)/4}`                            | `-1` / `(q-1)/2`              |
//!
//! Here `e = t * index` and `n` is `q - 1` (split) or `q + 1` (non-split).
//! In the odd cases the index is even, so `(q+1)e/4` and `e/2` are integers.
//!
//! In the `1 mod 4` split row the half class `S((q-1)/4)` contributes the
//! extra term: on the full residue system mod `(q-1)/2` it is counted once,
//! the table value carries a factor 2, and `eps^{(q-1)e/4} = (-1)^{e/2}`.
//!
//! Two of the divisible branches are commonly quoted as `(q+1)/2`. For the
//! `3 mod 4` non-split sum the true value is `2 * (q-3)/4`: the quoted value
//! would include the half class term, which the other branch excludes. For
//! the `1 mod 4` split sum it is `2 * (q-5)/4 + 2 = (q-1)/2`. [`printed_sum`]
//! keeps the quoted values so the difference shows up in [`lemma_sweep`] as
//! a deviation, not a failure.

use serde::{Deserialize, Serialize};

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::tables::{GroupParams, ParityCase};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SumKind {
    /// Powers of `epsilon`, indexed by `k`.
    Split,
    /// Powers of `eta0`, indexed by `j`.
    NonSplit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SumSpec {
    pub params: GroupParams,
    pub kind: SumKind,
    pub t: u64,
    pub index: u64,
}

impl SumSpec {
    pub fn new(params: GroupParams, kind: SumKind, t: u64, index: u64) -> Result<Self> {
        if t == 0 {
            return Err(Error::InvalidSumSpec("t must be positive".into()));
        }
        if !legal_indices(&params, kind).contains(&index) {
            return Err(Error::InvalidSumSpec(format!(
                "index {index} is not a legal {kind:?} index for q = {}",
                params.q
            )));
        }
        Ok(SumSpec {
            params,
            kind,
            t,
            index,
        })
    }

    pub fn exponent(&self) -> u64 {
        self.t * self.index
    }
}

pub fn legal_indices(params: &GroupParams, kind: SumKind) -> Vec<u64> {
    match kind {
        SumKind::Split => params.principal_indices(),
        SumKind::NonSplit => params.discrete_indices(),
    }
}

fn root_order(params: &GroupParams, kind: SumKind) -> u64 {
    match kind {
        SumKind::Split => params.q - 1,
        SumKind::NonSplit => params.q + 1,
    }
}

fn root(params: &GroupParams, kind: SumKind, x: i64) -> Cyclotomic {
    match kind {
        SumKind::Split => params.epsilon(x),
        SumKind::NonSplit => params.eta0(x),
    }
}

/// Literal summation for exponent `e = t * index`.
pub fn direct_sum_for_exponent(params: &GroupParams, kind: SumKind, e: u64) -> Cyclotomic {
    let q = params.q;
    let n = root_order(params, kind);
    let e = (e % n) as i64;
    let upper = match (params.case, kind) {
        (ParityCase::Even, SumKind::Split) => q / 2 - 1,
        (ParityCase::Even, SumKind::NonSplit) => q / 2,
        (ParityCase::ThreeMod4, _) => (q - 3) / 4,
        (ParityCase::OneMod4, SumKind::Split) => (q - 5) / 4,
        (ParityCase::OneMod4, SumKind::NonSplit) => (q - 1) / 4,
    };
    let mut acc = Cyclotomic::zero(params.conductor);
    for a in 1..=upper as i64 {
        acc += &root(params, kind, e * a);
        acc += &root(params, kind, -e * a);
    }
    if (params.case, kind) == (ParityCase::OneMod4, SumKind::Split) {
        let half = root(params, kind, e * ((q - 1) / 4) as i64);
        acc += &(&half + &half);
    }
    acc
}

pub fn direct_sum(spec: &SumSpec) -> Cyclotomic {
    direct_sum_for_exponent(&spec.params, spec.kind, spec.exponent())
}

/// Closed form for exponent `e`; see the module table.
pub fn closed_sum_for_exponent(params: &GroupParams, kind: SumKind, e: u64) -> Cyclotomic {
    let q = params.q as i64;
    let divisible = e.is_multiple_of(root_order(params, kind));
    let int = |v: i64| params.int(v);
    match (params.case, kind, divisible) {
        (ParityCase::Even, SumKind::Split, true) => int(q - 2),
        (ParityCase::Even, SumKind::NonSplit, true) => int(q),
        (ParityCase::ThreeMod4, _, true) => int((q - 3) / 2),
        (ParityCase::ThreeMod4, SumKind::NonSplit, false) => {
            let tail = params.eta0(((params.q + 1) / 4 * e) as i64);
            &int(-1) - &tail
        }
        (ParityCase::OneMod4, SumKind::Split, true) => int((q - 1) / 2),
        (ParityCase::OneMod4, SumKind::Split, false) => {
            int(if (e / 2).is_multiple_of(2) { 0 } else { -2 })
        }
        (ParityCase::OneMod4, SumKind::NonSplit, true) => int((q - 1) / 2),
        (_, _, false) => int(-1),
    }
}

pub fn closed_sum(spec: &SumSpec) -> Cyclotomic {
    closed_sum_for_exponent(&spec.params, spec.kind, spec.exponent())
}

/// The closed form as usually quoted. Differs from [`closed_sum`] only in
/// the two divisible branches named in the module docs.
pub fn printed_sum(spec: &SumSpec) -> Cyclotomic {
    let p = &spec.params;
    let quoted = match (p.case, spec.kind) {
        (ParityCase::ThreeMod4, SumKind::NonSplit) => p.q + 1,
        (ParityCase::OneMod4, SumKind::Split) => p.q - 1,
        _ => return closed_sum(spec),
    };
    if spec.exponent().is_multiple_of(quoted) {
        p.int(p.q.div_ceil(2) as i64)
    } else {
        closed_sum(spec)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumDisagreement {
    pub kind: SumKind,
    pub t: u64,
    pub index: u64,
    pub expected: String,
    pub direct: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaSweepReport {
    pub q: u64,
    pub checked: usize,
    /// `closed_sum != direct_sum`: a bug.
    pub counterexamples: Vec<SumDisagreement>,
    /// `printed_sum != direct_sum`: a misquoted closed form.
    pub printed_deviations: Vec<SumDisagreement>,
}

pub fn lemma_sweep(
    params: &GroupParams,
    t_range: std::ops::RangeInclusive<u64>,
) -> LemmaSweepReport {
    let mut report = LemmaSweepReport {
        q: params.q,
        checked: 0,
        counterexamples: Vec::new(),
        printed_deviations: Vec::new(),
    };
    for kind in [SumKind::Split, SumKind::NonSplit] {
        for index in legal_indices(params, kind) {
            for t in t_range.clone() {
                let spec = SumSpec {
                    params: *params,
                    kind,
                    t,
                    index,
                };
                let direct = direct_sum(&spec);
                let closed = closed_sum(&spec);
                report.checked += 1;
                let disagreement = |expected: &Cyclotomic| SumDisagreement {
                    kind,
                    t,
                    index,
                    expected: expected.to_string(),
                    direct: direct.to_string(),
                };
                if closed != direct {
                    report.counterexamples.push(disagreement(&closed));
                }
                let printed = printed_sum(&spec);
                if printed != direct {
                    report.printed_deviations.push(disagreement(&printed));
                }
            }
        }
    }
    report
}
