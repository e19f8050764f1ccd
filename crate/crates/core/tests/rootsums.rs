use psl2cov_core::numtheory::prime_power;
use psl2cov_core::rootsums::{
    direct_sum, direct_sum_for_exponent, legal_indices, lemma_sweep, SumKind, SumSpec,
};
use psl2cov_core::tables::group_params;

fn params() -> impl Iterator<Item = psl2cov_core::tables::GroupParams> {
    (4..=64u64)
        .filter(|&q| prime_power(q).is_some())
        .map(|q| group_params(q).unwrap())
}

#[test]
fn closed_forms_agree_with_direct_sums() {
    for p in params() {
        let r = lemma_sweep(&p, 1..=12);
        assert!(r.checked > 0);
        assert!(
            r.counterexamples.is_empty(),
            "q = {}: {:?}",
            p.q,
            r.counterexamples
        );
    }
}

#[test]
fn sums_are_real() {
    for p in params() {
        for kind in [SumKind::Split, SumKind::NonSplit] {
            for index in legal_indices(&p, kind) {
                for t in 1..=4 {
                    let s = direct_sum(&SumSpec::new(p, kind, t, index).unwrap());
                    assert_eq!(s.conjugate(), s, "q = {}", p.q);
                }
            }
        }
    }
}

#[test]
fn sums_are_periodic() {
    for p in params() {
        for (kind, n) in [(SumKind::Split, p.q - 1), (SumKind::NonSplit, p.q + 1)] {
            for index in legal_indices(&p, kind) {
                for t in 1..=4 {
                    let e = t * index;
                    assert_eq!(
                        direct_sum_for_exponent(&p, kind, e),
                        direct_sum_for_exponent(&p, kind, e + n),
                        "q = {}, {kind:?}, e = {e}",
                        p.q
                    );
                }
            }
        }
    }
}

#[test]
fn printed_deviations_are_confined_to_divisible_branches() {
    for p in params() {
        for d in lemma_sweep(&p, 1..=12).printed_deviations {
            let n = match d.kind {
                SumKind::Split => p.q - 1,
                SumKind::NonSplit => p.q + 1,
            };
            assert_eq!((d.t * d.index) % n, 0, "q = {}: {d:?}", p.q);
        }
    }
}
