use psl2cov_core::covering::{
    compare_claims, covering_exponents, decompose, inner_product, pointwise_power, stated_claims,
    ClaimOutcome, ClassFunction, DEFAULT_TMAX,
};
use psl2cov_core::numtheory::prime_power;
use psl2cov_core::tables::{character_table, group_params, CharacterTable};

fn tables(hi: u64) -> impl Iterator<Item = CharacterTable> {
    (4..=hi)
        .filter(|&q| prime_power(q).is_some())
        .map(|q| character_table(&group_params(q).unwrap()))
}

#[test]
fn covering_is_monotone() {
    for table in tables(49) {
        for chi in table.characters.iter().filter(|c| !c.label.is_trivial()) {
            let mut complete = false;
            let mut power = ClassFunction::of_character(&table, chi);
            for t in 1..=DEFAULT_TMAX {
                if t > 1 {
                    power = power.times(&chi.values);
                }
                let now = decompose(&power).unwrap().is_complete(&table);
                assert!(
                    !complete || now,
                    "q = {}, {} loses coverage at t = {t}",
                    table.params.q,
                    chi.label
                );
                complete |= now;
            }
        }
    }
}

#[test]
fn union_exponent_never_exceeds_power_exponent() {
    for table in tables(49) {
        for chi in table.characters.iter().filter(|c| !c.label.is_trivial()) {
            let (e, t) = covering_exponents(&table, chi, DEFAULT_TMAX).unwrap();
            assert!(t <= e, "q = {}, {}", table.params.q, chi.label);
        }
    }
}

#[test]
fn multiplicities_account_for_the_degree() {
    for table in tables(32) {
        for chi in &table.characters {
            for t in 1..=3 {
                let d = decompose(&pointwise_power(&table, chi, t)).unwrap();
                assert_eq!(d.degree(&table), chi.values[0].as_integer().unwrap().pow(t));
            }
        }
    }
}

#[test]
fn inner_products_are_adjoint() {
    for table in tables(27) {
        let chars = &table.characters;
        let n = chars.len();
        for (i, chi) in chars.iter().enumerate() {
            let psi = &chars[(3 * i + 1) % n];
            let phi = &chars[(5 * i + 2) % n];
            let lhs = inner_product(
                &ClassFunction::of_character(&table, chi).times(&psi.values),
                phi,
            )
            .unwrap();
            let phi_psi_bar = ClassFunction::of_character(&table, phi).times(
                ClassFunction::of_character(&table, psi)
                    .conjugate()
                    .values(),
            );
            let rhs = inner_product(&phi_psi_bar, chi).unwrap();
            assert_eq!(lhs, rhs, "q = {}", table.params.q);
        }
    }
}

#[test]
fn claims_are_reported_with_both_values() {
    for table in tables(49) {
        let findings = compare_claims(&table, &stated_claims(&table.params)).unwrap();
        assert!(!findings.is_empty());
        for f in findings {
            match f.result {
                ClaimOutcome::Match => assert_eq!(f.computed, Some(f.claim.claimed as u64)),
                ClaimOutcome::Mismatch { claimed, computed } => {
                    assert_eq!(claimed, f.claim.claimed);
                    assert_eq!(Some(computed), f.computed);
                    assert_ne!(claimed as u64, computed);
                }
                ClaimOutcome::NotApplicable { .. } => {}
            }
        }
    }
}
