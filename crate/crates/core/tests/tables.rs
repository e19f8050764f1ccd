use psl2cov_core::numtheory::prime_power;
use psl2cov_core::tables::{center_classes, character_table, group_params, ClassLabel, ParityCase};

fn prime_powers(lo: u64, hi: u64) -> impl Iterator<Item = u64> {
    (lo..=hi).filter(|&q| prime_power(q).is_some())
}

#[test]
fn tables_are_valid_up_to_101() {
    for q in prime_powers(4, 101) {
        let table = character_table(&group_params(q).unwrap());
        let v = table.validate();
        assert!(v.all_pass(), "q = {q}: {:?}", v.failures);
        let expected = match table.params.case {
            ParityCase::Even => q + 1,
            _ => (q + 5) / 2,
        };
        assert_eq!(table.classes.len() as u64, expected, "q = {q}");
        assert_eq!(table.characters.len(), table.classes.len());
        let sizes: u64 = table.classes.iter().map(|c| c.size).sum();
        assert_eq!(sizes, table.params.order);
    }
}

#[test]
fn nontrivial_characters_have_trivial_center() {
    for q in prime_powers(4, 49) {
        let table = character_table(&group_params(q).unwrap());
        for chi in table.characters.iter().filter(|c| !c.label.is_trivial()) {
            assert_eq!(
                center_classes(chi, &table),
                vec![ClassLabel::Identity],
                "q = {q}, {}",
                chi.label
            );
        }
    }
}
