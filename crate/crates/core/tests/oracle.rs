use psl2cov_core::oracle::{cross_validate, ExplicitGroup};
use psl2cov_core::tables::{character_table, group_params, ClassLabel};

#[test]
fn explicit_groups_match_parametric_tables() {
    for q in [4, 5, 7, 8, 9, 11, 13, 16, 25, 27] {
        let table = character_table(&group_params(q).unwrap());
        let report = cross_validate(&table).unwrap();
        assert!(report.all_pass(), "q = {q}: {report:?}");
        let mut explicit: Vec<u64> = report.matching.iter().map(|m| m.size).collect();
        let mut parametric: Vec<u64> = table.classes.iter().map(|c| c.size).collect();
        explicit.sort();
        parametric.sort();
        assert_eq!(explicit, parametric);
    }
}

#[test]
fn element_orders_follow_class_type() {
    for q in [7u64, 8, 9, 13, 16] {
        let table = character_table(&group_params(q).unwrap());
        let report = cross_validate(&table).unwrap();
        let d = if q % 2 == 0 { 1 } else { 2 };
        let p = group_params(q).unwrap().p;
        for m in &report.matching {
            match m.label {
                ClassLabel::Identity => assert_eq!(m.order, 1),
                ClassLabel::UnipN | ClassLabel::UnipNPrime => assert_eq!(m.order, p),
                ClassLabel::Split(_) | ClassLabel::SplitHalf => {
                    assert_eq!((q - 1) / d % m.order, 0)
                }
                ClassLabel::NonSplit(_) | ClassLabel::NonSplitHalf => {
                    assert_eq!((q + 1) / d % m.order, 0)
                }
            }
        }
    }
}

#[test]
fn explicit_group_of_order_32_fits_under_the_cap() {
    let g = ExplicitGroup::build(32).unwrap();
    assert_eq!(g.order, 32736);
    assert_eq!(g.classes.len(), 33);
}
