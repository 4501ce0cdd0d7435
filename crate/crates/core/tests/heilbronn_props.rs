use std::sync::{Arc, OnceLock};

use artinchar::corpus;
use artinchar::heilbronn::{
    aramata_brauer, foote_murty_gap, gap_not_one_check, level_inequality, stark_lemma_check,
    uvdw_gap, HeilbronnData, Mode, OrderAssignment,
};
use proptest::prelude::*;

fn data() -> &'static [Arc<HeilbronnData>] {
    static CELL: OnceLock<Vec<Arc<HeilbronnData>>> = OnceLock::new();
    CELL.get_or_init(|| {
        [
            corpus::symmetric(3),
            corpus::cyclic(4),
            corpus::quaternion(),
            corpus::dihedral(4),
            corpus::alternating(4),
        ]
        .iter()
        .map(|g| HeilbronnData::new(g).unwrap())
        .collect()
    })
}

fn assignment() -> impl Strategy<Value = (usize, Vec<i64>)> {
    (0..data().len()).prop_flat_map(|i| {
        (
            Just(i),
            prop::collection::vec(-3i64..=4, data()[i].table.len()),
        )
    })
}

fn assign(i: usize, base: Vec<i64>, mode: Mode) -> OrderAssignment {
    OrderAssignment::with_data(data()[i].clone(), base, mode).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2048))]

    #[test]
    fn arithmetic_implies_weak((i, base) in assignment()) {
        let a = assign(i, base, Mode::Arithmetic);
        prop_assert!(!a.ach3 || a.weak);
    }

    #[test]
    fn admissible_sets_are_cones((i, x) in assignment(), y in prop::collection::vec(-3i64..=4, 8), k in 1i64..5) {
        let y: Vec<i64> = y.into_iter().take(x.len()).collect();
        let (a, b) = (assign(i, x.clone(), Mode::Weak), assign(i, y.clone(), Mode::Weak));
        let scaled = assign(i, x.iter().map(|v| k * v).collect(), Mode::Weak);
        prop_assert_eq!(scaled.weak, a.weak);
        prop_assert_eq!(scaled.ach3, a.ach3);
        let sum = assign(i, x.iter().zip(&y).map(|(p, q)| p + q).collect(), Mode::Weak);
        prop_assert!(!(a.weak && b.weak) || sum.weak);
        prop_assert!(!(a.ach3 && b.ach3) || sum.ach3);
    }

    #[test]
    fn weak_inequalities_hold((i, base) in assignment()) {
        let a = assign(i, base, Mode::Weak);
        if !a.weak {
            return Ok(());
        }
        prop_assert!(foote_murty_gap(&a).holds);
        prop_assert!(aramata_brauer(&a).holds);
        prop_assert!(stark_lemma_check(&a).holds);
    }

    #[test]
    fn arithmetic_inequalities_hold((i, base) in assignment()) {
        let a = assign(i, base, Mode::Arithmetic);
        if !a.ach3 {
            return Ok(());
        }
        let d = &data()[i];
        for h in &d.subgroups {
            prop_assert!(uvdw_gap(&a, h).unwrap() >= 0);
        }
        let len = d.derived_length();
        for level in 1..=len {
            prop_assert!(level_inequality(&a, level).unwrap().holds);
            let gap = gap_not_one_check(&a, level).unwrap();
            prop_assert!(gap.not_one && gap.divisible);
        }
    }
}

#[test]
fn the_zero_assignment_is_admissible_everywhere() {
    for (i, d) in data().iter().enumerate() {
        let a = assign(i, vec![0; d.table.len()], Mode::Arithmetic);
        assert!(a.weak && a.ach3);
        assert_eq!(a.n_reg(), 0);
    }
}
