use std::sync::OnceLock;

use artinchar::chartab::character_table;
use artinchar::classfun::VirtualCharacter;
use artinchar::{corpus, ClassFunction, Group, Rational};
use proptest::prelude::*;

struct Fixture {
    group: Group,
    subgroups: Vec<Group>,
}

fn fixtures() -> &'static [Fixture] {
    static CELL: OnceLock<Vec<Fixture>> = OnceLock::new();
    CELL.get_or_init(|| {
        corpus::standard()
            .into_iter()
            .filter(|g| g.order() <= 24)
            .map(|g| Fixture {
                subgroups: g.subgroups().unwrap(),
                group: g,
            })
            .collect()
    })
}

fn virtual_on(g: &Group, coeffs: &[i64]) -> ClassFunction {
    let t = character_table(g).unwrap();
    let v: Vec<i64> = (0..t.len()).map(|i| coeffs[i % coeffs.len()]).collect();
    VirtualCharacter::from_ints(&v)
        .to_class_function(&t)
        .rehome(g)
        .unwrap()
}

fn case() -> impl Strategy<Value = (usize, usize, Vec<i64>, Vec<i64>)> {
    (
        0..fixtures().len(),
        any::<prop::sample::Index>(),
        prop::collection::vec(-3i64..=3, 1..8),
        prop::collection::vec(-3i64..=3, 1..8),
    )
        .prop_map(|(g, h, a, b)| (g, h.index(fixtures()[g].subgroups.len()), a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn frobenius_reciprocity((gi, hi, a, b) in case()) {
        let f = &fixtures()[gi];
        let h = &f.subgroups[hi];
        let psi = virtual_on(h, &a);
        let chi = virtual_on(&f.group, &b);
        prop_assert_eq!(
            psi.induce(&f.group).unwrap().inner_product(&chi).unwrap(),
            psi.inner_product(&chi.restrict(h).unwrap()).unwrap()
        );
    }

    #[test]
    fn induction_commutes_with_twisting((gi, hi, a, b) in case()) {
        let f = &fixtures()[gi];
        let h = &f.subgroups[hi];
        let psi = virtual_on(h, &a);
        let chi = virtual_on(&f.group, &b);
        let lhs = psi.twist(&chi.restrict(h).unwrap()).unwrap().induce(&f.group).unwrap();
        let rhs = psi.induce(&f.group).unwrap().twist(&chi).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn induction_is_additive_and_scales_degree((gi, hi, a, b) in case()) {
        let f = &fixtures()[gi];
        let h = &f.subgroups[hi];
        let (x, y) = (virtual_on(h, &a), virtual_on(h, &b));
        let sum = x.add(&y).unwrap().induce(&f.group).unwrap();
        prop_assert_eq!(sum, x.induce(&f.group).unwrap().add(&y.induce(&f.group).unwrap()).unwrap());
        let index = (f.group.order() / h.order()) as i64;
        prop_assert_eq!(x.induce(&f.group).unwrap().degree().clone(), x.degree().scale(&Rational::from_integer(index.into())));
    }

    #[test]
    fn decomposition_round_trips((gi, _hi, a, _b) in case()) {
        let g = &fixtures()[gi].group;
        let t = character_table(g).unwrap();
        let chi = virtual_on(g, &a);
        let v = chi.decompose(&t).unwrap();
        prop_assert_eq!(v.to_class_function(&t).rehome(g).unwrap(), chi);
    }
}

#[test]
fn restriction_is_transitive() {
    for f in fixtures() {
        for k in &f.subgroups {
            let chi = virtual_on(&f.group, &[1, -2, 3]);
            for h in f.subgroups.iter().filter(|h| h.is_subgroup_of(k)) {
                let via_k = chi.restrict(k).unwrap().restrict(h).unwrap();
                assert_eq!(via_k, chi.restrict(h).unwrap(), "{}", f.group.name());
            }
        }
    }
}

#[test]
fn irreducible_norms_and_centre() {
    for f in fixtures() {
        let t = character_table(&f.group).unwrap();
        t.verify_central_characters().unwrap();
        for chi in t.irreducibles() {
            assert_eq!(
                chi.inner_rational(chi).unwrap(),
                Rational::from_integer(1.into())
            );
        }
    }
}
