use artinchar::certify::{
    artin_takagi, certify_level, certify_quotient_uvdw, certify_relative, certify_rr2,
    dedekind_symbol, FormalLSymbol, Status,
};
use artinchar::chartab::character_table;
use artinchar::{corpus, ClassFunction, Group};

fn solvable_groups() -> Vec<Group> {
    corpus::standard()
        .into_iter()
        .filter(|g| g.order() <= 24 && g.is_solvable())
        .collect()
}

#[test]
fn symbols_are_additive() {
    for g in corpus::standard().into_iter().filter(|g| g.order() <= 24) {
        let t = character_table(&g).unwrap();
        let irr: Vec<ClassFunction> = t
            .irreducibles()
            .iter()
            .map(|c| c.rehome(&g).unwrap())
            .collect();
        for a in &irr {
            for b in &irr {
                let sum = FormalLSymbol::of_class_function(&a.add(b).unwrap()).unwrap();
                let prod = FormalLSymbol::of_class_function(a)
                    .unwrap()
                    .mul(&FormalLSymbol::of_class_function(b).unwrap())
                    .unwrap();
                assert_eq!(sum, prod);
                assert!(prod.div(&prod).unwrap().is_one());
            }
        }
        let regular = FormalLSymbol::of_class_function(&ClassFunction::regular(&g)).unwrap();
        assert_eq!(artin_takagi(&g).unwrap(), regular);
        assert_eq!(
            dedekind_symbol(&g, &g.subgroup(vec![]).unwrap()).unwrap(),
            regular
        );
    }
}

#[test]
fn quotients_of_dedekind_symbols_are_entire() {
    for g in solvable_groups() {
        let subs = g.subgroups().unwrap();
        for h in &subs {
            let c = certify_quotient_uvdw(&g, h).unwrap();
            c.verify().unwrap();
            assert_eq!(c.status, Status::Entire, "{} / {}", g.name(), h.order());
            for h2 in subs.iter().filter(|k| h.is_subgroup_of(k)) {
                let r = certify_relative(&g, h, h2).unwrap();
                r.verify().unwrap();
            }
        }
    }
}

#[test]
fn linear_twists_are_certified() {
    for g in solvable_groups().into_iter().filter(|g| g.order() <= 12) {
        for h in g.subgroups().unwrap() {
            let th = character_table(&h).unwrap();
            for j in th.linear_indices() {
                let psi = th.irr(j).rehome(&h).unwrap();
                certify_rr2(&g, &h, &psi).unwrap().verify().unwrap();
                for i in 1..=g.derived_length().unwrap() {
                    certify_level(&g, &h, &psi, i).unwrap().verify().unwrap();
                }
            }
        }
    }
}
