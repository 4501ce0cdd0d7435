//! Acceptance gate: one line per criterion, exact arithmetic throughout.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::sync::Arc;
use std::time::{Duration, Instant};

use artinchar::chartab::character_table;
use artinchar::classfun::{mackey_check, VirtualCharacter};
use artinchar::heilbronn::{
    huppert_predicts_m_group, search_admissible, stark_lemma_check, HeilbronnData, Mode,
    OrderAssignment,
};
use artinchar::monomial::{
    cone_membership, decompose_uvdw, dual_check, is_m_group, monomial_family,
};
use artinchar::par::Strategy;
use artinchar::supercharacter::{
    enumerate_scts, hendrickson_product, super_frobenius_check, theorem_lo_check, verify_sct,
    SupercharacterTheory,
};
use artinchar::{corpus, ClassFunction, Error, Group, Perm, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = Result<String, String>;
type Partition = Vec<Vec<usize>>;
type Criterion = (&'static str, fn() -> Verdict);

fn check(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    check(
        took < limit,
        format!("{what} took {took:?}, limit {limit:?}"),
    )
}

fn solvable_upto(n: usize) -> Vec<Group> {
    corpus::standard()
        .into_iter()
        .filter(|g| g.order() <= n && g.is_solvable())
        .collect()
}

fn c1_tables() -> Verdict {
    let start = Instant::now();
    let groups = corpus::standard();
    for g in &groups {
        let t = character_table(g).map_err(e2s)?;
        t.verify().map_err(|e| format!("{}: {e}", g.name()))?;
        let degs = t.degrees();
        check(
            degs.iter().map(|d| d * d).sum::<i64>() == g.order() as i64,
            format!("{}: degree sum", g.name()),
        )?;
        check(
            degs.iter().all(|d| g.order() as i64 % d == 0),
            format!("{}: divisibility", g.name()),
        )?;
        let gram_ok = t.irreducibles().iter().enumerate().all(|(i, a)| {
            t.irreducibles().iter().enumerate().all(|(j, b)| {
                a.inner_rational(b).unwrap() == Rational::from_integer(((i == j) as i64).into())
            })
        });
        check(gram_ok, format!("{}: row orthogonality", g.name()))?;
    }
    within(start, Duration::from_secs(60), "corpus tables")?;
    Ok(format!("{} groups", groups.len()))
}

fn c2_frobenius_mackey() -> Verdict {
    let mut checks = 0usize;
    for g in corpus::standard().into_iter().filter(|g| g.order() <= 24) {
        let tg = character_table(&g).map_err(e2s)?;
        let irr_g: Vec<ClassFunction> = tg
            .irreducibles()
            .iter()
            .map(|c| c.rehome(&g).unwrap())
            .collect();
        let subs = g.subgroups().map_err(e2s)?;
        for h in &subs {
            let th = character_table(h).map_err(e2s)?;
            for phi in th.irreducibles() {
                let phi = phi.rehome(h).map_err(e2s)?;
                let ind = phi.induce(&g).map_err(e2s)?;
                for chi in &irr_g {
                    let lhs = ind.inner_product(chi).map_err(e2s)?;
                    let rhs = phi
                        .inner_product(&chi.restrict(h).map_err(e2s)?)
                        .map_err(e2s)?;
                    check(
                        lhs == rhs,
                        format!("{}: Frobenius reciprocity fails", g.name()),
                    )?;
                    checks += 1;
                }
                for k in &subs {
                    let r = mackey_check(&phi, k, &g).map_err(e2s)?;
                    check(r.holds, format!("{}: Mackey fails", g.name()))?;
                    checks += 1;
                }
            }
        }
    }
    Ok(format!("{checks} identities"))
}

fn c3_uvdw() -> Verdict {
    let mut n = 0usize;
    let one = Rational::from_integer(1.into());
    for g in solvable_upto(24) {
        for h in g.subgroups().map_err(e2s)? {
            let d = decompose_uvdw(&g, &h).map_err(|e| format!("{}: {e}", g.name()))?;
            d.verify().map_err(e2s)?;
            check(
                d.residual_trivial_coeff == one,
                format!("{}: 1_G coefficient", g.name()),
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} certificates"))
}

fn c4_levels() -> Verdict {
    let (mut n, mut weighted) = (0usize, 0usize);
    let mut failures = Vec::new();
    for g in corpus::standard().into_iter().filter(|g| g.is_solvable()) {
        let t = character_table(&g).map_err(e2s)?;
        let series = g.derived_series();
        let levels: Vec<usize> = t
            .irreducibles()
            .iter()
            .map(|c| c.rehome(&g).unwrap().level(&series).unwrap())
            .collect();
        for (i, gi) in series.iter().enumerate() {
            let lhs = ClassFunction::trivial(gi).induce(&g).map_err(e2s)?;
            let mut plain = ClassFunction::zero(&g);
            let mut by_degree = ClassFunction::zero(&g);
            for (c, &l) in levels.iter().enumerate() {
                if l <= i {
                    let chi = t.irr(c).rehome(&g).map_err(e2s)?;
                    plain = plain.add(&chi).map_err(e2s)?;
                    by_degree = by_degree.add(&chi.scale_int(t.degrees()[c])).map_err(e2s)?;
                }
            }
            n += 1;
            weighted += (lhs == by_degree) as usize;
            if lhs != plain {
                failures.push(format!("{} i={i}", g.name()));
            }
        }
    }
    if failures.is_empty() {
        Ok(format!("{n} identities"))
    } else {
        Err(format!(
            "unweighted sum differs from Ind 1 in {} of {n} cases ({}); weighted sum of chi(1) chi matches in {weighted} of {n}",
            failures.len(),
            failures.join(", ")
        ))
    }
}

fn searches() -> Vec<(Group, i64)> {
    vec![
        (corpus::symmetric(3), 3),
        (corpus::cyclic(4), 2),
        (corpus::quaternion(), 2),
    ]
}

fn c5_search() -> Verdict {
    let start = Instant::now();
    let mut parts = Vec::new();
    for (g, bound) in searches() {
        let t = character_table(&g).map_err(e2s)?;
        let weak = search_admissible(&t, bound, Mode::Weak, Strategy::Parallel).map_err(e2s)?;
        let fm = weak.check("foote_murty").ok_or("missing foote_murty")?;
        check(
            fm.evaluated == weak.admissible && fm.violations == 0,
            format!("{}: Foote-Murty", g.name()),
        )?;
        check(
            weak.total_violations == 0,
            format!("{}: weak violations", g.name()),
        )?;
        let arith =
            search_admissible(&t, bound, Mode::Arithmetic, Strategy::Parallel).map_err(e2s)?;
        for name in ["truncated", "uvdw_gap", "gap_not_one"] {
            let c = arith.check(name).ok_or(format!("missing {name}"))?;
            check(
                c.evaluated > 0 && c.violations == 0,
                format!("{}: {name}", g.name()),
            )?;
        }
        check(
            arith.total_violations == 0,
            format!("{}: arithmetic violations", g.name()),
        )?;
        if g.order() == 6 {
            check(weak.candidates == 343, "S3 candidate count")?;
        }
        parts.push(format!(
            "{} {}/{}",
            g.name(),
            weak.admissible,
            arith.admissible
        ));
    }
    within(start, Duration::from_secs(120), "searches")?;
    Ok(parts.join(", "))
}

fn all_bases(k: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|v| {
                (-bound..=bound).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn c6_stark() -> Verdict {
    let mut applicable = 0usize;
    for (g, bound) in searches() {
        let data = HeilbronnData::new(&g).map_err(e2s)?;
        for mode in [Mode::Weak, Mode::Arithmetic] {
            let t = character_table(&g).map_err(e2s)?;
            let r = search_admissible(&t, bound, mode, Strategy::Sequential).map_err(e2s)?;
            check(
                r.check("stark_lemma").is_some_and(|c| c.violations == 0),
                "stark_lemma tally",
            )?;
            for base in all_bases(data.table.len(), bound) {
                let a =
                    OrderAssignment::with_data(data.clone(), base.clone(), mode).map_err(e2s)?;
                if !a.admissible() || a.n_reg() > 1 {
                    continue;
                }
                applicable += 1;
                check(
                    base.iter().all(|&x| x >= 0),
                    format!("{}: negative value in {base:?}", g.name()),
                )?;
                if a.n_reg() == 1 {
                    let support: Vec<usize> = (0..base.len()).filter(|&c| base[c] != 0).collect();
                    check(
                        support.len() == 1
                            && base[support[0]] == 1
                            && data.degrees[support[0]] == 1,
                        format!("{}: not concentrated in {base:?}", g.name()),
                    )?;
                }
                check(stark_lemma_check(&a).holds, "stark_lemma_check")?;
            }
        }
    }
    Ok(format!("{applicable} applicable assignments"))
}

/// Set partitions of `0..n` as restricted growth strings.
fn rgs_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut a = vec![0usize; n];
    loop {
        let blocks = a.iter().copied().max().map_or(0, |m| m + 1);
        out.push(
            (0..blocks)
                .map(|b| (0..n).filter(|&i| a[i] == b).collect())
                .collect(),
        );
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let m = a[..i].iter().copied().max().unwrap_or(0);
            if a[i] <= m {
                a[i] += 1;
                for x in &mut a[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Every `(X, K)` with `K` ranging over partitions of the elements.
fn brute_force_scts(g: &Group) -> BTreeSet<(Partition, Partition)> {
    let t = character_table(g).unwrap();
    let r = t.len();
    let degs: Vec<artinchar::Cyclotomic> = t
        .irreducibles()
        .iter()
        .map(|c| c.degree().clone())
        .collect();
    let value = |chi: usize, e: usize| t.irr(chi).value(g.class_of(e)).clone();
    let rest: Vec<usize> = (1..g.order()).collect();
    let mut out = BTreeSet::new();
    let x_parts = rgs_partitions(r);
    for kp in rgs_partitions(rest.len()) {
        let mut k: Vec<Vec<usize>> = vec![vec![0]];
        k.extend(
            kp.iter()
                .map(|b| b.iter().map(|&i| rest[i]).collect::<Vec<_>>()),
        );
        for x in x_parts.iter().filter(|x| x.len() == k.len()) {
            let constant = x.iter().all(|part| {
                let sigma = |e: usize| {
                    part.iter().fold(artinchar::Cyclotomic::zero(), |acc, &c| {
                        &acc + &(&degs[c] * &value(c, e))
                    })
                };
                k.iter()
                    .all(|block| block.iter().all(|&e| sigma(e) == sigma(block[0])))
            });
            if constant {
                let mut xs = x.clone();
                xs.sort();
                let mut ks = k.clone();
                ks.iter_mut().for_each(|b| b.sort());
                ks.sort();
                out.insert((xs, ks));
            }
        }
    }
    out
}

fn c7_scts() -> Verdict {
    let start = Instant::now();
    let mut total = 0usize;
    for g in [
        corpus::cyclic(2),
        corpus::cyclic(3),
        corpus::cyclic(4),
        corpus::cyclic(5),
        corpus::symmetric(3),
    ] {
        let found: BTreeSet<_> = enumerate_scts(&g, Strategy::Parallel)
            .map_err(e2s)?
            .iter()
            .map(|th| {
                let mut xs = th.x().to_vec();
                xs.sort();
                let mut ks = th.k_elements();
                ks.iter_mut().for_each(|b| b.sort());
                ks.sort();
                (xs, ks)
            })
            .collect();
        check(
            found == brute_force_scts(&g),
            format!("{}: enumeration differs from oracle", g.name()),
        )?;
        total += found.len();
    }
    let mut pairs = 0usize;
    for g in corpus::standard()
        .into_iter()
        .filter(|g| g.num_classes() <= 8 && g.order() <= 24)
    {
        let all = enumerate_scts(&g, Strategy::Parallel).map_err(e2s)?;
        let classical = SupercharacterTheory::classical(&g).map_err(e2s)?;
        let max = SupercharacterTheory::max(&g).map_err(e2s)?;
        check(
            all.iter().any(|t| t.same_as(&classical)),
            format!("{}: classical missing", g.name()),
        )?;
        check(
            all.iter().any(|t| t.same_as(&max)),
            format!("{}: max missing", g.name()),
        )?;
        for th in &all {
            let f = th.to_file();
            check(
                verify_sct(&g, &f.x, &f.k).map_err(e2s)?.valid,
                format!("{}: invalid theory", g.name()),
            )?;
        }
        let all: Vec<Arc<SupercharacterTheory>> = all.into_iter().map(Arc::new).collect();
        for h in g.subgroups().map_err(e2s)? {
            if h.num_classes() > 8 {
                continue;
            }
            for th_h in enumerate_scts(&h, Strategy::Parallel)
                .map_err(e2s)?
                .into_iter()
                .map(Arc::new)
            {
                for th_g in &all {
                    if artinchar::supercharacter::compatible(&th_h, th_g).map_err(e2s)? {
                        check(
                            super_frobenius_check(&th_h, th_g).map_err(e2s)?,
                            format!("{}: super Frobenius reciprocity", g.name()),
                        )?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    within(start, Duration::from_secs(60), "supercharacter checks")?;
    Ok(format!(
        "{total} theories match the oracle, {pairs} compatible pairs"
    ))
}

fn c8_lo_bound() -> Verdict {
    let g = corpus::symmetric(3);
    let data = HeilbronnData::new(&g).map_err(e2s)?;
    let theories = enumerate_scts(&g, Strategy::Sequential).map_err(e2s)?;
    let mut n = 0usize;
    for base in all_bases(3, 3) {
        let a = OrderAssignment::with_data(data.clone(), base, Mode::Weak).map_err(e2s)?;
        if !a.weak {
            continue;
        }
        for th in &theories {
            let r = theorem_lo_check(&a, th).map_err(e2s)?;
            check(
                r.holds && r.degree_identity,
                format!("bound fails for {:?}", a.base),
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} (assignment, theory) pairs"))
}

fn c9_products() -> Verdict {
    let s3 = corpus::symmetric(3);
    let a3 = s3.commutator_subgroup();
    let q = s3.quotient(&a3).map_err(e2s)?;
    let p1 = hendrickson_product(
        &s3,
        &SupercharacterTheory::max(&a3).map_err(e2s)?,
        &SupercharacterTheory::classical(&q.group).map_err(e2s)?,
        &q,
    )
    .map_err(e2s)?;
    let f = p1.to_file();
    check(
        verify_sct(&s3, &f.x, &f.k).map_err(e2s)?.valid,
        "S3 product invalid",
    )?;
    let s4 = corpus::symmetric(4);
    let v4 = s4
        .subgroup(vec![
            Perm::from_images(vec![1, 0, 3, 2]).unwrap(),
            Perm::from_images(vec![2, 3, 0, 1]).unwrap(),
        ])
        .map_err(e2s)?;
    let q4 = s4.quotient(&v4).map_err(e2s)?;
    let p2 = hendrickson_product(
        &s4,
        &SupercharacterTheory::max(&v4).map_err(e2s)?,
        &SupercharacterTheory::classical(&q4.group).map_err(e2s)?,
        &q4,
    )
    .map_err(e2s)?;
    let f = p2.to_file();
    check(
        verify_sct(&s4, &f.x, &f.k).map_err(e2s)?.valid,
        "S4 product invalid",
    )?;
    let rejected = hendrickson_product(
        &s3,
        &SupercharacterTheory::classical(&a3).map_err(e2s)?,
        &SupercharacterTheory::classical(&q.group).map_err(e2s)?,
        &q,
    );
    check(
        matches!(rejected, Err(Error::NotGInvariant)),
        "classical theory on A3 accepted",
    )?;
    Ok(format!(
        "S3 product {} parts, S4 product {} parts",
        p1.len(),
        p2.len()
    ))
}

fn c10_cone() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(20261016);
    let mut random_checked = 0usize;
    let groups = corpus::standard();
    for g in &groups {
        let t = character_table(g).map_err(e2s)?;
        let fam = monomial_family(g, Strategy::Parallel).map_err(e2s)?;
        let mut d = t.degrees();
        d[0] -= 1;
        let psi = VirtualCharacter::from_ints(&d);
        match cone_membership(&psi, &fam).map_err(e2s)? {
            artinchar::monomial::ConeOutcome::Member { certificate } => {
                let mut sum = vec![Rational::from_integer(0.into()); t.len()];
                for (j, c) in &certificate {
                    check(
                        *c > Rational::from_integer(0.into()),
                        "non-positive certificate coefficient",
                    )?;
                    for (s, &m) in sum.iter_mut().zip(&fam.members[*j].multiplicities) {
                        *s += c * Rational::from_integer(m.into());
                    }
                }
                check(
                    sum == psi.coeffs,
                    format!("{}: certificate does not reproduce Reg - 1", g.name()),
                )?;
            }
            _ => return Err(format!("{}: Reg - 1 rejected", g.name())),
        }
        if g.order() > 12 {
            continue;
        }
        for _ in 0..100 {
            let mut v: Vec<i64> = (0..t.len()).map(|_| rng.gen_range(-3..=3)).collect();
            if v.iter().all(|&x| x == 0) {
                v[0] = 1;
            }
            let psi = VirtualCharacter::from_ints(&v);
            let solver = cone_membership(&psi, &fam).map_err(e2s)?.is_member();
            check(
                solver == dual_check(&psi, &fam),
                format!("{}: dual disagrees on {v:?}", g.name()),
            )?;
            random_checked += 1;
        }
    }
    Ok(format!(
        "{} groups, {random_checked} random characters",
        groups.len()
    ))
}

fn c11_m_groups() -> Verdict {
    let mut n = 0usize;
    for g in corpus::standard().into_iter().filter(|g| g.order() <= 24) {
        let r = is_m_group(&g, Strategy::Parallel).map_err(e2s)?;
        if g.is_abelian() || g.name() == "Q8" {
            check(r.is_m_group, format!("{} should be an M-group", g.name()))?;
        }
        if g.name() == "SL(2,3)" {
            check(!r.is_m_group, "SL(2,3) classified as an M-group")?;
        }
        if huppert_predicts_m_group(&g).map_err(e2s)? {
            check(
                r.is_m_group,
                format!("{}: structural prediction contradicted", g.name()),
            )?;
        }
        n += 1;
    }
    Ok(format!("{n} groups classified"))
}

fn c12_determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_artinchar"))
            .args(["corpus", "run"])
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run()?;
    let b = run()?;
    check(
        a.status.success() && b.status.success(),
        "corpus run failed",
    )?;
    check(a.stdout == b.stdout, "outputs differ")?;
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("character tables", c1_tables),
        ("Frobenius reciprocity and Mackey", c2_frobenius_mackey),
        ("UVdW decompositions", c3_uvdw),
        ("level identity", c4_levels),
        ("Heilbronn exhaustive search", c5_search),
        ("Stark lemma", c6_stark),
        ("supercharacter enumeration", c7_scts),
        ("supercharacter order bound", c8_lo_bound),
        ("Hendrickson products", c9_products),
        ("monomial cone", c10_cone),
        ("M-group classification", c11_m_groups),
        ("determinism", c12_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match f() {
            Ok(detail) => println!(
                "criterion {:>2} PASS {name}: {detail} ({:.1?})",
                i + 1,
                start.elapsed()
            ),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
