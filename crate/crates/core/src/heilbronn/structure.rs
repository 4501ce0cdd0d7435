//! Structural predicates on groups: supersolvability, abelian normal Sylow
//! subgroups, and the hypotheses of Huppert's M-group criterion.

use crate::error::Result;
use crate::group::{Group, PermGroup};
use crate::monomial::{minimal_normal_subgroups, FAMILY_SUBGROUP_CAP};

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn p_part(mut n: usize, p: usize) -> usize {
    let mut out = 1;
    while n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Every chief factor has prime order.
pub fn is_supersolvable(g: &Group) -> bool {
    if g.order() == 1 {
        return true;
    }
    let mins = minimal_normal_subgroups(g);
    let n = &mins[0];
    if !is_prime(n.order()) {
        return false;
    }
    match g.quotient(n) {
        Ok(q) => is_supersolvable(&q.group),
        Err(_) => false,
    }
}

/// The Sylow `q`-subgroup is normal and abelian.
pub fn has_abelian_normal_sylow(g: &Group, q: usize) -> bool {
    let target = p_part(g.order(), q);
    let q_elems: Vec<_> = (0..g.order())
        .filter(|&i| p_part(g.element_order(i) as usize, q) == g.element_order(i) as usize)
        .map(|i| g.element(i).clone())
        .collect();
    let s = g.subgroup(q_elems).expect("elements of G");
    s.order() == target && s.is_abelian()
}

fn sylows_abelian(n: &PermGroup, subs: &[Group]) -> bool {
    prime_divisors(n.order()).into_iter().all(|q| {
        let target = p_part(n.order(), q);
        subs.iter()
            .find(|s| s.order() == target && s.is_subgroup_of(n))
            .is_some_and(|s| s.is_abelian())
    })
}

/// Some normal `N` has all Sylow subgroups abelian and `G/N` supersolvable,
/// with `G` solvable; such groups are M-groups.
pub fn huppert_predicts_m_group(g: &Group) -> Result<bool> {
    if !g.is_solvable() {
        return Ok(false);
    }
    let subs = g.subgroups_with_cap(FAMILY_SUBGROUP_CAP)?;
    for n in g.normal_subgroups(&subs) {
        if sylows_abelian(&n, &subs) && is_supersolvable(&g.quotient(&n)?.group) {
            return Ok(true);
        }
    }
    Ok(false)
}
