//! Products of a G-invariant theory on a normal subgroup with a theory on the
//! quotient.

use crate::chartab::character_table;
use crate::classfun::ClassFunction;
use crate::error::{Error, Result};
use crate::group::{Group, Quotient};

use super::SupercharacterTheory;

/// Irreducible constituents of `f`, which must equal `Σ_{χ} χ(1)·χ` over them.
fn constituents(f: &ClassFunction, g: &Group) -> Result<Vec<usize>> {
    let table = character_table(g)?;
    let mults = table.multiplicities(&f.rehome(table.group())?)?;
    let degrees = table.degrees();
    let mut part = Vec::new();
    for (i, (&m, &d)) in mults.iter().zip(&degrees).enumerate() {
        if m == 0 {
            continue;
        }
        if m != d {
            return Err(Error::VerificationFailed(format!(
                "constituent {i} has multiplicity {m}, degree {d}"
            )));
        }
        part.push(i);
    }
    Ok(part)
}

/// Superclasses of `th_n` are stable under conjugation by `g`.
pub fn is_g_invariant(th_n: &SupercharacterTheory, g: &Group) -> bool {
    let n = th_n.group();
    g.generators().iter().all(|s| {
        let s_inv = s.inverse();
        (0..n.order()).all(|e| {
            let x = n.element(e);
            let y = s_inv.compose(x).compose(s);
            n.index_of(&y)
                .is_some_and(|f| th_n.superclass_of_element(f) == th_n.superclass_of_element(e))
        })
    })
}

/// Theory on `G` built from a `G`-invariant theory on `N` and a theory on `G/N`.
pub fn hendrickson_product(
    g: &Group,
    th_n: &SupercharacterTheory,
    th_q: &SupercharacterTheory,
    q: &Quotient,
) -> Result<SupercharacterTheory> {
    let n = th_n.group();
    if !n.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !g.is_normal(n) {
        return Err(Error::NotNormal);
    }
    if q.kernel_order != n.order() || !th_q.group().same_as(&q.group) {
        return Err(Error::GroupMismatch);
    }
    if !(0..g.order()).all(|e| (q.projection[e] == 0) == n.contains(g.element(e))) {
        return Err(Error::GroupMismatch);
    }
    if !is_g_invariant(th_n, g) {
        return Err(Error::NotGInvariant);
    }
    let mut x = Vec::new();
    for (part, sigma) in th_n.x().iter().zip(th_n.supercharacters()) {
        if part.contains(&0) {
            continue;
        }
        x.push(constituents(&sigma.induce(g)?, g)?);
    }
    for sigma in th_q.supercharacters() {
        x.push(constituents(&sigma.inflate(g, q)?, g)?);
    }
    let mut k: Vec<Vec<usize>> = th_n
        .k_elements()
        .into_iter()
        .map(|part| {
            part.into_iter()
                .map(|e| g.index_of(n.element(e)).expect("N ≤ G"))
                .collect()
        })
        .collect();
    for part in th_q.k_elements() {
        if part.contains(&0) {
            continue;
        }
        k.push(
            (0..g.order())
                .filter(|&e| part.contains(&q.projection[e]))
                .collect(),
        );
    }
    SupercharacterTheory::from_elements(g, x, k)
}
