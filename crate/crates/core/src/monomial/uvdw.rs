//! Constructive decompositions of `Ind_H^G 1_H` for solvable `G` into the
//! trivial character plus induced linear characters, and the level-wise
//! variant relative to the derived series.

use serde::Serialize;

use super::{element_key, linear_characters, MonomialDecomposition, MonomialTerm};
use crate::chartab::character_table;
use crate::classfun::ClassFunction;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::{Group, PermGroup, Quotient};
use crate::perm::Perm;

/// Minimal normal subgroups of `g`, ordered by element set.
pub fn minimal_normal_subgroups(g: &Group) -> Vec<Group> {
    let mut closures: Vec<Group> = Vec::new();
    for x in g.elements().iter().skip(1) {
        let n = g.normal_closure(vec![x.clone()]);
        if !closures.iter().any(|c| c.same_as(&n)) {
            closures.push(n);
        }
    }
    let mut mins: Vec<Group> = closures
        .iter()
        .filter(|n| {
            !closures
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .cloned()
        .collect();
    mins.sort_by_cached_key(|n| element_key(g, n));
    mins
}

/// The linear character `x·a ↦ fx(x)·fa(a)` on `t = X·A` with `A` normal in `t`.
/// Fails unless the map is well defined and multiplicative.
pub fn extend_through_normal(
    t: &Group,
    fx: &ClassFunction,
    fa: &ClassFunction,
) -> Result<ClassFunction> {
    let x = fx.group();
    let a = fa.group();
    let mut vals: Vec<Option<Cyclotomic>> = vec![None; t.order()];
    for (xi, xp) in x.elements().iter().enumerate() {
        let vx = fx.at(xi);
        for (ai, ap) in a.elements().iter().enumerate() {
            let ti = t.index_of(&xp.compose(ap)).ok_or(Error::NotSubgroup)?;
            let v = vx * fa.at(ai);
            match &vals[ti] {
                None => vals[ti] = Some(v),
                Some(old) if *old != v => {
                    return Err(Error::VerificationFailed(
                        "extension is not well defined on the intersection".into(),
                    ))
                }
                Some(_) => {}
            }
        }
    }
    let vals: Vec<Cyclotomic> = vals
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::VerificationFailed("X·A does not cover the group".into())))
        .collect::<Result<_>>()?;
    for s in t.generators() {
        let si = t.index_of(s).unwrap();
        for y in 0..t.order() {
            if vals[t.mul(si, y)] != &vals[si] * &vals[y] {
                return Err(Error::VerificationFailed(
                    "extension is not multiplicative".into(),
                ));
            }
        }
    }
    let f = ClassFunction::from_element_fn(t, |i| vals[i].clone());
    if (0..t.order()).any(|i| f.at(i) != &vals[i]) {
        return Err(Error::VerificationFailed(
            "extension is not a class function".into(),
        ));
    }
    Ok(f)
}

fn inflate_piece(g: &Group, q: &Quotient, lam: &ClassFunction) -> Result<ClassFunction> {
    let k = g.preimage(q, lam.group());
    Ok(ClassFunction::from_element_fn(&k, |ki| {
        let gi = g.index_of(k.element(ki)).expect("preimage lies in G");
        lam.at_perm(q.group.element(q.projection[gi]))
            .expect("image lies in the subgroup")
            .clone()
    }))
}

fn inertia_group(g: &Group, eps: &ClassFunction) -> Group {
    let a = eps.group();
    let fixed: Vec<Perm> = g
        .elements()
        .iter()
        .filter(|s| {
            a.generators()
                .iter()
                .all(|x| eps.at_perm(&x.conjugate_by(s)) == eps.at_perm(x))
        })
        .cloned()
        .collect();
    g.subgroup(fixed).expect("elements of G")
}

/// `G = HA` with `A` abelian normal: every nontrivial constituent of
/// `Ind_H^G 1` has multiplicity one and is induced from a linear character of
/// an inertia group `T_ε`, namely an extension of `ε` twisted by a character of `T_ε/A`.
fn abelian_normal_pieces(g: &Group, h: &Group, a: &Group) -> Result<Vec<ClassFunction>> {
    let table = character_table(g)?;
    let ind = ClassFunction::trivial(h).induce(g)?;
    let mults = table.multiplicities(&ind.rehome(table.group())?)?;
    let irr_a = linear_characters(a)?;
    let ha = g.intersection(h, a);
    let one = Cyclotomic::one();
    let mut pieces = Vec::new();
    for (ci, &m) in mults.iter().enumerate().skip(1) {
        if m == 0 {
            continue;
        }
        if m != 1 {
            return Err(Error::VerificationFailed(format!(
                "constituent {ci} has multiplicity {m} although G = HA"
            )));
        }
        let chi = table.irr(ci).rehome(g)?;
        let res = chi.restrict(a)?;
        let eps = irr_a
            .iter()
            .find(|e| {
                ha.elements().iter().all(|p| e.at_perm(p) == Some(&one))
                    && res.inner_product(e).is_ok_and(|v| v == one)
            })
            .ok_or_else(|| Error::VerificationFailed("no ε under χ trivial on H∩A".into()))?;
        let t = inertia_group(g, eps);
        let h_eps = g.intersection(h, &t);
        let eps_hat = extend_through_normal(&t, &ClassFunction::trivial(&h_eps), eps)?;
        let mut found = None;
        for lam in linear_characters(&t)? {
            if !a.elements().iter().all(|p| lam.at_perm(p) == Some(&one)) {
                continue;
            }
            let phi = eps_hat.twist(&lam)?;
            if phi.induce(g)? == chi {
                found = Some(phi);
                break;
            }
        }
        pieces.push(found.ok_or_else(|| {
            Error::VerificationFailed("no linear character of the inertia group induces χ".into())
        })?);
    }
    Ok(pieces)
}

/// Linear characters `λ_j` on subgroups with `Ind_H^G 1 = 1_G + Σ Ind λ_j`.
fn uvdw_pieces(g: &Group, h: &Group) -> Result<Vec<ClassFunction>> {
    if h.order() == g.order() {
        return Ok(vec![]);
    }
    let mins = minimal_normal_subgroups(g);
    if let Some(n) = mins.iter().find(|n| n.is_subgroup_of(h)) {
        let q = g.quotient(n)?;
        let hbar = g.image_in(&q, h);
        return uvdw_pieces(&q.group, &hbar)?
            .iter()
            .map(|lam| inflate_piece(g, &q, lam))
            .collect();
    }
    let a = &mins[0];
    if !a.is_abelian() {
        return Err(Error::NotSolvable);
    }
    let ha = g.join(h, a);
    if ha.order() == g.order() {
        return abelian_normal_pieces(g, h, a);
    }
    let mut pieces = uvdw_pieces(&ha, h)?;
    pieces.extend(uvdw_pieces(g, &ha)?);
    Ok(pieces)
}

fn check_solvable_pair(g: &Group, h: &PermGroup) -> Result<()> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !g.is_solvable() {
        return Err(Error::NotSolvable);
    }
    Ok(())
}

/// `Ind_H^G 1_H = 1_G + Σ Ind_{H_j}^G λ_j` with `λ_j` linear; verified.
pub fn decompose_uvdw(g: &Group, h: &Group) -> Result<MonomialDecomposition> {
    check_solvable_pair(g, h)?;
    let target = ClassFunction::trivial(h).induce(g)?;
    let terms = uvdw_pieces(g, h)?
        .into_iter()
        .map(MonomialTerm::unit)
        .collect();
    let d = MonomialDecomposition::new(g, target, 1, None, terms);
    d.verify()?;
    Ok(d)
}

/// Returns `(HG^i, pieces)` with `Ind_H^G 1 = Ind_{HG^i}^G 1 + Σ Ind λ_j`.
fn level_pieces(g: &Group, h: &Group, i: usize) -> Result<(Group, Vec<ClassFunction>)> {
    let series = g.derived_series();
    let Some(k) = series.iter().rposition(|t| t.order() > 1) else {
        return Ok((h.clone(), vec![]));
    };
    if i > k {
        return Ok((h.clone(), vec![]));
    }
    let gk = &series[k];
    let h1 = g.join(h, gk);
    if h1.order() == h.order() {
        let q = g.quotient(gk)?;
        let hbar = g.image_in(&q, h);
        let (kbar, pieces) = level_pieces(&q.group, &hbar, i)?;
        let anchor = g.preimage(&q, &kbar);
        let pieces = pieces
            .iter()
            .map(|lam| inflate_piece(g, &q, lam))
            .collect::<Result<Vec<_>>>()?;
        return Ok((anchor, pieces));
    }
    if h1.order() == g.order() {
        return Ok((g.clone(), abelian_normal_pieces(g, h, gk)?));
    }
    let mut pieces = uvdw_pieces(&h1, h)?;
    let (anchor, rest) = level_pieces(g, &h1, i)?;
    pieces.extend(rest);
    Ok((anchor, pieces))
}

/// `Ind_H^G 1_H = Ind_{HG^i}^G 1 + Σ Ind_{H_j}^G λ_j` for `i ≥ 1`; verified.
pub fn decompose_uvdw_level(g: &Group, h: &Group, i: usize) -> Result<MonomialDecomposition> {
    check_solvable_pair(g, h)?;
    if i == 0 {
        return Err(Error::OutOfRange("level index must be at least 1".into()));
    }
    let (anchor, pieces) = level_pieces(g, h, i)?;
    let series = g.derived_series();
    let gi = &series[i.min(series.len() - 1)];
    if !anchor.same_as(&g.join(h, gi)) {
        return Err(Error::VerificationFailed("anchor differs from HG^i".into()));
    }
    let target = ClassFunction::trivial(h).induce(g)?;
    let terms = pieces.into_iter().map(MonomialTerm::unit).collect();
    let anchor = MonomialTerm::unit(ClassFunction::trivial(&anchor));
    let d = MonomialDecomposition::new(g, target, 0, Some(anchor), terms);
    d.verify()?;
    Ok(d)
}

/// One irreducible's entry in a level pairing: `(χ, level, pairing)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairingEntry {
    pub chi: usize,
    pub level: usize,
    pub pairing: i64,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum PairingOutcome {
    /// `ψ` extends to `ψ'` on `HG^i`; pairings are `(χ, Ind_{HG^i} ψ')`.
    Extended {
        subgroup_order: usize,
        pairings: Vec<PairingEntry>,
    },
    /// `ψ` is nontrivial on `H ∩ G^i`; pairings are `(χ, Ind_H ψ)` and vanish at level `≤ i`.
    NotTrivialOnIntersection { pairings: Vec<PairingEntry> },
}

/// Levels of all irreducibles of a solvable group, in table order.
pub fn irreducible_levels(g: &Group) -> Result<Vec<usize>> {
    let series = g.derived_series();
    let table = character_table(g)?;
    table
        .irreducibles()
        .iter()
        .map(|c| c.level(&series))
        .collect()
}

/// Compares `(χ, Ind_{HG^i} ψ')` with `(χ, Ind_H ψ)` level by level.
pub fn pairing_levels(
    g: &Group,
    h: &Group,
    psi: &ClassFunction,
    i: usize,
) -> Result<PairingOutcome> {
    check_solvable_pair(g, h)?;
    if !psi.group().same_as(h) {
        return Err(Error::GroupMismatch);
    }
    if !psi.is_linear_character() {
        return Err(Error::NotLinear);
    }
    let table = character_table(g)?;
    let series = g.derived_series();
    let gi = series[i.min(series.len() - 1)].clone();
    let levels = irreducible_levels(g)?;
    let ind_h = table.multiplicities(&psi.induce(g)?.rehome(table.group())?)?;
    let inter = g.intersection(h, &gi);
    let one = Cyclotomic::one();
    let fail = |m: &str| Err(Error::VerificationFailed(m.to_string()));
    if !inter
        .elements()
        .iter()
        .all(|p| psi.at_perm(p) == Some(&one))
    {
        for c in 0..table.len() {
            if levels[c] <= i && ind_h[c] != 0 {
                return fail("pairing at low level does not vanish");
            }
        }
        let pairings = (0..table.len())
            .map(|c| PairingEntry {
                chi: c,
                level: levels[c],
                pairing: ind_h[c],
            })
            .collect();
        return Ok(PairingOutcome::NotTrivialOnIntersection { pairings });
    }
    let k = g.join(h, &gi);
    let ext = extend_through_normal(&k, psi, &ClassFunction::trivial(&gi))?;
    let ind_k_cf = ext.induce(g)?;
    let ind_k = table.multiplicities(&ind_k_cf.rehome(table.group())?)?;
    let mut expected = ClassFunction::zero(g);
    for c in 0..table.len() {
        let want = if levels[c] <= i { ind_h[c] } else { 0 };
        if ind_k[c] != want {
            return fail("pairing dichotomy fails");
        }
        if levels[c] <= i && ind_h[c] != 0 {
            expected = expected.add(&table.irr(c).rehome(g)?.scale_int(ind_h[c]))?;
        }
    }
    if expected != ind_k_cf {
        return fail("extension does not induce the low-level part");
    }
    let pairings = (0..table.len())
        .map(|c| PairingEntry {
            chi: c,
            level: levels[c],
            pairing: ind_k[c],
        })
        .collect();
    Ok(PairingOutcome::Extended {
        subgroup_order: k.order(),
        pairings,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::cyclotomic::Rational;

    #[test]
    fn s3_regular_decomposition() {
        let g = corpus::symmetric(3);
        let e = PermGroup::trivial(3);
        let d = decompose_uvdw(&g, &e).unwrap();
        assert_eq!(d.residual_trivial_coeff, Rational::from_integer(1.into()));
        assert_eq!(d.recompute().unwrap(), ClassFunction::regular(&g));
        assert!(decompose_uvdw(&g, &g).unwrap().terms.is_empty());
    }

    #[test]
    fn level_one_anchor_is_derived_subgroup() {
        let g = corpus::symmetric(3);
        let e = PermGroup::trivial(3);
        let d = decompose_uvdw_level(&g, &e, 1).unwrap();
        assert_eq!(d.anchor.as_ref().unwrap().subgroup.order(), 3);
        let d = decompose_uvdw_level(&g, &e, 5).unwrap();
        assert!(d.terms.is_empty());
    }

    #[test]
    fn not_solvable_is_rejected() {
        let g = corpus::alternating(5);
        let e = PermGroup::trivial(5);
        assert!(matches!(decompose_uvdw(&g, &e), Err(Error::NotSolvable)));
    }

    #[test]
    fn minimal_normal_of_s4_is_v4() {
        let g = corpus::symmetric(4);
        let m = minimal_normal_subgroups(&g);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
    }
}
