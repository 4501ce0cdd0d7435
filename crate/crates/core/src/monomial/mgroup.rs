//! Exhaustive search for monomial witnesses of every irreducible.

use serde::Serialize;

use super::{linear_characters, MonomialTerm};
use crate::chartab::character_table;
use crate::cyclotomic::Cyclotomic;
use crate::error::Result;
use crate::group::Group;
use crate::par::{self, Strategy};

#[derive(Clone, Debug, Serialize)]
pub struct MGroupReport {
    pub is_m_group: bool,
    /// One witness `Ind_H^G φ = χ` per irreducible, or `None`.
    pub witnesses: Vec<Option<MonomialTerm>>,
    pub non_monomial: Vec<usize>,
}

/// First `(H, φ)` in subgroup order with `Ind_H^G φ = χ`.
fn witness_for(
    g: &Group,
    chi_index: usize,
    subs: &[Group],
    strategy: Strategy,
) -> Result<Option<MonomialTerm>> {
    let table = character_table(g)?;
    let chi = table.irr(chi_index).rehome(g)?;
    let d = chi.degree_i64().expect("integral degree") as usize;
    let candidates: Vec<&Group> = subs.iter().filter(|h| h.order() * d == g.order()).collect();
    let found = par::map_slice(strategy, &candidates, |h| -> Result<Option<MonomialTerm>> {
        let res = chi.restrict(h)?;
        for phi in linear_characters(h)? {
            // [G:H] = χ(1) and (φ, χ|_H) = 1 force Ind φ = χ.
            if res.inner_product(&phi)? == Cyclotomic::one() && phi.induce(g)? == chi {
                return Ok(Some(MonomialTerm::unit(phi)));
            }
        }
        Ok(None)
    });
    for f in found {
        if let Some(t) = f? {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// Classifies `G` as an M-group by exhaustive witness search.
pub fn is_m_group(g: &Group, strategy: Strategy) -> Result<MGroupReport> {
    let subs = g.subgroups_with_cap(super::cone::FAMILY_SUBGROUP_CAP)?;
    is_m_group_with(g, &subs, strategy)
}

/// As [`is_m_group`] over a given subgroup list.
pub fn is_m_group_with(g: &Group, subs: &[Group], strategy: Strategy) -> Result<MGroupReport> {
    let table = character_table(g)?;
    let witnesses = (0..table.len())
        .map(|i| witness_for(g, i, subs, strategy))
        .collect::<Result<Vec<_>>>()?;
    let non_monomial: Vec<usize> = (0..witnesses.len())
        .filter(|&i| witnesses[i].is_none())
        .collect();
    Ok(MGroupReport {
        is_m_group: non_monomial.is_empty(),
        witnesses,
        non_monomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn classification() {
        let q8 = is_m_group(&corpus::quaternion(), Strategy::Parallel).unwrap();
        assert!(q8.is_m_group);
        let w = q8.witnesses[4].as_ref().unwrap();
        assert_eq!(w.subgroup.order(), 4);
        assert!(
            is_m_group(&corpus::cyclic(6), Strategy::Sequential)
                .unwrap()
                .is_m_group
        );
        let sl = is_m_group(&corpus::sl23(), Strategy::Parallel).unwrap();
        assert!(!sl.is_m_group);
        let t = character_table(&corpus::sl23()).unwrap();
        for &i in &sl.non_monomial {
            assert_eq!(t.irr(i).degree_i64(), Some(2));
        }
    }
}
