//! Membership in the rational cone spanned by monomial characters.

use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::lp::{phase_one, LpOutcome};
use super::{linear_characters, MonomialTerm};
use crate::chartab::{character_table, CharacterTable};
use crate::classfun::{ClassFunction, VirtualCharacter};
use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::par::{self, Strategy};

/// Subgroup cap used when enumerating the monomial family.
pub const FAMILY_SUBGROUP_CAP: usize = 120;

/// `Ind_H^G φ` with its multiplicities in the table of `G`.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub term: MonomialTerm,
    pub induced: ClassFunction,
    pub multiplicities: Vec<i64>,
}

/// Monomial characters of `G`, deduplicated by class-function equality.
#[derive(Clone, Debug)]
pub struct MonomialFamily {
    pub group: Group,
    pub table: std::sync::Arc<CharacterTable>,
    pub members: Vec<FamilyMember>,
}

impl MonomialFamily {
    /// `(ψ, member)` for each member, with `ψ` given by multiplicities.
    pub fn pairings(&self, psi: &VirtualCharacter) -> Vec<Rational> {
        self.members
            .iter()
            .map(|m| {
                m.multiplicities
                    .iter()
                    .zip(&psi.coeffs)
                    .map(|(&a, c)| c * Rational::from_integer(a.into()))
                    .sum()
            })
            .collect()
    }
}

/// Every `Ind_H^G φ` for `H` among all subgroups and `φ` linear on `H`.
pub fn monomial_family(g: &Group, strategy: Strategy) -> Result<MonomialFamily> {
    let subs = g.subgroups_with_cap(FAMILY_SUBGROUP_CAP)?;
    monomial_family_from(g, &subs, strategy)
}

/// As [`monomial_family`] over a given subgroup list.
pub fn monomial_family_from(
    g: &Group,
    subs: &[Group],
    strategy: Strategy,
) -> Result<MonomialFamily> {
    let table = character_table(g)?;
    let per_sub = par::map_slice(strategy, subs, |h| -> Result<Vec<FamilyMember>> {
        linear_characters(h)?
            .into_iter()
            .map(|phi| {
                let induced = phi.induce(g)?;
                let multiplicities = table.multiplicities(&induced.rehome(table.group())?)?;
                Ok(FamilyMember {
                    term: MonomialTerm::unit(phi),
                    induced,
                    multiplicities,
                })
            })
            .collect()
    });
    let mut members: Vec<FamilyMember> = Vec::new();
    for batch in per_sub {
        for m in batch? {
            if !members.iter().any(|x| x.multiplicities == m.multiplicities) {
                members.push(m);
            }
        }
    }
    if members.is_empty() {
        return Err(Error::EmptyFamily);
    }
    Ok(MonomialFamily {
        group: g.clone(),
        table,
        members,
    })
}

#[derive(Clone, Debug)]
pub enum ConeOutcome {
    /// `ψ = Σ c_j · member_j` with `c_j > 0`.
    Member { certificate: Vec<(usize, Rational)> },
    /// `farkas` has nonnegative pairing with every member and negative pairing
    /// with `ψ`; `separating` is a member with `(ψ, f) < 0` when one exists.
    NotMember {
        farkas: Vec<Rational>,
        separating: Option<usize>,
    },
}

impl ConeOutcome {
    pub fn is_member(&self) -> bool {
        matches!(self, ConeOutcome::Member { .. })
    }
}

impl Serialize for ConeOutcome {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs = |v: &[Rational]| v.iter().map(|r| r.to_string()).collect::<Vec<_>>();
        match self {
            ConeOutcome::Member { certificate } => {
                let cert: Vec<(usize, String)> = certificate
                    .iter()
                    .map(|(j, c)| (*j, c.to_string()))
                    .collect();
                let mut st = s.serialize_struct("ConeOutcome", 2)?;
                st.serialize_field("member", &true)?;
                st.serialize_field("certificate", &cert)?;
                st.end()
            }
            ConeOutcome::NotMember { farkas, separating } => {
                let mut st = s.serialize_struct("ConeOutcome", 3)?;
                st.serialize_field("member", &false)?;
                st.serialize_field("farkas", &strs(farkas))?;
                st.serialize_field("separating", separating)?;
                st.end()
            }
        }
    }
}

/// Decides whether `ψ` is a nonnegative rational combination of the family.
/// Both outcomes are re-verified exactly before returning.
pub fn cone_membership(psi: &VirtualCharacter, family: &MonomialFamily) -> Result<ConeOutcome> {
    let k = family.table.len();
    if psi.coeffs.len() != k {
        return Err(Error::GroupMismatch);
    }
    if psi.coeffs.iter().all(Zero::is_zero) {
        return Err(Error::OutOfRange("ψ must be nonzero".into()));
    }
    let a: Vec<Vec<Rational>> = (0..k)
        .map(|i| {
            family
                .members
                .iter()
                .map(|m| Rational::from_integer(m.multiplicities[i].into()))
                .collect()
        })
        .collect();
    let fail = |m: &str| Err(Error::VerificationFailed(m.to_string()));
    match phase_one(&a, &psi.coeffs) {
        LpOutcome::Feasible(x) => {
            let certificate: Vec<(usize, Rational)> = x
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            for i in 0..k {
                let s: Rational = certificate.iter().map(|(j, c)| c * &a[i][*j]).sum();
                if s != psi.coeffs[i] {
                    return fail("cone certificate does not reproduce ψ");
                }
            }
            if certificate.iter().any(|(_, c)| !c.is_positive()) {
                return fail("cone certificate has a nonpositive coefficient");
            }
            Ok(ConeOutcome::Member { certificate })
        }
        LpOutcome::Infeasible(y) => {
            for j in 0..family.members.len() {
                let s: Rational = (0..k).map(|i| &y[i] * &a[i][j]).sum();
                if s.is_negative() {
                    return fail("Farkas vector pairs negatively with a member");
                }
            }
            let yb: Rational = y.iter().zip(&psi.coeffs).map(|(p, v)| p * v).sum();
            if !yb.is_negative() {
                return fail("Farkas vector does not separate ψ");
            }
            let separating = family.pairings(psi).iter().position(|v| v.is_negative());
            Ok(ConeOutcome::NotMember {
                farkas: y,
                separating,
            })
        }
    }
}

/// Brute-force dual side: `(ψ, f) ≥ 0` for every family member `f`.
pub fn dual_check(psi: &VirtualCharacter, family: &MonomialFamily) -> bool {
    family.pairings(psi).iter().all(|v| !v.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn reg_minus_one(g: &Group) -> VirtualCharacter {
        let t = character_table(g).unwrap();
        let mut d = t.degrees();
        d[0] -= 1;
        VirtualCharacter::from_ints(&d)
    }

    #[test]
    fn regular_minus_trivial_is_member() {
        for g in [
            corpus::symmetric(3),
            corpus::quaternion(),
            corpus::alternating(4),
        ] {
            let fam = monomial_family(&g, Strategy::Sequential).unwrap();
            let psi = reg_minus_one(&g);
            assert!(cone_membership(&psi, &fam).unwrap().is_member());
            assert!(dual_check(&psi, &fam));
        }
    }

    #[test]
    fn s3_trivial_minus_sign() {
        let g = corpus::symmetric(3);
        let fam = monomial_family(&g, Strategy::Parallel).unwrap();
        let psi = VirtualCharacter::from_ints(&[1, -1, 0]);
        let out = cone_membership(&psi, &fam).unwrap();
        assert!(!out.is_member());
        assert!(!dual_check(&psi, &fam));
        let ConeOutcome::NotMember { separating, .. } = out else {
            unreachable!()
        };
        assert!(separating.is_some());
    }
}
