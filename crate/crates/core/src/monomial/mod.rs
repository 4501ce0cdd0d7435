//! Monomial decompositions with checkable certificates, M-group testing,
//! integral Brauer witnesses and monomial-cone membership.

mod brauer;
mod cone;
mod lp;
mod mgroup;
mod uvdw;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chartab::character_table;
use crate::classfun::ClassFunction;
use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::group::{Group, PermGroup};

pub use brauer::{brauer_witness, BrauerWitness};
pub use cone::{
    cone_membership, dual_check, monomial_family, monomial_family_from, ConeOutcome, FamilyMember,
    MonomialFamily, FAMILY_SUBGROUP_CAP,
};
pub use lp::{phase_one, LpOutcome};
pub use mgroup::{is_m_group, is_m_group_with, MGroupReport};
pub use uvdw::{
    decompose_uvdw, decompose_uvdw_level, extend_through_normal, irreducible_levels,
    minimal_normal_subgroups, pairing_levels, PairingEntry, PairingOutcome,
};

/// `coefficient · Ind_subgroup^G linear_char`.
#[derive(Clone, Debug)]
pub struct MonomialTerm {
    pub subgroup: Group,
    pub linear_char: ClassFunction,
    pub coefficient: Rational,
}

impl MonomialTerm {
    pub fn new(linear_char: ClassFunction, coefficient: Rational) -> Self {
        MonomialTerm {
            subgroup: linear_char.group().clone(),
            linear_char,
            coefficient,
        }
    }

    pub fn unit(linear_char: ClassFunction) -> Self {
        Self::new(linear_char, Rational::one())
    }

    pub fn induced(&self, g: &Group) -> Result<ClassFunction> {
        self.linear_char.induce(g)
    }

    fn same_summand(&self, other: &MonomialTerm) -> bool {
        self.subgroup.same_as(&other.subgroup) && self.linear_char == other.linear_char
    }
}

impl Serialize for MonomialTerm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let gens: Vec<Vec<usize>> = self
            .subgroup
            .generators()
            .iter()
            .map(|p| p.one_based())
            .collect();
        let mut st = s.serialize_struct("MonomialTerm", 4)?;
        st.serialize_field("subgroup_gens", &gens)?;
        st.serialize_field("subgroup_order", &self.subgroup.order())?;
        st.serialize_field("linear_char", &self.linear_char)?;
        st.serialize_field("coeff", &self.coefficient.to_string())?;
        st.end()
    }
}

/// `target = residual_trivial_coeff · residual_char + anchor + Σ terms`.
///
/// `residual_char` is `1_G` unless the certificate has been twisted; `anchor`
/// holds a distinguished induced term such as `Ind_{HG^i}^G 1`.
#[derive(Clone, Debug)]
pub struct MonomialDecomposition {
    pub group: Group,
    pub target: ClassFunction,
    pub residual_trivial_coeff: Rational,
    pub residual_char: ClassFunction,
    pub anchor: Option<MonomialTerm>,
    pub terms: Vec<MonomialTerm>,
}

impl MonomialDecomposition {
    pub fn new(
        group: &Group,
        target: ClassFunction,
        residual: i64,
        anchor: Option<MonomialTerm>,
        terms: Vec<MonomialTerm>,
    ) -> Self {
        MonomialDecomposition {
            group: group.clone(),
            target,
            residual_trivial_coeff: Rational::from_integer(residual.into()),
            residual_char: ClassFunction::trivial(group),
            anchor,
            terms: merge_terms(terms),
        }
    }

    /// Right-hand side recomputed from scratch.
    pub fn recompute(&self) -> Result<ClassFunction> {
        let mut acc = self.residual_char.scale(&self.residual_trivial_coeff);
        if let Some(a) = &self.anchor {
            acc = acc.add(&a.induced(&self.group)?.scale(&a.coefficient))?;
        }
        for t in &self.terms {
            acc = acc.add(&t.induced(&self.group)?.scale(&t.coefficient))?;
        }
        Ok(acc)
    }

    /// Recomputes the identity and checks every term is a positive multiple of
    /// an induced linear character of a subgroup.
    pub fn verify(&self) -> Result<()> {
        let fail = |m: &str| Err(Error::VerificationFailed(m.to_string()));
        for t in self.terms.iter().chain(self.anchor.iter()) {
            if !t.subgroup.is_subgroup_of(&self.group) {
                return fail("term subgroup is not a subgroup");
            }
            if !t.coefficient.is_positive() {
                return fail("term coefficient is not positive");
            }
            if !t.linear_char.is_linear_character() {
                return fail("term character is not linear");
            }
        }
        if self.residual_trivial_coeff.is_negative() {
            return fail("negative residual coefficient");
        }
        if !self.residual_char.is_linear_character() {
            return fail("residual character is not linear");
        }
        if self.recompute()? != self.target {
            return fail("recomputed sum differs from the target");
        }
        Ok(())
    }

    /// Tensor every piece with a linear character `χ0` of `G`.
    pub fn twist(&self, chi0: &ClassFunction) -> Result<MonomialDecomposition> {
        twist_certificate(self, chi0)
    }

    /// Multiplicity of `1_G` in `target - residual part`, which must vanish for
    /// an entire quotient.
    pub fn trivial_multiplicity_of_terms(&self) -> Result<Rational> {
        let one = ClassFunction::trivial(&self.group);
        let mut acc = Rational::zero();
        for t in self.terms.iter().chain(self.anchor.iter()) {
            acc += t.induced(&self.group)?.inner_rational(&one)? * &t.coefficient;
        }
        Ok(acc)
    }
}

impl Serialize for MonomialDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("MonomialDecomposition", 5)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("residual_trivial", &self.residual_trivial_coeff.to_string())?;
        st.serialize_field("residual_char", &self.residual_char)?;
        st.serialize_field("anchor", &self.anchor)?;
        st.serialize_field("terms", &self.terms)?;
        st.end()
    }
}

/// Sums coefficients of identical summands, keeping first-occurrence order.
pub fn merge_terms(terms: Vec<MonomialTerm>) -> Vec<MonomialTerm> {
    let mut out: Vec<MonomialTerm> = Vec::new();
    for t in terms {
        if let Some(prev) = out.iter_mut().find(|p| p.same_summand(&t)) {
            prev.coefficient += &t.coefficient;
        } else {
            out.push(t);
        }
    }
    out.retain(|t| !t.coefficient.is_zero());
    out
}

/// Applies `⊗χ0` to target, residual character, anchor and terms; re-verifies.
pub fn twist_certificate(
    d: &MonomialDecomposition,
    chi0: &ClassFunction,
) -> Result<MonomialDecomposition> {
    if !chi0.group().same_as(&d.group) {
        return Err(Error::GroupMismatch);
    }
    if !chi0.is_linear_character() {
        return Err(Error::NotLinear);
    }
    let tw = |t: &MonomialTerm| -> Result<MonomialTerm> {
        let res = chi0.restrict(&t.subgroup)?;
        Ok(MonomialTerm {
            subgroup: t.subgroup.clone(),
            linear_char: t.linear_char.twist(&res)?,
            coefficient: t.coefficient.clone(),
        })
    };
    let out = MonomialDecomposition {
        group: d.group.clone(),
        target: d.target.twist(chi0)?,
        residual_trivial_coeff: d.residual_trivial_coeff.clone(),
        residual_char: d.residual_char.twist(chi0)?,
        anchor: d.anchor.as_ref().map(tw).transpose()?,
        terms: merge_terms(d.terms.iter().map(tw).collect::<Result<Vec<_>>>()?),
    };
    out.verify()?;
    Ok(out)
}

/// Linear characters of a group, in table order.
pub fn linear_characters(h: &Group) -> Result<Vec<ClassFunction>> {
    let t = character_table(h)?;
    t.linear_indices()
        .into_iter()
        .map(|i| t.irr(i).rehome(h))
        .collect::<Result<_>>()
}

/// Element-set comparison key used for deterministic tie-breaks.
pub(crate) fn element_key(g: &PermGroup, h: &PermGroup) -> Vec<usize> {
    let mut v = h.element_indices_in(g);
    v.sort_unstable();
    v
}
