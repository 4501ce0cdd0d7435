//! Formal L-symbols and holomorphy certificates built from monomial
//! decompositions of virtual characters.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chartab::character_table;
use crate::classfun::{ClassFunction, VirtualCharacter};
use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::heilbronn::OrderAssignment;
use crate::monomial::{
    decompose_uvdw, decompose_uvdw_level, extend_through_normal, irreducible_levels,
    linear_characters, pairing_levels, MonomialDecomposition, MonomialTerm, PairingOutcome,
};

/// `Π_χ L(s, χ)^{a_χ}` stored as its exponent vector over `Irr(G)`.
#[derive(Clone, Debug)]
pub struct FormalLSymbol {
    pub group: Group,
    /// Nonzero exponents only.
    pub exponents: BTreeMap<usize, i64>,
}

impl FormalLSymbol {
    pub fn one(g: &Group) -> Self {
        FormalLSymbol {
            group: g.clone(),
            exponents: BTreeMap::new(),
        }
    }

    pub fn from_exponents(g: &Group, exps: &[i64]) -> Self {
        FormalLSymbol {
            group: g.clone(),
            exponents: exps
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| (i, a))
                .collect(),
        }
    }

    /// Symbol of a virtual character with integral coefficients.
    pub fn of_class_function(f: &ClassFunction) -> Result<Self> {
        let table = character_table(f.group())?;
        let exps = f
            .rehome(table.group())?
            .decompose(&table)?
            .to_i64s()
            .ok_or_else(|| Error::NonRationalCoefficient("non-integral multiplicity".into()))?;
        Ok(Self::from_exponents(f.group(), &exps))
    }

    pub fn exponent(&self, chi: usize) -> i64 {
        self.exponents.get(&chi).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &FormalLSymbol) -> Result<FormalLSymbol> {
        if !self.group.same_as(&other.group) {
            return Err(Error::GroupMismatch);
        }
        let mut exponents = self.exponents.clone();
        for (&i, &a) in &other.exponents {
            *exponents.entry(i).or_insert(0) += a;
        }
        exponents.retain(|_, a| *a != 0);
        Ok(FormalLSymbol {
            group: self.group.clone(),
            exponents,
        })
    }

    pub fn inverse(&self) -> FormalLSymbol {
        FormalLSymbol {
            group: self.group.clone(),
            exponents: self.exponents.iter().map(|(&i, &a)| (i, -a)).collect(),
        }
    }

    pub fn div(&self, other: &FormalLSymbol) -> Result<FormalLSymbol> {
        self.mul(&other.inverse())
    }

    pub fn to_virtual(&self) -> Result<VirtualCharacter> {
        let n = character_table(&self.group)?.len();
        let mut v = vec![0i64; n];
        for (&i, &a) in &self.exponents {
            if i >= n {
                return Err(Error::OutOfRange(format!("character index {i}")));
            }
            v[i] = a;
        }
        Ok(VirtualCharacter::from_ints(&v))
    }

    pub fn to_class_function(&self) -> Result<ClassFunction> {
        let table = character_table(&self.group)?;
        self.to_virtual()?
            .to_class_function(&table)
            .rehome(&self.group)
    }
}

impl PartialEq for FormalLSymbol {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.exponents == other.exponents
    }
}

impl Serialize for FormalLSymbol {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let exps: BTreeMap<String, i64> = self
            .exponents
            .iter()
            .map(|(i, a)| (i.to_string(), *a))
            .collect();
        exps.serialize(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "entire")]
    Entire,
    #[serde(rename = "holomorphic-except-s1")]
    HolomorphicExceptS1,
}

/// A symbol together with a verified monomial decomposition of its character.
#[derive(Clone, Debug)]
pub struct HolomorphyCertificate {
    pub symbol: FormalLSymbol,
    pub decomposition: MonomialDecomposition,
    pub status: Status,
}

impl HolomorphyCertificate {
    /// Verifies the decomposition against the symbol and derives the status.
    pub fn new(symbol: FormalLSymbol, decomposition: MonomialDecomposition) -> Result<Self> {
        decomposition.verify()?;
        if decomposition.target != symbol.to_class_function()? {
            return Err(Error::VerificationFailed(
                "decomposition target differs from the symbol".into(),
            ));
        }
        let trivial_residual =
            decomposition.residual_char == ClassFunction::trivial(&decomposition.group);
        let status = if decomposition.residual_trivial_coeff.is_zero()
            && decomposition.trivial_multiplicity_of_terms()?.is_zero()
        {
            Status::Entire
        } else if trivial_residual {
            Status::HolomorphicExceptS1
        } else {
            return Err(Error::VerificationFailed(
                "nontrivial residual character".into(),
            ));
        };
        Ok(HolomorphyCertificate {
            symbol,
            decomposition,
            status,
        })
    }

    /// Re-checks the identity and the status from scratch.
    pub fn verify(&self) -> Result<()> {
        let again = HolomorphyCertificate::new(self.symbol.clone(), self.decomposition.clone())?;
        if again.status != self.status {
            return Err(Error::VerificationFailed(
                "status differs on recomputation".into(),
            ));
        }
        if self.status == Status::Entire {
            let one = ClassFunction::trivial(&self.decomposition.group);
            if !self.decomposition.target.inner_rational(&one)?.is_zero() {
                return Err(Error::VerificationFailed(
                    "entire symbol contains the trivial character".into(),
                ));
            }
        }
        Ok(())
    }
}

impl Serialize for HolomorphyCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let d = &self.decomposition;
        let mut st = s.serialize_struct("HolomorphyCertificate", 8)?;
        st.serialize_field("group", d.group.name())?;
        st.serialize_field("status", &self.status)?;
        st.serialize_field("symbol", &self.symbol)?;
        st.serialize_field("target", &d.target)?;
        st.serialize_field("residual_trivial", &d.residual_trivial_coeff.to_string())?;
        st.serialize_field("residual_char", &d.residual_char)?;
        st.serialize_field("anchor", &d.anchor)?;
        st.serialize_field("terms", &d.terms)?;
        st.end()
    }
}

/// `ζ_K = Π_χ L(s, χ)^{χ(1)}`, the symbol of `Reg_G`.
pub fn artin_takagi(g: &Group) -> Result<FormalLSymbol> {
    Ok(FormalLSymbol::from_exponents(
        g,
        &character_table(g)?.degrees(),
    ))
}

/// Symbol of `Ind_H^G 1_H`.
pub fn dedekind_symbol(g: &Group, h: &Group) -> Result<FormalLSymbol> {
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    FormalLSymbol::of_class_function(&ClassFunction::trivial(h).induce(g)?)
}

/// Certificate for `Ind_H^G 1 - 1_G`.
pub fn certify_quotient_uvdw(g: &Group, h: &Group) -> Result<HolomorphyCertificate> {
    let d = decompose_uvdw(g, h)?;
    let target = d.target.sub(&ClassFunction::trivial(g))?;
    let symbol = dedekind_symbol(g, h)?.div(&FormalLSymbol::of_class_function(
        &ClassFunction::trivial(g),
    )?)?;
    let out = MonomialDecomposition::new(g, target, 0, None, d.terms);
    HolomorphyCertificate::new(symbol, out)
}

/// Certificate for `Ind_{H1}^G 1 - Ind_{H2}^G 1` with `H1 ≤ H2`.
pub fn certify_relative(g: &Group, h1: &Group, h2: &Group) -> Result<HolomorphyCertificate> {
    if !h2.is_subgroup_of(g) || !h1.is_subgroup_of(h2) {
        return Err(Error::NotSubgroup);
    }
    let d = decompose_uvdw(h2, h1)?;
    let symbol = dedekind_symbol(g, h1)?.div(&dedekind_symbol(g, h2)?)?;
    let target = symbol.to_class_function()?;
    let out = MonomialDecomposition::new(g, target, 0, None, d.terms);
    HolomorphyCertificate::new(symbol, out)
}

/// `S_ψ`: linear characters of `G` restricting to `ψ`, by table index.
pub fn extensions_of(g: &Group, psi: &ClassFunction) -> Result<Vec<usize>> {
    let table = character_table(g)?;
    let h = psi.group();
    let mut out = Vec::new();
    for i in table.linear_indices() {
        if table.irr(i).rehome(g)?.restrict(h)? == *psi {
            out.push(i);
        }
    }
    Ok(out)
}

/// Certificate for `Ind_H^G ψ - Σ_{χ ∈ S_ψ} χ`.
pub fn certify_rr2(g: &Group, h: &Group, psi: &ClassFunction) -> Result<HolomorphyCertificate> {
    if !g.is_solvable() {
        return Err(Error::NotSolvable);
    }
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    if !psi.group().same_as(h) {
        return Err(Error::GroupMismatch);
    }
    if !psi.is_linear_character() {
        return Err(Error::NotLinear);
    }
    let psi = psi.rehome(h)?;
    let table = character_table(g)?;
    let s_psi = extensions_of(g, &psi)?;
    let ind = psi.induce(g)?;
    let Some(&first) = s_psi.first() else {
        let symbol = FormalLSymbol::of_class_function(&ind)?;
        let out = MonomialDecomposition::new(g, ind, 0, None, vec![MonomialTerm::unit(psi)]);
        return HolomorphyCertificate::new(symbol, out);
    };
    let hg1 = g.join(h, &g.commutator_subgroup());
    if s_psi.len() != g.index_in(&hg1) {
        return Err(Error::VerificationFailed(
            "|S_ψ| differs from [G : HG¹]".into(),
        ));
    }
    let chi0 = table.irr(first).rehome(g)?;
    let twisted = decompose_uvdw_level(g, h, 1)?.twist(&chi0)?;
    let mut ext = ClassFunction::zero(g);
    let mut exps = vec![0i64; table.len()];
    for &i in &s_psi {
        ext = ext.add(&table.irr(i).rehome(g)?)?;
        exps[i] = 1;
    }
    let anchor = twisted
        .anchor
        .as_ref()
        .expect("level certificate has an anchor");
    if anchor.induced(g)? != ext {
        return Err(Error::VerificationFailed(
            "Ind_{HG¹} χ0 differs from Σ S_ψ".into(),
        ));
    }
    let symbol =
        FormalLSymbol::of_class_function(&ind)?.div(&FormalLSymbol::from_exponents(g, &exps))?;
    let out = MonomialDecomposition::new(g, ind.sub(&ext)?, 0, None, twisted.terms);
    HolomorphyCertificate::new(symbol, out)
}

/// Certificate for `Ind_H^G ψ - Σ_{l(χ) ≤ i} (χ, Ind ψ)·χ`.
pub fn certify_level(
    g: &Group,
    h: &Group,
    psi: &ClassFunction,
    i: usize,
) -> Result<HolomorphyCertificate> {
    if !g.is_solvable() {
        return Err(Error::NotSolvable);
    }
    let psi = psi.rehome(h)?;
    let outcome = pairing_levels(g, h, &psi, i)?;
    let table = character_table(g)?;
    let levels = irreducible_levels(g)?;
    let ind = psi.induce(g)?;
    let mults = table.multiplicities(&ind.rehome(table.group())?)?;
    let high: Vec<i64> = mults
        .iter()
        .zip(&levels)
        .map(|(&m, &l)| if l > i { m } else { 0 })
        .collect();
    let symbol = FormalLSymbol::from_exponents(g, &high);
    let target = symbol.to_class_function()?;
    let terms = match outcome {
        PairingOutcome::NotTrivialOnIntersection { .. } => vec![MonomialTerm::unit(psi)],
        PairingOutcome::Extended { .. } => {
            let series = g.derived_series();
            let gi = &series[i.min(series.len() - 1)];
            let k = g.join(h, gi);
            let psi_k = extend_through_normal(&k, &psi, &ClassFunction::trivial(gi))?;
            let d = decompose_uvdw(&k, h)?;
            d.terms
                .into_iter()
                .map(|t| {
                    let lin = t.linear_char.twist(&psi_k.restrict(&t.subgroup)?)?;
                    Ok(MonomialTerm::new(lin, t.coefficient))
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    let out = MonomialDecomposition::new(g, target, 0, None, terms);
    HolomorphyCertificate::new(symbol, out)
}

/// `n` of the certified character computed term by term.
#[derive(Clone, Debug, Serialize)]
pub struct CertificateOrder {
    /// `Σ_χ a_χ·n(G, χ)` over the symbol.
    pub symbol_order: i64,
    /// `Σ coeff·n(L, λ)` over the monomial terms.
    pub term_order: String,
    pub consistent: bool,
    /// Every term has `n(L, λ) ≥ 0`.
    pub terms_nonnegative: bool,
}

/// Evaluates an order assignment on both sides of a certificate.
pub fn certificate_order(
    a: &OrderAssignment,
    cert: &HolomorphyCertificate,
) -> Result<CertificateOrder> {
    let d = &cert.decomposition;
    if !a.group().same_as(&d.group) {
        return Err(Error::GroupMismatch);
    }
    let symbol_order: i64 = cert
        .symbol
        .exponents
        .iter()
        .map(|(&c, &e)| e * a.base[c])
        .sum();
    let mut term_order = Rational::from_integer(a.base[0].into()) * &d.residual_trivial_coeff;
    let mut terms_nonnegative = true;
    for t in d.terms.iter().chain(d.anchor.iter()) {
        let n = a.n(&t.linear_char)?;
        terms_nonnegative &= n >= 0;
        term_order += Rational::from_integer(n.into()) * &t.coefficient;
    }
    Ok(CertificateOrder {
        symbol_order,
        consistent: term_order == Rational::from_integer(symbol_order.into()),
        term_order: term_order.to_string(),
        terms_nonnegative,
    })
}

/// Linear characters of `h` paired with the symbol of their induction.
pub fn induced_linear_symbols(g: &Group, h: &Group) -> Result<Vec<(ClassFunction, FormalLSymbol)>> {
    linear_characters(h)?
        .into_iter()
        .map(|psi| {
            let s = FormalLSymbol::of_class_function(&psi.induce(g)?)?;
            Ok((psi, s))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn a3_in_s3() -> (Group, Group) {
        let g = corpus::symmetric(3);
        let a3 = g.commutator_subgroup();
        (g, a3)
    }

    #[test]
    fn symbols() {
        let (g, a3) = a3_in_s3();
        let reg = artin_takagi(&g).unwrap();
        assert_eq!(
            reg.to_virtual().unwrap(),
            VirtualCharacter::from_ints(&[1, 1, 2])
        );
        let e = g.subgroup(vec![]).unwrap();
        assert_eq!(dedekind_symbol(&g, &e).unwrap(), reg);
        assert_eq!(
            dedekind_symbol(&g, &g).unwrap(),
            FormalLSymbol::from_exponents(&g, &[1])
        );
        assert_eq!(
            dedekind_symbol(&g, &a3).unwrap(),
            FormalLSymbol::from_exponents(&g, &[1, 1])
        );
        let t = artin_takagi(&corpus::trivial()).unwrap();
        assert_eq!(t.exponent(0), 1);
        assert!(reg.div(&reg).unwrap().is_one());
    }

    #[test]
    fn uvdw_certificates() {
        let (g, _) = a3_in_s3();
        let e = g.subgroup(vec![]).unwrap();
        let c = certify_quotient_uvdw(&g, &e).unwrap();
        assert_eq!(c.status, Status::Entire);
        assert_eq!(c.symbol, FormalLSymbol::from_exponents(&g, &[0, 1, 2]));
        c.verify().unwrap();
        let c = certify_quotient_uvdw(&g, &g).unwrap();
        assert!(c.symbol.is_one() && c.status == Status::Entire);
        assert!(matches!(
            certify_quotient_uvdw(&corpus::alternating(5), &corpus::alternating(5)),
            Err(Error::NotSolvable)
        ));
    }

    #[test]
    fn rr2_certificates() {
        let (g, a3) = a3_in_s3();
        let lin = linear_characters(&a3).unwrap();
        let c = certify_rr2(&g, &a3, &lin[1]).unwrap();
        assert_eq!(c.symbol, FormalLSymbol::from_exponents(&g, &[0, 0, 1]));
        assert_eq!(c.status, Status::Entire);
        let c2 = g
            .cyclic_subgroups()
            .into_iter()
            .find(|h| h.order() == 2)
            .unwrap();
        let sgn = linear_characters(&c2).unwrap().pop().unwrap();
        assert_eq!(extensions_of(&g, &sgn).unwrap(), vec![1]);
        let c = certify_rr2(&g, &c2, &sgn).unwrap();
        assert_eq!(c.symbol, FormalLSymbol::from_exponents(&g, &[0, 0, 1]));
        let c = certify_rr2(&g, &g, &ClassFunction::trivial(&g)).unwrap();
        assert!(c.symbol.is_one());
    }

    #[test]
    fn level_certificates() {
        let (g, _) = a3_in_s3();
        let e = g.subgroup(vec![]).unwrap();
        let one = ClassFunction::trivial(&e);
        let c = certify_level(&g, &e, &one, 1).unwrap();
        assert_eq!(c.symbol, FormalLSymbol::from_exponents(&g, &[0, 0, 2]));
        assert_eq!(c.status, Status::Entire);
        let c = certify_level(&g, &e, &one, 5).unwrap();
        assert!(c.symbol.is_one());
        let q8 = corpus::quaternion();
        for h in q8.subgroups().unwrap() {
            for psi in linear_characters(&h).unwrap() {
                for i in 0..3 {
                    certify_level(&q8, &h, &psi, i).unwrap().verify().unwrap();
                }
            }
        }
    }
}
