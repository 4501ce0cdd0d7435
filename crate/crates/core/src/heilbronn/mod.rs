//! Order assignments `n(H, φ)`, their Heilbronn characters and inequalities.
//!
//! An assignment is fixed by integers `n(G, χ)` on `Irr(G)` and extended to
//! every character `φ` of every subgroup `H` by
//! `n(H, φ) = Σ_χ (Ind_H^G φ, χ)·n(G, χ)`, so additivity and induction
//! invariance hold identically.

mod search;
mod structure;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_integer::Integer;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

use crate::chartab::{character_table, CharacterTable};
use crate::classfun::{ClassFunction, VirtualCharacter};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::monomial::FAMILY_SUBGROUP_CAP;

pub use search::{search_admissible, search_with_data, CheckTally, SearchReport, SEARCH_GUARD};
pub use structure::{has_abelian_normal_sylow, huppert_predicts_m_group, is_supersolvable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Non-negativity on cyclic subgroups for all characters.
    Weak,
    /// Non-negativity on all subgroups for linear characters.
    Arithmetic,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak" => Ok(Mode::Weak),
            "arithmetic" => Ok(Mode::Arithmetic),
            _ => Err(Error::Schema(format!("unknown mode {s:?}"))),
        }
    }
}

/// `Ind_H^G φ` for one `φ ∈ Irr(H)`, in multiplicities over `Irr(G)`.
#[derive(Clone, Debug)]
pub struct InducedRow {
    pub phi: ClassFunction,
    pub linear: bool,
    pub mults: Vec<i64>,
}

/// Everything about `G` that an assignment needs, computed once.
#[derive(Debug)]
pub struct HeilbronnData {
    pub table: Arc<CharacterTable>,
    pub degrees: Vec<i64>,
    pub linear: Vec<usize>,
    pub subgroups: Vec<Group>,
    pub cyclic: Vec<bool>,
    /// Per subgroup, one row per irreducible of the subgroup.
    pub induced: Vec<Vec<InducedRow>>,
    /// Distinct rows for cyclic subgroups and all irreducibles.
    pub weak_rows: Vec<Vec<i64>>,
    /// Distinct rows for all subgroups and linear characters.
    pub ach3_rows: Vec<Vec<i64>>,
    /// `Ind_H^G 1_H` per subgroup.
    pub ind_trivial: Vec<Vec<i64>>,
    /// `(Ind_H^G φ, χ)` with `χ` linear on `G` and `χ|_H = φ`, distinct.
    pub linear_restrictions: Vec<(Vec<i64>, usize)>,
    pub solvable: bool,
    /// Levels of the irreducibles (solvable groups only).
    pub levels: Vec<usize>,
    /// `Ind_{G^i}^G 1` for each term of the derived series.
    pub derived_ind: Vec<Vec<i64>>,
}

fn dedup(rows: &mut Vec<Vec<i64>>) {
    let mut seen = std::collections::HashSet::new();
    rows.retain(|r| seen.insert(r.clone()));
}

impl HeilbronnData {
    pub fn new(g: &Group) -> Result<Arc<Self>> {
        let table = character_table(g)?;
        let tg = table.group().clone();
        let degrees = table.degrees();
        let linear = table.linear_indices();
        let subgroups = tg.subgroups_with_cap(FAMILY_SUBGROUP_CAP)?;
        let cyclic_sets: Vec<Group> = tg.cyclic_subgroups();
        let cyclic: Vec<bool> = subgroups
            .iter()
            .map(|h| cyclic_sets.iter().any(|c| c.same_as(h)))
            .collect();
        let mut induced = Vec::with_capacity(subgroups.len());
        for h in &subgroups {
            let th = character_table(h)?;
            let rows = th
                .irreducibles()
                .iter()
                .map(|phi| {
                    let phi = phi.rehome(h)?;
                    let mults = table.multiplicities(&phi.induce(&tg)?)?;
                    Ok(InducedRow {
                        linear: phi.degree_i64() == Some(1),
                        phi,
                        mults,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            induced.push(rows);
        }
        let mut weak_rows = Vec::new();
        let mut ach3_rows = Vec::new();
        for (s, rows) in induced.iter().enumerate() {
            for r in rows {
                if cyclic[s] {
                    weak_rows.push(r.mults.clone());
                }
                if r.linear {
                    ach3_rows.push(r.mults.clone());
                }
            }
        }
        dedup(&mut weak_rows);
        dedup(&mut ach3_rows);
        let ind_trivial = induced.iter().map(|rows| rows[0].mults.clone()).collect();
        let mut linear_restrictions: Vec<(Vec<i64>, usize)> = Vec::new();
        for (s, rows) in induced.iter().enumerate() {
            for &c in &linear {
                let res = table.irr(c).restrict(&subgroups[s])?;
                if let Some(r) = rows.iter().find(|r| r.linear && r.phi == res) {
                    let entry = (r.mults.clone(), c);
                    if !linear_restrictions.contains(&entry) {
                        linear_restrictions.push(entry);
                    }
                }
            }
        }
        let solvable = tg.is_solvable();
        let (levels, derived_ind) = if solvable {
            let series = tg.derived_series();
            let levels = table
                .irreducibles()
                .iter()
                .map(|c| c.level(&series))
                .collect::<Result<Vec<_>>>()?;
            let derived_ind = series
                .iter()
                .map(|t| table.multiplicities(&ClassFunction::trivial(t).induce(&tg)?))
                .collect::<Result<Vec<_>>>()?;
            (levels, derived_ind)
        } else {
            (vec![], vec![])
        };
        Ok(Arc::new(HeilbronnData {
            table,
            degrees,
            linear,
            subgroups,
            cyclic,
            induced,
            weak_rows,
            ach3_rows,
            ind_trivial,
            linear_restrictions,
            solvable,
            levels,
            derived_ind,
        }))
    }

    pub fn group(&self) -> &Group {
        self.table.group()
    }

    /// Number of nontrivial derived-series terms.
    pub fn derived_length(&self) -> usize {
        self.derived_ind.len().saturating_sub(1)
    }

    fn derived_row(&self, i: usize) -> &[i64] {
        &self.derived_ind[i.min(self.derived_ind.len() - 1)]
    }
}

pub(crate) fn dot(row: &[i64], n: &[i64]) -> i64 {
    row.iter().zip(n).map(|(a, b)| a * b).sum()
}

/// An integer vector `n(G, χ)` together with its admissibility flags.
#[derive(Clone, Debug)]
pub struct OrderAssignment {
    pub data: Arc<HeilbronnData>,
    pub base: Vec<i64>,
    pub label: String,
    pub mode: Mode,
    pub weak: bool,
    pub ach3: bool,
}

/// Builds an assignment and computes its admissibility flags exhaustively.
pub fn make_assignment(
    table: &CharacterTable,
    base: Vec<i64>,
    mode: Mode,
) -> Result<OrderAssignment> {
    let data = HeilbronnData::new(table.group())?;
    OrderAssignment::with_data(data, base, mode)
}

impl OrderAssignment {
    pub fn with_data(data: Arc<HeilbronnData>, base: Vec<i64>, mode: Mode) -> Result<Self> {
        if base.len() != data.table.len() {
            return Err(Error::Schema(format!(
                "base has {} entries for {} irreducibles",
                base.len(),
                data.table.len()
            )));
        }
        let weak = data.weak_rows.iter().all(|r| dot(r, &base) >= 0);
        let ach3 = data.ach3_rows.iter().all(|r| dot(r, &base) >= 0);
        Ok(OrderAssignment {
            data,
            base,
            label: "s0".into(),
            mode,
            weak,
            ach3,
        })
    }

    pub fn group(&self) -> &Group {
        self.data.group()
    }

    /// Admissible for its own mode.
    pub fn admissible(&self) -> bool {
        match self.mode {
            Mode::Weak => self.weak,
            Mode::Arithmetic => self.ach3,
        }
    }

    /// `n(H, φ)` for a character `φ` of a subgroup.
    pub fn n(&self, phi: &ClassFunction) -> Result<i64> {
        let g = self.group();
        if !phi.group().is_subgroup_of(g) {
            return Err(Error::NotSubgroup);
        }
        Ok(dot(
            &self.data.table.multiplicities(&phi.induce(g)?)?,
            &self.base,
        ))
    }

    /// `n(G, Reg_G) = Σ χ(1)·n(G, χ)`.
    pub fn n_reg(&self) -> i64 {
        dot(&self.data.degrees, &self.base)
    }

    /// `Θ_G = Σ n(G, χ)·χ` as a class function.
    pub fn theta_g(&self) -> ClassFunction {
        VirtualCharacter::from_ints(&self.base).to_class_function(&self.data.table)
    }
}

impl Serialize for OrderAssignment {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Base<'a>(&'a [i64]);
        impl Serialize for Base<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (i, v) in self.0.iter().enumerate() {
                    m.serialize_entry(&i.to_string(), v)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("OrderAssignment", 6)?;
        st.serialize_field("group", self.group().name())?;
        st.serialize_field("label", &self.label)?;
        st.serialize_field("mode", &self.mode)?;
        st.serialize_field("base", &Base(&self.base))?;
        st.serialize_field("weak", &self.weak)?;
        st.serialize_field("ach3", &self.ach3)?;
        st.end()
    }
}

/// On-disk assignment: `{"group", "label", "mode", "base": {"i": n}}`.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct AssignmentFile {
    pub group: String,
    #[serde(default = "default_label")]
    pub label: String,
    pub mode: Mode,
    pub base: BTreeMap<String, i64>,
}

fn default_label() -> String {
    "s0".into()
}

impl AssignmentFile {
    /// Dense base vector; missing indices are zero.
    pub fn base_vector(&self, len: usize) -> Result<Vec<i64>> {
        let mut v = vec![0; len];
        for (k, &x) in &self.base {
            let i: usize = k
                .parse()
                .map_err(|_| Error::Schema(format!("bad character index {k:?}")))?;
            *v.get_mut(i)
                .ok_or_else(|| Error::Schema(format!("character index {i} out of range")))? = x;
        }
        Ok(v)
    }
}

/// `Θ_H = Σ_{φ ∈ Irr(H)} n(H, φ)·φ`.
#[derive(Clone, Debug)]
pub struct HeilbronnCharacter {
    pub subgroup: Group,
    pub table: Arc<CharacterTable>,
    pub virtual_char: VirtualCharacter,
}

impl HeilbronnCharacter {
    pub fn class_function(&self) -> Result<ClassFunction> {
        self.virtual_char
            .to_class_function(&self.table)
            .rehome(&self.subgroup)
    }
}

impl Serialize for HeilbronnCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let gens: Vec<Vec<usize>> = self
            .subgroup
            .generators()
            .iter()
            .map(|p| p.one_based())
            .collect();
        let mut st = s.serialize_struct("HeilbronnCharacter", 3)?;
        st.serialize_field("subgroup_gens", &gens)?;
        st.serialize_field("subgroup_order", &self.subgroup.order())?;
        st.serialize_field("virtual", &self.virtual_char)?;
        st.end()
    }
}

/// `Θ_H` computed through induction, independently of restriction.
pub fn heilbronn_character(a: &OrderAssignment, h: &Group) -> Result<HeilbronnCharacter> {
    let g = a.group();
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let th = character_table(h)?;
    let coeffs = th
        .irreducibles()
        .iter()
        .map(|phi| a.n(&phi.rehome(h)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(HeilbronnCharacter {
        subgroup: h.clone(),
        table: th,
        virtual_char: VirtualCharacter::from_ints(&coeffs),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub checked: usize,
    /// Orders of subgroups where `Θ_G|_H ≠ Θ_H`.
    pub failures: Vec<usize>,
    pub holds: bool,
}

/// `Θ_G|_H = Θ_H` on cyclic subgroups (weak) or all subgroups (arithmetic).
pub fn check_stark_restriction(a: &OrderAssignment) -> Result<RestrictionReport> {
    let theta = a.theta_g();
    let mut checked = 0;
    let mut failures = Vec::new();
    for (s, h) in a.data.subgroups.iter().enumerate() {
        if a.mode == Mode::Weak && !a.data.cyclic[s] {
            continue;
        }
        checked += 1;
        let rows = &a.data.induced[s];
        let mut lhs = ClassFunction::zero(h);
        for r in rows {
            lhs = lhs.add(&r.phi.scale_int(dot(&r.mults, &a.base)))?;
        }
        if lhs != theta.restrict(h)? {
            failures.push(h.order());
        }
    }
    Ok(RestrictionReport {
        checked,
        holds: failures.is_empty(),
        failures,
    })
}

/// `lhs ≤ rhs` style comparison; `precondition` records whether the
/// hypotheses that make it a theorem were verified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub lhs: i64,
    pub rhs: i64,
    pub holds: bool,
    pub precondition: bool,
}

impl Inequality {
    fn le(lhs: i64, rhs: i64, precondition: bool) -> Self {
        Inequality {
            lhs,
            rhs,
            holds: lhs <= rhs,
            precondition,
        }
    }

    pub fn tight(&self) -> bool {
        self.lhs == self.rhs
    }

    /// Errors unless the precondition holds and the inequality is satisfied.
    pub fn asserted(self) -> Result<Self> {
        if !self.precondition {
            return Err(Error::PreconditionUnverified(
                "admissibility flag is false".into(),
            ));
        }
        if !self.holds {
            return Err(Error::VerificationFailed(format!(
                "{} > {}",
                self.lhs, self.rhs
            )));
        }
        Ok(self)
    }
}

fn sum_sq<'a>(it: impl Iterator<Item = &'a i64>) -> i64 {
    it.map(|x| x * x).sum()
}

/// `Σ n(G, χ)² ≤ n(G, Reg_G)²`.
pub fn foote_murty_gap(a: &OrderAssignment) -> Inequality {
    let r = a.n_reg();
    Inequality::le(sum_sq(a.base.iter()), r * r, a.weak)
}

/// `|n(G, 1_G)| ≤ |n(G, Reg_G)|`.
pub fn aramata_brauer(a: &OrderAssignment) -> Inequality {
    Inequality::le(a.base[0].abs(), a.n_reg().abs(), a.weak)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StarkLemmaReport {
    /// `n(G, Reg_G) ≤ 1`.
    pub applicable: bool,
    pub holds: bool,
    pub precondition: bool,
}

/// If `n(G, Reg) ≤ 1` then every `n(G, χ) ≥ 0`; at `n(G, Reg) = 1` the only
/// nonzero value is a `1` on a linear character.
pub fn stark_lemma_check(a: &OrderAssignment) -> StarkLemmaReport {
    let (applicable, holds) = stark_lemma_raw(&a.data, &a.base);
    StarkLemmaReport {
        applicable,
        holds,
        precondition: a.weak,
    }
}

pub(crate) fn stark_lemma_raw(d: &HeilbronnData, n: &[i64]) -> (bool, bool) {
    let r = dot(&d.degrees, n);
    if r > 1 {
        return (false, true);
    }
    let nonneg = n.iter().all(|&x| x >= 0);
    let holds = if r <= 0 {
        n.iter().all(|&x| x == 0)
    } else {
        let nz: Vec<usize> = (0..n.len()).filter(|&i| n[i] != 0).collect();
        nonneg && nz.len() == 1 && n[nz[0]] == 1 && d.linear.contains(&nz[0])
    };
    (true, holds)
}

fn require_solvable(a: &OrderAssignment) -> Result<()> {
    if a.data.solvable {
        Ok(())
    } else {
        Err(Error::NotSolvable)
    }
}

/// `Σ_{χ ≠ χ0} n(G, χ)² ≤ (n(G, Reg) − n(G, χ0))²` for linear `χ0`.
pub fn truncated_inequality(a: &OrderAssignment, chi0: usize) -> Result<Inequality> {
    require_solvable(a)?;
    if !a.data.linear.contains(&chi0) {
        return Err(Error::NotLinear);
    }
    let lhs = sum_sq(
        a.base
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != chi0)
            .map(|(_, v)| v),
    );
    let rhs = a.n_reg() - a.base[chi0];
    Ok(Inequality::le(lhs, rhs * rhs, a.ach3))
}

/// `Σ_{l(χ)=i} n(G, χ)² ≤ (n(G, Ind_{G^i} 1) − n(G, Ind_{G^{i−1}} 1))²` for `i ≥ 1`.
pub fn level_inequality(a: &OrderAssignment, i: usize) -> Result<Inequality> {
    require_solvable(a)?;
    if i == 0 {
        return Err(Error::OutOfRange("level index must be at least 1".into()));
    }
    Ok(level_inequality_raw(&a.data, &a.base, i, a.ach3))
}

pub(crate) fn level_inequality_raw(
    d: &HeilbronnData,
    n: &[i64],
    i: usize,
    pre: bool,
) -> Inequality {
    let lhs = sum_sq((0..n.len()).filter(|&c| d.levels[c] == i).map(|c| &n[c]));
    let rhs = dot(d.derived_row(i), n) - dot(d.derived_row(i - 1), n);
    Inequality::le(lhs, rhs * rhs, pre)
}

/// `n(G, Ind_H^G 1_H) − n(G, 1_G)`, non-negative for admissible assignments.
pub fn uvdw_gap(a: &OrderAssignment, h: &Group) -> Result<i64> {
    require_solvable(a)?;
    let ind = ClassFunction::trivial(h);
    Ok(a.n(&ind)? - a.base[0])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub gap: i64,
    /// Greatest common divisor of the degrees above level `i` (0 if none).
    pub divisor: i64,
    pub not_one: bool,
    pub divisible: bool,
    pub precondition: bool,
}

/// `n(G, Reg) − n(G, Ind_{G^i} 1)` is never `1` and is a non-negative multiple
/// of the gcd of the degrees of characters of level `> i`.
pub fn gap_not_one_check(a: &OrderAssignment, i: usize) -> Result<GapReport> {
    require_solvable(a)?;
    if i == 0 {
        return Err(Error::OutOfRange("level index must be at least 1".into()));
    }
    let (gap, divisor, divisible) = level_gap_raw(&a.data, &a.base, i);
    Ok(GapReport {
        gap,
        divisor,
        not_one: gap != 1,
        divisible,
        precondition: a.ach3,
    })
}

pub(crate) fn level_gap_raw(d: &HeilbronnData, n: &[i64], i: usize) -> (i64, i64, bool) {
    let gap = dot(&d.degrees, n) - dot(d.derived_row(i), n);
    let divisor = (0..n.len())
        .filter(|&c| d.levels[c] > i)
        .fold(0i64, |acc, c| acc.gcd(&d.degrees[c]));
    let divisible = gap >= 0
        && if divisor == 0 {
            gap == 0
        } else {
            gap % divisor == 0
        };
    (gap, divisor, divisible)
}

/// `Θ_G = Θ1 − Θ2 + Θ3` with `Θ3` the non-faithful part and `−Θ2` the
/// negative part; a character may lie in both.
#[derive(Clone, Debug, Serialize)]
pub struct ThetaSplit {
    pub theta1: VirtualCharacter,
    pub theta2: VirtualCharacter,
    pub theta3: VirtualCharacter,
    pub reconstructs: bool,
    pub negatives_faithful: bool,
    pub negatives_not_induced: bool,
    pub theta2_theta3_orthogonal: bool,
    /// Irreducibles counted in both `Θ2` and `Θ3`.
    pub overlap: Vec<usize>,
}

/// Whether irreducible `χ` is induced from a character of a proper subgroup.
pub fn is_induced_from_proper(d: &HeilbronnData, chi: usize) -> bool {
    let g = d.group();
    let deg = d.degrees[chi];
    d.induced.iter().zip(&d.subgroups).any(|(rows, h)| {
        h.order() < g.order()
            && rows.iter().any(|r| {
                r.mults[chi] > 0
                    && r.phi.degree_i64().unwrap() * (g.order() / h.order()) as i64 == deg
            })
    })
}

pub fn theta_split(a: &OrderAssignment) -> ThetaSplit {
    let d = &a.data;
    let k = a.base.len();
    let faithful: Vec<bool> = d
        .table
        .irreducibles()
        .iter()
        .map(|c| c.is_faithful())
        .collect();
    let t3: Vec<i64> = (0..k)
        .map(|c| if faithful[c] { 0 } else { a.base[c] })
        .collect();
    let t2: Vec<i64> = (0..k)
        .map(|c| if a.base[c] < 0 { -a.base[c] } else { 0 })
        .collect();
    let t1: Vec<i64> = (0..k).map(|c| a.base[c] + t2[c] - t3[c]).collect();
    let reconstructs = (0..k).all(|c| t1[c] - t2[c] + t3[c] == a.base[c]);
    let negatives: Vec<usize> = (0..k).filter(|&c| a.base[c] < 0).collect();
    let overlap: Vec<usize> = negatives
        .iter()
        .copied()
        .filter(|&c| !faithful[c])
        .collect();
    ThetaSplit {
        theta1: VirtualCharacter::from_ints(&t1),
        theta2: VirtualCharacter::from_ints(&t2),
        theta3: VirtualCharacter::from_ints(&t3),
        reconstructs,
        negatives_faithful: overlap.is_empty(),
        negatives_not_induced: negatives.iter().all(|&c| !is_induced_from_proper(d, c)),
        theta2_theta3_orthogonal: dot(&t2, &t3) == 0,
        overlap,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn s3(base: Vec<i64>, mode: Mode) -> OrderAssignment {
        let t = character_table(&corpus::symmetric(3)).unwrap();
        make_assignment(&t, base, mode).unwrap()
    }

    #[test]
    fn degrees_base_is_regular() {
        let a = s3(vec![1, 1, 2], Mode::Arithmetic);
        assert!(a.weak && a.ach3);
        assert_eq!(a.theta_g(), ClassFunction::regular(a.group()));
        assert_eq!(
            foote_murty_gap(&a),
            Inequality {
                lhs: 6,
                rhs: 36,
                holds: true,
                precondition: true
            }
        );
        let t = truncated_inequality(&a, 0).unwrap();
        assert_eq!((t.lhs, t.rhs), (5, 25));
        let l = level_inequality(&a, 2).unwrap();
        assert_eq!((l.lhs, l.rhs), (4, 16));
        let l = level_inequality(&a, 1).unwrap();
        assert_eq!((l.lhs, l.rhs), (1, 1));
        assert!(check_stark_restriction(&a).unwrap().holds);
        assert!(!stark_lemma_check(&a).applicable);
    }

    #[test]
    fn zero_base() {
        let a = s3(vec![0, 0, 0], Mode::Weak);
        assert!(a.weak && a.ach3);
        assert_eq!(foote_murty_gap(&a).lhs, 0);
        let e = crate::group::PermGroup::trivial(3);
        assert_eq!(
            heilbronn_character(&a, &e).unwrap().virtual_char,
            VirtualCharacter::from_ints(&[0])
        );
    }

    #[test]
    fn split_predicates() {
        let a = s3(vec![0, -1, 1], Mode::Weak);
        let s = theta_split(&a);
        assert!(s.reconstructs);
        assert_eq!(s.theta2, VirtualCharacter::from_ints(&[0, 1, 0]));
        assert!(!s.negatives_faithful);
        let t = character_table(&corpus::quaternion()).unwrap();
        let a = make_assignment(&t, vec![0, 0, 0, 0, -1], Mode::Weak).unwrap();
        let s = theta_split(&a);
        assert!(s.negatives_faithful);
        assert!(!s.negatives_not_induced);
    }

    #[test]
    fn s3_weak_flag() {
        // Ind from A3 of the trivial character is 1 + sgn, so n = -1 there.
        assert!(!s3(vec![-1, 0, 1], Mode::Weak).weak);
        assert!(s3(vec![0, 0, 1], Mode::Weak).weak);
        assert!(s3(vec![0, 0, 1], Mode::Arithmetic).ach3);
    }
}
