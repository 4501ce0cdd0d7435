//! Supercharacter theories `(X, K)`: verification, enumeration, compatible
//! pairs, superinduction, super Heilbronn characters and products through a
//! normal subgroup.

mod enumerate;
mod heilbronn;
mod product;

use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::chartab::{character_table, CharacterTable};
use crate::classfun::ClassFunction;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::Group;

pub use enumerate::{enumerate_scts, enumerate_scts_with_cap, DEFAULT_CLASS_CAP};
pub use heilbronn::{
    super_heilbronn, supercharacter_orders, theorem_lo_check, LoReport, SuperHeilbronn,
};
pub use product::{hendrickson_product, is_g_invariant};

/// A verified supercharacter theory. Superclasses are stored as sets of
/// conjugacy-class indices; parts are sorted and ordered by least member.
#[derive(Clone, Debug)]
pub struct SupercharacterTheory {
    group: Group,
    table: Arc<CharacterTable>,
    x: Vec<Vec<usize>>,
    k: Vec<Vec<usize>>,
    supercharacters: Vec<ClassFunction>,
    superclass_of_class: Vec<usize>,
}

/// Outcome of checking the axioms on a candidate pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SctReport {
    pub identity_singleton: bool,
    pub sizes_match: bool,
    pub constant_on_superclasses: bool,
    pub unions_of_classes: bool,
    pub orthogonal: bool,
    pub sums_to_regular: bool,
    pub valid: bool,
}

fn check_partition(parts: &[Vec<usize>], n: usize, what: &str) -> Result<()> {
    let mut seen = vec![false; n];
    for p in parts {
        if p.is_empty() {
            return Err(Error::NotPartition(format!("{what} has an empty part")));
        }
        for &i in p {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotPartition(format!(
                    "{what} repeats or exceeds index {i}"
                )));
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotPartition(format!(
            "{what} does not cover everything"
        )));
    }
    Ok(())
}

/// `σ_x = Σ_{χ ∈ x} χ(1)·χ`.
fn supercharacter(table: &CharacterTable, part: &[usize]) -> ClassFunction {
    let mut acc = ClassFunction::zero(table.group());
    for &i in part {
        let chi = table.irr(i);
        acc = acc
            .add(&chi.scale(&chi.degree().expect_rational().expect("integral degree")))
            .unwrap();
    }
    acc
}

fn canonical(mut parts: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for p in parts.iter_mut() {
        p.sort_unstable();
    }
    parts.sort();
    parts
}

/// Checks the axioms for `X` (irreducible indices) and `K` (element indices).
pub fn verify_sct(g: &Group, x: &[Vec<usize>], k: &[Vec<usize>]) -> Result<SctReport> {
    let table = character_table(g)?;
    let g = table.group();
    check_partition(x, table.len(), "X")?;
    check_partition(k, g.order(), "K")?;
    let identity_singleton = k.iter().any(|p| p == &[0]);
    let sizes_match = x.len() == k.len();
    let member: Vec<usize> = {
        let mut m = vec![0; g.order()];
        for (pi, p) in k.iter().enumerate() {
            for &e in p {
                m[e] = pi;
            }
        }
        m
    };
    let unions_of_classes = g
        .conjugacy_classes()
        .iter()
        .all(|c| c.members.iter().all(|&e| member[e] == member[c.members[0]]));
    let sups: Vec<ClassFunction> = x.iter().map(|p| supercharacter(&table, p)).collect();
    let constant_on_superclasses = sups
        .iter()
        .all(|s| k.iter().all(|p| p.iter().all(|&e| s.at(e) == s.at(p[0]))));
    let mut orthogonal = true;
    for (i, a) in sups.iter().enumerate() {
        for (j, b) in sups.iter().enumerate().skip(i) {
            let ip = a.inner_product(b)?;
            let want = if i == j {
                a.degree().clone()
            } else {
                Cyclotomic::zero()
            };
            orthogonal &= ip == want;
        }
    }
    let mut total = ClassFunction::zero(g);
    for s in &sups {
        total = total.add(s)?;
    }
    let sums_to_regular = total == ClassFunction::regular(g);
    let valid = identity_singleton
        && sizes_match
        && constant_on_superclasses
        && unions_of_classes
        && orthogonal
        && sums_to_regular;
    Ok(SctReport {
        identity_singleton,
        sizes_match,
        constant_on_superclasses,
        unions_of_classes,
        orthogonal,
        sums_to_regular,
        valid,
    })
}

impl SupercharacterTheory {
    /// Builds and verifies a theory from `X` and superclasses given as element sets.
    pub fn from_elements(g: &Group, x: Vec<Vec<usize>>, k: Vec<Vec<usize>>) -> Result<Self> {
        let report = verify_sct(g, &x, &k)?;
        if !report.valid {
            return Err(Error::VerificationFailed(format!(
                "not a supercharacter theory: {report:?}"
            )));
        }
        let table = character_table(g)?;
        let tg = table.group().clone();
        let k_classes = k
            .iter()
            .map(|p| {
                let mut cs: Vec<usize> = p.iter().map(|&e| tg.class_of(e)).collect();
                cs.sort_unstable();
                cs.dedup();
                cs
            })
            .collect();
        Ok(Self::assemble(g, table, x, k_classes))
    }

    /// Builds a theory from superclasses given as conjugacy-class index sets,
    /// without re-verifying.
    fn assemble(
        g: &Group,
        table: Arc<CharacterTable>,
        x: Vec<Vec<usize>>,
        k: Vec<Vec<usize>>,
    ) -> Self {
        let x = canonical(x);
        let k = canonical(k);
        let mut superclass_of_class = vec![0; g.num_classes()];
        for (i, p) in k.iter().enumerate() {
            for &c in p {
                superclass_of_class[c] = i;
            }
        }
        let supercharacters = x
            .iter()
            .map(|p| {
                supercharacter(&table, p)
                    .rehome(g)
                    .expect("same element set")
            })
            .collect();
        SupercharacterTheory {
            group: g.clone(),
            table,
            x,
            k,
            supercharacters,
            superclass_of_class,
        }
    }

    /// Irreducibles and conjugacy classes as singletons.
    pub fn classical(g: &Group) -> Result<Self> {
        let table = character_table(g)?;
        let x = (0..table.len()).map(|i| vec![i]).collect();
        let k = (0..g.num_classes()).map(|c| vec![c]).collect();
        Ok(Self::assemble(g, table, x, k))
    }

    /// `X = {{1_G}, Irr ∖ {1_G}}`, `K = {{e}, G ∖ {e}}`.
    pub fn max(g: &Group) -> Result<Self> {
        let table = character_table(g)?;
        let (x, k) = if g.order() == 1 {
            (vec![vec![0]], vec![vec![0]])
        } else {
            (
                vec![vec![0], (1..table.len()).collect()],
                vec![vec![0], (1..g.num_classes()).collect()],
            )
        };
        Ok(Self::assemble(g, table, x, k))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn x(&self) -> &[Vec<usize>] {
        &self.x
    }

    /// Superclasses as conjugacy-class index sets.
    pub fn k(&self) -> &[Vec<usize>] {
        &self.k
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// Superclasses as sorted element-index sets.
    pub fn k_elements(&self) -> Vec<Vec<usize>> {
        self.k
            .iter()
            .map(|p| {
                let mut v: Vec<usize> = p
                    .iter()
                    .flat_map(|&c| self.group.conjugacy_classes()[c].members.iter().copied())
                    .collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    pub fn supercharacters(&self) -> &[ClassFunction] {
        &self.supercharacters
    }

    pub fn superclass_of_element(&self, e: usize) -> usize {
        self.superclass_of_class[self.group.class_of(e)]
    }

    pub fn superclass_size(&self, s: usize) -> usize {
        let sizes = self.group.class_sizes();
        self.k[s].iter().map(|&c| sizes[c]).sum()
    }

    /// Same group element set and identical partitions.
    pub fn same_as(&self, other: &SupercharacterTheory) -> bool {
        self.group.same_as(&other.group) && self.x == other.x && self.k == other.k
    }

    pub fn to_file(&self) -> TheoryFile {
        TheoryFile {
            group: self.group.name().to_string(),
            x: self.x.clone(),
            k: self.k_elements(),
        }
    }
}

impl Serialize for SupercharacterTheory {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SupercharacterTheory", 3)?;
        st.serialize_field("group", self.group.name())?;
        st.serialize_field("X", &self.x)?;
        st.serialize_field("K", &self.k_elements())?;
        st.end()
    }
}

/// On-disk theory: `{"group", "X": [[irr indices]], "K": [[element ids]]}`.
#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct TheoryFile {
    pub group: String,
    #[serde(rename = "X")]
    pub x: Vec<Vec<usize>>,
    #[serde(rename = "K")]
    pub k: Vec<Vec<usize>>,
}

impl TheoryFile {
    pub fn build(&self, g: &Group) -> Result<SupercharacterTheory> {
        SupercharacterTheory::from_elements(g, self.x.clone(), self.k.clone())
    }
}

/// A function constant on superclasses, one value per superclass.
#[derive(Clone, Debug)]
pub struct SuperclassFunction {
    pub theory: Arc<SupercharacterTheory>,
    pub values: Vec<Cyclotomic>,
}

impl SuperclassFunction {
    /// Fails unless `f` is constant on every superclass.
    pub fn from_class_function(
        theory: &Arc<SupercharacterTheory>,
        f: &ClassFunction,
    ) -> Result<Self> {
        let f = f.rehome(&theory.group)?;
        let mut values = Vec::with_capacity(theory.len());
        for part in &theory.k {
            let v = f.value(part[0]).clone();
            if part.iter().any(|&c| *f.value(c) != v) {
                return Err(Error::VerificationFailed(
                    "not constant on a superclass".into(),
                ));
            }
            values.push(v);
        }
        Ok(SuperclassFunction {
            theory: theory.clone(),
            values,
        })
    }

    pub fn to_class_function(&self) -> ClassFunction {
        let th = &self.theory;
        let vals = (0..th.group.num_classes())
            .map(|c| self.values[th.superclass_of_class[c]].clone())
            .collect();
        ClassFunction::new(th.group.clone(), vals).expect("one value per class")
    }

    pub fn inner_product(&self, other: &SuperclassFunction) -> Result<Cyclotomic> {
        self.to_class_function()
            .inner_product(&other.to_class_function())
    }
}

impl Serialize for SuperclassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SuperclassFunction", 2)?;
        st.serialize_field("group", self.theory.group.name())?;
        st.serialize_field("values", &self.values)?;
        st.end()
    }
}

/// `SCl_H(h) ⊆ SCl_G(h)` for every `h ∈ H`.
pub fn compatible(th_h: &SupercharacterTheory, th_g: &SupercharacterTheory) -> Result<bool> {
    let (h, g) = (&th_h.group, &th_g.group);
    if !h.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let target =
        |e: usize| th_g.superclass_of_element(g.index_of(h.element(e)).expect("subgroup element"));
    let mut image = vec![usize::MAX; th_h.len()];
    for e in 0..h.order() {
        let s = th_h.superclass_of_element(e);
        let t = target(e);
        if image[s] == usize::MAX {
            image[s] = t;
        } else if image[s] != t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `SInd φ(g) = [G:H] / |SCl_G(g)| · Σ_{T ⊆ SCl_G(g)} |T|·φ(T)` over the
/// superclasses `T` of `H`.
pub fn superinduce(
    phi: &SuperclassFunction,
    th_g: &Arc<SupercharacterTheory>,
) -> Result<SuperclassFunction> {
    let th_h = &phi.theory;
    if !compatible(th_h, th_g)? {
        return Err(Error::NotCompatible);
    }
    let (h, g) = (&th_h.group, &th_g.group);
    let mut buckets = vec![Cyclotomic::zero(); th_g.len()];
    for (t, part) in th_h.k.iter().enumerate() {
        let rep = h.conjugacy_classes()[part[0]].members[0];
        let s = th_g.superclass_of_element(g.index_of(h.element(rep)).expect("subgroup element"));
        let size = Rational::from_integer((th_h.superclass_size(t) as i64).into());
        buckets[s] += &phi.values[t].scale(&size);
    }
    let index = Rational::new((g.order() as i64).into(), (h.order() as i64).into());
    let values = buckets
        .into_iter()
        .enumerate()
        .map(|(s, b)| {
            b.scale(&(&index / Rational::from_integer((th_g.superclass_size(s) as i64).into())))
        })
        .collect();
    Ok(SuperclassFunction {
        theory: th_g.clone(),
        values,
    })
}

/// `(SInd τ, σ) = (τ, σ|_H)` for every supercharacter `τ` of `H` and `σ` of `G`.
pub fn super_frobenius_check(
    th_h: &Arc<SupercharacterTheory>,
    th_g: &Arc<SupercharacterTheory>,
) -> Result<bool> {
    for tau in &th_h.supercharacters {
        let tau_s = SuperclassFunction::from_class_function(th_h, tau)?;
        let ind = superinduce(&tau_s, th_g)?.to_class_function();
        for sigma in &th_g.supercharacters {
            if ind.inner_product(sigma)? != tau.inner_product(&sigma.restrict(&th_h.group)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn classical_and_max_verify() {
        for g in [
            corpus::symmetric(3),
            corpus::quaternion(),
            corpus::cyclic(5),
            corpus::trivial(),
        ] {
            for th in [
                SupercharacterTheory::classical(&g).unwrap(),
                SupercharacterTheory::max(&g).unwrap(),
            ] {
                let f = th.to_file();
                assert!(verify_sct(&g, &f.x, &f.k).unwrap().valid);
            }
        }
    }

    #[test]
    fn identity_must_be_alone() {
        let g = corpus::cyclic(2);
        let r = verify_sct(&g, &[vec![0, 1]], &[vec![0, 1]]).unwrap();
        assert!(!r.valid && !r.identity_singleton);
        assert!(matches!(
            verify_sct(&g, &[vec![0]], &[vec![0, 1]]),
            Err(Error::NotPartition(_))
        ));
    }

    #[test]
    fn superinduction_identity_and_reciprocity() {
        let g = corpus::symmetric(3);
        let th = Arc::new(SupercharacterTheory::max(&g).unwrap());
        let f = SuperclassFunction::from_class_function(&th, &th.supercharacters()[1]).unwrap();
        assert_eq!(superinduce(&f, &th).unwrap().values, f.values);
        let subs = g.subgroups().unwrap();
        for h in &subs {
            for th_h in [
                SupercharacterTheory::classical(h).unwrap(),
                SupercharacterTheory::max(h).unwrap(),
            ] {
                let th_h = Arc::new(th_h);
                for th_g in [
                    SupercharacterTheory::classical(&g).unwrap(),
                    SupercharacterTheory::max(&g).unwrap(),
                ] {
                    let th_g = Arc::new(th_g);
                    if compatible(&th_h, &th_g).unwrap() {
                        assert!(super_frobenius_check(&th_h, &th_g).unwrap());
                    }
                }
            }
        }
    }
}
