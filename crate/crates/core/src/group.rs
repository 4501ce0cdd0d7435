//! Finite permutation groups with fully enumerated elements.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Perm;

pub const DEFAULT_ORDER_CAP: usize = 10_000;
pub const DEFAULT_SUBGROUP_CAP: usize = 48;
const MULT_TABLE_CAP: usize = 1024;

/// A conjugacy class; `members` are element indices in ascending order.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: Perm,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

struct ClassData {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

/// A permutation group. Elements are sorted lexicographically, so index 0 is
/// the identity and index order equals lexicographic order.
pub struct PermGroup {
    name: Option<String>,
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    fingerprint: u64,
    classes: OnceLock<ClassData>,
    table: OnceLock<Option<Vec<u32>>>,
    inverses: OnceLock<Vec<usize>>,
}

pub type Group = Arc<PermGroup>;

/// Serialized group file with 1-based images.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupFile {
    pub fn build(&self) -> Result<Group> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.len() != self.degree {
                    return Err(Error::InvalidPermutation(format!(
                        "generator of length {} on degree {}",
                        g.len(),
                        self.degree
                    )));
                }
                Perm::from_one_based(g)
            })
            .collect::<Result<Vec<_>>>()?;
        let g = PermGroup::closure(self.degree, gens)?;
        Ok(match &self.name {
            Some(n) => g.with_name(n),
            None => g,
        })
    }
}

/// Parses generator text, one permutation in cycle notation per line or
/// separated by `;`.
pub fn parse_cycle_text(text: &str, degree: usize) -> Result<Vec<Perm>> {
    text.split(['\n', ';'])
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| Perm::parse_cycles(l, degree))
        .collect()
}

impl PermGroup {
    pub fn closure(degree: usize, generators: Vec<Perm>) -> Result<Group> {
        Self::closure_with_cap(degree, generators, DEFAULT_ORDER_CAP)
    }

    pub fn closure_with_cap(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} instead of {degree}",
                    g.degree()
                )));
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::OrderCapExceeded {
                            what: "group order",
                            found: seen.len(),
                            cap,
                        });
                    }
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(Arc::new(Self::from_sorted(
            None, degree, generators, elements,
        )))
    }

    fn from_sorted(
        name: Option<String>,
        degree: usize,
        generators: Vec<Perm>,
        elements: Vec<Perm>,
    ) -> Self {
        let index = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut h = std::collections::hash_map::DefaultHasher::new();
        degree.hash(&mut h);
        elements.hash(&mut h);
        PermGroup {
            name,
            degree,
            generators,
            elements,
            index,
            fingerprint: h.finish(),
            classes: OnceLock::new(),
            table: OnceLock::new(),
            inverses: OnceLock::new(),
        }
    }

    /// Copy with a display name.
    pub fn with_name(self: &Group, name: &str) -> Group {
        Arc::new(Self::from_sorted(
            Some(name.to_string()),
            self.degree,
            self.generators.clone(),
            self.elements.clone(),
        ))
    }

    pub fn trivial(degree: usize) -> Group {
        PermGroup::closure(degree, vec![]).expect("trivial group")
    }

    pub fn name(&self) -> &str {
        self.name.as_deref().unwrap_or("G")
    }

    pub fn label(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn to_file(&self) -> GroupFile {
        GroupFile {
            name: self.name.clone(),
            degree: self.degree,
            generators: self.generators.iter().map(Perm::one_based).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    /// Same degree and same element set.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        std::ptr::eq(self, other)
            || (self.fingerprint == other.fingerprint
                && self.degree == other.degree
                && self.elements == other.elements)
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }

    fn mult_table(&self) -> Option<&Vec<u32>> {
        self.table
            .get_or_init(|| {
                let n = self.order();
                if n > MULT_TABLE_CAP {
                    return None;
                }
                let mut t = vec![0u32; n * n];
                for i in 0..n {
                    for j in 0..n {
                        let p = self.elements[i].compose(&self.elements[j]);
                        t[i * n + j] = self.index[&p] as u32;
                    }
                }
                Some(t)
            })
            .as_ref()
    }

    /// Index of `elements[i] * elements[j]` (apply `i` first).
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match self.mult_table() {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.index[&self.elements[i].compose(&self.elements[j])],
        }
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|p| self.index[&p.inverse()])
                .collect()
        })[i]
    }

    /// Index of `g⁻¹ x g`.
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.elements[i].order()
    }

    /// lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, p| num_integer::lcm(acc, p.order()))
    }

    pub fn pow(&self, i: usize, k: u64) -> usize {
        self.index[&self.elements[i].pow(k)]
    }

    fn class_data(&self) -> &ClassData {
        self.classes.get_or_init(|| {
            let n = self.order();
            let mut class_of = vec![usize::MAX; n];
            let mut raw: Vec<Vec<usize>> = Vec::new();
            for start in 0..n {
                if class_of[start] != usize::MAX {
                    continue;
                }
                let id = raw.len();
                let mut members = vec![start];
                class_of[start] = id;
                let mut k = 0;
                while k < members.len() {
                    let x = members[k];
                    for g in &self.generators {
                        let y = self.index[&self.elements[x].conjugate_by(g)];
                        if class_of[y] == usize::MAX {
                            class_of[y] = id;
                            members.push(y);
                        }
                    }
                    k += 1;
                }
                members.sort_unstable();
                raw.push(members);
            }
            // identity first, then by size, then by least member
            let mut order: Vec<usize> = (0..raw.len()).collect();
            order.sort_by_key(|&c| (raw[c][0] != 0, raw[c].len(), raw[c][0]));
            let mut remap = vec![0; raw.len()];
            for (new, &old) in order.iter().enumerate() {
                remap[old] = new;
            }
            let classes = order
                .iter()
                .map(|&c| ConjugacyClass {
                    representative: self.elements[raw[c][0]].clone(),
                    members: raw[c].clone(),
                })
                .collect();
            for c in class_of.iter_mut() {
                *c = remap[*c];
            }
            ClassData { classes, class_of }
        })
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.class_data().classes
    }

    pub fn num_classes(&self) -> usize {
        self.conjugacy_classes().len()
    }

    /// Class index of the element with index `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_data().class_of[i]
    }

    pub fn class_of_perm(&self, p: &Perm) -> Option<usize> {
        self.index_of(p).map(|i| self.class_of(i))
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.conjugacy_classes()
            .iter()
            .map(ConjugacyClass::size)
            .collect()
    }

    /// Class index of `x^k` for each class `x`.
    pub fn power_map(&self, k: u64) -> Vec<usize> {
        self.conjugacy_classes()
            .iter()
            .map(|c| self.class_of(self.pow(c.members[0], k)))
            .collect()
    }

    /// Class of the inverse of each class.
    pub fn inverse_classes(&self) -> Vec<usize> {
        self.conjugacy_classes()
            .iter()
            .map(|c| self.class_of(self.inv(c.members[0])))
            .collect()
    }

    /// Subgroup generated by `gens` (permutations of the same degree).
    pub fn subgroup(&self, gens: Vec<Perm>) -> Result<Group> {
        for g in &gens {
            if !self.contains(g) {
                return Err(Error::NotSubgroup);
            }
        }
        let mut gens = gens;
        gens.retain(|g| !g.is_identity());
        PermGroup::closure(self.degree, gens)
    }

    pub fn subgroup_from_indices(&self, idx: &[usize]) -> Group {
        let gens = idx.iter().map(|&i| self.elements[i].clone()).collect();
        self.subgroup(gens).expect("elements of the group")
    }

    /// Subgroup generated by two subgroups.
    pub fn join(&self, a: &PermGroup, b: &PermGroup) -> Group {
        let mut gens: Vec<Perm> = a.generators.clone();
        gens.extend(b.generators.iter().cloned());
        self.subgroup(gens).expect("subgroups of the same group")
    }

    pub fn intersection(&self, a: &PermGroup, b: &PermGroup) -> Group {
        let common: Vec<Perm> = a
            .elements
            .iter()
            .filter(|p| b.contains(p))
            .cloned()
            .collect();
        Arc::new(PermGroup::from_sorted(
            None,
            self.degree,
            minimal_generators(&common),
            common,
        ))
    }

    /// Element-index bitset of a subgroup within `self`.
    pub fn member_set(&self, h: &PermGroup) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.order());
        for p in &h.elements {
            s.insert(self.index[p]);
        }
        s
    }

    pub fn is_normal(&self, h: &PermGroup) -> bool {
        h.generators.iter().all(|x| {
            self.generators
                .iter()
                .all(|g| h.contains(&x.conjugate_by(g)))
        })
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn center(&self) -> Group {
        let els: Vec<Perm> = self
            .elements
            .iter()
            .filter(|x| self.generators.iter().all(|g| x.compose(g) == g.compose(x)))
            .cloned()
            .collect();
        Arc::new(PermGroup::from_sorted(
            None,
            self.degree,
            minimal_generators(&els),
            els,
        ))
    }

    /// Normal closure in `self` of the subgroup generated by `gens`.
    pub fn normal_closure(&self, gens: Vec<Perm>) -> Group {
        let mut h = self.subgroup(gens).expect("elements of the group");
        loop {
            let extra: Vec<Perm> = h
                .generators
                .iter()
                .flat_map(|x| self.generators.iter().map(move |g| x.conjugate_by(g)))
                .filter(|y| !h.contains(y))
                .collect();
            if extra.is_empty() {
                return h;
            }
            let mut gens = h.generators.clone();
            gens.extend(extra);
            h = self.subgroup(gens).expect("elements of the group");
        }
    }

    /// `[self, self]`.
    pub fn commutator_subgroup(&self) -> Group {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(comms)
    }

    /// Derived series `[G⁰ = G, G¹, ..]` up to and including the first repeated term.
    pub fn derived_series(self: &Group) -> Vec<Group> {
        let mut terms = vec![self.clone()];
        loop {
            let last = terms.last().unwrap();
            let next = last.commutator_subgroup();
            if next.order() == last.order() {
                if terms.len() == 1 {
                    terms.push(next);
                }
                return terms;
            }
            terms.push(next);
        }
    }

    pub fn is_solvable(self: &Group) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    /// Number of nontrivial steps of the derived series; `None` if not solvable.
    pub fn derived_length(self: &Group) -> Option<usize> {
        let s = self.derived_series();
        (s.last().unwrap().order() == 1).then(|| s.iter().filter(|t| t.order() > 1).count())
    }

    pub fn cyclic_subgroups(&self) -> Vec<Group> {
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut out = Vec::new();
        for x in &self.elements {
            let h = self.subgroup(vec![x.clone()]).unwrap();
            if seen.insert(self.member_set(&h)) {
                out.push(h);
            }
        }
        sort_subgroups(self, &mut out);
        out
    }

    /// All subgroups, sorted by order then by element set.
    pub fn subgroups(&self) -> Result<Vec<Group>> {
        self.subgroups_with_cap(DEFAULT_SUBGROUP_CAP)
    }

    pub fn subgroups_with_cap(&self, cap: usize) -> Result<Vec<Group>> {
        if self.order() > cap {
            return Err(Error::OrderCapExceeded {
                what: "subgroup enumeration",
                found: self.order(),
                cap,
            });
        }
        let cyclic = self.cyclic_subgroups();
        let cyc_sets: Vec<FixedBitSet> = cyclic.iter().map(|c| self.member_set(c)).collect();
        let mut seen: HashMap<FixedBitSet, Group> = HashMap::new();
        let mut queue: VecDeque<Group> = VecDeque::new();
        for (c, s) in cyclic.iter().zip(&cyc_sets) {
            seen.insert(s.clone(), c.clone());
            queue.push_back(c.clone());
        }
        while let Some(h) = queue.pop_front() {
            let hs = self.member_set(&h);
            for (c, cs) in cyclic.iter().zip(&cyc_sets) {
                if cs.is_subset(&hs) {
                    continue;
                }
                let j = self.join(&h, c);
                let js = self.member_set(&j);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(js) {
                    e.insert(j.clone());
                    queue.push_back(j);
                }
            }
        }
        let mut out: Vec<Group> = seen.into_values().collect();
        sort_subgroups(self, &mut out);
        Ok(out)
    }

    pub fn normal_subgroups(&self, subs: &[Group]) -> Vec<Group> {
        subs.iter().filter(|h| self.is_normal(h)).cloned().collect()
    }

    /// Right cosets `N x` as sorted element-index lists, ordered by least member.
    pub fn right_cosets(&self, n: &PermGroup) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if assigned[x] {
                continue;
            }
            let mut coset: Vec<usize> = n
                .elements
                .iter()
                .map(|h| self.index[&h.compose(&self.elements[x])])
                .collect();
            coset.sort_unstable();
            for &y in &coset {
                assigned[y] = true;
            }
            out.push(coset);
        }
        out
    }

    pub fn index_in(&self, sub: &PermGroup) -> usize {
        self.order() / sub.order()
    }

    /// `G/N` acting on right cosets by right multiplication.
    pub fn quotient(self: &Group, n: &PermGroup) -> Result<Quotient> {
        if !n.is_subgroup_of(self) {
            return Err(Error::NotSubgroup);
        }
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let cosets = self.right_cosets(n);
        let mut coset_of = vec![0usize; self.order()];
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                coset_of[x] = i;
            }
        }
        let image = |g: usize| -> Perm {
            let imgs = cosets
                .iter()
                .map(|c| coset_of[self.mul(c[0], g)] as u32)
                .collect();
            Perm::from_images(imgs).expect("coset action is a permutation")
        };
        let gens: Vec<Perm> = self
            .generators
            .iter()
            .map(|g| image(self.index[g]))
            .filter(|p| !p.is_identity())
            .collect();
        let q = PermGroup::closure(cosets.len(), gens)?;
        let projection: Vec<usize> = (0..self.order()).map(|g| q.index[&image(g)]).collect();
        let mut section = vec![usize::MAX; q.order()];
        for g in 0..self.order() {
            let qi = projection[g];
            if section[qi] == usize::MAX {
                section[qi] = g;
            }
        }
        Ok(Quotient {
            group: q,
            kernel_order: n.order(),
            projection,
            section,
        })
    }

    /// Preimage in `self` of a subgroup of a quotient.
    pub fn preimage(&self, q: &Quotient, sub: &PermGroup) -> Group {
        let els: Vec<usize> = (0..self.order())
            .filter(|&g| sub.contains(q.group.element(q.projection[g])))
            .collect();
        let perms: Vec<Perm> = els.iter().map(|&i| self.elements[i].clone()).collect();
        Arc::new(PermGroup::from_sorted(
            None,
            self.degree,
            minimal_generators(&perms),
            perms,
        ))
    }

    /// Image in the quotient of a subgroup of `self`.
    pub fn image_in(&self, q: &Quotient, sub: &PermGroup) -> Group {
        let gens: Vec<Perm> = sub
            .generators
            .iter()
            .map(|g| q.group.element(q.projection[self.index[g]]).clone())
            .filter(|p| !p.is_identity())
            .collect();
        PermGroup::closure(q.group.degree, gens).expect("image of a subgroup")
    }

    /// Subgroups of prime-power order `q^k` with `q^k` the full `q`-part of `|G|`.
    pub fn sylow_subgroups(&self, q: usize, subs: &[Group]) -> Vec<Group> {
        let mut part = 1;
        let mut n = self.order();
        while n.is_multiple_of(q) {
            part *= q;
            n /= q;
        }
        subs.iter().filter(|h| h.order() == part).cloned().collect()
    }

    /// Maximal proper subgroups among `subs` (which must be all subgroups).
    pub fn maximal_subgroups(&self, subs: &[Group]) -> Vec<Group> {
        let sets: Vec<FixedBitSet> = subs.iter().map(|h| self.member_set(h)).collect();
        subs.iter()
            .enumerate()
            .filter(|(i, h)| {
                h.order() < self.order()
                    && !sets.iter().enumerate().any(|(j, s)| {
                        j != *i
                            && subs[j].order() < self.order()
                            && subs[j].order() > h.order()
                            && sets[*i].is_subset(s)
                    })
            })
            .map(|(_, h)| h.clone())
            .collect()
    }

    /// Preimage of `self`'s elements in terms of a containing group.
    pub fn element_indices_in(&self, g: &PermGroup) -> Vec<usize> {
        self.elements.iter().map(|p| g.index[p]).collect()
    }
}

/// Canonical subgroup order: by order, then lexicographically by element set.
pub fn sort_subgroups(g: &PermGroup, subs: &mut [Group]) {
    subs.sort_by_cached_key(|h| {
        let mut idx: Vec<usize> = h.element_indices_in(g);
        idx.sort_unstable();
        (h.order(), idx)
    });
}

/// A small deterministic generating set for a subgroup given by its sorted elements.
fn minimal_generators(elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: HashSet<Perm> = HashSet::new();
    if let Some(first) = elements.first() {
        span.insert(Perm::identity(first.degree()));
    }
    for x in elements.iter().rev() {
        if span.contains(x) {
            continue;
        }
        gens.push(x.clone());
        let mut queue: VecDeque<Perm> = span.iter().cloned().collect();
        while let Some(y) = queue.pop_front() {
            for g in &gens {
                let z = y.compose(g);
                if span.insert(z.clone()) {
                    queue.push_back(z);
                }
            }
        }
    }
    gens
}

/// `G/N` with its projection and a section (least element of each coset).
pub struct Quotient {
    pub group: Group,
    pub kernel_order: usize,
    /// Element index in G to element index in G/N.
    pub projection: Vec<usize>,
    /// Element index in G/N to the least element of the coset.
    pub section: Vec<usize>,
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(order {}, gens [", self.name(), self.order())?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "])")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(degree: usize, gens: &[&str]) -> Group {
        let g = gens
            .iter()
            .map(|s| Perm::parse_cycles(s, degree).unwrap())
            .collect();
        PermGroup::closure(degree, g).unwrap()
    }

    #[test]
    fn closure_orders() {
        assert_eq!(grp(3, &["(1 2)", "(1 2 3)"]).order(), 6);
        assert_eq!(grp(1, &[]).order(), 1);
        assert_eq!(grp(4, &["(1 2 3 4)", "(1 3)"]).order(), 8);
        let err = PermGroup::closure_with_cap(
            5,
            vec![
                Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
                Perm::parse_cycles("(1 2)", 5).unwrap(),
            ],
            100,
        );
        assert!(matches!(err, Err(Error::OrderCapExceeded { .. })));
    }

    #[test]
    fn class_order_and_sizes() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let mut sizes = s3.class_sizes();
        assert_eq!(sizes[0], 1);
        assert!(s3.conjugacy_classes()[0].representative.is_identity());
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(grp(2, &[]).num_classes(), 1);
    }

    #[test]
    fn derived_series_s4_and_a5() {
        let s4 = grp(4, &["(1 2)", "(1 2 3 4)"]);
        let orders: Vec<usize> = s4.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        let c6 = grp(6, &["(1 2 3 4 5 6)"]);
        let orders: Vec<usize> = c6.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![6, 1]);
        let a5 = grp(5, &["(1 2 3)", "(1 2 3 4 5)"]);
        let orders: Vec<usize> = a5.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![60, 60]);
        assert!(!a5.is_solvable());
        assert_eq!(s4.derived_length(), Some(3));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(grp(3, &["(1 2)", "(1 2 3)"]).subgroups().unwrap().len(), 6);
        assert_eq!(grp(4, &["(1 2 3 4)"]).subgroups().unwrap().len(), 3);
        assert_eq!(
            grp(4, &["(1 2)", "(1 2 3 4)"]).subgroups().unwrap().len(),
            30
        );
    }

    #[test]
    fn quotient_and_center() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let a3 = s3.commutator_subgroup();
        let q = s3.quotient(&a3).unwrap();
        assert_eq!(q.group.order(), 2);
        assert_eq!(s3.center().order(), 1);
        let c2 = s3
            .subgroup(vec![Perm::parse_cycles("(1 2)", 3).unwrap()])
            .unwrap();
        assert!(matches!(s3.quotient(&c2), Err(Error::NotNormal)));
    }
}
