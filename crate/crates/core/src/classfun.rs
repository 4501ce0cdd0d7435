//! Class functions: values per conjugacy class, with the standard operations
//! of character theory.

use std::fmt;

use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::chartab::CharacterTable;
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{Group, PermGroup, Quotient};
use crate::perm::Perm;

/// A class function on `group`, one value per class in the group's class order.
#[derive(Clone)]
pub struct ClassFunction {
    group: Group,
    values: Vec<Cyclotomic>,
}

impl ClassFunction {
    pub fn new(group: Group, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::Schema(format!(
                "{} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn constant(group: &Group, c: Cyclotomic) -> Self {
        let k = group.num_classes();
        ClassFunction {
            group: group.clone(),
            values: vec![c; k],
        }
    }

    pub fn zero(group: &Group) -> Self {
        Self::constant(group, Cyclotomic::zero())
    }

    pub fn trivial(group: &Group) -> Self {
        Self::constant(group, Cyclotomic::one())
    }

    /// `|G|` at the identity and zero elsewhere.
    pub fn regular(group: &Group) -> Self {
        let mut f = Self::zero(group);
        f.values[0] = Cyclotomic::from_int(group.order() as i64);
        f
    }

    /// Builds a class function from a value per element index.
    pub fn from_element_fn(group: &Group, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let values = group
            .conjugacy_classes()
            .iter()
            .map(|c| f(c.members[0]))
            .collect();
        ClassFunction {
            group: group.clone(),
            values,
        }
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the element with index `i`.
    pub fn at(&self, i: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(i)]
    }

    pub fn at_perm(&self, p: &Perm) -> Option<&Cyclotomic> {
        self.group.class_of_perm(p).map(|c| &self.values[c])
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn degree_i64(&self) -> Option<i64> {
        self.values[0].to_i64()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Cyclotomic::is_zero)
    }

    fn check_same(&self, other: &ClassFunction) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip_with(
        &self,
        other: &ClassFunction,
        op: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic,
    ) -> Result<Self> {
        self.check_same(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| op(a, b))
                .collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &ClassFunction) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product `f ⊗ g`.
    pub fn twist(&self, other: &ClassFunction) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&Rational::from_integer(n.into()))
    }

    pub fn conjugate(&self) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(Cyclotomic::conjugate).collect(),
        }
    }

    /// `(1/|G|) Σ_g f(g)·conj(h(g))`.
    pub fn inner_product(&self, other: &ClassFunction) -> Result<Cyclotomic> {
        self.check_same(other)?;
        let mut acc = Cyclotomic::zero();
        for (k, c) in self.group.conjugacy_classes().iter().enumerate() {
            if self.values[k].is_zero() || other.values[k].is_zero() {
                continue;
            }
            let term = &self.values[k] * &other.values[k].conjugate();
            acc += &term.scale(&Rational::from_integer(c.size().into()));
        }
        Ok(acc.scale(&Rational::new(One::one(), self.group.order().into())))
    }

    /// Inner product that must be rational.
    pub fn inner_rational(&self, other: &ClassFunction) -> Result<Rational> {
        self.inner_product(other)?.expect_rational()
    }

    /// Restriction to a subgroup `h` of this function's group.
    pub fn restrict(&self, h: &Group) -> Result<Self> {
        if !h.is_subgroup_of(&self.group) {
            return Err(Error::NotSubgroup);
        }
        let values = h
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let cls = self
                    .group
                    .class_of_perm(&c.representative)
                    .expect("subgroup element");
                self.values[cls].clone()
            })
            .collect();
        Ok(ClassFunction {
            group: h.clone(),
            values,
        })
    }

    /// `Ind_H^G f (x) = (1/|H|) Σ_{y ∈ G} f̂(y⁻¹ x y)` with `f̂` the zero extension.
    pub fn induce(&self, g: &Group) -> Result<Self> {
        let h = &self.group;
        if !h.is_subgroup_of(g) {
            return Err(Error::NotSubgroup);
        }
        // H-class of each element of G, if it lies in H.
        let mut h_class: Vec<Option<usize>> = vec![None; g.order()];
        for (i, p) in h.elements().iter().enumerate() {
            h_class[g.index_of(p).unwrap()] = Some(h.class_of(i));
        }
        let inv_h = Rational::new(One::one(), h.order().into());
        let values = g
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let x = c.members[0];
                let mut counts = vec![0i64; h.num_classes()];
                for y in 0..g.order() {
                    if let Some(k) = h_class[g.conj(x, y)] {
                        counts[k] += 1;
                    }
                }
                let mut acc = Cyclotomic::zero();
                for (k, &n) in counts.iter().enumerate() {
                    if n != 0 {
                        acc += &self.values[k].scale(&Rational::from_integer(n.into()));
                    }
                }
                acc.scale(&inv_h)
            })
            .collect();
        Ok(ClassFunction {
            group: g.clone(),
            values,
        })
    }

    /// `f ∘ π` for a function `f` on `G/N`.
    pub fn inflate(&self, g: &Group, q: &Quotient) -> Result<Self> {
        if !self.group.same_as(&q.group) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction::from_element_fn(g, |x| {
            self.at(q.projection[x]).clone()
        }))
    }

    /// Convenience: inflation from `G/N` computed from `n` directly.
    pub fn inflate_from(&self, g: &Group, n: &PermGroup) -> Result<Self> {
        let q = g.quotient(n)?;
        self.inflate(g, &q)
    }

    /// `{g : χ(g) = χ(1)}`.
    pub fn kernel(&self) -> Group {
        let d = self.degree().clone();
        let gens: Vec<Perm> = self
            .group
            .conjugacy_classes()
            .iter()
            .enumerate()
            .filter(|(k, _)| self.values[*k] == d)
            .flat_map(|(_, c)| c.members.iter().map(|&i| self.group.element(i).clone()))
            .collect();
        self.group
            .subgroup(gens)
            .expect("kernel elements lie in the group")
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel().order() == 1
    }

    /// Degree one, and multiplicative on generators against every element.
    pub fn is_linear_character(&self) -> bool {
        if !self.values[0].to_i64().is_some_and(|d| d == 1) {
            return false;
        }
        let g = &self.group;
        g.generators().iter().all(|s| {
            let si = g.index_of(s).unwrap();
            (0..g.order()).all(|y| self.at(g.mul(si, y)) == &(self.at(si) * self.at(y)))
        })
    }

    /// Least `i` with `χ|_{G^i} = χ(1)·1`, with `G⁰ = G`.
    pub fn level(&self, series: &[Group]) -> Result<usize> {
        if series.last().is_none_or(|t| t.order() != 1) {
            return Err(Error::NotSolvable);
        }
        let d = self.degree();
        for (i, term) in series.iter().enumerate() {
            if term
                .elements()
                .iter()
                .all(|p| self.at_perm(p).expect("subgroup element") == d)
            {
                return Ok(i);
            }
        }
        unreachable!("the last term is trivial")
    }

    /// Coefficients `(f, χ_i)` against the table's irreducibles; must be rational.
    pub fn decompose(&self, table: &CharacterTable) -> Result<VirtualCharacter> {
        self.check_same_group(table)?;
        let coeffs = table
            .irreducibles()
            .iter()
            .map(|chi| self.inner_rational(chi))
            .collect::<Result<Vec<_>>>()?;
        Ok(VirtualCharacter { coeffs })
    }

    pub fn check_same_group(&self, table: &CharacterTable) -> Result<()> {
        if self.group.same_as(table.group()) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Returns the same function re-homed on an equal group object.
    pub fn rehome(&self, g: &Group) -> Result<Self> {
        if !self.group.same_as(g) {
            return Err(Error::GroupMismatch);
        }
        // Same element set, so the class order coincides.
        Ok(ClassFunction {
            group: g.clone(),
            values: self.values.clone(),
        })
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for ClassFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ClassFunction", 2)?;
        st.serialize_field("group", self.group.name())?;
        st.serialize_field("values", &self.values)?;
        st.end()
    }
}

/// `Σ coeffs[i]·χ_i` over the irreducibles of a fixed table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualCharacter {
    pub coeffs: Vec<Rational>,
}

impl VirtualCharacter {
    pub fn zero(n: usize) -> Self {
        VirtualCharacter {
            coeffs: vec![Rational::zero(); n],
        }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        VirtualCharacter {
            coeffs: v
                .iter()
                .map(|&x| Rational::from_integer(x.into()))
                .collect(),
        }
    }

    pub fn to_class_function(&self, table: &CharacterTable) -> ClassFunction {
        let mut acc = ClassFunction::zero(table.group());
        for (c, chi) in self.coeffs.iter().zip(table.irreducibles()) {
            if !c.is_zero() {
                acc = acc.add(&chi.scale(c)).expect("same group");
            }
        }
        acc
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// A genuine character: integral and non-negative.
    pub fn is_character(&self) -> bool {
        self.is_integral() && self.coeffs.iter().all(|c| *c >= Rational::zero())
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten())
            .collect()
    }
}

impl Serialize for VirtualCharacter {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let nz = self.coeffs.iter().filter(|c| !c.is_zero()).count();
        let mut m = s.serialize_map(Some(nz))?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                m.serialize_entry(&i.to_string(), &c.to_string())?;
            }
        }
        m.end()
    }
}

/// Which branch of Clifford's dichotomy holds for a prime-index normal subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum CliffordReport {
    Irreducible,
    Splits {
        /// Constituent indices in the subgroup's table.
        constituents: Vec<usize>,
    },
}

/// Checks the dichotomy for `χ` irreducible on `G` and `N` normal of prime index.
pub fn clifford_check(
    chi: &ClassFunction,
    n: &Group,
    table_n: &CharacterTable,
) -> Result<CliffordReport> {
    let g = chi.group();
    if !g.is_normal(n) || !n.is_subgroup_of(g) {
        return Err(Error::NotNormal);
    }
    let p = g.index_in(n);
    if !crate::linalg::modp::is_prime(p as u64) {
        return Err(Error::IndexNotPrime(p));
    }
    let res = chi.restrict(n)?;
    let dec = res.decompose(table_n)?;
    let mults: Vec<i64> = dec
        .to_i64s()
        .ok_or_else(|| Error::VerificationFailed("restriction is not a character".into()))?;
    let support: Vec<usize> = (0..mults.len()).filter(|&i| mults[i] != 0).collect();
    if support.len() == 1 && mults[support[0]] == 1 {
        return Ok(CliffordReport::Irreducible);
    }
    let ok = support.len() == p
        && support.iter().all(|&i| mults[i] == 1)
        && support.iter().all(|&i| {
            table_n.irreducibles()[i]
                .induce(g)
                .is_ok_and(|ind| &ind == chi)
        });
    if ok {
        Ok(CliffordReport::Splits {
            constituents: support,
        })
    } else {
        Err(Error::VerificationFailed(
            "restriction neither irreducible nor a sum of p distinct conjugates".into(),
        ))
    }
}

/// Outcome of a Mackey check: double coset representatives and the verdict.
#[derive(Clone, Debug, Serialize)]
pub struct MackeyReport {
    pub double_cosets: usize,
    pub representatives: Vec<Vec<usize>>,
    pub holds: bool,
    pub hk_equals_g: bool,
}

/// `Res_K Ind_H^G ψ = Σ_{x ∈ H\G/K} Ind_{x⁻¹Hx ∩ K}^K ψ^x` with `ψ^x(y) = ψ(x y x⁻¹)`.
pub fn mackey_check(psi: &ClassFunction, k: &Group, g: &Group) -> Result<MackeyReport> {
    let h = psi.group();
    if !h.is_subgroup_of(g) || !k.is_subgroup_of(g) {
        return Err(Error::NotSubgroup);
    }
    let lhs = psi.induce(g)?.restrict(k)?;
    let reps = double_coset_reps(g, h, k);
    let mut rhs = ClassFunction::zero(k);
    for &x in &reps {
        let xp = g.element(x);
        let xinv = xp.inverse();
        let conj_h: Vec<Perm> = h.generators().iter().map(|y| y.conjugate_by(xp)).collect();
        let hx = g.subgroup(conj_h)?;
        let l = g.intersection(&hx, k);
        let psi_x = ClassFunction::from_element_fn(&l, |yi| {
            let y = l.element(yi);
            psi.at_perm(&xp.compose(y).compose(&xinv))
                .expect("conjugate lies in H")
                .clone()
        });
        rhs = rhs.add(&psi_x.induce(k)?)?;
    }
    let hk_equals_g = reps.len() == 1;
    let mut holds = lhs == rhs;
    if hk_equals_g {
        let l = g.intersection(h, k);
        holds &= lhs == psi.restrict(&l)?.induce(k)?;
    }
    Ok(MackeyReport {
        double_cosets: reps.len(),
        representatives: reps.iter().map(|&x| g.element(x).one_based()).collect(),
        holds,
        hk_equals_g,
    })
}

/// Least element of each double coset `H x K`, ascending.
pub fn double_coset_reps(g: &Group, h: &PermGroup, k: &PermGroup) -> Vec<usize> {
    let hi: Vec<usize> = h.element_indices_in(g);
    let ki: Vec<usize> = k.element_indices_in(g);
    let mut seen = vec![false; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if seen[x] {
            continue;
        }
        reps.push(x);
        for &a in &hi {
            let ax = g.mul(a, x);
            for &b in &ki {
                seen[g.mul(ax, b)] = true;
            }
        }
    }
    reps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn regular_induced_from_trivial_subgroup() {
        let g = corpus::symmetric(3);
        let e = PermGroup::trivial(3);
        let ind = ClassFunction::trivial(&e).induce(&g).unwrap();
        assert_eq!(ind, ClassFunction::regular(&g));
        assert_eq!(
            ind.inner_product(&ClassFunction::trivial(&g)).unwrap(),
            Cyclotomic::one()
        );
    }

    #[test]
    fn induction_degree_is_index_times_degree() {
        let g = corpus::symmetric(4);
        for h in g.subgroups().unwrap() {
            let ind = ClassFunction::trivial(&h).induce(&g).unwrap();
            assert_eq!(ind.degree_i64(), Some((g.order() / h.order()) as i64));
        }
    }

    #[test]
    fn kernel_of_trivial_is_everything() {
        let g = corpus::quaternion();
        assert_eq!(ClassFunction::trivial(&g).kernel().order(), 8);
        assert!(!ClassFunction::trivial(&g).is_faithful());
    }

    #[test]
    fn group_mismatch_is_reported() {
        let a = ClassFunction::trivial(&corpus::cyclic(3));
        let b = ClassFunction::trivial(&corpus::symmetric(3));
        assert!(matches!(a.inner_product(&b), Err(Error::GroupMismatch)));
    }
}
