//! Heilbronn characters over supercharacter theories.

use std::sync::Arc;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{compatible, superinduce, SupercharacterTheory, SuperclassFunction};
use crate::classfun::ClassFunction;
use crate::cyclotomic::Rational;
use crate::error::{Error, Result};
use crate::heilbronn::OrderAssignment;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `n(G, σ) = Σ_{χ ∈ σ} χ(1)·base[χ]` for every supercharacter.
pub fn supercharacter_orders(base: &[i64], th: &SupercharacterTheory) -> Vec<i64> {
    let degrees = th.table().degrees();
    th.x()
        .iter()
        .map(|part| part.iter().map(|&c| degrees[c] * base[c]).sum())
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SuperHeilbronn {
    /// `lcm σ(1)` over the supercharacters of `G`.
    pub m: i64,
    pub n_g: Vec<i64>,
    pub n_h: Vec<String>,
    /// `Θ_H = Σ n(H, τ)·τ/τ(1)`.
    pub theta_h: ClassFunction,
    /// `Θ_G|_H = Θ_H`.
    pub restriction_holds: bool,
    /// `|H|/|G| · Σ n(H, τ)²/τ(1)²` against `n(G, Reg)²`.
    pub lemma_lhs: String,
    /// `|H|/|G| · (Θ_H, Θ_H) = |H|/|G| · Σ n(H, τ)²/τ(1)`.
    pub lemma_lhs_inner: String,
    pub lemma_rhs: i64,
    pub lemma_holds: bool,
    pub lemma_inner_holds: bool,
}

/// Super Heilbronn character of `H` for a compatible pair of theories.
pub fn super_heilbronn(
    base: &[i64],
    th_g: &Arc<SupercharacterTheory>,
    th_h: &Arc<SupercharacterTheory>,
) -> Result<SuperHeilbronn> {
    if base.len() != th_g.table().len() {
        return Err(Error::Schema(
            "base length differs from the number of irreducibles".into(),
        ));
    }
    if !compatible(th_h, th_g)? {
        return Err(Error::NotCompatible);
    }
    let (g, h) = (th_g.group(), th_h.group());
    let sig_deg: Vec<i64> = th_g
        .supercharacters()
        .iter()
        .map(|s| s.degree_i64().unwrap())
        .collect();
    let tau_deg: Vec<i64> = th_h
        .supercharacters()
        .iter()
        .map(|s| s.degree_i64().unwrap())
        .collect();
    // σ|_H must be an integral combination of the τ.
    for sigma in th_g.supercharacters() {
        let res = sigma.restrict(h)?;
        let mut rebuilt = ClassFunction::zero(h);
        for (tau, &d) in th_h.supercharacters().iter().zip(&tau_deg) {
            let c = res.inner_rational(tau)? / q(d);
            if !c.is_integer() {
                return Err(Error::NonIntegralRestriction);
            }
            rebuilt = rebuilt.add(&tau.scale(&c))?;
        }
        if rebuilt != res {
            return Err(Error::NonIntegralRestriction);
        }
    }
    let m = sig_deg.iter().fold(1i64, |a, d| a.lcm(d));
    let n_g = supercharacter_orders(base, th_g);
    let mut n_h: Vec<Rational> = Vec::with_capacity(th_h.len());
    for tau in th_h.supercharacters() {
        let sind = superinduce(&SuperclassFunction::from_class_function(th_h, tau)?, th_g)?
            .to_class_function();
        let mut acc = Rational::zero();
        for ((sigma, &d), &n) in th_g.supercharacters().iter().zip(&sig_deg).zip(&n_g) {
            let coeff = q(m) * sind.inner_rational(sigma)? / q(d);
            if !coeff.is_integer() {
                return Err(Error::NonIntegralRestriction);
            }
            acc += coeff * q(n);
        }
        n_h.push(acc / q(m));
    }
    let mut theta_h = ClassFunction::zero(h);
    for ((tau, &d), n) in th_h.supercharacters().iter().zip(&tau_deg).zip(&n_h) {
        theta_h = theta_h.add(&tau.scale(&(n / q(d))))?;
    }
    let mut theta_g = ClassFunction::zero(g);
    for ((sigma, &d), &n) in th_g.supercharacters().iter().zip(&sig_deg).zip(&n_g) {
        theta_g = theta_g.add(&sigma.scale(&(q(n) / q(d))))?;
    }
    let restriction_holds = theta_g.restrict(h)? == theta_h;
    let ratio = Rational::new((h.order() as i64).into(), (g.order() as i64).into());
    let lhs: Rational = n_h
        .iter()
        .zip(&tau_deg)
        .map(|(n, &d)| n * n / q(d * d))
        .sum::<Rational>()
        * &ratio;
    let lhs_inner: Rational = n_h
        .iter()
        .zip(&tau_deg)
        .map(|(n, &d)| n * n / q(d))
        .sum::<Rational>()
        * &ratio;
    let reg: i64 = n_g.iter().sum();
    let rhs = reg * reg;
    Ok(SuperHeilbronn {
        m,
        n_g,
        n_h: n_h.iter().map(|r| r.to_string()).collect(),
        theta_h,
        restriction_holds,
        lemma_holds: lhs <= q(rhs),
        lemma_inner_holds: lhs_inner <= q(rhs),
        lemma_lhs: lhs.to_string(),
        lemma_lhs_inner: lhs_inner.to_string(),
        lemma_rhs: rhs,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LoReport {
    /// `Σ_σ n(G, σ)²/σ(1)`.
    pub lhs: String,
    /// `n(G, Reg)²`.
    pub rhs: i64,
    pub holds: bool,
    /// `σ(1) = Σ_{χ ∈ σ} χ(1)²` for every supercharacter.
    pub degree_identity: bool,
}

/// `Σ_σ n(G, σ)²/σ(1) ≤ n(G, Reg)²` for a weak-admissible assignment.
pub fn theorem_lo_check(a: &OrderAssignment, th: &SupercharacterTheory) -> Result<LoReport> {
    if !a.weak {
        return Err(Error::PreconditionUnverified(
            "assignment is not weak-admissible".into(),
        ));
    }
    if !a.group().same_as(th.group()) {
        return Err(Error::GroupMismatch);
    }
    let degrees = th.table().degrees();
    let n_g = supercharacter_orders(&a.base, th);
    let mut lhs = Rational::zero();
    let mut degree_identity = true;
    for ((part, sigma), &n) in th.x().iter().zip(th.supercharacters()).zip(&n_g) {
        let d = sigma.degree_i64().unwrap();
        degree_identity &= d == part.iter().map(|&c| degrees[c] * degrees[c]).sum::<i64>();
        lhs += q(n * n) / q(d);
    }
    let reg = a.n_reg();
    let rhs = reg * reg;
    Ok(LoReport {
        holds: !(lhs.clone() - q(rhs)).is_positive(),
        lhs: lhs.to_string(),
        rhs,
        degree_identity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::corpus;
    use crate::heilbronn::{make_assignment, Mode};

    #[test]
    fn max_theory_on_s3() {
        let g = corpus::symmetric(3);
        let t = character_table(&g).unwrap();
        let a = make_assignment(&t, vec![1, 1, 2], Mode::Weak).unwrap();
        let th = SupercharacterTheory::max(&g).unwrap();
        assert_eq!(supercharacter_orders(&a.base, &th), vec![1, 5]);
        let r = theorem_lo_check(&a, &th).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs, r.holds), ("6", 36, true));
        assert!(r.degree_identity);
    }

    #[test]
    fn classical_reduces_to_classical() {
        let g = corpus::symmetric(3);
        let th = Arc::new(SupercharacterTheory::classical(&g).unwrap());
        let base = [2, -1, 1];
        let s = super_heilbronn(&base, &th, &th).unwrap();
        let t = character_table(&g).unwrap();
        let want = crate::classfun::VirtualCharacter::from_ints(&base).to_class_function(&t);
        assert_eq!(s.theta_h, want);
        assert!(s.restriction_holds);
    }
}
