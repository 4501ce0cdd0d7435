//! Integral combinations of induced linear characters reaching a given
//! irreducible, found by lattice reduction rather than coefficient search.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::{linear_characters, MonomialTerm};
use crate::chartab::character_table;
use crate::classfun::ClassFunction;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::linalg::{hermite_basis, lattice_coords};

/// `χ = Σ n_i Ind_{H_i}^G ψ_i` with `n_i` nonzero integers.
#[derive(Clone, Debug, Serialize)]
pub struct BrauerWitness {
    pub chi: usize,
    pub terms: Vec<(MonomialTerm, i64)>,
    /// Whether cyclic subgroups sufficed.
    pub cyclic_only: bool,
}

impl BrauerWitness {
    pub fn recompute(&self, g: &Group) -> Result<ClassFunction> {
        let mut acc = ClassFunction::zero(g);
        for (t, n) in &self.terms {
            acc = acc.add(&t.induced(g)?.scale_int(*n))?;
        }
        Ok(acc)
    }
}

fn try_subgroups(
    g: &Group,
    chi_index: usize,
    subs: &[Group],
) -> Result<Option<Vec<(MonomialTerm, i64)>>> {
    let table = character_table(g)?;
    let k = table.len();
    let mut terms = Vec::new();
    let mut vecs: Vec<Vec<i64>> = Vec::new();
    for h in subs {
        for phi in linear_characters(h)? {
            let m = table.multiplicities(&phi.induce(g)?.rehome(table.group())?)?;
            if !vecs.contains(&m) {
                vecs.push(m);
                terms.push(MonomialTerm::unit(phi));
            }
        }
    }
    let n = vecs.len();
    let gens: Vec<Vec<BigInt>> = vecs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut row: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
            row.extend((0..n).map(|j| BigInt::from(i64::from(i == j))));
            row
        })
        .collect();
    let basis = hermite_basis(&gens, k);
    let mut target = vec![BigInt::zero(); k];
    target[chi_index] = BigInt::from(1);
    let Some(coords) = lattice_coords(&basis, &target) else {
        return Ok(None);
    };
    let mut coeffs = vec![BigInt::zero(); n];
    for (q, row) in coords.iter().zip(&basis) {
        for j in 0..n {
            coeffs[j] += q * &row[k + j];
        }
    }
    let mut out = Vec::new();
    for (t, c) in terms.into_iter().zip(coeffs) {
        if !c.is_zero() {
            let c = c
                .to_i64()
                .ok_or_else(|| Error::VerificationFailed("coefficient overflow".into()))?;
            out.push((t, c));
        }
    }
    Ok(Some(out))
}

/// Finds a verified integral witness for the irreducible `chi_index`, trying
/// cyclic subgroups before the full subgroup list.
pub fn brauer_witness(
    g: &Group,
    chi_index: usize,
    subs: &[Group],
) -> Result<Option<BrauerWitness>> {
    let table = character_table(g)?;
    if chi_index >= table.len() {
        return Err(Error::OutOfRange(format!("no irreducible {chi_index}")));
    }
    let chi = table.irr(chi_index).rehome(g)?;
    let cyclic = g.cyclic_subgroups();
    for (list, cyclic_only) in [(&cyclic[..], true), (subs, false)] {
        if let Some(terms) = try_subgroups(g, chi_index, list)? {
            let w = BrauerWitness {
                chi: chi_index,
                terms,
                cyclic_only,
            };
            if w.recompute(g)? != chi {
                return Err(Error::VerificationFailed(
                    "integral witness does not recompute".into(),
                ));
            }
            return Ok(Some(w));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn witnesses_exist() {
        for g in [
            corpus::symmetric(3),
            corpus::quaternion(),
            corpus::alternating(4),
        ] {
            let subs = g.subgroups().unwrap();
            let t = character_table(&g).unwrap();
            for i in 0..t.len() {
                assert!(brauer_witness(&g, i, &subs).unwrap().is_some());
            }
        }
    }
}
