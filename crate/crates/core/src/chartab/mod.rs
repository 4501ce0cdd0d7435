//! Irreducible character tables: computation, verification, caching and I/O.

mod abelian;
mod dixon;
pub mod io;

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use crate::classfun::{ClassFunction, VirtualCharacter};
use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::{Group, DEFAULT_ORDER_CAP};

pub use abelian::abelian_characters;
pub use dixon::{dixon_characters, dixon_prime, structure_constants};

/// A verified table of irreducible characters.
///
/// Rows: the trivial character first, then by degree, then by the values
/// lifted to the exponent and compared coefficient-wise.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Group,
    exponent: usize,
    irreducibles: Vec<ClassFunction>,
}

impl CharacterTable {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn irr(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.irreducibles
            .iter()
            .map(|c| c.degree_i64().expect("integral degree"))
            .collect()
    }

    /// Indices of the degree-one characters.
    pub fn linear_indices(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.irreducibles[i].degree_i64() == Some(1))
            .collect()
    }

    /// Index of an irreducible equal to `f`.
    pub fn index_of(&self, f: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == f)
    }

    /// `Reg_G = Σ χ(1)·χ`, checked against the pointwise definition.
    pub fn regular_character(&self) -> ClassFunction {
        let reg = ClassFunction::regular(&self.group);
        debug_assert_eq!(
            VirtualCharacter::from_ints(&self.degrees()).to_class_function(self),
            reg
        );
        reg
    }

    /// Multiplicities of `f` as integers; errors if `f` is not a virtual character.
    pub fn multiplicities(&self, f: &ClassFunction) -> Result<Vec<i64>> {
        f.decompose(self)?
            .to_i64s()
            .ok_or_else(|| Error::VerificationFailed("not a virtual character".into()))
    }

    /// Builds a table from raw rows, sorts them canonically and verifies it.
    pub fn from_rows(group: Group, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let exponent = group.exponent() as usize;
        let mut rows: Vec<(Vec<Cyclotomic>, Vec<Vec<Rational>>)> = rows
            .into_iter()
            .map(|r| {
                let key = r
                    .iter()
                    .map(|v| v.lift(exponent).coeffs().to_vec())
                    .collect();
                (r, key)
            })
            .collect();
        rows.sort_by(|(a, ka), (b, kb)| row_order(a, ka, b, kb));
        let irreducibles = rows
            .into_iter()
            .map(|(r, _)| ClassFunction::new(group.clone(), r))
            .collect::<Result<Vec<_>>>()?;
        let t = CharacterTable {
            group,
            exponent,
            irreducibles,
        };
        t.verify()?;
        Ok(t)
    }

    /// Builds a table keeping the given row order; verification included.
    pub fn from_rows_unsorted(group: Group, rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let exponent = group.exponent() as usize;
        let irreducibles = rows
            .into_iter()
            .map(|r| ClassFunction::new(group.clone(), r))
            .collect::<Result<Vec<_>>>()?;
        let t = CharacterTable {
            group,
            exponent,
            irreducibles,
        };
        t.verify()?;
        Ok(t)
    }

    /// Row and column orthogonality, degree sum and divisibility.
    pub fn verify(&self) -> Result<()> {
        let g = &self.group;
        let n = g.order() as i64;
        let k = g.num_classes();
        let fail = |m: String| Err(Error::VerificationFailed(m));
        if self.irreducibles.len() != k {
            return fail(format!(
                "{} characters for {k} classes",
                self.irreducibles.len()
            ));
        }
        let mut deg_sum = 0i64;
        for chi in &self.irreducibles {
            let Some(d) = chi.degree_i64() else {
                return fail("non-integral degree".into());
            };
            if d <= 0 || n % d != 0 {
                return fail(format!("degree {d} does not divide {n}"));
            }
            deg_sum += d * d;
        }
        if deg_sum != n {
            return fail(format!("sum of squared degrees {deg_sum} != {n}"));
        }
        for (i, a) in self.irreducibles.iter().enumerate() {
            for (j, b) in self.irreducibles.iter().enumerate().skip(i) {
                let ip = a.inner_product(b)?;
                let want = if i == j {
                    Cyclotomic::one()
                } else {
                    Cyclotomic::zero()
                };
                if ip != want {
                    return fail(format!("rows {i},{j} have inner product {ip}"));
                }
            }
        }
        let sizes = g.class_sizes();
        for a in 0..k {
            for b in a..k {
                let mut s = Cyclotomic::zero();
                for chi in &self.irreducibles {
                    s += &(chi.value(a) * &chi.value(b).conjugate());
                }
                let want = if a == b {
                    Cyclotomic::from_rational(Rational::new(n.into(), (sizes[a] as i64).into()))
                } else {
                    Cyclotomic::zero()
                };
                if s != want {
                    return fail(format!("columns {a},{b} sum to {s}"));
                }
            }
        }
        Ok(())
    }

    /// Central characters satisfy `ω(K_a) ω(K_b) = Σ_c c_abc ω(K_c)`.
    pub fn verify_central_characters(&self) -> Result<()> {
        let g = &self.group;
        let k = g.num_classes();
        let c = structure_constants(g);
        let sizes = g.class_sizes();
        for chi in &self.irreducibles {
            let inv_d = Rational::one() / chi.degree().expect_rational()?;
            let omega: Vec<Cyclotomic> = (0..k)
                .map(|a| {
                    chi.value(a)
                        .scale(&(Rational::from_integer((sizes[a] as i64).into()) * &inv_d))
                })
                .collect();
            for a in 0..k {
                for b in 0..k {
                    let lhs = &omega[a] * &omega[b];
                    let mut rhs = Cyclotomic::zero();
                    for cc in 0..k {
                        if c[a][b][cc] != 0 {
                            rhs += &omega[cc]
                                .scale(&Rational::from_integer((c[a][b][cc] as i64).into()));
                        }
                    }
                    if lhs != rhs {
                        return Err(Error::VerificationFailed(format!(
                            "central character identity fails at classes {a},{b}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn row_order(
    a: &[Cyclotomic],
    ka: &[Vec<Rational>],
    b: &[Cyclotomic],
    kb: &[Vec<Rational>],
) -> Ordering {
    let trivial = |r: &[Cyclotomic]| r.iter().all(|v| *v == Cyclotomic::one());
    let deg = |r: &[Cyclotomic]| r[0].to_i64().unwrap_or(i64::MAX);
    trivial(b)
        .cmp(&trivial(a))
        .then(deg(a).cmp(&deg(b)))
        .then_with(|| ka.cmp(kb))
}

fn table_cache() -> &'static Mutex<HashMap<u64, Vec<Arc<CharacterTable>>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<Arc<CharacterTable>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Character table by Dixon's method, or the dual group for abelian groups.
/// Results are cached per element set.
pub fn character_table(g: &Group) -> Result<Arc<CharacterTable>> {
    if let Some(list) = table_cache().lock().unwrap().get(&g.fingerprint()) {
        if let Some(t) = list.iter().find(|t| t.group.same_as(g)) {
            return Ok(t.clone());
        }
    }
    Ok(register_table(compute_table(g)?))
}

/// Adds a verified table to the cache unless one for the same element set is
/// already present; returns the cached table.
pub fn register_table(t: CharacterTable) -> Arc<CharacterTable> {
    let mut cache = table_cache().lock().unwrap();
    let list = cache.entry(t.group.fingerprint()).or_default();
    if let Some(old) = list.iter().find(|o| o.group.same_as(&t.group)) {
        return old.clone();
    }
    let t = Arc::new(t);
    list.push(t.clone());
    t
}

/// Uncached computation.
pub fn compute_table(g: &Group) -> Result<CharacterTable> {
    if g.order() > DEFAULT_ORDER_CAP {
        return Err(Error::OrderCapExceeded {
            what: "character table",
            found: g.order(),
            cap: DEFAULT_ORDER_CAP,
        });
    }
    let rows = if g.is_abelian() {
        abelian_characters(g)?
    } else {
        dixon_characters(g)?
    };
    CharacterTable::from_rows(g.clone(), rows)
}

/// Dixon's method regardless of commutativity.
pub fn dixon_table(g: &Group) -> Result<CharacterTable> {
    CharacterTable::from_rows(g.clone(), dixon_characters(g)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn small_tables() {
        let t = character_table(&corpus::symmetric(3)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2]);
        let t = character_table(&corpus::symmetric(4)).unwrap();
        assert_eq!(t.degrees(), vec![1, 1, 2, 3, 3]);
        let t = character_table(&corpus::trivial()).unwrap();
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn abelian_matches_dixon() {
        for g in [corpus::cyclic(6), corpus::klein_four(), corpus::cyclic(5)] {
            let a = compute_table(&g).unwrap();
            let d = dixon_table(&g).unwrap();
            assert_eq!(a.irreducibles(), d.irreducibles());
        }
    }

    #[test]
    fn cyclic_values_are_roots_of_unity() {
        let g = corpus::cyclic(4);
        let t = character_table(&g).unwrap();
        for chi in t.irreducibles() {
            for v in chi.values() {
                assert_eq!(v.pow(4), Cyclotomic::one());
            }
        }
        t.verify_central_characters().unwrap();
    }

    #[test]
    fn a5_has_irrational_values() {
        let t = character_table(&corpus::alternating(5)).unwrap();
        assert_eq!(t.degrees(), vec![1, 3, 3, 4, 5]);
        assert!(t
            .irreducibles()
            .iter()
            .any(|c| c.values().iter().any(|v| !v.is_rational())));
    }
}
