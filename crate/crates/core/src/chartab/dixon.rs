//! Dixon's modular method for the irreducible characters of a finite group.

use num_integer::Integer;
use num_traits::Zero;

use crate::cyclotomic::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::linalg::modp;

/// Class structure constants `c[i][j][k] = #{x ∈ C_i : x⁻¹ z_k ∈ C_j}` for a fixed `z_k ∈ C_k`.
pub fn structure_constants(g: &PermGroup) -> Vec<Vec<Vec<u64>>> {
    let k = g.num_classes();
    let mut c = vec![vec![vec![0u64; k]; k]; k];
    for (kk, cls) in g.conjugacy_classes().iter().enumerate() {
        let z = cls.members[0];
        for x in 0..g.order() {
            let i = g.class_of(x);
            let j = g.class_of(g.mul(g.inv(x), z));
            c[i][j][kk] += 1;
        }
    }
    c
}

/// Least prime `p ≡ 1 (mod e)` with `p² > 4n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut p = e + 1;
    loop {
        if modp::is_prime(p) && p * p > 4 * n {
            return p;
        }
        p += e;
    }
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p)
        .find(|&g| factors.iter().all(|&q| modp::pow(g, (p - 1) / q, p) != 1))
        .expect("a prime has a primitive root")
}

/// Subspace of F_p^k held as rows in reduced echelon form.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Subspace {
    fn new(mut rows: Vec<Vec<u64>>, p: u64) -> Self {
        let pivots = modp::rref(&mut rows, p);
        rows.truncate(pivots.len());
        Subspace {
            basis: rows,
            pivots,
        }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn split(space: &Subspace, a: &[Vec<u64>], p: u64) -> Option<Vec<Subspace>> {
    let r = space.dim();
    let k = a.len();
    // Restriction R with A b_t = Σ_s R[s][t] b_s, read off at pivot coordinates.
    let mut rmat = vec![vec![0u64; r]; r];
    for (t, b) in space.basis.iter().enumerate() {
        let ab: Vec<u64> = (0..k)
            .map(|i| (0..k).fold(0u64, |acc, l| (acc + a[i][l] * b[l]) % p))
            .collect();
        for (s, &pc) in space.pivots.iter().enumerate() {
            rmat[s][t] = ab[pc];
        }
    }
    let cp = modp::charpoly(&rmat, p);
    let roots: Vec<u64> = (0..p).filter(|&x| modp::eval(&cp, x, p) == 0).collect();
    if roots.len() < 2 {
        return None;
    }
    let mut parts = Vec::new();
    for lam in roots {
        let shifted: Vec<Vec<u64>> = (0..r)
            .map(|s| {
                (0..r)
                    .map(|t| {
                        if s == t {
                            (rmat[s][t] + p - lam) % p
                        } else {
                            rmat[s][t]
                        }
                    })
                    .collect()
            })
            .collect();
        let ns = modp::nullspace(&shifted, r, p);
        let vecs: Vec<Vec<u64>> = ns
            .iter()
            .map(|c| {
                (0..k)
                    .map(|i| (0..r).fold(0u64, |acc, s| (acc + c[s] * space.basis[s][i]) % p))
                    .collect()
            })
            .collect();
        parts.push(Subspace::new(vecs, p));
    }
    Some(parts)
}

/// Irreducible characters as value vectors in class order (unsorted).
pub fn dixon_characters(g: &PermGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let n = g.order() as u64;
    let k = g.num_classes();
    let e = g.exponent();
    let p = dixon_prime(e, n);
    let z = modp::pow(primitive_root(p), (p - 1) / e, p);
    let sizes: Vec<u64> = g.class_sizes().iter().map(|&s| s as u64).collect();
    let inv_class = g.inverse_classes();
    let c = structure_constants(g);
    let mats: Vec<Vec<Vec<u64>>> = (0..k)
        .map(|j| {
            (0..k)
                .map(|i| (0..k).map(|kk| c[i][j][kk] % p).collect())
                .collect()
        })
        .collect();

    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut pending = vec![Subspace::new(identity, p)];
    let mut lines: Vec<Vec<u64>> = Vec::new();
    while let Some(space) = pending.pop() {
        if space.dim() == 1 {
            lines.push(space.basis[0].clone());
            continue;
        }
        let parts = (1..k)
            .find_map(|j| split(&space, &mats[j], p))
            .ok_or_else(|| {
                Error::VerificationFailed("class matrices fail to split an eigenspace".into())
            })?;
        if parts.iter().map(Subspace::dim).sum::<usize>() != space.dim() {
            return Err(Error::VerificationFailed(
                "class matrix not diagonalizable modulo p".into(),
            ));
        }
        pending.extend(parts);
    }
    if lines.len() != k {
        return Err(Error::VerificationFailed(format!(
            "found {} characters for {} classes",
            lines.len(),
            k
        )));
    }

    // Power maps for lifting: class of g^l for every class and every l < e.
    let power_maps: Vec<Vec<usize>> = (0..e).map(|l| g.power_map(l)).collect();
    let orders: Vec<u64> = g
        .conjugacy_classes()
        .iter()
        .map(|cls| g.element_order(cls.members[0]))
        .collect();

    let mut chars = Vec::with_capacity(k);
    for mut v in lines {
        let v0 = v[0];
        if v0 == 0 {
            return Err(Error::VerificationFailed(
                "central character vanishes at identity".into(),
            ));
        }
        let inv0 = modp::inv(v0, p);
        for x in v.iter_mut() {
            *x = *x * inv0 % p;
        }
        // S = Σ ω_i ω_{i'} / h_i, d² = n / S.
        let s = (0..k).fold(0u64, |acc, i| {
            (acc + v[i] * v[inv_class[i]] % p * modp::inv(sizes[i] % p, p)) % p
        });
        let target = n % p * modp::inv(s, p) % p;
        let d = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|d| d * d % p == target)
            .ok_or_else(|| Error::VerificationFailed("no admissible degree".into()))?;
        let theta: Vec<u64> = (0..k)
            .map(|i| d % p * v[i] % p * modp::inv(sizes[i] % p, p) % p)
            .collect();
        let mut values = Vec::with_capacity(k);
        for i in 0..k {
            let o = orders[i];
            let step = e / o;
            let inv_o = modp::inv(o % p, p);
            let mut terms = vec![Rational::zero(); e as usize];
            for sidx in 0..o {
                let mut acc = 0u64;
                for l in 0..o {
                    let cls = power_maps[l as usize][i];
                    let exp = (e - (sidx * l * step) % e) % e;
                    acc = (acc + theta[cls] * modp::pow(z, exp, p)) % p;
                }
                let m = acc * inv_o % p;
                if m > d {
                    return Err(Error::VerificationFailed(format!(
                        "eigenvalue multiplicity {m} exceeds degree {d}"
                    )));
                }
                if m != 0 {
                    terms[(sidx * step) as usize] += Rational::from_integer(m.into());
                }
            }
            values.push(Cyclotomic::from_exponent_coeffs(e as usize, &terms));
        }
        chars.push(values);
    }
    debug_assert!(chars
        .iter()
        .all(|c| c[0].to_i64().is_some_and(|d| (n as i64).is_multiple_of(&d))));
    Ok(chars)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_choice() {
        assert_eq!(dixon_prime(12, 24), 13);
        assert_eq!(dixon_prime(30, 60), 31);
        assert_eq!(dixon_prime(2, 2), 3);
        assert_eq!(primitive_root(13), 2);
    }
}
