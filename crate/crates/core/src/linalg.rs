//! Small exact linear algebra over Q, Z and F_p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cyclotomic::Rational;

/// Solves an augmented system (`n` unknowns, last column the right-hand side).
/// Returns one solution (free variables zero) or `None` when inconsistent.
pub fn solve_rational(rows: &mut [Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let m = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in c..=n {
                    let t = &rows[r][j] * &f;
                    rows[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if rows[r..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut sol = vec![Rational::zero(); n];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = rows[i][n].clone();
    }
    Some(sol)
}

/// Row-style Hermite normal form of the lattice spanned by `gens`, pivoting on
/// the first `dim` columns. Rows may carry extra trailing columns (for example
/// an identity block recording the transformation); row operations apply to
/// the whole row. Returns the rows whose leading `dim` part is nonzero, in
/// echelon form with positive pivots and reduced entries above each pivot.
pub fn hermite_basis(gens: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let lead_nonzero = |r: &Vec<BigInt>| r[..dim].iter().any(|x| !x.is_zero());
    let mut rows: Vec<Vec<BigInt>> = gens.iter().filter(|g| lead_nonzero(g)).cloned().collect();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..dim {
        if rows.is_empty() {
            break;
        }
        // Euclid on column `col` among the remaining rows.
        loop {
            rows.retain(lead_nonzero);
            let nz: Vec<usize> = (0..rows.len())
                .filter(|&i| !rows[i][col].is_zero())
                .collect();
            if nz.len() <= 1 {
                break;
            }
            let best = *nz
                .iter()
                .min_by(|&&a, &&b| rows[a][col].abs().cmp(&rows[b][col].abs()))
                .unwrap();
            let pivot_row = rows[best].clone();
            for &i in &nz {
                if i == best {
                    continue;
                }
                let q = rows[i][col].div_floor(&pivot_row[col]);
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= y * &q;
                }
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            let mut r = rows.swap_remove(i);
            if r[col].is_negative() {
                for x in r.iter_mut() {
                    *x = -x.clone();
                }
            }
            basis.push(r);
        }
    }
    for i in 0..basis.len() {
        let pc = (0..dim).find(|&c| !basis[i][c].is_zero()).unwrap();
        for k in 0..i {
            let q = basis[k][pc].div_floor(&basis[i][pc]);
            if !q.is_zero() {
                let row = basis[i].clone();
                for (x, y) in basis[k].iter_mut().zip(&row) {
                    *x -= y * &q;
                }
            }
        }
    }
    basis
}

/// Integer coordinates of `v` against an echelon basis from [`hermite_basis`],
/// or `None` when `v` is not in the lattice.
pub fn lattice_coords(basis: &[Vec<BigInt>], v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rem = v.to_vec();
    let mut coords = Vec::with_capacity(basis.len());
    for b in basis {
        let pc = b.iter().position(|x| !x.is_zero()).unwrap();
        let (q, r) = rem[pc].div_rem(&b[pc]);
        if !r.is_zero() {
            return None;
        }
        for (x, y) in rem.iter_mut().zip(b.iter()) {
            *x -= y * &q;
        }
        coords.push(q);
    }
    rem.iter().all(Zero::is_zero).then_some(coords)
}

/// Modular arithmetic helpers for a prime `p < 2^31`.
pub mod modp {
    pub fn pow(mut b: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(p));
        pow(a, p - 2, p)
    }

    pub fn is_prime(n: u64) -> bool {
        if n < 2 {
            return false;
        }
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                return false;
            }
            d += 1;
        }
        true
    }

    /// Reduced row echelon form in place; returns pivot columns.
    pub fn rref(m: &mut [Vec<u64>], p: u64) -> Vec<usize> {
        let rows = m.len();
        let cols = if rows == 0 { 0 } else { m[0].len() };
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
                continue;
            };
            m.swap(r, piv);
            let inv_p = inv(m[r][c], p);
            for x in m[r].iter_mut() {
                *x = *x * inv_p % p;
            }
            for i in 0..rows {
                if i != r && m[i][c] != 0 {
                    let f = m[i][c];
                    for j in 0..cols {
                        m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
        pivots
    }

    /// Basis of the right nullspace `{x : M x = 0}`.
    pub fn nullspace(m: &[Vec<u64>], cols: usize, p: u64) -> Vec<Vec<u64>> {
        let mut a = m.to_vec();
        let pivots = rref(&mut a, p);
        let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; cols];
                v[f] = 1;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - a[i][f]) % p;
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial via Hessenberg reduction; returns monic
    /// coefficients, lowest degree first.
    pub fn charpoly(m: &[Vec<u64>], p: u64) -> Vec<u64> {
        let n = m.len();
        let mut h: Vec<Vec<u64>> = m.to_vec();
        for k in 0..n.saturating_sub(2) {
            let Some(piv) = (k + 1..n).find(|&i| h[i][k] != 0) else {
                continue;
            };
            if piv != k + 1 {
                h.swap(piv, k + 1);
                for row in h.iter_mut() {
                    row.swap(piv, k + 1);
                }
            }
            let inv_p = inv(h[k + 1][k], p);
            for i in k + 2..n {
                if h[i][k] == 0 {
                    continue;
                }
                let f = h[i][k] * inv_p % p;
                for j in 0..n {
                    h[i][j] = (h[i][j] + p - f * h[k + 1][j] % p) % p;
                }
                for row in h.iter_mut() {
                    row[k + 1] = (row[k + 1] + f * row[i]) % p;
                }
            }
        }
        // Recurrence for the characteristic polynomials of leading blocks.
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for k in 0..n {
            // x * p_k - h[k][k] * p_k
            let prev = &polys[k];
            let mut next = vec![0u64; k + 2];
            for (i, &c) in prev.iter().enumerate() {
                next[i + 1] = (next[i + 1] + c) % p;
                next[i] = (next[i] + p - c * h[k][k] % p) % p;
            }
            let mut t = 1u64;
            for i in (0..k).rev() {
                t = t * h[i + 1][i] % p;
                let coef = t * h[i][k] % p;
                if coef == 0 {
                    continue;
                }
                for (j, &c) in polys[i].iter().enumerate() {
                    next[j] = (next[j] + p - coef * c % p) % p;
                }
            }
            polys.push(next);
        }
        polys.pop().unwrap()
    }

    pub fn eval(poly: &[u64], x: u64, p: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rational_solve() {
        let q = |n: i64| Rational::from_integer(n.into());
        let mut rows = vec![vec![q(1), q(1), q(3)], vec![q(1), q(-1), q(1)]];
        assert_eq!(solve_rational(&mut rows, 2).unwrap(), vec![q(2), q(1)]);
        let mut bad = vec![vec![q(1), q(1)], vec![q(2), q(3)]];
        assert!(solve_rational(&mut bad, 1).is_none());
    }

    #[test]
    fn lattice_membership() {
        let b = hermite_basis(&[bi(&[2, 0]), bi(&[0, 3]), bi(&[2, 3])], 2);
        assert!(lattice_coords(&b, &bi(&[4, 6])).is_some());
        assert!(lattice_coords(&b, &bi(&[1, 0])).is_none());
        let b = hermite_basis(&[bi(&[4, 6]), bi(&[6, 9])], 2);
        assert!(lattice_coords(&b, &bi(&[2, 3])).is_some());
    }

    #[test]
    fn charpoly_of_companion() {
        let p = 101;
        // companion of x^3 - 2x + 5
        let m = vec![vec![0, 0, p - 5], vec![1, 0, 2], vec![0, 1, 0]];
        assert_eq!(modp::charpoly(&m, p), vec![5, p - 2, 0, 1]);
        // nonderogatory check against a dense matrix: trace and determinant
        let a = vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 10]];
        let cp = modp::charpoly(&a, p);
        assert_eq!(cp[2], (p - 16) % p);
        assert_eq!(cp[0], (p - (p - 3) % p) % p); // -det, det = -3
    }

    #[test]
    fn nullspace_dims() {
        let p = 7;
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = modp::nullspace(&m, 3, p);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let s: u64 = (0..3).map(|j| m[0][j] * v[j]).sum::<u64>() % p;
            assert_eq!(s, 0);
        }
    }
}
