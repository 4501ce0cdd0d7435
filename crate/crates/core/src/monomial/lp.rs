//! Exact phase-one simplex with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::cyclotomic::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// `x ≥ 0` with `A x = b`.
    Feasible(Vec<Rational>),
    /// `y` with `yᵀA ≥ 0` and `yᵀb < 0`.
    Infeasible(Vec<Rational>),
}

/// Decides `{x ≥ 0 : A x = b}` exactly. `a` is `m × n` row-major.
pub fn phase_one(a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = if m == 0 { 0 } else { a[0].len() };
    let sign: Vec<Rational> = b
        .iter()
        .map(|x| {
            if x.is_negative() {
                -Rational::one()
            } else {
                Rational::one()
            }
        })
        .collect();
    // Tableau columns: n structural, m artificial, then the right-hand side.
    let width = n + m + 1;
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row = vec![Rational::zero(); width];
            for j in 0..n {
                row[j] = &a[i][j] * &sign[i];
            }
            row[n + i] = Rational::one();
            row[width - 1] = &b[i] * &sign[i];
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Reduced costs of the phase-one objective Σ artificials.
    let mut cost = vec![Rational::zero(); width];
    for j in n..n + m {
        cost[j] = Rational::one();
    }
    for row in &t {
        for j in 0..width {
            cost[j] -= &row[j];
        }
    }
    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            // Unbounded below cannot happen for a phase-one objective bounded by zero.
            unreachable!("phase-one objective is bounded");
        };
        let piv = t[r][enter].clone();
        for x in t[r].iter_mut() {
            *x /= &piv;
        }
        let prow = t[r].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != r && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= y * &f;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, y) in cost.iter_mut().zip(&prow) {
                *x -= y * &f;
            }
        }
        basis[r] = enter;
    }
    let objective = -cost[width - 1].clone();
    if objective.is_zero() {
        let mut x = vec![Rational::zero(); n];
        for (i, &bv) in basis.iter().enumerate() {
            if bv < n {
                x[bv] = t[i][width - 1].clone();
            }
        }
        LpOutcome::Feasible(x)
    } else {
        // Dual multipliers y'_i = 1 - reduced cost of artificial i; undo the row signs.
        let y = (0..m)
            .map(|i| -(Rational::one() - &cost[n + i]) * &sign[i])
            .collect();
        LpOutcome::Infeasible(y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn check(a: &[Vec<Rational>], b: &[Rational]) -> bool {
        match phase_one(a, b) {
            LpOutcome::Feasible(x) => {
                assert!(x.iter().all(|v| !v.is_negative()));
                for (row, bi) in a.iter().zip(b) {
                    let s: Rational = row.iter().zip(&x).map(|(p, v)| p * v).sum();
                    assert_eq!(&s, bi);
                }
                true
            }
            LpOutcome::Infeasible(y) => {
                let n = a[0].len();
                for j in 0..n {
                    let s: Rational = (0..a.len()).map(|i| &y[i] * &a[i][j]).sum();
                    assert!(!s.is_negative());
                }
                let yb: Rational = y.iter().zip(b).map(|(p, v)| p * v).sum();
                assert!(yb.is_negative());
                false
            }
        }
    }

    #[test]
    fn feasible_and_infeasible() {
        let a = vec![vec![q(1), q(0), q(1)], vec![q(0), q(1), q(1)]];
        assert!(check(&a, &[q(2), q(3)]));
        assert!(!check(&a, &[q(-1), q(3)]));
        let a = vec![vec![q(1), q(-1)]];
        assert!(check(&a, &[q(-5)]));
    }
}
