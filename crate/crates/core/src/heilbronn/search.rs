//! Exhaustive evaluation of every inequality over a box of base vectors.

use std::sync::Arc;

use serde::Serialize;

use super::{dot, level_gap_raw, level_inequality_raw, stark_lemma_raw, HeilbronnData, Mode};
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::par::{self, Strategy};

/// Largest candidate count a search will enumerate.
pub const SEARCH_GUARD: u128 = 10_000_000;
const WITNESS_CAP: usize = 5;
const ADMISSIBLE_CAP: usize = 50;
const CHUNK: u64 = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Check {
    FooteMurty,
    AramataBrauer,
    StarkLemma,
    Truncated,
    UvdwGap,
    LinearRestriction,
    RestrictionSum,
    NonlinearBound,
    LevelTruncation,
    LevelInequality,
    GapNotOne,
    LevelDivisibility,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::FooteMurty => "foote_murty",
            Check::AramataBrauer => "aramata_brauer",
            Check::StarkLemma => "stark_lemma",
            Check::Truncated => "truncated",
            Check::UvdwGap => "uvdw_gap",
            Check::LinearRestriction => "linear_restriction",
            Check::RestrictionSum => "restriction_sum",
            Check::NonlinearBound => "nonlinear_bound",
            Check::LevelTruncation => "level_truncation",
            Check::LevelInequality => "level_inequality",
            Check::GapNotOne => "gap_not_one",
            Check::LevelDivisibility => "level_divisibility",
        }
    }
}

const WEAK_CHECKS: [Check; 3] = [Check::FooteMurty, Check::AramataBrauer, Check::StarkLemma];
const SOLVABLE_CHECKS: [Check; 9] = [
    Check::Truncated,
    Check::UvdwGap,
    Check::LinearRestriction,
    Check::RestrictionSum,
    Check::NonlinearBound,
    Check::LevelTruncation,
    Check::LevelInequality,
    Check::GapNotOne,
    Check::LevelDivisibility,
];

/// Integer rows derived once from the group data.
struct Prepared {
    data: Arc<HeilbronnData>,
    checks: Vec<Check>,
    proper_ind_trivial: Vec<Vec<i64>>,
    restriction_sum_rows: Vec<Vec<i64>>,
    level_trunc_rows: Vec<Vec<i64>>,
    nonlinear: Vec<usize>,
}

impl Prepared {
    fn new(data: Arc<HeilbronnData>, mode: Mode) -> Self {
        let mut checks = WEAK_CHECKS.to_vec();
        if mode == Mode::Arithmetic && data.solvable {
            checks.extend(SOLVABLE_CHECKS);
        }
        let g_order = data.group().order();
        let proper_ind_trivial = data
            .subgroups
            .iter()
            .zip(&data.ind_trivial)
            .filter(|(h, _)| h.order() < g_order)
            .map(|(_, r)| r.clone())
            .collect();
        let mut restriction_sum_rows: Vec<Vec<i64>> = Vec::new();
        for (row, _) in &data.linear_restrictions {
            let mut r = row.clone();
            for (other, c) in &data.linear_restrictions {
                if other == row {
                    r[*c] -= 1;
                }
            }
            if !restriction_sum_rows.contains(&r) {
                restriction_sum_rows.push(r);
            }
        }
        let mut level_trunc_rows: Vec<Vec<i64>> = Vec::new();
        if data.solvable {
            for row in &data.ach3_rows {
                for i in 0..=data.derived_length() {
                    let r: Vec<i64> = (0..row.len())
                        .map(|c| if data.levels[c] > i { row[c] } else { 0 })
                        .collect();
                    if !level_trunc_rows.contains(&r) {
                        level_trunc_rows.push(r);
                    }
                }
            }
        }
        let nonlinear = (0..data.degrees.len())
            .filter(|&c| data.degrees[c] > 1)
            .collect();
        Prepared {
            data,
            checks,
            proper_ind_trivial,
            restriction_sum_rows,
            level_trunc_rows,
            nonlinear,
        }
    }

    /// `(holds, tight)`, or `None` when the check does not apply.
    fn eval(&self, check: Check, n: &[i64]) -> Option<(bool, bool)> {
        let d = &*self.data;
        let reg = dot(&d.degrees, n);
        let sq: i64 = n.iter().map(|x| x * x).sum();
        let levels = 1..=d.derived_length();
        let all_nonneg = |rows: &[Vec<i64>]| {
            let vals: Vec<i64> = rows.iter().map(|r| dot(r, n)).collect();
            (vals.iter().all(|&v| v >= 0), vals.contains(&0))
        };
        Some(match check {
            Check::FooteMurty => (sq <= reg * reg, sq == reg * reg),
            Check::AramataBrauer => (n[0].abs() <= reg.abs(), n[0].abs() == reg.abs()),
            Check::StarkLemma => {
                let (applicable, holds) = stark_lemma_raw(d, n);
                if !applicable {
                    return None;
                }
                (holds, false)
            }
            Check::Truncated => {
                let mut out = (true, false);
                for &c in &d.linear {
                    let lhs = sq - n[c] * n[c];
                    let rhs = (reg - n[c]) * (reg - n[c]);
                    out.0 &= lhs <= rhs;
                    out.1 |= lhs == rhs;
                }
                out
            }
            Check::UvdwGap => {
                let gaps: Vec<i64> = self
                    .proper_ind_trivial
                    .iter()
                    .map(|r| dot(r, n) - n[0])
                    .collect();
                (gaps.iter().all(|&v| v >= 0), gaps.contains(&0))
            }
            Check::LinearRestriction => {
                let diffs: Vec<i64> = d
                    .linear_restrictions
                    .iter()
                    .map(|(r, c)| dot(r, n) - n[*c])
                    .collect();
                (diffs.iter().all(|&v| v >= 0), diffs.contains(&0))
            }
            Check::RestrictionSum => all_nonneg(&self.restriction_sum_rows),
            Check::NonlinearBound => {
                let lhs: i64 = self.nonlinear.iter().map(|&c| n[c] * n[c]).sum();
                let rhs = reg - dot(d.derived_row(1), n);
                (lhs <= rhs * rhs, lhs == rhs * rhs)
            }
            Check::LevelTruncation => all_nonneg(&self.level_trunc_rows),
            Check::LevelInequality => {
                let mut out = (true, false);
                for i in levels {
                    let q = level_inequality_raw(d, n, i, true);
                    out.0 &= q.holds;
                    out.1 |= q.tight();
                }
                out
            }
            Check::GapNotOne => (
                levels.into_iter().all(|i| level_gap_raw(d, n, i).0 != 1),
                false,
            ),
            Check::LevelDivisibility => {
                (levels.into_iter().all(|i| level_gap_raw(d, n, i).2), false)
            }
        })
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckTally {
    pub name: String,
    pub evaluated: u64,
    pub violations: u64,
    pub tight: u64,
    pub violation_witnesses: Vec<Vec<i64>>,
    pub tight_witnesses: Vec<Vec<i64>>,
}

impl CheckTally {
    fn merge(&mut self, other: CheckTally) {
        self.evaluated += other.evaluated;
        self.violations += other.violations;
        self.tight += other.tight;
        for (dst, src) in [
            (&mut self.violation_witnesses, other.violation_witnesses),
            (&mut self.tight_witnesses, other.tight_witnesses),
        ] {
            let room = WITNESS_CAP.saturating_sub(dst.len());
            dst.extend(src.into_iter().take(room));
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub group: String,
    pub bound: i64,
    pub mode: Mode,
    pub candidates: u64,
    pub admissible: u64,
    pub total_violations: u64,
    pub checks: Vec<CheckTally>,
    /// The first admissible base vectors in enumeration order.
    pub admissible_sample: Vec<Vec<i64>>,
}

impl SearchReport {
    pub fn check(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn decode(mut idx: u64, k: usize, bound: i64) -> Vec<i64> {
    let m = (2 * bound + 1) as u64;
    let mut v = vec![0i64; k];
    for slot in v.iter_mut().rev() {
        *slot = (idx % m) as i64 - bound;
        idx /= m;
    }
    v
}

/// Enumerates every base vector with entries in `[-bound, bound]`, keeps the
/// ones admissible for `mode`, and evaluates every applicable inequality.
pub fn search_admissible(
    table: &CharacterTable,
    bound: i64,
    mode: Mode,
    strategy: Strategy,
) -> Result<SearchReport> {
    let data = HeilbronnData::new(table.group())?;
    search_with_data(data, bound, mode, strategy)
}

pub fn search_with_data(
    data: Arc<HeilbronnData>,
    bound: i64,
    mode: Mode,
    strategy: Strategy,
) -> Result<SearchReport> {
    if bound < 0 {
        return Err(Error::OutOfRange("bound must be non-negative".into()));
    }
    let k = data.degrees.len();
    let total = (2 * bound as u128 + 1)
        .checked_pow(k as u32)
        .filter(|&t| t <= SEARCH_GUARD)
        .ok_or(Error::SearchSpaceTooLarge {
            found: (2 * bound as u128 + 1).saturating_pow(k as u32),
            cap: SEARCH_GUARD,
        })? as u64;
    let prep = Prepared::new(data.clone(), mode);
    let chunks = total.div_ceil(CHUNK) as usize;
    let partials = par::map_range(strategy, chunks, |c| {
        let mut tallies: Vec<CheckTally> =
            prep.checks.iter().map(|_| CheckTally::default()).collect();
        let mut admissible = 0u64;
        let mut sample = Vec::new();
        let start = c as u64 * CHUNK;
        for idx in start..(start + CHUNK).min(total) {
            let n = decode(idx, k, bound);
            let ok = match mode {
                Mode::Weak => data.weak_rows.iter().all(|r| dot(r, &n) >= 0),
                Mode::Arithmetic => data.ach3_rows.iter().all(|r| dot(r, &n) >= 0),
            };
            if !ok {
                continue;
            }
            admissible += 1;
            if sample.len() < ADMISSIBLE_CAP {
                sample.push(n.clone());
            }
            for (t, &check) in tallies.iter_mut().zip(&prep.checks) {
                let Some((holds, tight)) = prep.eval(check, &n) else {
                    continue;
                };
                t.evaluated += 1;
                if !holds {
                    t.violations += 1;
                    if t.violation_witnesses.len() < WITNESS_CAP {
                        t.violation_witnesses.push(n.clone());
                    }
                }
                if tight {
                    t.tight += 1;
                    if t.tight_witnesses.len() < WITNESS_CAP {
                        t.tight_witnesses.push(n.clone());
                    }
                }
            }
        }
        (admissible, sample, tallies)
    });
    let mut checks: Vec<CheckTally> = prep
        .checks
        .iter()
        .map(|c| CheckTally {
            name: c.name().into(),
            ..Default::default()
        })
        .collect();
    let mut admissible = 0;
    let mut admissible_sample = Vec::new();
    for (a, sample, tallies) in partials {
        admissible += a;
        let room = ADMISSIBLE_CAP.saturating_sub(admissible_sample.len());
        admissible_sample.extend(sample.into_iter().take(room));
        for (dst, src) in checks.iter_mut().zip(tallies) {
            dst.merge(src);
        }
    }
    Ok(SearchReport {
        group: data.group().name().to_string(),
        bound,
        mode,
        candidates: total,
        admissible,
        total_violations: checks.iter().map(|c| c.violations).sum(),
        checks,
        admissible_sample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::corpus;

    #[test]
    fn s3_weak_bound_three() {
        let t = character_table(&corpus::symmetric(3)).unwrap();
        let r = search_admissible(&t, 3, Mode::Weak, Strategy::Parallel).unwrap();
        assert_eq!(r.candidates, 343);
        assert_eq!(r.total_violations, 0);
        assert!(r.admissible > 0);
    }

    #[test]
    fn bound_zero_is_single_zero() {
        let t = character_table(&corpus::symmetric(3)).unwrap();
        let r = search_admissible(&t, 0, Mode::Arithmetic, Strategy::Sequential).unwrap();
        assert_eq!((r.candidates, r.admissible), (1, 1));
        assert_eq!(r.check("foote_murty").unwrap().tight, 1);
    }

    #[test]
    fn strategies_agree() {
        let t = character_table(&corpus::cyclic(4)).unwrap();
        let a = search_admissible(&t, 2, Mode::Arithmetic, Strategy::Sequential).unwrap();
        let b = search_admissible(&t, 2, Mode::Arithmetic, Strategy::Parallel).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn guard_rejects_huge_boxes() {
        let t = character_table(&corpus::cyclic(12)).unwrap();
        assert!(matches!(
            search_admissible(&t, 3, Mode::Weak, Strategy::Sequential),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }
}
