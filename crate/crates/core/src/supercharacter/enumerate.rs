//! Exhaustive enumeration of supercharacter theories over partitions of the
//! conjugacy classes.

use crate::chartab::character_table;
use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::par::{self, Strategy};

use super::SupercharacterTheory;

/// Largest class count enumerated by default.
pub const DEFAULT_CLASS_CAP: usize = 8;

/// All set partitions of `items`, as lists of blocks.
pub(crate) fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(items: &[usize], i: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[i]);
            go(items, i + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[i]]);
        go(items, i + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `0..r` into exactly `m` blocks drawn from `good` masks.
fn block_partitions(r: usize, m: usize, good: &[bool]) -> Vec<Vec<usize>> {
    fn go(
        full: usize,
        used: usize,
        left: usize,
        good: &[bool],
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if used == full {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        if left == 0 {
            return;
        }
        let low = (!used & full).trailing_zeros() as usize;
        let free = full & !used;
        // Submasks of the free set that contain the lowest free index.
        let mut sub = free;
        loop {
            if sub & (1 << low) != 0 && good[sub] {
                acc.push(sub);
                go(full, used | sub, left - 1, good, acc, out);
                acc.pop();
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
    }
    let mut out = Vec::new();
    go((1 << r) - 1, 0, m, good, &mut Vec::new(), &mut out);
    out
}

pub fn enumerate_scts(g: &Group, strategy: Strategy) -> Result<Vec<SupercharacterTheory>> {
    enumerate_scts_with_cap(g, DEFAULT_CLASS_CAP, strategy)
}

/// Every supercharacter theory of `g`, sorted by superclass partition.
pub fn enumerate_scts_with_cap(
    g: &Group,
    cap: usize,
    strategy: Strategy,
) -> Result<Vec<SupercharacterTheory>> {
    let c = g.num_classes();
    if c > cap {
        return Err(Error::SearchSpaceTooLarge {
            found: c as u128,
            cap: cap as u128,
        });
    }
    let table = character_table(g)?;
    let r = table.len();
    // Values of Σ_{χ ∈ mask} χ(1)χ on each class.
    let mut sums: Vec<Vec<Cyclotomic>> = vec![vec![Cyclotomic::zero(); c]; 1 << r];
    for mask in 1usize..1 << r {
        let i = mask.trailing_zeros() as usize;
        let chi = table.irr(i);
        let d = chi.degree().clone();
        sums[mask] = (0..c)
            .map(|cl| &sums[mask & (mask - 1)][cl] + &(&d * chi.value(cl)))
            .collect();
    }
    let nontrivial: Vec<usize> = (1..c).collect();
    let ks: Vec<Vec<Vec<usize>>> = set_partitions(&nontrivial)
        .into_iter()
        .map(|mut p| {
            p.insert(0, vec![0]);
            p
        })
        .collect();
    let found = par::map_slice(strategy, &ks, |k| {
        let good: Vec<bool> = (0..1usize << r)
            .map(|mask| {
                mask != 0
                    && k.iter()
                        .all(|part| part.iter().all(|&cl| sums[mask][cl] == sums[mask][part[0]]))
            })
            .collect();
        block_partitions(r, k.len(), &good)
            .into_iter()
            .map(|masks| {
                let x: Vec<Vec<usize>> = masks
                    .iter()
                    .map(|&m| (0..r).filter(|i| m & (1 << i) != 0).collect())
                    .collect();
                let k_elems: Vec<Vec<usize>> = k
                    .iter()
                    .map(|part| {
                        part.iter()
                            .flat_map(|&cl| g.conjugacy_classes()[cl].members.iter().copied())
                            .collect()
                    })
                    .collect();
                SupercharacterTheory::from_elements(g, x, k_elems)
            })
            .collect::<Result<Vec<_>>>()
    });
    let mut out: Vec<SupercharacterTheory> = Vec::new();
    for batch in found {
        for th in batch? {
            if !out.iter().any(|o| o.same_as(&th)) {
                out.push(th);
            }
        }
    }
    out.sort_by(|a, b| (a.len(), &a.k, &a.x).cmp(&(b.len(), &b.k, &b.x)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn partition_counts() {
        assert_eq!(set_partitions(&[0, 1, 2, 3]).len(), 15);
        assert_eq!(set_partitions(&[]).len(), 1);
    }

    #[test]
    fn small_counts() {
        assert_eq!(
            enumerate_scts(&corpus::trivial(), Strategy::Sequential)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            enumerate_scts(&corpus::cyclic(2), Strategy::Sequential)
                .unwrap()
                .len(),
            1
        );
        let c4 = enumerate_scts(&corpus::cyclic(4), Strategy::Parallel).unwrap();
        assert_eq!(c4.len(), 3);
        let s3 = enumerate_scts(&corpus::symmetric(3), Strategy::Parallel).unwrap();
        assert_eq!(s3.len(), 2);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_scts_with_cap(&corpus::cyclic(12), 8, Strategy::Sequential),
            Err(Error::SearchSpaceTooLarge { .. })
        ));
    }
}
