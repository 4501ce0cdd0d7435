//! Dual-group construction for abelian groups.

use std::collections::VecDeque;

use crate::cyclotomic::Cyclotomic;
use crate::error::{Error, Result};
use crate::group::PermGroup;

/// Greedy generating set: elements of largest order first, each outside the
/// span of those already chosen.
fn greedy_generators(g: &PermGroup) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.order()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.element_order(i)), i));
    let mut in_span = vec![false; g.order()];
    in_span[0] = true;
    let mut gens: Vec<usize> = Vec::new();
    for x in order {
        if in_span[x] {
            continue;
        }
        gens.push(x);
        let mut queue: VecDeque<usize> = (0..g.order()).filter(|&y| in_span[y]).collect();
        while let Some(y) = queue.pop_front() {
            for &s in &gens {
                let z = g.mul(y, s);
                if !in_span[z] {
                    in_span[z] = true;
                    queue.push_back(z);
                }
            }
        }
    }
    gens
}

/// All homomorphisms `G → μ_e`, as value vectors in class order.
pub fn abelian_characters(g: &PermGroup) -> Result<Vec<Vec<Cyclotomic>>> {
    let n = g.order();
    let e = g.exponent();
    let gens = greedy_generators(g);
    let orders: Vec<u64> = gens.iter().map(|&s| g.element_order(s)).collect();
    let total: u64 = orders.iter().product();
    let mut chars = Vec::new();
    for code in 0..total {
        let mut rest = code;
        let exps: Vec<u64> = orders
            .iter()
            .map(|&o| {
                let a = rest % o;
                rest /= o;
                a * (e / o)
            })
            .collect();
        // BFS labelling: label(x s_i) = label(x) + exps[i] (mod e).
        let mut label: Vec<Option<u64>> = vec![None; n];
        label[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        let mut consistent = true;
        'bfs: while let Some(x) = queue.pop_front() {
            let lx = label[x].unwrap();
            for (s, &a) in gens.iter().zip(&exps) {
                let y = g.mul(x, *s);
                let ly = (lx + a) % e;
                match label[y] {
                    None => {
                        label[y] = Some(ly);
                        queue.push_back(y);
                    }
                    Some(old) if old != ly => {
                        consistent = false;
                        break 'bfs;
                    }
                    Some(_) => {}
                }
            }
        }
        if !consistent {
            continue;
        }
        let values = g
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let l = label[c.members[0]].expect("generators span the group");
                Cyclotomic::root_of_unity(e as usize, l as i64)
            })
            .collect();
        chars.push(values);
    }
    if chars.len() != n {
        return Err(Error::VerificationFailed(format!(
            "found {} linear characters for an abelian group of order {n}",
            chars.len()
        )));
    }
    Ok(chars)
}
