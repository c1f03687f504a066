//! Partition search: exact cover over subgroup blocks, a naive backtracking
//! oracle, an independent witness checker and the structural decider.

mod cover;
mod dlx;
mod structural;

use std::cmp::Reverse;

use crate::bitset::ElementSet;
use crate::error::Result;
use crate::group::{Group, Limits};
use crate::structure::SubgroupLattice;

pub use cover::{check_partition, parse_witness_dump, PartitionCover};
pub use dlx::ExactCover;
pub use structural::{
    admits_partition_structural, cross_validate, cross_validate_with, PartitionMethod, PartitionVerdict,
    StructuralLabel,
};

/// Brute-force partition search on the whole group; builds the lattice with
/// default limits.
pub fn find_partition(g: &Group) -> Result<Option<PartitionCover>> {
    let lattice = SubgroupLattice::build(g, &Limits::default())?;
    Ok(find_partition_with(g, &lattice))
}

pub fn find_partition_with(g: &Group, lattice: &SubgroupLattice) -> Option<PartitionCover> {
    find_partition_in(g, lattice, lattice.whole_index())
}

fn is_abelian_subgroup(g: &Group, lattice: &SubgroupLattice, i: usize) -> bool {
    let gens = lattice.get(i).generators();
    gens.iter().all(|&a| g.commutes_with_all(a, gens))
}

/// Partition of the subgroup at lattice index `k` by its own proper
/// subgroups, found by dancing links.
///
/// Columns are the non-identity elements of `K`; rows are its proper
/// non-trivial subgroups, abelian ones first, then larger before smaller,
/// then lattice order. The row order only affects which witness comes first.
pub fn find_partition_in(g: &Group, lattice: &SubgroupLattice, k: usize) -> Option<PartitionCover> {
    let outer = lattice.get(k);
    if outer.order() < 4 {
        return None;
    }
    let elements = outer.elements();
    let mut column = vec![usize::MAX; g.order()];
    for (c, &x) in elements.iter().skip(1).enumerate() {
        column[x] = c;
    }
    let mut blocks: Vec<usize> = lattice
        .proper_subgroups_of(k)
        .into_iter()
        .filter(|&i| !lattice.get(i).is_trivial())
        .collect();
    blocks.sort_by_key(|&i| (!is_abelian_subgroup(g, lattice, i), Reverse(lattice.get(i).order()), i));
    let rows: Vec<Vec<usize>> = blocks
        .iter()
        .map(|&i| {
            let block = lattice.get(i);
            debug_assert!(block
                .members()
                .iter()
                .all(|x| lattice.get(lattice.cyclic_of(x)).is_subgroup_of(block)));
            block.members().iter().skip(1).map(|x| column[x]).collect()
        })
        .collect();
    let mut dlx = ExactCover::new(elements.len() - 1, &rows);
    let chosen = dlx.solve_first()?;
    assert!(chosen.len() >= 2, "a proper block cannot cover the whole group");
    Some(PartitionCover::new(
        elements,
        chosen.iter().map(|&r| lattice.get(blocks[r]).elements()).collect(),
    ))
}

/// Reference search without dancing links or heuristics: cover the least
/// uncovered element with each candidate subgroup in lattice order.
pub fn find_partition_naive(g: &Group, lattice: &SubgroupLattice) -> Option<PartitionCover> {
    let n = g.order();
    if n < 4 {
        return None;
    }
    let candidates: Vec<usize> = (1..lattice.whole_index()).collect();
    let mut covered = ElementSet::from_indices(n, [0]);
    let mut chosen = Vec::new();
    if naive_step(lattice, &candidates, &mut covered, &mut chosen) {
        Some(PartitionCover::new(
            (0..n).collect(),
            chosen.iter().map(|&i| lattice.get(i).elements()).collect(),
        ))
    } else {
        None
    }
}

fn naive_step(
    lattice: &SubgroupLattice,
    candidates: &[usize],
    covered: &mut ElementSet,
    chosen: &mut Vec<usize>,
) -> bool {
    let x = match (0..covered.capacity()).find(|&x| !covered.contains(x)) {
        Some(x) => x,
        None => return true,
    };
    for &i in candidates {
        let block = lattice.get(i).members();
        if !block.contains(x) || block.intersection_len(covered) != 1 {
            continue;
        }
        covered.union_with(block);
        chosen.push(i);
        if naive_step(lattice, candidates, covered, chosen) {
            return true;
        }
        chosen.pop();
        covered.difference_with(block);
        covered.insert(0);
    }
    false
}

#[cfg(test)]
mod tests;
