use std::collections::HashSet;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{Group, Limits, SubgroupSet};
use crate::numbers::is_prime;

use super::SubgroupLattice;

#[derive(Clone, Debug)]
pub struct FrobeniusStructure {
    pub kernel: SubgroupSet,
    pub complement: SubgroupSet,
    /// No proper subgroup is itself a Frobenius group.
    pub is_minimal: bool,
}

/// Central quotient data for a group whose `G/Z(G)` is Frobenius.
#[derive(Clone, Debug)]
pub struct QuasiFrobenius {
    pub center: SubgroupSet,
    pub quotient: Group,
    /// Element -> coset index in `quotient`.
    pub projection: Vec<usize>,
    /// Kernel and complement in coset indices.
    pub quotient_frobenius: FrobeniusStructure,
}

fn acts_fixed_point_freely(g: &Group, complement: &SubgroupSet, kernel: &SubgroupSet) -> bool {
    complement
        .members()
        .iter()
        .skip(1)
        .all(|h| kernel.members().iter().skip(1).all(|n| g.mul(h, n) != g.mul(n, h)))
}

/// Kernel/complement lattice indices when subgroup `k` of the lattice is a
/// Frobenius group: a proper nontrivial normal subgroup of `k` with a
/// complement in `k` whose non-identity elements centralize no non-identity
/// kernel element.
pub fn frobenius_pair_in(g: &Group, lattice: &SubgroupLattice, k: usize) -> Option<(usize, usize)> {
    let outer = lattice.get(k);
    let gens = outer.generators();
    if gens.iter().all(|&a| g.commutes_with_all(a, gens)) {
        return None;
    }
    let inside: Vec<usize> = lattice
        .proper_subgroups_of(k)
        .into_iter()
        .filter(|&i| !lattice.get(i).is_trivial())
        .collect();
    for &ni in &inside {
        let n = lattice.get(ni);
        if !g.is_normal_in(n, outer) {
            continue;
        }
        let want = outer.order() / n.order();
        for &hi in &inside {
            let h = lattice.get(hi);
            if h.order() != want || h.members().intersection_len(n.members()) != 1 {
                continue;
            }
            if acts_fixed_point_freely(g, h, n) {
                return Some((ni, hi));
            }
        }
    }
    None
}

/// Detects a Frobenius structure on the whole group and decides minimality.
///
/// For a minimal one, checks that the kernel is the unique minimal normal
/// subgroup and that the complement has prime order.
pub fn is_frobenius(g: &Group, lattice: &SubgroupLattice) -> Result<Option<FrobeniusStructure>> {
    let top = lattice.whole_index();
    let Some((ki, ci)) = frobenius_pair_in(g, lattice, top) else {
        return Ok(None);
    };
    let is_minimal = (0..top).all(|k| frobenius_pair_in(g, lattice, k).is_none());
    let kernel = lattice.get(ki).clone();
    let complement = lattice.get(ci).clone();
    if is_minimal {
        if !is_prime(complement.order() as u64) {
            return Err(Error::StructureViolation(format!(
                "minimal Frobenius complement has non-prime order {}",
                complement.order()
            )));
        }
        let minimal_normals = minimal_normal_subgroups(lattice);
        if minimal_normals != [ki] {
            return Err(Error::StructureViolation(
                "minimal Frobenius kernel is not the unique minimal normal subgroup".into(),
            ));
        }
    }
    Ok(Some(FrobeniusStructure {
        kernel,
        complement,
        is_minimal,
    }))
}

/// Lattice indices of the minimal normal subgroups.
pub fn minimal_normal_subgroups(lattice: &SubgroupLattice) -> Vec<usize> {
    let normals: Vec<usize> = lattice
        .normal_indices()
        .filter(|&i| !lattice.get(i).is_trivial())
        .collect();
    normals
        .iter()
        .copied()
        .filter(|&i| {
            normals
                .iter()
                .all(|&j| j == i || !(lattice.get(j).is_subgroup_of(lattice.get(i))))
        })
        .collect()
}

/// `Z(G)` nontrivial and proper with `G/Z(G)` Frobenius.
pub fn is_quasi_frobenius(g: &Group, limits: &Limits) -> Result<Option<QuasiFrobenius>> {
    let center = g.center();
    if center.is_trivial() || center.is_whole() {
        return Ok(None);
    }
    let (quotient, projection) = g.quotient_group(&center)?;
    let lattice = SubgroupLattice::build(&quotient, limits)?;
    let Some(quotient_frobenius) = is_frobenius(&quotient, &lattice)? else {
        return Ok(None);
    };
    Ok(Some(QuasiFrobenius {
        center,
        quotient,
        projection,
        quotient_frobenius,
    }))
}

/// Every normal subgroup, found without the subgroup lattice as joins of
/// normal closures of single elements. Sorted by (order, members).
pub fn normal_subgroups(g: &Group) -> Vec<SubgroupSet> {
    let whole = g.whole();
    let mut seen_class = vec![false; g.order()];
    let mut closures: Vec<SubgroupSet> = Vec::new();
    let mut found: HashSet<ElementSet> = HashSet::new();
    for x in 0..g.order() {
        if seen_class[x] {
            continue;
        }
        for y in 0..g.order() {
            seen_class[g.conj(x, y)] = true;
        }
        let c = g.normal_closure_in(&[x], &whole);
        if found.insert(c.members().clone()) {
            closures.push(c);
        }
    }
    let mut all = closures.clone();
    let mut next = 0;
    while next < all.len() {
        let n = all[next].clone();
        for c in &closures {
            if c.is_subgroup_of(&n) {
                continue;
            }
            let j = g.join(&n, c);
            if found.insert(j.members().clone()) {
                all.push(j);
            }
        }
        next += 1;
    }
    all.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members().cmp(b.members())));
    all
}

/// The Frobenius kernel, if any, by the centralizer criterion: a proper
/// nontrivial normal `N` with `C_G(n) <= N` for every non-identity `n` in `N`.
///
/// Needs no subgroup lattice, so it works above the lattice cap; the
/// lattice-based [`is_frobenius`] is the cross-check.
pub fn frobenius_kernel(g: &Group) -> Option<SubgroupSet> {
    normal_subgroups(g)
        .into_iter()
        .filter(|n| !n.is_trivial() && !n.is_whole())
        .find(|n| {
            n.members()
                .iter()
                .skip(1)
                .all(|x| (0..g.order()).all(|y| n.contains(y) || g.mul(x, y) != g.mul(y, x)))
        })
}
