use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{Group, Limits, SubgroupSet};
use crate::numbers::PrimeFactorization;

/// Every subgroup of a group, sorted by (order, lexicographic member list).
///
/// Index 0 is the trivial subgroup and the last index is the whole group.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    parent_order: usize,
    subgroups: Vec<SubgroupSet>,
    normal: Vec<bool>,
    maximal: Vec<bool>,
    cyclic: Vec<bool>,
    cyclic_of: Vec<usize>,
    index: HashMap<ElementSet, usize>,
}

pub fn all_subgroups(g: &Group) -> Result<SubgroupLattice> {
    SubgroupLattice::build(g, &Limits::default())
}

impl SubgroupLattice {
    pub fn build(g: &Group, limits: &Limits) -> Result<Self> {
        Self::build_with_seed_order(g, limits, None)
    }

    /// Seeds the join closure in the given element order (default: ascending).
    /// The result does not depend on the order; exposed for testing that claim.
    pub fn build_with_seed_order(g: &Group, limits: &Limits, seed_order: Option<&[usize]>) -> Result<Self> {
        let n = g.order();
        if n > limits.max_lattice_order {
            return Err(Error::EnumerationTooLarge {
                cap: limits.max_lattice_order,
            });
        }
        let default_order: Vec<usize> = (0..n).collect();
        let order = seed_order.unwrap_or(&default_order);

        let mut found: Vec<SubgroupSet> = Vec::new();
        let mut seen: HashMap<ElementSet, usize> = HashMap::new();
        let push = |s: SubgroupSet, found: &mut Vec<SubgroupSet>, seen: &mut HashMap<ElementSet, usize>| {
            if seen.contains_key(s.members()) {
                return false;
            }
            seen.insert(s.members().clone(), found.len());
            found.push(s);
            true
        };

        // Prime-power cyclic subgroups generate every subgroup by joins.
        let mut seeds: Vec<SubgroupSet> = Vec::new();
        let mut seed_seen: HashMap<ElementSet, ()> = HashMap::new();
        for &x in order {
            let c = g.cyclic_subgroup(x);
            let o = g.element_order(x) as u64;
            let prime_power = o > 1 && PrimeFactorization::of(o).single_prime().is_some();
            if prime_power && seed_seen.insert(c.members().clone(), ()).is_none() {
                seeds.push(c.clone());
            }
            push(c, &mut found, &mut seen);
        }
        if found.len() > limits.max_subgroups {
            return Err(Error::EnumerationTooLarge {
                cap: limits.max_subgroups,
            });
        }

        let mut has_proper_cover = vec![false; 0];
        let mut next = 0;
        while next < found.len() {
            let h = found[next].clone();
            let mut proper_join = false;
            for c in &seeds {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let j = g.join_element(&h, c.generators()[0]);
                if !j.is_whole() {
                    proper_join = true;
                }
                if push(j, &mut found, &mut seen) && found.len() > limits.max_subgroups {
                    return Err(Error::EnumerationTooLarge {
                        cap: limits.max_subgroups,
                    });
                }
            }
            has_proper_cover.push(proper_join);
            next += 1;
        }

        let mut idx: Vec<usize> = (0..found.len()).collect();
        idx.sort_by(|&a, &b| {
            found[a]
                .order()
                .cmp(&found[b].order())
                .then_with(|| found[a].members().cmp(found[b].members()))
        });
        let mut subgroups = Vec::with_capacity(idx.len());
        let mut maximal = Vec::with_capacity(idx.len());
        for &i in &idx {
            let s = &found[i];
            maximal.push(!s.is_whole() && !has_proper_cover[i]);
            subgroups.push(s.clone());
        }
        let normal = subgroups.iter().map(|s| g.is_normal(s)).collect();
        let cyclic = subgroups
            .iter()
            .map(|s| s.members().iter().any(|x| g.element_order(x) == s.order()))
            .collect();
        let index = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect::<HashMap<_, _>>();
        let cyclic_of = (0..n).map(|x| index[g.cyclic_subgroup(x).members()]).collect();
        Ok(SubgroupLattice {
            parent_order: n,
            subgroups,
            normal,
            maximal,
            cyclic,
            cyclic_of,
            index,
        })
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn subgroups(&self) -> &[SubgroupSet] {
        &self.subgroups
    }

    pub fn get(&self, i: usize) -> &SubgroupSet {
        &self.subgroups[i]
    }

    pub fn is_normal(&self, i: usize) -> bool {
        self.normal[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn is_cyclic(&self, i: usize) -> bool {
        self.cyclic[i]
    }

    /// Lattice index of the cyclic subgroup generated by element `x`.
    pub fn cyclic_of(&self, x: usize) -> usize {
        self.cyclic_of[x]
    }

    pub fn whole_index(&self) -> usize {
        self.subgroups.len() - 1
    }

    pub fn index_of(&self, members: &ElementSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Indices of the subgroups strictly inside subgroup `k`, in lattice order.
    pub fn proper_subgroups_of(&self, k: usize) -> Vec<usize> {
        let outer = &self.subgroups[k];
        (0..k)
            .filter(|&i| {
                let s = &self.subgroups[i];
                s.order() < outer.order() && outer.order().is_multiple_of(s.order()) && s.is_subgroup_of(outer)
            })
            .collect()
    }

    pub fn maximal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.maximal[i])
    }

    pub fn normal_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(|&i| self.normal[i])
    }

    pub fn proper_noncyclic_count(&self) -> usize {
        (0..self.whole_index()).filter(|&i| !self.cyclic[i]).count()
    }
}
