use std::hash::{Hash, Hasher};

use crate::bitset::ElementSet;

/// A closed subset of a parent group's elements, with a generating sequence.
///
/// Equality and hashing look at the members only.
#[derive(Clone, Debug)]
pub struct SubgroupSet {
    members: ElementSet,
    generators: Vec<usize>,
}

impl SubgroupSet {
    pub(crate) fn from_parts(members: ElementSet, generators: Vec<usize>) -> Self {
        debug_assert!(members.contains(0));
        SubgroupSet { members, generators }
    }

    pub fn parent_order(&self) -> usize {
        self.members.capacity()
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    pub fn into_members(self) -> ElementSet {
        self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.parent_order()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    /// Smallest non-identity member.
    pub fn least_nontrivial(&self) -> Option<usize> {
        self.members.next_after(0)
    }
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for SubgroupSet {}

impl Hash for SubgroupSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}
