//! Subgroup lattices and the structural detectors built on them.

mod frobenius;
mod hughes;
mod iso;
mod lattice;
mod pgroup;

pub use frobenius::{
    frobenius_kernel, frobenius_pair_in, is_frobenius, is_quasi_frobenius, minimal_normal_subgroups, normal_subgroups,
    FrobeniusStructure, QuasiFrobenius,
};
pub use hughes::{hughes_map, hughes_subgroup, is_hughes_thompson, HughesIndex, HughesThompson};
pub use iso::{is_isomorphic, is_isomorphic_capped, InvariantProfile};
pub use lattice::{all_subgroups, SubgroupLattice};
pub use pgroup::{classify_cyclic_maximal_p_group, CyclicMaximalClass, CyclicMaximalKind};

#[cfg(test)]
mod tests;
