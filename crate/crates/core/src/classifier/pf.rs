use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::partition::{admits_partition_structural, find_partition_in, find_partition_with, PartitionCover};
use crate::structure::SubgroupLattice;

/// Lattice if the group is within both caps, `None` if a cap is hit.
pub(crate) fn lattice_within_caps(g: &Group, limits: &Limits) -> Result<Option<SubgroupLattice>> {
    match SubgroupLattice::build(g, limits) {
        Ok(l) => Ok(Some(l)),
        Err(e) if e.is_cap_exceeded() => Ok(None),
        Err(e) => Err(e),
    }
}

/// Partition-free: non-cyclic with no non-trivial partition.
///
/// Brute force decides within the caps; above them the structural decider
/// is used when it is conclusive.
pub fn is_pf(g: &Group, limits: &Limits) -> Result<bool> {
    if g.is_cyclic() {
        return Ok(false);
    }
    let lattice = lattice_within_caps(g, limits)?;
    Ok(!admits_partition(g, lattice.as_ref())?)
}

pub(crate) fn admits_partition(g: &Group, lattice: Option<&SubgroupLattice>) -> Result<bool> {
    if let Some(l) = lattice {
        return Ok(find_partition_with(g, l).is_some());
    }
    admits_partition_structural(g)?.admits.ok_or_else(|| {
        Error::Undecidable(format!(
            "order {} is above the brute-force caps and the group is outside the structural recognizers",
            g.order()
        ))
    })
}

/// A subgroup, given by its sorted elements, and its partition witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupWitness {
    pub subgroup: Vec<usize>,
    pub witness: PartitionCover,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPfCertificate {
    pub is_pf: bool,
    pub is_minimal_pf: bool,
    /// Every proper non-cyclic subgroup checked, with its witness, in
    /// lattice order. Empty unless the group is PF.
    pub subgroup_witnesses: Vec<SubgroupWitness>,
    /// A proper non-cyclic subgroup with no partition, when one exists.
    pub offending_subgroup: Option<Vec<usize>>,
}

impl MinimalPfCertificate {
    pub(crate) fn not_pf() -> Self {
        MinimalPfCertificate {
            is_pf: false,
            is_minimal_pf: false,
            subgroup_witnesses: Vec::new(),
            offending_subgroup: None,
        }
    }
}

pub fn is_minimal_pf(g: &Group, limits: &Limits) -> Result<MinimalPfCertificate> {
    if g.is_cyclic() {
        return Ok(MinimalPfCertificate::not_pf());
    }
    let lattice = lattice_within_caps(g, limits)?;
    if admits_partition(g, lattice.as_ref())? {
        return Ok(MinimalPfCertificate::not_pf());
    }
    let lattice = lattice.ok_or_else(|| {
        Error::Undecidable(format!(
            "order {} is PF but its subgroup lattice exceeds the caps",
            g.order()
        ))
    })?;
    Ok(minimal_pf_certificate(g, &lattice))
}

/// The subgroup half of the minimal-PF check, for a group already known to
/// be PF. Subgroups are searched inside the parent's lattice, which holds
/// exactly the subgroups of each subgroup.
pub(crate) fn minimal_pf_certificate(g: &Group, lattice: &SubgroupLattice) -> MinimalPfCertificate {
    let mut witnesses = Vec::new();
    for k in 0..lattice.whole_index() {
        if lattice.is_cyclic(k) {
            continue;
        }
        let members = lattice.get(k).elements();
        match find_partition_in(g, lattice, k) {
            Some(witness) => witnesses.push(SubgroupWitness {
                subgroup: members,
                witness,
            }),
            None => {
                return MinimalPfCertificate {
                    is_pf: true,
                    is_minimal_pf: false,
                    subgroup_witnesses: witnesses,
                    offending_subgroup: Some(members),
                }
            }
        }
    }
    MinimalPfCertificate {
        is_pf: true,
        is_minimal_pf: true,
        subgroup_witnesses: witnesses,
        offending_subgroup: None,
    }
}
