use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::partition::find_partition_in;
use crate::structure::{classify_cyclic_maximal_p_group, CyclicMaximalClass, CyclicMaximalKind, SubgroupLattice};

/// Outcome of checking the statement on one p-group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum P3Outcome {
    HypothesisFalse {
        reason: String,
    },
    ConclusionVerified {
        class: String,
    },
    /// The hypothesis holds but the group is none of `C_p x C_{p^2}`,
    /// `M_3(p)`, `D_{2^n}`.
    Violation {
        detail: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct P3Report {
    pub p: u64,
    pub order: usize,
    pub outcome: P3Outcome,
}

impl P3Report {
    pub fn is_violation(&self) -> bool {
        matches!(self.outcome, P3Outcome::Violation { .. })
    }
}

/// For a p-group: if every proper non-cyclic subgroup admits a partition and
/// some non-cyclic maximal subgroup `M` misses an element of order `p^a`,
/// `a > 1`, then the group must be `C_p x C_{p^2}`, `M_3(p)` or `D_{2^n}`.
pub fn check_proposition_p3(g: &Group, limits: &Limits) -> Result<P3Report> {
    let p = g.is_p_group().ok_or(Error::NotPGroup)?;
    let lattice = SubgroupLattice::build(g, limits)?;
    let report = |outcome| P3Report {
        p,
        order: g.order(),
        outcome,
    };
    let top = lattice.whole_index();
    if let Some(k) = (0..top).find(|&k| !lattice.is_cyclic(k) && find_partition_in(g, &lattice, k).is_none()) {
        return Ok(report(P3Outcome::HypothesisFalse {
            reason: format!(
                "proper non-cyclic subgroup of order {} admits no partition",
                lattice.get(k).order()
            ),
        }));
    }
    let p = p as usize;
    let witness = lattice
        .maximal_indices()
        .filter(|&m| !lattice.is_cyclic(m))
        .find_map(|m| {
            let sub = lattice.get(m);
            (0..g.order()).find(|&x| {
                let o = g.element_order(x);
                !sub.contains(x) && o > p
            })
        });
    if witness.is_none() {
        return Ok(report(P3Outcome::HypothesisFalse {
            reason: "no non-cyclic maximal subgroup misses an element of order p^a with a > 1".into(),
        }));
    }
    let class = classify_cyclic_maximal_p_group(g);
    let accepted = |c: &CyclicMaximalClass| match c.kind {
        CyclicMaximalKind::CpTimesCyclic | CyclicMaximalKind::Modular => c.n == 3,
        CyclicMaximalKind::Dihedral => c.n >= 3,
        _ => false,
    };
    Ok(match class {
        Ok(c) if accepted(&c) => report(P3Outcome::ConclusionVerified { class: c.to_string() }),
        Ok(c) => report(P3Outcome::Violation {
            detail: format!("hypothesis holds but the group is of type {c}"),
        }),
        Err(e) => report(P3Outcome::Violation {
            detail: format!("hypothesis holds but classification failed: {e}"),
        }),
    })
}
