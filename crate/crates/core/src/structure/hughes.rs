use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, SubgroupSet};

/// `H_p(G)`: the subgroup generated by every element whose order is not `p`.
pub fn hughes_subgroup(g: &Group, p: u64) -> SubgroupSet {
    let gens: Vec<usize> = (1..g.order()).filter(|&x| g.element_order(x) as u64 != p).collect();
    g.generate(&gens)
}

#[derive(Clone, Debug)]
pub struct HughesThompson {
    pub p: u64,
    pub hughes: SubgroupSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HughesIndex {
    pub p: u64,
    pub hughes_order: usize,
    pub index: usize,
}

/// `|G : H_p(G)|` for every prime dividing `|G|`.
pub fn hughes_map(g: &Group) -> Vec<HughesIndex> {
    g.factorization()
        .primes()
        .map(|p| {
            let h = hughes_subgroup(g, p);
            HughesIndex {
                p,
                hughes_order: h.order(),
                index: g.order() / h.order(),
            }
        })
        .collect()
}

/// The least prime `p` with `H_p(G) < G`, for a group that is not a p-group.
///
/// A detected group must have `H_p(G)` nilpotent of index `p`; anything else
/// is reported as a structure violation.
pub fn is_hughes_thompson(g: &Group) -> Result<Option<HughesThompson>> {
    let f = g.factorization();
    if g.order() == 1 || f.single_prime().is_some() {
        return Ok(None);
    }
    for p in f.primes() {
        let h = hughes_subgroup(g, p);
        if h.is_whole() {
            continue;
        }
        if g.order() / h.order() != p as usize {
            return Err(Error::StructureViolation(format!(
                "|G : H_{p}(G)| = {} instead of {p}",
                g.order() / h.order()
            )));
        }
        if !g.is_nilpotent_subgroup(&h) {
            return Err(Error::StructureViolation(format!("H_{p}(G) is not nilpotent")));
        }
        return Ok(Some(HughesThompson { p, hughes: h }));
    }
    Ok(None)
}
