use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Group, Limits};
use crate::partition::{admits_partition_structural, cross_validate_with, PartitionVerdict};
use crate::structure::{frobenius_kernel, hughes_map, is_frobenius, is_quasi_frobenius, HughesIndex};

use super::pf::{lattice_within_caps, minimal_pf_certificate};
use super::recognize::recognize_family;
use super::FamilyTag;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub cyclic: bool,
    pub abelian: bool,
    pub solvable: bool,
    pub nilpotent: bool,
    /// The prime, for a non-trivial p-group.
    pub p_group: Option<u64>,
}

/// Complement and minimality are only known when the lattice was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobeniusSummary {
    pub kernel: Vec<usize>,
    pub complement: Option<Vec<usize>>,
    pub is_minimal: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiFrobeniusSummary {
    pub center_order: usize,
    pub quotient_kernel_order: usize,
    pub quotient_complement_order: usize,
    pub quotient_minimal_frobenius: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPfSummary {
    /// Proper non-cyclic subgroups shown to admit a partition.
    pub subgroups_with_witness: usize,
    pub offending_subgroup: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupCounts {
    pub total: usize,
    pub proper_non_cyclic: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub name: String,
    pub order: usize,
    pub factorization: String,
    pub flags: Flags,
    pub hughes: Vec<HughesIndex>,
    pub frobenius: Option<FrobeniusSummary>,
    pub quasi_frobenius: Option<QuasiFrobeniusSummary>,
    pub partition: PartitionVerdict,
    pub is_pf: bool,
    pub is_minimal_pf: bool,
    pub minimal_pf: Option<MinimalPfSummary>,
    pub matched_family: Option<FamilyTag>,
    /// `None` when the lattice exceeded the caps.
    pub subgroup_counts: Option<SubgroupCounts>,
    /// Milliseconds per phase; only collected on request so that reports
    /// stay byte-for-byte reproducible by default.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalyzeOptions {
    pub timings: bool,
}

struct Timer {
    on: bool,
    at: Instant,
    phases: BTreeMap<String, f64>,
}

impl Timer {
    fn lap(&mut self, phase: &str) {
        if self.on {
            let now = Instant::now();
            self.phases
                .insert(phase.to_string(), (now - self.at).as_secs_f64() * 1000.0);
            self.at = now;
        }
    }
}

/// Everything the library knows about one group.
///
/// Fails with a discrepancy if the two partition deciders disagree, and
/// with `Undecidable` if PF-ness cannot be settled within the caps.
pub fn analyze(g: &Group, name: &str, limits: &Limits, options: AnalyzeOptions) -> Result<AnalysisReport> {
    let mut timer = Timer {
        on: options.timings,
        at: Instant::now(),
        phases: BTreeMap::new(),
    };
    let lattice = lattice_within_caps(g, limits)?;
    timer.lap("lattice");

    let flags = Flags {
        cyclic: g.is_cyclic(),
        abelian: g.is_abelian(),
        solvable: g.is_solvable(),
        nilpotent: g.is_nilpotent(),
        p_group: g.is_p_group().filter(|_| g.order() > 1),
    };
    let hughes = hughes_map(g);
    timer.lap("invariants");

    let frobenius = match &lattice {
        Some(l) => is_frobenius(g, l)?.map(|f| FrobeniusSummary {
            kernel: f.kernel.elements(),
            complement: Some(f.complement.elements()),
            is_minimal: Some(f.is_minimal),
        }),
        None => frobenius_kernel(g).map(|k| FrobeniusSummary {
            kernel: k.elements(),
            complement: None,
            is_minimal: None,
        }),
    };
    let quasi_frobenius = match is_quasi_frobenius(g, limits) {
        Ok(q) => q.map(|q| QuasiFrobeniusSummary {
            center_order: q.center.order(),
            quotient_kernel_order: q.quotient_frobenius.kernel.order(),
            quotient_complement_order: q.quotient_frobenius.complement.order(),
            quotient_minimal_frobenius: q.quotient_frobenius.is_minimal,
        }),
        Err(e) if e.is_cap_exceeded() => None,
        Err(e) => return Err(e),
    };
    timer.lap("frobenius");

    let partition = match &lattice {
        Some(l) => cross_validate_with(g, l)?,
        None => admits_partition_structural(g)?,
    };
    timer.lap("partition");

    let admits = partition.admits.ok_or_else(|| {
        Error::Undecidable(format!(
            "order {} exceeds the brute-force caps and is outside the structural recognizers",
            g.order()
        ))
    })?;
    let is_pf = !flags.cyclic && !admits;
    let (is_minimal_pf, minimal_pf) = if is_pf {
        let l = lattice.as_ref().ok_or_else(|| {
            Error::Undecidable(format!(
                "order {} is PF but its subgroup lattice exceeds the caps",
                g.order()
            ))
        })?;
        let cert = minimal_pf_certificate(g, l);
        (
            cert.is_minimal_pf,
            Some(MinimalPfSummary {
                subgroups_with_witness: cert.subgroup_witnesses.len(),
                offending_subgroup: cert.offending_subgroup,
            }),
        )
    } else {
        (false, None)
    };
    timer.lap("minimal-pf");

    let matched_family = recognize_family(g, limits)?;
    timer.lap("recognize");

    Ok(AnalysisReport {
        name: name.to_string(),
        order: g.order(),
        factorization: g.factorization().to_string(),
        flags,
        hughes,
        frobenius,
        quasi_frobenius,
        partition,
        is_pf,
        is_minimal_pf,
        minimal_pf,
        matched_family,
        subgroup_counts: lattice.as_ref().map(|l| SubgroupCounts {
            total: l.len(),
            proper_non_cyclic: l.proper_noncyclic_count(),
        }),
        timings_ms: options.timings.then_some(timer.phases),
    })
}
