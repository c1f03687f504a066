use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{parse_cycles, Group, Limits, Permutation};
use crate::structure::{frobenius_kernel, hughes_subgroup, is_hughes_thompson, is_isomorphic, SubgroupLattice};

use super::{check_partition, find_partition_with, PartitionCover};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StructuralLabel {
    #[serde(rename = "p-group-with-proper-Hughes")]
    PGroupWithProperHughes,
    #[serde(rename = "frobenius")]
    Frobenius,
    #[serde(rename = "hughes-thompson")]
    HughesThompson,
    /// `PGL(2,3)`, that is `S4`.
    #[serde(rename = "PGL-small")]
    PglSmall,
    /// `PSL(2,4) = PSL(2,5)`, that is `A5`.
    #[serde(rename = "PSL-small")]
    PslSmall,
    #[serde(rename = "out-of-recognizer-scope")]
    OutOfRecognizerScope,
}

impl fmt::Display for StructuralLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StructuralLabel::PGroupWithProperHughes => "p-group-with-proper-Hughes",
            StructuralLabel::Frobenius => "frobenius",
            StructuralLabel::HughesThompson => "hughes-thompson",
            StructuralLabel::PglSmall => "PGL-small",
            StructuralLabel::PslSmall => "PSL-small",
            StructuralLabel::OutOfRecognizerScope => "out-of-recognizer-scope",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionMethod {
    ExactCover,
    Structural,
    Both,
}

/// Outcome of a partition decision.
///
/// `admits` is three-valued: `None` means the structural decider could not
/// recognize the group (a non-solvable group other than `S4` or `A5`); the
/// labels then contain `out-of-recognizer-scope`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionVerdict {
    pub admits: Option<bool>,
    pub witness: Option<PartitionCover>,
    pub method: PartitionMethod,
    pub structural_labels: Vec<StructuralLabel>,
}

impl PartitionVerdict {
    /// Verdict from a brute-force search result alone.
    pub fn exact(witness: Option<PartitionCover>) -> Self {
        PartitionVerdict {
            admits: Some(witness.is_some()),
            witness,
            method: PartitionMethod::ExactCover,
            structural_labels: Vec::new(),
        }
    }
}

fn model(cell: &'static OnceLock<Group>, degree: usize, gens: &[&str]) -> &'static Group {
    cell.get_or_init(|| {
        let gens: Vec<Permutation> = gens
            .iter()
            .map(|s| parse_cycles(s, degree).expect("built-in generator"))
            .collect();
        Group::from_permutation_generators(degree, &gens).expect("built-in group")
    })
}

fn s4() -> &'static Group {
    static CELL: OnceLock<Group> = OnceLock::new();
    model(&CELL, 4, &["(0 1 2 3)", "(0 1)"])
}

fn a5() -> &'static Group {
    static CELL: OnceLock<Group> = OnceLock::new();
    model(&CELL, 5, &["(0 1 2 3 4)", "(0 1 2)"])
}

/// Decides partition existence from structure alone: a p-group with a
/// proper Hughes subgroup, a Frobenius group, a group of Hughes-Thompson
/// type, `S4` or `A5`. Every applicable label is reported.
///
/// Needs no subgroup lattice. The only error is a structure violation from
/// the Hughes-Thompson check.
pub fn admits_partition_structural(g: &Group) -> Result<PartitionVerdict> {
    let mut labels = Vec::new();
    if let Some(p) = g.is_p_group() {
        if g.order() as u64 > p && !hughes_subgroup(g, p).is_whole() {
            labels.push(StructuralLabel::PGroupWithProperHughes);
        }
    }
    if frobenius_kernel(g).is_some() {
        labels.push(StructuralLabel::Frobenius);
    }
    if is_hughes_thompson(g)?.is_some() {
        labels.push(StructuralLabel::HughesThompson);
    }
    if g.order() == 24 && is_isomorphic(g, s4())?.is_some() {
        labels.push(StructuralLabel::PglSmall);
    }
    if g.order() == 60 && is_isomorphic(g, a5())?.is_some() {
        labels.push(StructuralLabel::PslSmall);
    }
    let admits = if !labels.is_empty() {
        Some(true)
    } else if g.is_solvable() {
        Some(false)
    } else {
        labels.push(StructuralLabel::OutOfRecognizerScope);
        None
    };
    Ok(PartitionVerdict {
        admits,
        witness: None,
        method: PartitionMethod::Structural,
        structural_labels: labels,
    })
}

pub fn cross_validate(g: &Group, limits: &Limits) -> Result<PartitionVerdict> {
    let lattice = SubgroupLattice::build(g, limits)?;
    cross_validate_with(g, &lattice)
}

/// Runs both deciders and fails with a discrepancy when they disagree.
/// Out-of-scope groups fall back to the brute-force verdict alone.
pub fn cross_validate_with(g: &Group, lattice: &SubgroupLattice) -> Result<PartitionVerdict> {
    let structural = admits_partition_structural(g)?;
    let witness = find_partition_with(g, lattice);
    if let Some(w) = &witness {
        check_partition(g, None, w.components())?;
    }
    let brute = witness.is_some();
    if let Some(s) = structural.admits {
        if s != brute {
            let labels: Vec<String> = structural.structural_labels.iter().map(ToString::to_string).collect();
            return Err(Error::Discrepancy(format!(
                "group {} of order {}: structural says {} (labels [{}]), exact cover says {}{}",
                g.name().unwrap_or("<unnamed>"),
                g.order(),
                if s { "admits" } else { "no partition" },
                labels.join(", "),
                if brute { "admits with witness\n" } else { "no partition" },
                witness.as_ref().map(PartitionCover::dump).unwrap_or_default(),
            )));
        }
    }
    Ok(PartitionVerdict {
        admits: Some(brute),
        witness,
        method: if structural.admits.is_some() {
            PartitionMethod::Both
        } else {
            PartitionMethod::ExactCover
        },
        structural_labels: structural.structural_labels,
    })
}
