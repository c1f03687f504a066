//! PF and minimal-PF predicates, the seven families of minimal PF-groups,
//! and the verification harnesses built on them.

mod family;
mod p_group_harness;
mod pf;
mod recognize;
mod report;
mod verify;

pub use family::{build_family, build_family7_extraspecial, build_family_capped, FamilyTag};
pub use p_group_harness::{check_proposition_p3, P3Outcome, P3Report};
pub use pf::{is_minimal_pf, is_pf, MinimalPfCertificate, SubgroupWitness};
pub use recognize::recognize_family;
pub use report::{
    analyze, AnalysisReport, AnalyzeOptions, Flags, FrobeniusSummary, MinimalPfSummary, QuasiFrobeniusSummary,
    SubgroupCounts,
};
pub use verify::{verify_main_theorem, MainTheoremEntry, MainTheoremSummary};
