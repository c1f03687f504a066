use serde::Serialize;

use crate::group::{Group, Limits};

use super::report::{analyze, AnalysisReport, AnalyzeOptions};
use super::FamilyTag;

/// One group's comparison of the brute-force minimal-PF verdict with the
/// family recognizers.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MainTheoremEntry {
    pub name: String,
    pub is_minimal_pf: Option<bool>,
    pub family: Option<FamilyTag>,
    /// `None` when the group could not be decided.
    pub agree: Option<bool>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct MainTheoremSummary {
    pub groups: usize,
    pub agreements: usize,
    pub minimal_pf: usize,
    pub undecided: usize,
    pub discrepancies: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub entries: Vec<MainTheoremEntry>,
}

impl MainTheoremSummary {
    pub fn is_clean(&self) -> bool {
        self.discrepancies.is_empty()
    }

    /// Folds one analysis outcome (or its failure) into the summary.
    pub fn record(&mut self, name: &str, outcome: Result<&AnalysisReport, String>) {
        self.groups += 1;
        let entry = match outcome {
            Ok(r) => {
                let agree = r.is_minimal_pf == r.matched_family.is_some();
                if agree {
                    self.agreements += 1;
                } else {
                    self.discrepancies.push(format!(
                        "{name}: brute force says {}, recognizer says {}{}",
                        if r.is_minimal_pf {
                            "minimal PF"
                        } else {
                            "not minimal PF"
                        },
                        r.matched_family.map_or("no family".to_string(), |t| t.to_string()),
                        match &r.minimal_pf {
                            Some(m) => format!(
                                "; {} subgroup witnesses, offending subgroup {:?}",
                                m.subgroups_with_witness, m.offending_subgroup
                            ),
                            None => format!(
                                "; partition witness {:?}",
                                r.partition.witness.as_ref().map(|w| w.components())
                            ),
                        }
                    ));
                }
                if r.is_minimal_pf {
                    self.minimal_pf += 1;
                }
                MainTheoremEntry {
                    name: name.to_string(),
                    is_minimal_pf: Some(r.is_minimal_pf),
                    family: r.matched_family,
                    agree: Some(agree),
                    error: None,
                }
            }
            Err(e) => {
                self.undecided += 1;
                MainTheoremEntry {
                    name: name.to_string(),
                    is_minimal_pf: None,
                    family: None,
                    agree: None,
                    error: Some(e),
                }
            }
        };
        self.entries.push(entry);
    }
}

/// Brute-force minimal-PF verdict against the family recognizers for each
/// group. Per-group failures are recorded without stopping the run.
pub fn verify_main_theorem(corpus: &[(String, Group)], limits: &Limits) -> MainTheoremSummary {
    let mut summary = MainTheoremSummary::default();
    for (name, g) in corpus {
        match analyze(g, name, limits, AnalyzeOptions::default()) {
            Ok(r) => summary.record(name, Ok(&r)),
            Err(e) => summary.record(name, Err(e.to_string())),
        }
    }
    summary
}
