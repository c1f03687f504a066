//! Corpus manifests and the reproducible verification run over them.

mod manifest;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{analyze, AnalysisReport, AnalyzeOptions, MainTheoremSummary};
use crate::dsl::evaluate;
use crate::error::Error;
use crate::group::Limits;

pub use manifest::{CorpusManifest, ManifestEntry, Verdict};

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CorpusEntryReport {
    pub expression: String,
    pub expected: Option<Verdict>,
    pub note: Option<String>,
    pub verdict: Option<Verdict>,
    pub expectation_met: Option<bool>,
    pub report: Option<AnalysisReport>,
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CorpusSummary {
    pub groups: usize,
    pub cyclic: usize,
    pub admits_partition: usize,
    pub pf_only: usize,
    pub minimal_pf: usize,
    pub family_matches: usize,
    pub expectations_checked: usize,
    /// Entries whose expected verdict differs from the computed one.
    pub mismatches: Vec<String>,
    /// Disagreements between deciders or between brute force and the
    /// family recognizers.
    pub discrepancies: Vec<String>,
    /// Entries that could not be built or decided within the caps.
    pub failures: Vec<String>,
    pub main_theorem: MainTheoremSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, f64>>,
}

impl CorpusSummary {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.discrepancies.is_empty() && self.failures.is_empty()
    }
}

/// The machine-readable output of a verification run. Groups appear in
/// manifest order whatever the parallelism.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool_version: String,
    pub groups: Vec<CorpusEntryReport>,
    pub summary: CorpusSummary,
}

impl ReportDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub limits: Limits,
    /// Worker threads; `1` runs on the calling thread.
    pub jobs: usize,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            limits: Limits::default(),
            jobs: 1,
            timings: false,
        }
    }
}

fn analyze_entry(entry: &ManifestEntry, options: &VerifyOptions) -> Result<AnalysisReport, Error> {
    let g = evaluate(&entry.expr, &options.limits)?;
    analyze(
        &g,
        &entry.expression,
        &options.limits,
        AnalyzeOptions {
            timings: options.timings,
        },
    )
}

/// Analyzes every manifest entry and checks expected verdicts, decider
/// agreement and the family recognizers against brute force.
pub fn verify_corpus(manifest: &CorpusManifest, options: &VerifyOptions) -> ReportDocument {
    let start = Instant::now();
    let outcomes: Vec<Result<AnalysisReport, Error>> = if options.jobs <= 1 {
        manifest.entries.iter().map(|e| analyze_entry(e, options)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| manifest.entries.par_iter().map(|e| analyze_entry(e, options)).collect())
    };
    let elapsed = options.timings.then(|| start.elapsed().as_secs_f64() * 1000.0);
    assemble(manifest, outcomes, elapsed)
}

/// Builds the document from per-entry outcomes given in manifest order.
pub fn assemble(
    manifest: &CorpusManifest,
    outcomes: Vec<Result<AnalysisReport, Error>>,
    elapsed_ms: Option<f64>,
) -> ReportDocument {
    assert_eq!(manifest.len(), outcomes.len(), "one outcome per manifest entry");
    let mut summary = CorpusSummary::default();
    let mut groups = Vec::with_capacity(outcomes.len());
    for (entry, outcome) in manifest.entries.iter().zip(outcomes) {
        let label = format!("line {}: {}", entry.line, entry.expression);
        summary.groups += 1;
        let (verdict, report, error) = match outcome {
            Ok(r) => {
                summary.main_theorem.record(&entry.expression, Ok(&r));
                (Some(Verdict::of(&r)), Some(r), None)
            }
            Err(e) => {
                summary.main_theorem.record(&entry.expression, Err(e.to_string()));
                match e {
                    Error::Discrepancy(_) => summary.discrepancies.push(format!("{label}: {e}")),
                    _ => summary.failures.push(format!("{label}: {e}")),
                }
                (None, None, Some(e.to_string()))
            }
        };
        match verdict {
            Some(Verdict::Cyclic) => summary.cyclic += 1,
            Some(Verdict::AdmitsPartition) => summary.admits_partition += 1,
            Some(Verdict::PfOnly) => summary.pf_only += 1,
            Some(Verdict::MinimalPf) => summary.minimal_pf += 1,
            None => {}
        }
        if report.as_ref().is_some_and(|r| r.matched_family.is_some()) {
            summary.family_matches += 1;
        }
        let expectation_met = entry.expected.zip(verdict).map(|(want, got)| want == got);
        if let Some(want) = entry.expected {
            summary.expectations_checked += 1;
            match verdict {
                Some(got) if got != want => summary
                    .mismatches
                    .push(format!("{label}: expected {want}, computed {got}")),
                None => summary
                    .mismatches
                    .push(format!("{label}: expected {want}, computed nothing")),
                _ => {}
            }
        }
        groups.push(CorpusEntryReport {
            expression: entry.expression.clone(),
            expected: entry.expected,
            note: entry.note.clone(),
            verdict,
            expectation_met,
            report,
            error,
        });
    }
    summary
        .discrepancies
        .extend(summary.main_theorem.discrepancies.iter().cloned());
    summary.main_theorem.entries.clear();
    summary.timings_ms = elapsed_ms.map(|t| BTreeMap::from([("total".to_string(), t)]));
    ReportDocument {
        schema_version: SCHEMA_VERSION,
        tool_version: TOOL_VERSION.to_string(),
        groups,
        summary,
    }
}
