use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::classifier::AnalysisReport;
use crate::dsl::{parse, GroupExpr};
use crate::error::{Error, Result};

/// What a manifest line claims about its group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Cyclic,
    AdmitsPartition,
    PfOnly,
    MinimalPf,
}

impl Verdict {
    pub fn of(report: &AnalysisReport) -> Verdict {
        if report.flags.cyclic {
            Verdict::Cyclic
        } else if report.is_minimal_pf {
            Verdict::MinimalPf
        } else if report.is_pf {
            Verdict::PfOnly
        } else {
            Verdict::AdmitsPartition
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Cyclic => "cyclic",
            Verdict::AdmitsPartition => "admits-partition",
            Verdict::PfOnly => "pf-only",
            Verdict::MinimalPf => "minimal-pf",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Verdict {
    type Err = Error;

    fn from_str(s: &str) -> Result<Verdict> {
        [
            Verdict::Cyclic,
            Verdict::AdmitsPartition,
            Verdict::PfOnly,
            Verdict::MinimalPf,
        ]
        .into_iter()
        .find(|v| v.as_str() == s)
        .ok_or_else(|| Error::Format(format!("unknown verdict '{s}'")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifestEntry {
    pub line: usize,
    pub expression: String,
    pub expr: GroupExpr,
    pub expected: Option<Verdict>,
    pub note: Option<String>,
}

/// A list of group expressions, one per line:
///
/// ```text
/// # comment
/// C(6) => cyclic # cyclic by definition
/// Q(8) x C(2)
/// ```
///
/// A line with an expected verdict must carry a note saying where the
/// verdict comes from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CorpusManifest {
    pub entries: Vec<ManifestEntry>,
}

const DEFAULT_MANIFEST: &str = include_str!("../../corpus/default.manifest");

/// Byte offsets of `=>` and `#` outside quoted strings.
fn split_points(line: &str) -> (Option<usize>, Option<usize>) {
    let (mut arrow, mut hash, mut quote) = (None, None, None);
    let bytes = line.as_bytes();
    for (i, &c) in bytes.iter().enumerate() {
        match quote {
            Some(q) if c == q => quote = None,
            Some(_) => {}
            None => match c {
                b'\'' | b'"' => quote = Some(c),
                b'#' => {
                    hash = Some(i);
                    break;
                }
                b'=' if bytes.get(i + 1) == Some(&b'>') && arrow.is_none() => arrow = Some(i),
                _ => {}
            },
        }
    }
    (arrow, hash)
}

impl CorpusManifest {
    pub fn parse(text: &str) -> Result<CorpusManifest> {
        let mut entries = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let at = |e: Error| Error::Format(format!("manifest line {line}: {e}"));
            let (arrow, hash) = split_points(raw);
            let body_end = arrow.or(hash).unwrap_or(raw.len());
            let expression = raw[..body_end].trim();
            let note = hash.map(|h| raw[h + 1..].trim().to_string()).filter(|n| !n.is_empty());
            if expression.is_empty() {
                if arrow.is_some() {
                    return Err(at(Error::Format("verdict without an expression".into())));
                }
                continue;
            }
            let expected = match arrow {
                Some(a) => {
                    let v = raw[a + 2..hash.unwrap_or(raw.len())].trim();
                    Some(v.parse::<Verdict>().map_err(at)?)
                }
                None => None,
            };
            if expected.is_some() && note.is_none() {
                return Err(at(Error::Format(
                    "an expected verdict needs a '# note' giving its source".into(),
                )));
            }
            let expr = parse(expression).map_err(at)?;
            entries.push(ManifestEntry {
                line,
                expression: expression.to_string(),
                expr,
                expected,
                note,
            });
        }
        Ok(CorpusManifest { entries })
    }

    /// The corpus shipped with the library.
    pub fn default_corpus() -> CorpusManifest {
        CorpusManifest::parse(DEFAULT_MANIFEST).expect("shipped manifest parses")
    }

    pub fn default_text() -> &'static str {
        DEFAULT_MANIFEST
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
