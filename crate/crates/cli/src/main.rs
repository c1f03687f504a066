mod render;

use std::collections::BTreeMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use partfree::classifier::{analyze, build_family_capped, recognize_family, AnalyzeOptions, FamilyTag};
use partfree::corpus::{assemble, verify_corpus, CorpusManifest, ManifestEntry, VerifyOptions};
use partfree::dsl::{evaluate, parse};
use partfree::group::text::write_cayley_table;
use partfree::partition::{find_partition_naive, find_partition_with};
use partfree::structure::SubgroupLattice;
use partfree::{Error, Limits};

#[derive(Parser)]
#[command(name = "partfree", version, about = "Partitions and partition-free groups")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest group order searched by brute force (subgroup lattice and exact cover)
    #[arg(long, global = true, default_value_t = 400)]
    max_order: usize,
    /// Largest number of subgroups a lattice may hold
    #[arg(long, global = true, default_value_t = 20_000)]
    max_subgroups: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the main output to this file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for `verify`
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Record per-phase timings (reports are then no longer reproducible)
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Full report for one group expression
    Analyze { expr: String },
    /// Search for a partition; prints the witness or NONE (exit 1)
    Partition {
        expr: String,
        /// Use the naive backtracking search instead of exact cover
        #[arg(long)]
        oracle: bool,
    },
    /// Build a member of one of the seven families and report on it
    Family {
        family: u64,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long)]
        alpha: Option<u64>,
    },
    /// Verify a manifest (the shipped corpus when omitted)
    Verify { manifest: Option<PathBuf> },
    /// Describe the accepted file formats and exit codes
    Formats,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::ClosureTooLarge { .. }
            | Error::EnumerationTooLarge { .. }
            | Error::TooLarge { .. }
            | Error::Undecidable(_) => 3,
            Error::Discrepancy(_) | Error::StructureViolation(_) => 4,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

impl Global {
    fn limits(&self) -> Limits {
        Limits {
            max_lattice_order: self.max_order,
            max_subgroups: self.max_subgroups,
            ..Limits::default()
        }
    }

    fn emit(&self, text: &str) -> Result<(), Failure> {
        match &self.out {
            Some(path) => fs::write(path, text).map_err(|e| fail(2, format!("{}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { expr } => cmd_analyze(g, expr),
        Command::Partition { expr, oracle } => cmd_partition(g, expr, *oracle),
        Command::Family {
            family,
            p,
            q,
            r,
            n,
            alpha,
        } => {
            let params: BTreeMap<String, u64> = [("p", p), ("q", q), ("r", r), ("n", n), ("alpha", alpha)]
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
                .collect();
            cmd_family(g, *family, &params)
        }
        Command::Verify { manifest } => cmd_verify(g, manifest.as_ref()),
        Command::Formats => {
            g.emit(render::FORMATS)?;
            Ok(0)
        }
    }
}

fn cmd_analyze(g: &Global, text: &str) -> Outcome {
    let limits = g.limits();
    let expr = parse(text)?;
    let group = evaluate(&expr, &limits)?;
    let report = analyze(&group, text, &limits, AnalyzeOptions { timings: g.timings })?;
    let out = match g.format {
        Format::Text => render::report(&report),
        Format::Json => {
            let manifest = CorpusManifest {
                entries: vec![ManifestEntry {
                    line: 1,
                    expression: text.to_string(),
                    expr,
                    expected: None,
                    note: None,
                }],
            };
            assemble(&manifest, vec![Ok(report)], None).to_json()
        }
    };
    g.emit(&out)?;
    Ok(0)
}

fn cmd_partition(g: &Global, text: &str, oracle: bool) -> Outcome {
    let limits = g.limits();
    let group = evaluate(&parse(text)?, &limits)?;
    let lattice = SubgroupLattice::build(&group, &limits)?;
    let witness = if oracle {
        find_partition_naive(&group, &lattice)
    } else {
        find_partition_with(&group, &lattice)
    };
    let out = match g.format {
        Format::Text => render::witness(witness.as_ref()),
        Format::Json => {
            let value = serde_json::json!({
                "expression": text,
                "order": group.order(),
                "admits": witness.is_some(),
                "components": witness.as_ref().map(|w| w.components()),
            });
            format!("{}\n", serde_json::to_string_pretty(&value).expect("json"))
        }
    };
    g.emit(&out)?;
    Ok(if witness.is_some() { 0 } else { 1 })
}

fn cmd_family(g: &Global, family: u64, params: &BTreeMap<String, u64>) -> Outcome {
    let limits = g.limits();
    let tag = FamilyTag::from_params(family, params)?;
    let group = build_family_capped(&tag, limits.max_group_order)?;
    let name = tag.expression();
    let report = analyze(&group, &name, &limits, AnalyzeOptions { timings: g.timings })?;
    let table = write_cayley_table(&group);
    let body = match g.format {
        Format::Text => render::report(&report),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("json")),
    };
    match &g.out {
        Some(path) => {
            fs::write(path, &table).map_err(|e| fail(2, format!("{}: {e}", path.display())))?;
            print!("{body}");
        }
        None => print!("{table}\n{body}"),
    }
    let recognized = recognize_family(&group, &limits)?;
    if !report.is_minimal_pf || recognized.map(|t| t.canonical()) != Some(tag.canonical()) {
        return Err(fail(
            4,
            format!(
                "{tag}: minimal PF = {}, recognizer returned {}",
                report.is_minimal_pf,
                recognized.map_or("nothing".to_string(), |t| t.to_string())
            ),
        ));
    }
    Ok(0)
}

fn cmd_verify(g: &Global, path: Option<&PathBuf>) -> Outcome {
    let manifest = match path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| fail(2, format!("{}: {e}", p.display())))?;
            CorpusManifest::parse(&text)?
        }
        None => CorpusManifest::default_corpus(),
    };
    let options = VerifyOptions {
        limits: g.limits(),
        jobs: g.jobs.max(1),
        timings: g.timings,
    };
    let doc = verify_corpus(&manifest, &options);
    let summary = render::summary(&doc);
    match (&g.out, g.format) {
        (Some(_), _) => {
            g.emit(&doc.to_json())?;
            print!("{summary}");
        }
        (None, Format::Json) => print!("{}", doc.to_json()),
        (None, Format::Text) => print!("{summary}"),
    }
    let s = &doc.summary;
    if !s.discrepancies.is_empty() || !s.mismatches.is_empty() {
        for item in s.discrepancies.iter().chain(&s.mismatches) {
            eprintln!("{item}");
        }
        return Ok(4);
    }
    if !s.failures.is_empty() {
        for item in &s.failures {
            eprintln!("{item}");
        }
        return Ok(3);
    }
    Ok(0)
}
