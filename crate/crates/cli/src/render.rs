//! Plain-text renderings of reports.

use std::fmt::Write as _;

use partfree::classifier::AnalysisReport;
use partfree::corpus::ReportDocument;
use partfree::partition::PartitionCover;

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn witness(cover: Option<&PartitionCover>) -> String {
    match cover {
        Some(c) => c.to_string(),
        None => "NONE\n".to_string(),
    }
}

pub fn report(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let f = &r.flags;
    let _ = writeln!(out, "group:          {}", r.name);
    let _ = writeln!(out, "order:          {} = {}", r.order, r.factorization);
    let _ = writeln!(
        out,
        "flags:          cyclic={} abelian={} solvable={} nilpotent={} p-group={}",
        yes_no(f.cyclic),
        yes_no(f.abelian),
        yes_no(f.solvable),
        yes_no(f.nilpotent),
        f.p_group.map_or("no".to_string(), |p| p.to_string())
    );
    let hughes: Vec<String> = r
        .hughes
        .iter()
        .map(|h| format!("p={} index {}", h.p, h.index))
        .collect();
    let _ = writeln!(
        out,
        "hughes:         {}",
        if hughes.is_empty() {
            "-".into()
        } else {
            hughes.join(", ")
        }
    );
    match &r.frobenius {
        Some(fr) => {
            let _ = writeln!(
                out,
                "frobenius:      kernel of order {}{}",
                fr.kernel.len(),
                fr.complement
                    .as_ref()
                    .map_or(String::new(), |c| format!(", complement of order {}", c.len()))
            );
        }
        None => out.push_str("frobenius:      no\n"),
    }
    match &r.quasi_frobenius {
        Some(q) => {
            let _ = writeln!(
                out,
                "quasi-frobenius: center of order {}, quotient {}:{}",
                q.center_order, q.quotient_kernel_order, q.quotient_complement_order
            );
        }
        None => out.push_str("quasi-frobenius: no\n"),
    }
    let p = &r.partition;
    let labels: Vec<String> = p.structural_labels.iter().map(|l| l.to_string()).collect();
    let _ = writeln!(
        out,
        "partition:      {}{}",
        match (p.admits, &p.witness) {
            (Some(true), Some(w)) => format!("{} components of orders {:?}", w.len(), w.component_orders()),
            (Some(true), None) => "admits (structural)".to_string(),
            (Some(false), _) => "NONE".to_string(),
            (None, _) => "undecided".to_string(),
        },
        if labels.is_empty() {
            String::new()
        } else {
            format!(" [{}]", labels.join(", "))
        }
    );
    let _ = writeln!(out, "pf:             {}", yes_no(r.is_pf));
    let _ = writeln!(out, "minimal pf:     {}", yes_no(r.is_minimal_pf));
    let _ = writeln!(
        out,
        "family:         {}",
        r.matched_family.map_or("none".to_string(), |t| t.to_string())
    );
    if let Some(c) = &r.subgroup_counts {
        let _ = writeln!(
            out,
            "subgroups:      {} total, {} proper non-cyclic",
            c.total, c.proper_non_cyclic
        );
    }
    if let Some(t) = &r.timings_ms {
        let phases: Vec<String> = t.iter().map(|(k, v)| format!("{k}={v:.1}ms")).collect();
        let _ = writeln!(out, "timings:        {}", phases.join(" "));
    }
    out
}

pub fn summary(doc: &ReportDocument) -> String {
    let s = &doc.summary;
    let mut out = String::new();
    let _ = writeln!(out, "groups:         {}", s.groups);
    let _ = writeln!(
        out,
        "verdicts:       {} cyclic, {} admit a partition, {} PF only, {} minimal PF",
        s.cyclic, s.admits_partition, s.pf_only, s.minimal_pf
    );
    let _ = writeln!(out, "family matches: {}", s.family_matches);
    let _ = writeln!(
        out,
        "expectations:   {} checked, {} mismatched",
        s.expectations_checked,
        s.mismatches.len()
    );
    let _ = writeln!(out, "discrepancies:  {}", s.discrepancies.len());
    let _ = writeln!(out, "failures:       {}", s.failures.len());
    for (title, list) in [
        ("mismatch", &s.mismatches),
        ("discrepancy", &s.discrepancies),
        ("failure", &s.failures),
    ] {
        for item in list {
            let _ = writeln!(out, "{title}: {item}");
        }
    }
    out
}

pub const FORMATS: &str = "\
Group expressions
  C(n)  EA(p, r)  D(m) (order 2m)  Q(2^n)  SD(2^n)  M(n, p)
  A x B                          direct product, left associative
  SEMI(N, H, 'action')           action: 'trivial' | 'pow R' | 'mat a b; c d' | 'table ...'
  FAM(k, name=value, ...)        families 1..7, e.g. FAM(5, p=7, q=3, r=5)
  PERM(degree, '(0 1 2)', ...)   group generated by permutations on 0..degree-1
  FILE('path')                   Cayley-table or permutation file

Cayley-table file
  first line n, then n rows of n element indices; element 0 is the identity.
  '#' starts a comment.

Permutation file
  first line the degree, then one generator per line in cycle notation.

Manifest file
  one expression per line, optionally followed by '=> verdict # note';
  verdicts: cyclic, admits-partition, pf-only, minimal-pf. A verdict needs a note.

Witness dump
  one partition component per line, '[' element indices ']', sorted.

Report document (JSON)
  schema_version, tool_version, groups[] (expression, expected, note, verdict,
  expectation_met, report, error) and summary (counts, mismatches,
  discrepancies, failures, main_theorem).

Exit codes
  0 ok, 1 no partition, 2 parse error or bad parameters, 3 cap exceeded,
  4 discrepancy or expectation mismatch.
";
