//! Invariants every report over the shipped corpus must satisfy.

use partfree::corpus::{verify_corpus, CorpusManifest, VerifyOptions};
use partfree::dsl::evaluate;
use partfree::partition::check_partition;
use partfree::structure::is_isomorphic;
use partfree::Limits;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn reports_are_consistent() {
    let manifest = CorpusManifest::default_corpus();
    let doc = verify_corpus(&manifest, &VerifyOptions::default());
    assert!(doc.summary.is_clean(), "{:?}", doc.summary);
    let limits = Limits::default();
    for (entry, out) in manifest.entries.iter().zip(&doc.groups) {
        let r = out.report.as_ref().expect("every corpus group is decided");
        let name = &entry.expression;
        assert!(!r.is_minimal_pf || r.is_pf, "{name}");
        if r.is_pf {
            assert!(!r.flags.cyclic && r.partition.admits == Some(false), "{name}");
        }
        assert_eq!(r.matched_family.is_some(), r.is_minimal_pf, "{name}");
        if let Some(w) = &r.partition.witness {
            let g = evaluate(&entry.expr, &limits).unwrap();
            check_partition(&g, None, w.components()).unwrap();
        }
        let ht = r
            .partition
            .structural_labels
            .iter()
            .any(|l| l.to_string() == "hughes-thompson");
        let proper_hughes = r.hughes.iter().any(|h| h.index > 1);
        assert!(!ht || proper_hughes, "{name}");
    }
}

#[test]
fn isomorphism_is_reflexive_under_relabeling() {
    let limits = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for entry in CorpusManifest::default_corpus().entries.iter().step_by(3) {
        let g = evaluate(&entry.expr, &limits).unwrap();
        let mut perm: Vec<usize> = (1..g.order()).collect();
        perm.shuffle(&mut rng);
        perm.insert(0, 0);
        let h = g.relabel(&perm).unwrap();
        assert!(is_isomorphic(&g, &h).unwrap().is_some(), "{}", entry.expression);
    }
}
