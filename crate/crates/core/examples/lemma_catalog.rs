//! Runs the built-in catalog against the full registry and prints a tally
//! per entry.

use std::collections::BTreeMap;
use std::time::Instant;

use gkcut::lab::{default_catalog, run_catalog, LemmaId, Status};
use gkcut::Bounds;

fn main() {
    let catalog = default_catalog();
    let start = Instant::now();
    let report = run_catalog(&catalog, &LemmaId::ALL, &Bounds::default(), false);
    let mut tally: BTreeMap<String, [usize; 3]> = BTreeMap::new();
    for r in &report.reports {
        let slot = match r.status {
            Status::Pass => 0,
            Status::HypothesisNotMet => 1,
            Status::Fail => 2,
        };
        tally.entry(r.lemma_id.clone()).or_default()[slot] += 1;
    }
    println!(
        "{:<24} {:>6} {:>8} {:>6}",
        "entry", "pass", "not met", "FAIL"
    );
    for (id, [p, n, f]) in &tally {
        println!("{id:<24} {p:>6} {n:>8} {f:>6}");
    }
    for r in report.reports.iter().filter(|r| r.is_fail()) {
        println!("FAIL {} on {}: {}", r.lemma_id, r.subject.spec, r.detail);
    }
    for e in &report.errors {
        println!(
            "error {} {:?}: {} ({})",
            e.spec, e.lemma_id, e.message, e.kind
        );
    }
    let s = &report.summary;
    println!(
        "{} groups, {} reports: {} pass, {} not met, {} FAIL, {} errors, {} skipped in {:.1?}",
        s.groups,
        s.reports,
        s.pass,
        s.hypothesis_not_met,
        s.fail,
        s.errors,
        s.skipped,
        start.elapsed()
    );
}
