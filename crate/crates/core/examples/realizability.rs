//! Which prime graphs on {2, 3, 5, 7} the default catalog realizes by
//! solvable cut groups.

use gkcut::lab::{default_catalog, gk_realizability_scan};
use gkcut::Bounds;

fn main() {
    let scan = gk_realizability_scan(&default_catalog().groups, &Bounds::default());
    for c in &scan.classes {
        let name = c.named.as_deref().unwrap_or("-");
        println!(
            "{name:>5} {}: {}",
            c.graph.to_json(),
            c.witnesses.join(", ")
        );
    }
    for f in &scan.flagged {
        println!(
            "flagged {} ({}): {}",
            f.spec,
            f.named.as_deref().unwrap_or("-"),
            f.note
        );
    }
    println!(
        "main witnessed: {}, violations: {:?}",
        scan.main_witnessed, scan.violations
    );
}
