//! Structural summary records for groups given on the command line, or for a
//! default list.

use gkcut::{construct, Bounds, Classification};

fn main() -> gkcut::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let specs = if args.is_empty() {
        ["Sym(4)", "MM", "W4200", "Alt(5)", "SD(Cyc(5),Cyc(4),pow=2)"]
            .map(String::from)
            .to_vec()
    } else {
        args
    };
    println!(
        "{:<28} {:>6} {:>7} {:>9} {:>8} {:>4} frobenius",
        "spec", "order", "classes", "solvable", "rational", "cut"
    );
    for spec in &specs {
        let g = construct(&spec.parse()?, &Bounds::default())?;
        let c = Classification::of(spec.as_str(), &g);
        let frob = c
            .frobenius
            .map(|f| format!("{} : {}", f.kernel, f.complement))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<28} {:>6} {:>7} {:>9} {:>8} {:>4} {frob}",
            c.spec, c.order, c.classes, c.solvable, c.rational, c.cut
        );
    }
    Ok(())
}
