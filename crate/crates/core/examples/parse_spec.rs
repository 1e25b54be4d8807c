//! Group specifications: parsing, printing and error positions.

use gkcut::dsl::parse_spec;
use gkcut::GroupSpec;

fn main() {
    for text in [
        "DP(MM, SD(Cyc(7), Cyc(3), pow=2))",
        "Wr(Cyc(2),\n   Sym(3))",
        "SD(EA(2,2),Cyc(3),mats=[[[0,1],[1,1]]])",
        "DP(MM",
        "Dih(7)",
        "Sym(3)+",
    ] {
        match text.parse::<GroupSpec>() {
            Ok(spec) => println!("{:<40} -> {spec}", text.replace('\n', " ")),
            Err(e) => println!("{:<40} -> {} error: {e}", text.replace('\n', " "), e.kind()),
        }
    }
    let ast = parse_spec("SD(Cyc(7),Cyc(3),pow=2)").unwrap();
    println!("{ast:#?}");
}
