//! `Q8 ≀ K` acting blockwise on `F_5^{2n}` against `MM ≀ K`, with the same
//! construction over F_7 as the negative control.

use gkcut::lab::vs2_witness_check;
use gkcut::{construct, Bounds};

fn main() -> gkcut::Result<()> {
    let b = Bounds::default();
    for (n, k) in [(1, "Cyc(1)"), (2, "Cyc(2)"), (2, "Sym(2)")] {
        let k = construct(&k.parse()?, &b)?;
        let r = vs2_witness_check(n, &k, Some(7), &b)?;
        println!("n = {n}: {} {}", r.status, r.detail);
    }
    Ok(())
}
