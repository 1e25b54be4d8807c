//! Frobenius kernels and complements, with the malnormality of the complement.

use gkcut::{construct, Bounds};

fn main() -> gkcut::Result<()> {
    for spec in [
        "Sym(3)",
        "Alt(4)",
        "MM",
        "SD(Cyc(7),Cyc(3),pow=2)",
        "SD(Cyc(5),Cyc(4),pow=2)",
        "Sym(4)",
        "Cyc(6)",
    ] {
        let g = construct(&spec.parse()?, &Bounds::default())?;
        match g.frobenius_decomposition() {
            Some(d) => println!(
                "{spec}: kernel {} complement {} malnormal {}",
                d.kernel.order(),
                d.complement.order(),
                g.complement_is_malnormal(&d.complement)
            ),
            None => println!("{spec}: not Frobenius"),
        }
    }
    Ok(())
}
