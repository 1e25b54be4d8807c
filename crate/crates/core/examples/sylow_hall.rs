//! Sylow and Hall subgroups, Fitting series and p-cores.

use gkcut::{construct, Bounds};

fn main() -> gkcut::Result<()> {
    let bounds = Bounds::default();
    for spec in ["Sym(4)", "W4200", "Wr(Cyc(2),Sym(3))"] {
        let g = construct(&spec.parse()?, &bounds)?;
        println!("{spec}: |G| = {}", g.order());
        for p in g.prime_divisors() {
            println!(
                "  Sylow {p}: {}  O_{p}: {}",
                g.sylow(p).order(),
                g.p_core(p).order()
            );
        }
        let primes = g.prime_divisors();
        for (i, &p) in primes.iter().enumerate() {
            for &q in &primes[i + 1..] {
                let h = g.hall(&[p, q], &bounds)?;
                println!("  Hall {{{p},{q}}}: {}", h.order());
            }
        }
        let s = g.solvability_class();
        println!(
            "  F(G) = {}, Fitting length {:?}",
            g.fitting().order(),
            s.fitting_length
        );
    }
    Ok(())
}
