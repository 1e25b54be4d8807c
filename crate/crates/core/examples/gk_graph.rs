//! Prime graphs of a few groups, as JSON and as DOT.

use gkcut::arith::{named_graph, order_spectrum};
use gkcut::{construct, Bounds, GkGraph};

fn main() -> gkcut::Result<()> {
    let bounds = Bounds::default();
    for spec in [
        "MM",
        "Sym(5)",
        "DP(MM,SD(Cyc(7),Cyc(3),pow=2))",
        "Wr(Cyc(3),Cyc(2))",
    ] {
        let g = construct(&spec.parse()?, &bounds)?;
        let gk = GkGraph::of_group(&g);
        println!(
            "{spec}: |G| = {}, orders {:?}",
            g.order(),
            order_spectrum(&g)
        );
        println!("  {}", gk.to_json());
    }
    let main = named_graph("main")?;
    print!("{}", main.to_dot());
    Ok(())
}
