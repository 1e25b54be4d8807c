//! Per-class rationality verdicts, by classes and by the normalizer index.

use gkcut::arith::{rationality_by_index, rationality_methods};
use gkcut::lab::word;
use gkcut::{construct, Bounds};

fn main() -> gkcut::Result<()> {
    for spec in ["Alt(4)", "Alt(5)", "Dih(10)", "MM"] {
        let g = construct(&spec.parse()?, &Bounds::default())?;
        println!("{spec}");
        for r in g.classes().representatives() {
            let (v, by_index) = rationality_methods(&g, r, usize::MAX);
            assert_eq!(by_index, Some(rationality_by_index(&g, r)));
            println!(
                "  {:<16} order {:>2}  real {:<5} rational {:<5} isr {:<5} index {}/{}",
                word(&g, r),
                g.element_order(r),
                v.is_real,
                v.is_rational,
                v.is_inverse_semi_rational,
                v.witness_indices.0,
                v.witness_indices.1
            );
        }
    }
    Ok(())
}
