//! The eigenvector property: every nonzero `v` and unit `a` have some `g`
//! with `vg = av`.

use std::sync::Arc;

use gkcut::construct::MM_MATRICES;
use gkcut::lab::Q8_F7_MATRICES;
use gkcut::{construct, Bounds, GroupSpec, ModuleAction};

fn main() -> gkcut::Result<()> {
    let b = Bounds::default();
    let q8 = Arc::new(construct(&GroupSpec::Quat(8), &b)?);
    let rows = |m: &[[[i64; 2]; 2]; 2]| -> Vec<Vec<Vec<i64>>> {
        m.iter()
            .map(|x| x.iter().map(|r| r.to_vec()).collect())
            .collect()
    };
    for (p, rows) in [(5, rows(&MM_MATRICES)), (7, rows(&Q8_F7_MATRICES))] {
        let m = ModuleAction::from_rows(q8.clone(), p, &rows)?;
        let scan = m.has_eigenvector_property(&b)?;
        println!(
            "Q8 on F_{p}^2: faithful {}, property holds {}, {} vectors scanned, witness {:?}",
            m.is_faithful(),
            scan.holds,
            scan.vectors_scanned,
            scan.witness
        );
    }
    Ok(())
}
