//! F_p-modules: permutation modules, submodule lattices, induction and the
//! semidirect product they define.

use std::sync::Arc;

use gkcut::fpmod::{are_isomorphic, RowSpace};
use gkcut::{construct, Bounds, GroupSpec, ModuleAction};

fn main() -> gkcut::Result<()> {
    let b = Bounds::default();
    let s3 = Arc::new(construct(&GroupSpec::Sym(3), &b)?);
    for p in [2, 3, 5] {
        let m = ModuleAction::permutation_module(s3.clone(), p)?;
        let dims: Vec<usize> = m
            .minimal_submodules(&b)?
            .iter()
            .map(RowSpace::dim)
            .collect();
        print!("Sym(3) on F_{p}^3: minimal submodule dims {dims:?}");
        // homogeneity is only decided in coprime characteristic
        match m.submodule_analysis(&b) {
            Ok(a) => println!(", homogeneous {}", a.is_homogeneous),
            Err(e) => println!(", no analysis ({})", e.kind()),
        }
    }

    let h = s3.subgroup(&[s3.generator_index(1)]);
    let c3 = Arc::new(s3.subgroup_as_group(&h));
    let w = ModuleAction::from_rows(c3.clone(), 7, &[vec![vec![2]]])?;
    let v = w.induce(s3.clone(), &h, &b)?;
    let sd = v.semidirect_perm_group(&b)?;
    println!(
        "induced from C3 over F_7: dim {}, faithful {}, irreducible {}, |V⋊G| = {}",
        v.dim(),
        v.is_faithful(),
        v.submodule_analysis(&b)?.is_irreducible,
        sd.group.order()
    );
    let w4 = ModuleAction::from_rows(c3, 7, &[vec![vec![4]]])?;
    let v4 = w4.induce(s3, &h, &b)?;
    println!(
        "inducing the conjugate character gives an isomorphic module: {}",
        are_isomorphic(&v, &v4, &b)?
    );
    Ok(())
}
