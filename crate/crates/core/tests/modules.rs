//! F_p linear algebra and module operations against vector-level oracles.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use proptest::prelude::*;

use gkcut::fpmod::{
    index_of_vector, matrix_group_order, vector_from_index, FpMatrix, ModuleAction, RowSpace,
};
use gkcut::{construct, Bounds, FiniteGroup, GroupSpec, Permutation};

fn all_vectors(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    (0..(p as usize).pow(d as u32)).map(move |i| vector_from_index(i, p, d))
}

fn matrix(p: u32, d: usize) -> impl Strategy<Value = FpMatrix> {
    prop::collection::vec(0..p, d * d).prop_map(move |e| FpMatrix::new(p, d, e).unwrap())
}

fn invertible(p: u32, d: usize) -> impl Strategy<Value = FpMatrix> {
    matrix(p, d).prop_filter("invertible", FpMatrix::is_invertible)
}

/// The matrix group as a permutation group of the `p^d` vectors.
fn as_perm_group(mats: &[FpMatrix]) -> FiniteGroup {
    let (p, d) = (mats[0].p(), mats[0].dim());
    let perms: Vec<Permutation> = mats
        .iter()
        .map(|m| {
            Permutation::new(
                all_vectors(p, d)
                    .map(|v| index_of_vector(&m.apply(&v), p))
                    .collect(),
            )
            .unwrap()
        })
        .collect();
    let n = (p as usize).pow(d as u32);
    FiniteGroup::from_generators(perms, n, &Bounds::default()).unwrap()
}

fn module_of(mats: &[FpMatrix]) -> ModuleAction {
    let g = Arc::new(as_perm_group(mats));
    ModuleAction::certify(g, mats[0].p(), mats.to_vec()).unwrap()
}

fn orbit(mats: &[FpMatrix], v: &[u32]) -> BTreeSet<Vec<u32>> {
    let mut seen: BTreeSet<Vec<u32>> = [v.to_vec()].into();
    let mut queue: VecDeque<Vec<u32>> = [v.to_vec()].into();
    while let Some(x) = queue.pop_front() {
        for m in mats {
            let y = m.apply(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn scale(v: &[u32], a: u32, p: u32) -> Vec<u32> {
    v.iter().map(|&c| c * a % p).collect()
}

fn group_and_mats() -> impl Strategy<Value = Vec<FpMatrix>> {
    prop::sample::select(vec![(2u32, 3usize), (3, 2), (5, 2), (7, 2), (3, 3)])
        .prop_flat_map(|(p, d)| prop::collection::vec(invertible(p, d), 1..3))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn inverse_and_kernel(m in prop::sample::select(vec![2u32, 3, 5, 7]).prop_flat_map(|p| matrix(p, 3))) {
        let (p, d) = (m.p(), m.dim());
        let zeros = all_vectors(p, d).filter(|v| m.apply(v).iter().all(|&c| c == 0)).count();
        prop_assert_eq!(zeros, (p as usize).pow((d - m.rank()) as u32));
        let ker = m.left_kernel();
        prop_assert_eq!(ker.len(), d - m.rank());
        for v in &ker {
            prop_assert!(m.apply(v).iter().all(|&c| c == 0));
        }
        if m.is_invertible() {
            prop_assert!(m.mul(&m.inverse().unwrap()).is_identity());
            prop_assert!(m.inverse().unwrap().mul(&m).is_identity());
        } else {
            prop_assert!(m.inverse().is_err());
        }
    }

    #[test]
    fn eigenvector_property_matches_orbits(mats in group_and_mats()) {
        let module = module_of(&mats);
        let p = module.p();
        let brute = all_vectors(p, module.dim()).skip(1).all(|v| {
            let o = orbit(&mats, &v);
            (1..p).all(|a| o.contains(&scale(&v, a, p)))
        });
        let scan = module.has_eigenvector_property(&Bounds::default()).unwrap();
        prop_assert_eq!(scan.holds, brute);
        if let Some((v, a)) = scan.witness {
            prop_assert!(!orbit(&mats, &v).contains(&scale(&v, a, p)));
        }
        prop_assert_eq!(matrix_group_order(&mats, &Bounds::default()).unwrap(), module.group().order());
    }

    #[test]
    fn fixed_spaces_and_spins(mats in group_and_mats(), x in any::<prop::sample::Index>()) {
        let module = module_of(&mats);
        let (p, d) = (module.p(), module.dim());
        let g = module.group();
        let x = x.index(g.order());
        let fixed = all_vectors(p, d).filter(|v| module.matrix(x).apply(v) == *v).count();
        prop_assert_eq!(fixed, (p as usize).pow(module.fixed_space(x).dim() as u32));
        for v in all_vectors(p, d).skip(1).take(12) {
            let span = RowSpace::spanned_by(p, d, orbit(&mats, &v).into_iter().collect());
            prop_assert_eq!(module.spin(&[v]), span);
        }
        for w in module.minimal_submodules(&Bounds::default()).unwrap() {
            prop_assert!(module.is_submodule(&w));
            for v in all_vectors(p, d).skip(1).filter(|v| w.contains(v)) {
                prop_assert_eq!(module.spin(&[v]).dim(), w.dim());
            }
        }
    }
}

fn build(spec: &str) -> Arc<FiniteGroup> {
    Arc::new(construct(&spec.parse::<GroupSpec>().unwrap(), &Bounds::default()).unwrap())
}

#[test]
fn permutation_module_structure() {
    let b = Bounds::default();
    let s3 = build("Sym(3)");
    // coprime: trivial line plus the 2-dimensional complement
    let m = ModuleAction::permutation_module(s3.clone(), 5).unwrap();
    let dims: Vec<usize> = m
        .minimal_submodules(&b)
        .unwrap()
        .iter()
        .map(RowSpace::dim)
        .collect();
    assert_eq!(dims.iter().copied().collect::<BTreeSet<_>>(), [1, 2].into());
    let a = m.submodule_analysis(&b).unwrap();
    assert!(!a.is_irreducible && !a.is_homogeneous);
    // characteristic 3: the all-ones line is the unique minimal submodule
    let m3 = ModuleAction::permutation_module(s3, 3).unwrap();
    let mins = m3.minimal_submodules(&b).unwrap();
    assert_eq!(mins.len(), 1);
    assert!(mins[0].contains(&[1, 1, 1]));
}

#[test]
fn induced_modules() {
    let b = Bounds::default();
    let g = build("Sym(3)");
    let h = g.subgroup(&[g.generator_index(1)]);
    let hg = Arc::new(g.subgroup_as_group(&h));
    let w = ModuleAction::from_rows(hg, 7, &[vec![vec![2]]]).unwrap();
    let v = w.induce(g.clone(), &h, &b).unwrap();
    assert_eq!(v.dim(), 2);
    assert!(v.is_faithful());
    assert!(v.submodule_analysis(&b).unwrap().is_irreducible);
    let res = v.restrict(&h).unwrap();
    assert_eq!(res.eigenspace(res.group().generator_index(0), 2).dim(), 1);
    let sd = v.semidirect_perm_group(&b).unwrap();
    assert!(sd.faithful);
    assert_eq!(sd.group.order(), 49 * 6);
}

#[test]
fn direct_sums_and_faithfulness() {
    let b = Bounds::default();
    let c4 = build("Cyc(4)");
    let sq = ModuleAction::from_rows(c4.clone(), 5, &[vec![vec![4]]]).unwrap();
    assert!(!sq.is_faithful());
    assert_eq!(sq.kernel().order(), 2);
    let f = ModuleAction::from_rows(c4.clone(), 5, &[vec![vec![2]]]).unwrap();
    let sum = sq.direct_sum(&f).unwrap();
    assert_eq!(sum.dim(), 2);
    assert!(sum.is_faithful());
    // the scalar 2 has order 4 mod 5 and scalars fix every line
    assert!(f.has_eigenvector_property(&b).unwrap().holds);
    assert!(!sq.has_eigenvector_property(&b).unwrap().holds);
}
