//! Frozen reference values. Each derived value is recomputed here by a
//! brute-force or arithmetic oracle before it is compared.

use std::collections::BTreeSet;
use std::sync::Arc;

use gkcut::arith::{group_rationality, named_graph, order_spectrum, rationality_by_classes};
use gkcut::construct::MM_MATRICES;
use gkcut::fpmod::{are_isomorphic, hom_space, matrix_group_order, RowSpace};
use gkcut::group::SeriesKind;
use gkcut::lab::{
    check_lemma, default_catalog, run_catalog, Catalog, LemmaId, LemmaInstance, Params, Status,
};
use gkcut::numth::lcm;
use gkcut::{
    construct, Bounds, FiniteGroup, FpMatrix, GkGraph, ModuleAction, Permutation, Subgroup,
};

fn build(spec: &str) -> FiniteGroup {
    construct(&spec.parse().unwrap(), &Bounds::default()).unwrap()
}

fn element(g: &FiniteGroup, degree: usize, cycles: &[&[usize]]) -> usize {
    g.index_of(&Permutation::from_cycles(degree, cycles).unwrap())
        .unwrap()
}

fn brute_centralizer_order(g: &FiniteGroup, a: usize) -> usize {
    (0..g.order()).filter(|&x| g.commute(a, x)).count()
}

fn brute_normalizer_order(g: &FiniteGroup, h: &Subgroup) -> usize {
    (0..g.order())
        .filter(|&x| h.elements().iter().all(|&y| h.contains(g.conj(y, x))))
        .count()
}

fn orders(series: &[Subgroup]) -> Vec<usize> {
    series.iter().map(Subgroup::order).collect()
}

fn rows(m: &[[[i64; 2]; 2]; 2]) -> Vec<Vec<Vec<i64>>> {
    m.iter()
        .map(|x| x.iter().map(|r| r.to_vec()).collect())
        .collect()
}

fn mm_module(b: &Bounds) -> (Arc<FiniteGroup>, ModuleAction) {
    let q8 = Arc::new(construct(&"Quat(8)".parse().unwrap(), b).unwrap());
    let m = ModuleAction::from_rows(q8.clone(), 5, &rows(&MM_MATRICES)).unwrap();
    (q8, m)
}

#[test]
fn permutation_group_values() {
    // 9! by the factorial
    assert_eq!(build("Sym(9)").order(), (1..=9).product::<usize>());

    let c15 = build("Cyc(15)");
    let g = c15.generator_index(0);
    let part = c15.element_part(g, &[3]);
    assert_eq!(c15.element_order(part), 3);
    // 10 = 1 mod 3 and 10 = 0 mod 5
    assert_eq!(part, c15.pow(g, 10));

    let q8 = build("Quat(8)");
    let mut sizes = q8.classes().sizes();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 2, 2, 2]);
    let i = (0..8).find(|&x| q8.element_order(x) == 4).unwrap();
    assert_eq!(
        q8.centralizer(&[i]).order(),
        brute_centralizer_order(&q8, i)
    );
    assert_eq!(q8.centralizer(&[i]).order(), 4);
    assert_eq!(
        q8.center().order(),
        (0..8)
            .filter(|&x| brute_centralizer_order(&q8, x) == 8)
            .count()
    );
    assert_eq!(q8.center().order(), 2);
    assert_eq!(orders(&q8.series(SeriesKind::LowerCentral)), [8, 2, 1]);

    let s3 = build("Sym(3)");
    let c = element(&s3, 3, &[&[0, 1, 2]]);
    assert_eq!(
        s3.centralizer(&[c]).order(),
        6 / s3.classes().classes()[s3.class_of(c)].len()
    );
    assert_eq!(s3.centralizer(&[c]).order(), 3);

    let s4 = build("Sym(4)");
    let four = element(&s4, 4, &[&[0, 1, 2, 3]]);
    let h = s4.cyclic_subgroup(four);
    assert_eq!(
        s4.normalizer(&h).unwrap().order(),
        brute_normalizer_order(&s4, &h)
    );
    assert_eq!(s4.normalizer(&h).unwrap().order(), 8);
    let d = s4.derived_subgroup();
    assert_eq!(d.order(), 12);
    assert!(d.elements().iter().all(|&x| s4
        .element(x)
        .cycle_type()
        .iter()
        .map(|l| l - 1)
        .sum::<usize>()
        % 2
        == 0));
    assert_eq!(orders(&s4.series(SeriesKind::Fitting)), [1, 4, 12, 24]);
    let s = s4.solvability_class();
    assert!(s.is_solvable && !s.is_nilpotent && s.fitting_length == Some(3));
    assert!(!build("Alt(5)").solvability_class().is_solvable);

    let mm = build("MM");
    let p5 = mm.sylow(5);
    assert_eq!(p5.order(), 25);
    assert!(mm.is_normal(&p5) && p5.elements().iter().all(|&x| mm.element_order(x) <= 5));
    assert_eq!(mm.normalizer(&p5).unwrap().order(), 200);
    assert_eq!(mm.fitting().elements(), p5.elements());
    assert_eq!(mm.classes().len(), 8);

    let w = build("W4200");
    let b = Bounds::default();
    // a Hall subgroup of a direct product projects onto Hall subgroups of the factors
    assert_eq!(w.hall(&[3, 7], &b).unwrap().order(), 21);
    assert_eq!(w.hall(&[2, 5], &b).unwrap().order(), 200);

    assert!(build("Quat(8)").frobenius_decomposition().is_none());
    let d = build("Sym(3)").frobenius_decomposition().unwrap();
    assert_eq!((d.kernel.order(), d.complement.order()), (3, 2));
}

#[test]
fn spectra_and_graphs() {
    assert_eq!(order_spectrum(&build("Quat(8)")), [1, 2, 4].into());
    let (a, b): (BTreeSet<u64>, BTreeSet<u64>) = ([1, 2, 4, 5].into(), [1, 3, 7].into());
    let closure: BTreeSet<u64> = a
        .iter()
        .flat_map(|&x| b.iter().map(move |&y| lcm(x, y)))
        .collect();
    assert_eq!(order_spectrum(&build("W4200")), closure);

    let c21 = build("SD(Cyc(7),Cyc(3),pow=2)");
    assert_eq!(c21.order(), 21);
    assert!(!order_spectrum(&c21).contains(&21));

    assert_eq!(
        GkGraph::of_group(&build("W4200")),
        named_graph("main").unwrap()
    );
    assert_eq!(
        GkGraph::of_group(&build("Sym(9)")),
        named_graph("t").unwrap()
    );
    assert_eq!(named_graph("main").unwrap().edge_count(), 4);
    assert_eq!(named_graph("u").unwrap().edge_count(), 5);
}

#[test]
fn rationality_values() {
    let q8 = build("Quat(8)");
    let i = (0..8).find(|&x| q8.element_order(x) == 4).unwrap();
    assert!(rationality_by_classes(&q8, i).is_rational);

    let c21 = build("SD(Cyc(7),Cyc(3),pow=2)");
    let a = c21.generator_index(0);
    assert_eq!(c21.element_order(a), 7);
    let class: BTreeSet<usize> = c21.classes().classes()[c21.class_of(a)]
        .iter()
        .copied()
        .collect();
    assert_eq!(class, [1, 2, 4].map(|k| c21.pow(a, k)).into());
    let v = rationality_by_classes(&c21, a);
    assert!(v.is_inverse_semi_rational && !v.is_rational && !v.is_real);

    let r = group_rationality(&build("MM"));
    assert!(r.is_rational_group && r.is_cut);
    let r = group_rationality(&c21);
    assert!(!r.is_rational_group && r.is_cut);
    let r = group_rationality(&build("Cyc(5)"));
    assert!(!r.is_rational_group && !r.is_cut);
}

#[test]
fn module_values() {
    let b = Bounds::default();
    let (q8, m) = mm_module(&b);
    assert!(m.is_faithful());
    let j = q8.generator_index(1);
    assert_eq!(
        m.eigenspace(j, 2),
        RowSpace::spanned_by(5, 2, vec![vec![1, 0]])
    );
    let scan = m.has_eigenvector_property(&b).unwrap();
    assert!(scan.holds && scan.vectors_scanned == 24);
    assert!(m.submodule_analysis(&b).unwrap().is_irreducible);
    assert_eq!(hom_space(&m, &m, &b).unwrap().dim(), 1);
    let vv = m.direct_sum(&m).unwrap();
    assert_eq!(hom_space(&m, &vv, &b).unwrap().dim(), 2);
    assert!(!are_isomorphic(&m, &vv, &b).unwrap());
    let z = m.restrict(&q8.center()).unwrap();
    let minus = z
        .group()
        .generators()
        .iter()
        .map(|x| z.matrix_of(x).unwrap())
        .next()
        .unwrap();
    assert_eq!(*minus, FpMatrix::scalar(5, 2, 4));
    let sd = m.semidirect_perm_group(&b).unwrap();
    assert_eq!((sd.group.order(), sd.group.degree()), (200, 25));
    assert!(sd.group.frobenius_decomposition().is_some());

    let c2 = Arc::new(build("Cyc(2)"));
    let diag = ModuleAction::from_rows(c2, 5, &[vec![vec![1, 0], vec![0, 4]]]).unwrap();
    let a = diag.submodule_analysis(&b).unwrap();
    assert_eq!(a.minimal_submodules.len(), 2);
    assert!(!a.is_homogeneous);

    // companion matrix of 1 + x + ... + x^6 over F_5, where 5 has order 6 mod 7
    let c7 = Arc::new(build("Cyc(7)"));
    let mut comp = vec![vec![0i64; 6]; 6];
    for (r, row) in comp.iter_mut().enumerate().take(5) {
        row[r + 1] = 1;
    }
    comp[5] = vec![4; 6];
    let fpf = ModuleAction::from_rows(c7.clone(), 5, &[comp]).unwrap();
    assert_eq!(fpf.fixed_space(c7.generator_index(0)).dim(), 0);

    let d = FpMatrix::from_rows(5, &[vec![2, 0], vec![0, 3]]).unwrap();
    assert_eq!(matrix_group_order(&[d], &b).unwrap(), 4);
}

#[test]
fn induction_then_restriction() {
    let b = Bounds::default();
    let g = Arc::new(build("SD(Cyc(7),Cyc(3),pow=2)"));
    let h = g.subgroup(&[g.generator_index(0)]);
    let hg = Arc::new(g.subgroup_as_group(&h));
    // x^3 + x + 1 over F_2
    let w = ModuleAction::from_rows(hg, 2, &[vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]])
        .unwrap();
    let v = w.induce(g.clone(), &h, &b).unwrap();
    assert_eq!(v.dim(), 9);
    let res = v.restrict(&h).unwrap();
    let a = res.submodule_analysis(&b).unwrap();
    // squaring is the Frobenius map over F_2, so every conjugate of W is W
    assert!(a.is_homogeneous);
    assert!(a.minimal_submodules.iter().all(|s| s.dim() == 3));
    let sum = a
        .minimal_submodules
        .iter()
        .fold(RowSpace::zero(2, 9), |acc, s| acc.sum(s));
    assert_eq!(sum.dim(), 9);
}

#[test]
fn lemma_instances() {
    let b = Bounds::default();
    let run = |id: LemmaId, spec: &str, p: Option<u64>| {
        let params = Params {
            p,
            ..Params::default()
        };
        check_lemma(
            &LemmaInstance::new(id, spec.parse().unwrap()).with_params(params),
            &b,
        )
        .unwrap()
    };
    assert_eq!(
        run(LemmaId::GSylowP, "Alt(4)", Some(3)).status,
        Status::Pass
    );
    assert_eq!(
        run(LemmaId::FittingP, "Sym(4)", Some(3)).status,
        Status::Pass
    );
    assert_eq!(run(LemmaId::CutOrders(1), "MM", None).status, Status::Pass);

    let ids: Vec<LemmaId> = LemmaId::select("L-3").unwrap();
    assert_eq!(ids.len(), 13);
    let r = run_catalog(
        &Catalog::from_groups(vec!["Alt(5)".parse().unwrap()]),
        &ids,
        &b,
        false,
    );
    assert_eq!(r.reports.len(), 13);
    assert!(r
        .reports
        .iter()
        .all(|x| x.status == Status::HypothesisNotMet));
    assert!(default_catalog().groups.len() >= 100);
}
