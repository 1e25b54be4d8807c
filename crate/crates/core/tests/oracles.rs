//! Engine results against brute-force oracles written from the definitions.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use proptest::prelude::*;

use gkcut::arith::{rationality_by_classes, rationality_by_index};
use gkcut::numth::{gcd, is_prime};
use gkcut::{construct, Bounds, FiniteGroup, GkGraph, Subgroup};

const SMALL: &[&str] = &[
    "Cyc(12)",
    "Dih(12)",
    "Dih(18)",
    "Quat(16)",
    "Sym(4)",
    "Alt(5)",
    "MM",
    "SD(Cyc(7),Cyc(3),pow=2)",
    "SD(Cyc(5),Cyc(4),pow=2)",
    "SD(EA(2,2),Cyc(3),mats=[[[0,1],[1,1]]])",
    "DP(Sym(3),Cyc(3))",
    "DP(Quat(8),Cyc(3))",
    "Wr(Cyc(2),Sym(3))",
    "Wr(Cyc(3),Cyc(2))",
    "SD(EA(3,2),Quat(8),mats=[[[0,2],[1,0]],[[1,1],[1,2]]])",
];

fn groups() -> &'static [FiniteGroup] {
    static G: OnceLock<Vec<FiniteGroup>> = OnceLock::new();
    G.get_or_init(|| {
        SMALL
            .iter()
            .map(|s| construct(&s.parse().unwrap(), &Bounds::default()).unwrap())
            .collect()
    })
}

fn set(s: &Subgroup) -> BTreeSet<usize> {
    s.elements().iter().copied().collect()
}

fn brute_centralizer(g: &FiniteGroup, a: usize) -> BTreeSet<usize> {
    (0..g.order())
        .filter(|&x| g.mul(a, x) == g.mul(x, a))
        .collect()
}

fn brute_normalizer(g: &FiniteGroup, h: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..g.order())
        .filter(|&x| h.iter().all(|&y| h.contains(&g.mul(g.mul(g.inv(x), y), x))))
        .collect()
}

fn brute_class(g: &FiniteGroup, a: usize) -> BTreeSet<usize> {
    (0..g.order())
        .map(|x| g.mul(g.mul(g.inv(x), a), x))
        .collect()
}

/// Closure under multiplication of the given elements, from the table.
fn brute_closure(g: &FiniteGroup, gens: &[usize]) -> BTreeSet<usize> {
    let mut s: BTreeSet<usize> = [g.identity()].into();
    loop {
        let next: BTreeSet<usize> = s
            .iter()
            .flat_map(|&x| gens.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.mul(x, y))
            .chain(s.iter().copied())
            .collect();
        if next.len() == s.len() {
            return s;
        }
        s = next;
    }
}

/// `g` is rational iff `g^k` is conjugate to `g` for every unit `k`.
fn brute_rational(g: &FiniteGroup, a: usize) -> (bool, bool) {
    let o = g.element_order(a);
    let class = brute_class(g, a);
    let units: Vec<u64> = (1..=o).filter(|&k| gcd(k, o) == 1).collect();
    let inv = g.inv(a);
    let rational = units.iter().all(|&k| class.contains(&g.pow(a, k as i64)));
    let isr = units.iter().all(|&k| {
        let y = g.pow(a, k as i64);
        class.contains(&y) || brute_class(g, inv).contains(&y)
    });
    (rational, isr)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn centralizer_matches_brute(gi in 0..SMALL.len(), a in any::<prop::sample::Index>()) {
        let g = &groups()[gi];
        let a = a.index(g.order());
        prop_assert_eq!(set(&g.centralizer(&[a])), brute_centralizer(g, a));
    }

    #[test]
    fn normalizer_matches_brute(gi in 0..SMALL.len(), a in any::<prop::sample::Index>(), b in any::<prop::sample::Index>()) {
        let g = &groups()[gi];
        let gens = [a.index(g.order()), b.index(g.order())];
        let h = g.subgroup(&gens);
        prop_assert_eq!(set(&h), brute_closure(g, &gens));
        let n = g.normalizer(&h).unwrap();
        prop_assert_eq!(set(&n), brute_normalizer(g, &set(&h)));
        prop_assert_eq!(g.is_normal(&h), n.order() == g.order());
    }

    #[test]
    fn classes_match_brute(gi in 0..SMALL.len(), a in any::<prop::sample::Index>()) {
        let g = &groups()[gi];
        let a = a.index(g.order());
        let cp = g.classes();
        let mine: BTreeSet<usize> = cp.classes()[cp.class_of(a)].iter().copied().collect();
        prop_assert_eq!(mine, brute_class(g, a));
    }

    #[test]
    fn rationality_matches_definition(gi in 0..SMALL.len(), a in any::<prop::sample::Index>()) {
        let g = &groups()[gi];
        let a = a.index(g.order());
        let v = rationality_by_classes(g, a);
        prop_assert_eq!(v, rationality_by_index(g, a));
        let (rational, isr) = brute_rational(g, a);
        prop_assert_eq!(v.is_rational, rational);
        prop_assert_eq!(v.is_inverse_semi_rational, isr);
        prop_assert_eq!(v.is_real, brute_class(g, a).contains(&g.inv(a)));
    }

    #[test]
    fn sylow_is_a_full_p_subgroup(gi in 0..SMALL.len(), p in prop::sample::select(vec![2u64, 3, 5, 7])) {
        let g = &groups()[gi];
        let s = g.sylow(p);
        let mut part = 1;
        while ((g.order() / part) as u64).is_multiple_of(p) {
            part *= p as usize;
        }
        prop_assert_eq!(s.order(), part);
        prop_assert!(s.elements().iter().all(|&x| g.element_order(x).is_multiple_of(p) || g.element_order(x) == 1));
    }
}

/// Prime graph straight from permutation orders.
fn brute_gk(g: &FiniteGroup) -> GkGraph {
    let orders: Vec<u64> = g.elements().map(|x| x.order()).collect();
    let primes: BTreeSet<u64> = orders
        .iter()
        .flat_map(|&o| (2..=o).filter(move |&p| o % p == 0 && is_prime(p)))
        .collect();
    let mut edges = Vec::new();
    for &p in &primes {
        for &q in primes.iter().filter(|&&q| q > p) {
            if orders.iter().any(|&o| o % (p * q) == 0) {
                edges.push((p, q));
            }
        }
    }
    GkGraph::new(primes, edges)
}

#[test]
fn gk_graphs_match_brute() {
    for (g, s) in groups().iter().zip(SMALL) {
        assert_eq!(GkGraph::of_group(g), brute_gk(g), "{s}");
    }
}

fn partitions(n: usize, max: usize) -> usize {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|k| partitions(n - k, k)).sum()
}

#[test]
fn class_numbers_match_closed_forms() {
    let b = Bounds::default();
    let count = |s: &str| construct(&s.parse().unwrap(), &b).unwrap().classes().len();
    for n in 2..=8 {
        assert_eq!(count(&format!("Sym({n})")), partitions(n, n), "Sym({n})");
    }
    // D_{2m}: (m + 3) / 2 classes for odd m, m / 2 + 3 for even m
    for m in 3..=20 {
        let want = if m % 2 == 1 { (m + 3) / 2 } else { m / 2 + 3 };
        assert_eq!(count(&format!("Dih({})", 2 * m)), want, "Dih({})", 2 * m);
    }
    // Q_{2^k}: 2^(k-2) + 3 classes
    for k in 3..=7 {
        assert_eq!(count(&format!("Quat({})", 1 << k)), (1 << (k - 2)) + 3);
    }
    for n in 1..=30 {
        assert_eq!(count(&format!("Cyc({n})")), n);
    }
    assert_eq!(count("Alt(5)"), 5);
    assert_eq!(count("Alt(6)"), 7);
}

#[test]
fn fitting_subgroups_of_known_groups() {
    let b = Bounds::default();
    // (spec, |F(G)|, Fitting length)
    let known = [
        ("Sym(4)", 4, Some(3)),
        ("Sym(3)", 3, Some(2)),
        ("MM", 25, Some(2)),
        ("W4200", 175, Some(2)),
        ("Quat(16)", 16, Some(1)),
        ("Alt(5)", 1, None),
        (
            "SD(EA(3,2),Quat(8),mats=[[[0,2],[1,0]],[[1,1],[1,2]]])",
            9,
            Some(2),
        ),
    ];
    for (s, f, len) in known {
        let g = construct(&s.parse().unwrap(), &b).unwrap();
        assert_eq!(g.fitting().order(), f, "{s}");
        assert_eq!(g.solvability_class().fitting_length, len, "{s}");
    }
}

/// A Frobenius group `K⋊H` has `(|K| - 1)/|H|` nontrivial classes inside `K`
/// and one class outside `K` for each nontrivial class of `H`.
#[test]
fn frobenius_class_numbers() {
    let b = Bounds::default();
    for (s, k, h, kh) in [
        ("MM", 25, 8, 5),
        ("Sym(3)", 3, 2, 2),
        ("Alt(4)", 4, 3, 3),
        ("SD(Cyc(7),Cyc(3),pow=2)", 7, 3, 3),
        ("SD(Cyc(5),Cyc(4),pow=2)", 5, 4, 4),
        (
            "SD(EA(3,2),Quat(8),mats=[[[0,2],[1,0]],[[1,1],[1,2]]])",
            9,
            8,
            5,
        ),
    ] {
        let g = construct(&s.parse().unwrap(), &b).unwrap();
        let d = g
            .frobenius_decomposition()
            .unwrap_or_else(|| panic!("{s} is Frobenius"));
        assert_eq!((d.kernel.order(), d.complement.order()), (k, h), "{s}");
        assert_eq!(g.classes().len(), 1 + (k - 1) / h + (kh - 1), "{s}");
    }
}
