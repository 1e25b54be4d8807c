//! Element orders, Gruenberg–Kegel graphs and rationality of elements.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numth::{euler_phi, gcd, prime_divisors};
use crate::perm::Permutation;

/// Set of element orders.
pub fn order_spectrum(g: &FiniteGroup) -> BTreeSet<u64> {
    g.orders().iter().copied().collect()
}

/// Prime graph: vertices are the primes dividing `|G|`, with an edge
/// `p – q` whenever some element order is divisible by `pq`.
///
/// Edges are stored as `[p, q]` with `p < q`. Serializes canonically as
/// `{"vertices": [...], "edges": [[p, q], ...]}` with sorted entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GkGraph {
    pub vertices: BTreeSet<u64>,
    pub edges: BTreeSet<[u64; 2]>,
}

impl GkGraph {
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Self {
        let mut g = GkGraph {
            vertices: vertices.into_iter().collect(),
            edges: BTreeSet::new(),
        };
        for (p, q) in edges {
            g.vertices.insert(p);
            g.vertices.insert(q);
            g.edges.insert([p.min(q), p.max(q)]);
        }
        g
    }

    /// Graph determined by a set of element orders.
    pub fn from_spectrum(spectrum: &BTreeSet<u64>) -> Self {
        let mut g = GkGraph::default();
        for &o in spectrum {
            let ps = prime_divisors(o);
            for (i, &p) in ps.iter().enumerate() {
                g.vertices.insert(p);
                for &q in &ps[i + 1..] {
                    g.edges.insert([p, q]);
                }
            }
        }
        g
    }

    pub fn of_group(g: &FiniteGroup) -> Self {
        Self::from_spectrum(&order_spectrum(g))
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        self.edges.contains(&[p.min(q), p.max(q)])
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Vertex and edge containment.
    pub fn is_subgraph_of(&self, other: &GkGraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph GK {\n");
        for v in &self.vertices {
            let _ = writeln!(s, "  {v};");
        }
        for [p, q] in &self.edges {
            let _ = writeln!(s, "  {p} -- {q};");
        }
        s.push_str("}\n");
        s
    }
}

/// Identifiers accepted by [`named_graph`].
pub const NAMED_GRAPHS: [&str; 5] = ["s", "t", "u", "v", "main"];

/// The four-vertex graphs on `{2, 3, 5, 7}` singled out in the classification.
pub fn named_graph(id: &str) -> Result<GkGraph> {
    let edges: &[(u64, u64)] = match id {
        "s" => &[(2, 3), (2, 7), (3, 5), (3, 7)],
        "t" => &[(2, 3), (2, 5), (2, 7), (3, 5)],
        "u" => &[(2, 3), (2, 7), (3, 5), (3, 7), (5, 7)],
        "v" => &[(2, 3), (2, 5), (2, 7), (3, 5), (3, 7)],
        "main" => &[(2, 3), (2, 7), (3, 5), (5, 7)],
        _ => return Err(Error::UnknownGraphId(id.to_string())),
    };
    Ok(GkGraph::new([2, 3, 5, 7], edges.iter().copied()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalityVerdict {
    pub is_real: bool,
    pub is_rational: bool,
    pub is_inverse_semi_rational: bool,
    /// `([N_G(⟨g⟩) : C_G(g)], |Aut(⟨g⟩)|)`.
    pub witness_indices: (u64, u64),
}

/// Verdict from conjugacy classes: `g^k` for `k` coprime to `|g|` is
/// compared with the classes of `g` and `g⁻¹`. The normalizer index is the
/// number of such `k` with `g^k ~ g`.
pub fn rationality_by_classes(g: &FiniteGroup, i: usize) -> RationalityVerdict {
    let o = g.element_order(i);
    let cp = g.classes();
    let (ci, cinv) = (cp.class_of(i), cp.class_of(g.inv(i)));
    let mut fixed = 0u64;
    let mut isr = true;
    for k in (1..=o).filter(|&k| gcd(k, o) == 1) {
        let c = cp.class_of(g.pow(i, k as i64));
        if c == ci {
            fixed += 1;
        } else if c != cinv {
            isr = false;
        }
    }
    let phi = euler_phi(o);
    RationalityVerdict {
        is_real: ci == cinv,
        is_rational: fixed == phi,
        is_inverse_semi_rational: isr,
        witness_indices: (fixed, phi),
    }
}

/// Verdict from `[N_G(⟨g⟩) : C_G(g)]` against `|Aut(⟨g⟩)|`, scanning all of
/// `G` without using the class partition.
pub fn rationality_by_index(g: &FiniteGroup, i: usize) -> RationalityVerdict {
    let o = g.element_order(i);
    let powers: BTreeSet<usize> = g.powers(i).into_iter().collect();
    let inv = g.inv(i);
    let (mut normalizer, mut centralizer) = (0u64, 0u64);
    let mut real = false;
    for x in 0..g.order() {
        let c = g.conj(i, x);
        if powers.contains(&c) {
            normalizer += 1;
            if c == i {
                centralizer += 1;
            }
            if c == inv {
                real = true;
            }
        }
    }
    let index = normalizer / centralizer;
    let phi = euler_phi(o);
    let rational = index == phi;
    RationalityVerdict {
        is_real: real,
        is_rational: rational,
        is_inverse_semi_rational: rational || (2 * index == phi && !real),
        witness_indices: (index, phi),
    }
}

/// Both verdicts for one element; the index method only when `|G|` is at
/// most `index_bound`.
pub fn rationality_methods(
    g: &FiniteGroup,
    i: usize,
    index_bound: usize,
) -> (RationalityVerdict, Option<RationalityVerdict>) {
    let by_class = rationality_by_classes(g, i);
    let by_index = (g.order() <= index_bound).then(|| rationality_by_index(g, i));
    (by_class, by_index)
}

/// Rationality verdict for a member of `g`, cross-checked against the index
/// criterion when `|G| ≤ index_bound`.
///
/// # Panics
/// If the two criteria disagree, which would be an internal error.
pub fn element_rationality(
    g: &FiniteGroup,
    x: &Permutation,
    index_bound: usize,
) -> Result<RationalityVerdict> {
    let i = g.require(x)?;
    Ok(checked_verdict(g, i, index_bound))
}

pub(crate) fn checked_verdict(g: &FiniteGroup, i: usize, index_bound: usize) -> RationalityVerdict {
    let (by_class, by_index) = rationality_methods(g, i, index_bound);
    if let Some(v) = by_index {
        assert_eq!(by_class, v, "rationality criteria disagree on element {i}");
    }
    by_class
}

/// One verdict per conjugacy class, in class order.
pub fn class_rationality(g: &FiniteGroup) -> Vec<RationalityVerdict> {
    g.classes()
        .representatives()
        .map(|r| rationality_by_classes(g, r))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupRationality {
    pub is_rational_group: bool,
    pub is_cut: bool,
}

pub fn group_rationality(g: &FiniteGroup) -> GroupRationality {
    let verdicts = class_rationality(g);
    GroupRationality {
        is_rational_group: verdicts.iter().all(|v| v.is_rational),
        is_cut: verdicts.iter().all(|v| v.is_inverse_semi_rational),
    }
}

pub fn is_cut(g: &FiniteGroup) -> bool {
    group_rationality(g).is_cut
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{construct, Bounds, GroupSpec};

    fn build(s: GroupSpec) -> FiniteGroup {
        construct::construct(&s, &Bounds::default()).unwrap()
    }

    #[test]
    fn spectra() {
        let c6 = build(GroupSpec::Cyc(6));
        assert_eq!(order_spectrum(&c6), BTreeSet::from([1, 2, 3, 6]));
        let q8 = build(GroupSpec::Quat(8));
        assert_eq!(order_spectrum(&q8), BTreeSet::from([1, 2, 4]));
        assert_eq!(
            GkGraph::of_group(&build(GroupSpec::Cyc(7))),
            GkGraph::new([7], [])
        );
    }

    #[test]
    fn named_graphs() {
        assert_eq!(named_graph("main").unwrap().edge_count(), 4);
        assert_eq!(named_graph("u").unwrap().edge_count(), 5);
        assert_ne!(named_graph("s").unwrap(), named_graph("t").unwrap());
        assert!(named_graph("x").is_err());
        assert_eq!(
            named_graph("main").unwrap().to_json(),
            r#"{"vertices":[2,3,5,7],"edges":[[2,3],[2,7],[3,5],[5,7]]}"#
        );
    }

    #[test]
    fn c7c3_elements() {
        let g = build(GroupSpec::c7c3());
        let a = g.generator_index(0);
        let v = checked_verdict(&g, a, 20_000);
        assert!(v.is_inverse_semi_rational && !v.is_rational && !v.is_real);
        assert_eq!(v.witness_indices, (3, 6));
        let r = group_rationality(&g);
        assert!(r.is_cut && !r.is_rational_group);
    }

    #[test]
    fn cyclic_five_is_neither() {
        let r = group_rationality(&build(GroupSpec::Cyc(5)));
        assert!(!r.is_cut && !r.is_rational_group);
    }
}
