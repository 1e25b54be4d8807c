//! Fully enumerated permutation groups.
//!
//! Elements are addressed by their index in breadth-first enumeration
//! order from the identity (index 0), with generators tried in the order
//! given. Every search in the crate walks elements in this order, so
//! results are reproducible.

mod frobenius;
mod structure;
mod subgroup;
mod sylow;

use std::hash::BuildHasherDefault;
use std::sync::OnceLock;

use indexmap::IndexSet;
use rustc_hash::FxHasher;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::perm::{Permutation, MAX_DEGREE};

pub use frobenius::FrobeniusDecomposition;
pub use structure::{CharacteristicKind, SeriesKind, Solvability};
pub use subgroup::Subgroup;

type FxIndexSet<T> = IndexSet<T, BuildHasherDefault<FxHasher>>;

/// Conjugacy class partition with a keyed element → class lookup.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    class_of: Vec<u32>,
    classes: Vec<Vec<usize>>,
}

impl ClassPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Classes ordered by their least element; each class sorted ascending.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element] as usize
    }

    /// Least element of each class.
    pub fn representatives(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().map(|c| c[0])
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: FxIndexSet<Permutation>,
    /// `parent[i] = (j, k)` with `element(i) = element(j) * gen(k)`.
    parent: Vec<(u32, u32)>,
    /// `gen_mul[k][i]` is the index of `element(i) * gen(k)`.
    gen_mul: Vec<Vec<u32>>,
    orders: OnceLock<Vec<u64>>,
    classes: OnceLock<ClassPartition>,
}

const ROOT: u32 = u32::MAX;

impl FiniteGroup {
    /// Closure of `gens` acting on `degree` points, enumerated breadth-first.
    pub fn from_generators(gens: Vec<Permutation>, degree: usize, bounds: &Bounds) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let bound = bounds.element_bound;
        let mut elements = FxIndexSet::default();
        elements.insert(Permutation::identity(degree));
        let mut parent = vec![(ROOT, ROOT)];
        let mut gen_mul: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut head = 0;
        while head < elements.len() {
            for (k, g) in gens.iter().enumerate() {
                let prod = elements[head].compose(g);
                let (idx, fresh) = elements.insert_full(prod);
                if fresh {
                    if elements.len() > bound {
                        return Err(Error::ClosureExceedsBound { bound });
                    }
                    parent.push((head as u32, k as u32));
                }
                gen_mul[k].push(idx as u32);
            }
            head += 1;
        }
        Ok(Self {
            degree,
            generators: gens,
            elements,
            parent,
            gen_mul,
            orders: OnceLock::new(),
            classes: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(Vec::new(), degree, &Bounds::default())
            .expect("trivial group always fits")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = &Permutation> {
        self.elements.iter()
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.get_index_of(g)
    }

    pub fn require(&self, g: &Permutation) -> Result<usize> {
        if g.degree() != self.degree {
            return Err(Error::NotAMember);
        }
        self.index_of(g).ok_or(Error::NotAMember)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Index of the `k`-th generator.
    pub fn generator_index(&self, k: usize) -> usize {
        self.gen_mul[k][0] as usize
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        (0..self.generators.len())
            .map(|k| self.generator_index(k))
            .collect()
    }

    /// `element(i) * gen(k)` from the table recorded during closure.
    #[inline]
    pub fn mul_gen(&self, i: usize, k: usize) -> usize {
        self.gen_mul[k][i] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = self.elements[a].compose(&self.elements[b]);
        self.elements
            .get_index_of(&prod)
            .expect("group is closed under multiplication")
    }

    pub fn inv(&self, a: usize) -> usize {
        self.elements
            .get_index_of(&self.elements[a].inverse())
            .expect("group is closed under inversion")
    }

    /// `x⁻¹ a x`.
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        let c = self.elements[a].conjugate_by(&self.elements[x]);
        self.elements
            .get_index_of(&c)
            .expect("group is closed under conjugation")
    }

    /// `a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ea = &self.elements[a];
        let eb = &self.elements[b];
        let c = ea.inverse().compose(&eb.inverse()).compose(ea).compose(eb);
        self.elements
            .get_index_of(&c)
            .expect("group is closed under multiplication")
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let o = self.element_order(a) as i64;
        let p = self.elements[a].pow(e.rem_euclid(o));
        self.elements
            .get_index_of(&p)
            .expect("group is closed under powers")
    }

    /// All powers `a^0, …, a^(|a|-1)`.
    pub fn powers(&self, a: usize) -> Vec<usize> {
        let o = self.element_order(a) as usize;
        let mut out = Vec::with_capacity(o);
        let mut x = self.identity();
        for _ in 0..o {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.elements[a].commutes_with(&self.elements[b])
    }

    /// Orders of all elements, indexed like the elements.
    pub fn orders(&self) -> &[u64] {
        self.orders
            .get_or_init(|| self.elements.iter().map(Permutation::order).collect())
    }

    pub fn element_order(&self, i: usize) -> u64 {
        self.orders()[i]
    }

    /// Order of a permutation that must belong to the group.
    pub fn order_of(&self, g: &Permutation) -> Result<u64> {
        let i = self.require(g)?;
        Ok(self.element_order(i))
    }

    /// Generator word recorded during closure: `element(i) = gen(w[0]) * gen(w[1]) * …`.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while self.parent[cur].0 != ROOT {
            let (j, k) = self.parent[cur];
            w.push(k as usize);
            cur = j as usize;
        }
        w.reverse();
        w
    }

    /// Breadth-first spanning tree: `(parent, generator)` for each non-identity element.
    pub fn spanning_tree(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.parent
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &(j, k))| (i, j as usize, k as usize))
    }

    /// Conjugacy classes by orbit closure under conjugation by the generators.
    pub fn classes(&self) -> &ClassPartition {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ClassPartition {
        const UNSET: u32 = u32::MAX;
        let n = self.order();
        let mut class_of = vec![UNSET; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != UNSET {
                continue;
            }
            let id = classes.len() as u32;
            class_of[start] = id;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let x = &self.elements[orbit[head]];
                for g in &self.generators {
                    let c = x.conjugate_by(g);
                    let ci = self.elements.get_index_of(&c).expect("closed");
                    if class_of[ci] == UNSET {
                        class_of[ci] = id;
                        orbit.push(ci);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            classes.push(orbit);
        }
        ClassPartition { class_of, classes }
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.classes().class_of(i)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter()
            .enumerate()
            .all(|(i, a)| g[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.orders().contains(&n)
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> u64 {
        self.orders()
            .iter()
            .fold(1, |acc, &o| crate::numth::lcm(acc, o))
    }

    /// Primes dividing the group order, ascending.
    pub fn prime_divisors(&self) -> Vec<u64> {
        crate::numth::prime_divisors(self.order() as u64)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted(self, (0..self.order()).collect(), self.generator_indices())
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_sorted(self, vec![0], Vec::new())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> FiniteGroup {
        let t = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        let c: Vec<usize> = (0..n).collect();
        let c = Permutation::from_cycles(n, &[&c]).unwrap();
        FiniteGroup::from_generators(vec![t, c], n, &Bounds::default()).unwrap()
    }

    #[test]
    fn closure_orders() {
        let c3 = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        let g = FiniteGroup::from_generators(vec![c3], 3, &Bounds::default()).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(sym(4).order(), 24);
        let a = Permutation::from_cycles(4, &[&[0, 1], &[2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[0, 2], &[1, 3]]).unwrap();
        let v4 = FiniteGroup::from_generators(vec![a, b], 4, &Bounds::default()).unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.is_abelian());
        assert!(!v4.is_cyclic());
    }

    #[test]
    fn bound_and_degree_errors() {
        let bounds = Bounds {
            element_bound: 10,
            ..Bounds::default()
        };
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert_eq!(
            FiniteGroup::from_generators(vec![t.clone(), c], 4, &bounds).unwrap_err(),
            Error::ClosureExceedsBound { bound: 10 }
        );
        assert!(matches!(
            FiniteGroup::from_generators(vec![t], 5, &Bounds::default()),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn words_reproduce_elements() {
        let g = sym(4);
        for i in 0..g.order() {
            let mut x = Permutation::identity(4);
            for k in g.word(i) {
                x = x.compose(&g.generators()[k]);
            }
            assert_eq!(&x, g.element(i));
        }
    }

    #[test]
    fn sym3_classes() {
        let g = sym(3);
        let cp = g.classes();
        assert_eq!(cp.sizes(), vec![1, 3, 2]);
        assert_eq!(cp.representatives().next(), Some(0));
    }
}
