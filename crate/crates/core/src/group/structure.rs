//! Characteristic subgroups, series and solvability.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::numth;
use crate::perm::Permutation;

use super::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CharacteristicKind {
    Center,
    Derived,
    Fitting,
    PCore(u64),
    /// `⟨g : g^p = 1⟩`; the group must be a p-group or abelian.
    OmegaP(u64),
    /// `P'P^p`; the group must be a p-group.
    FrattiniP(u64),
    /// Subgroup generated by elements of prime order; abelian groups only.
    SocleAbelian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesKind {
    Derived,
    LowerCentral,
    UpperCentral,
    Fitting,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solvability {
    pub is_nilpotent: bool,
    pub is_solvable: bool,
    /// `None` for non-solvable groups, whose Fitting series never reaches the group.
    pub fitting_length: Option<usize>,
}

fn precondition(kind: &str, reason: &str) -> Error {
    Error::KindPreconditionViolated {
        kind: kind.to_string(),
        reason: reason.to_string(),
    }
}

impl FiniteGroup {
    pub fn is_p_group(&self, p: u64) -> bool {
        numth::is_power_of(self.order() as u64, p)
    }

    pub fn characteristic_subgroup(&self, kind: CharacteristicKind) -> Result<Subgroup> {
        match kind {
            CharacteristicKind::Center => Ok(self.center()),
            CharacteristicKind::Derived => Ok(self.derived_subgroup()),
            CharacteristicKind::Fitting => Ok(self.fitting()),
            CharacteristicKind::PCore(p) => Ok(self.p_core(p)),
            CharacteristicKind::OmegaP(p) => {
                if !self.is_p_group(p) && !self.is_abelian() {
                    return Err(precondition(
                        "omega_p",
                        "group is neither a p-group nor abelian",
                    ));
                }
                let elems: Vec<usize> = (0..self.order())
                    .filter(|&i| self.element_order(i) == p)
                    .collect();
                Ok(self.subgroup(&elems))
            }
            CharacteristicKind::FrattiniP(p) => {
                if !self.is_p_group(p) {
                    return Err(precondition("frattini_p", "group is not a p-group"));
                }
                let derived = self.derived_subgroup();
                let mut gens = derived.generators().to_vec();
                for i in 0..self.order() {
                    let x = self.pow(i, p as i64);
                    if x != 0 && !gens.contains(&x) {
                        gens.push(x);
                    }
                }
                Ok(self.subgroup(&gens))
            }
            CharacteristicKind::SocleAbelian => {
                if !self.is_abelian() {
                    return Err(precondition("socle_abelian", "group is not abelian"));
                }
                let elems: Vec<usize> = (0..self.order())
                    .filter(|&i| numth::is_prime(self.element_order(i)))
                    .collect();
                Ok(self.subgroup(&elems))
            }
        }
    }

    pub fn center(&self) -> Subgroup {
        let cp = self.classes();
        let elems: Vec<usize> = cp
            .classes()
            .iter()
            .filter(|c| c.len() == 1)
            .map(|c| c[0])
            .collect();
        self.subgroup_from_elements(elems)
            .expect("center is a subgroup")
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        let w = self.whole();
        self.commutator_subgroup(&w, &w)
    }

    /// Union of the conjugacy classes lying entirely inside `h`: the core of `h`.
    pub fn core(&self, h: &Subgroup) -> Subgroup {
        let mut elems = Vec::new();
        for class in self.classes().classes() {
            if class.iter().all(|&x| h.contains(x)) {
                elems.extend_from_slice(class);
            }
        }
        self.subgroup_from_elements(elems)
            .expect("core is a subgroup")
    }

    /// `O_p(G)`: the intersection of all Sylow p-subgroups.
    pub fn p_core(&self, p: u64) -> Subgroup {
        self.core(&self.sylow(p))
    }

    /// Fitting subgroup as the product of the p-cores.
    pub fn fitting(&self) -> Subgroup {
        self.fitting_over(&self.trivial_subgroup())
    }

    /// Preimage of `F(G/N)` for a normal subgroup `N`, without forming the quotient:
    /// the preimage of `O_p(G/N)` is the core of `PN` for a Sylow p-subgroup `P`.
    pub fn fitting_over(&self, n: &Subgroup) -> Subgroup {
        let index = (self.order() / n.order()) as u64;
        let mut f = n.clone();
        for p in numth::prime_divisors(index) {
            let pn = self.join(&self.sylow(p), n);
            let core = self.core(&pn);
            f = self.join(&f, &core);
        }
        f
    }

    pub fn series(&self, kind: SeriesKind) -> Vec<Subgroup> {
        match kind {
            SeriesKind::Derived => {
                let mut out = vec![self.whole()];
                loop {
                    let last = out.last().expect("nonempty");
                    let next = self.commutator_subgroup(last, last);
                    if next.order() == last.order() {
                        return out;
                    }
                    out.push(next);
                }
            }
            SeriesKind::LowerCentral => {
                let whole = self.whole();
                let mut out = vec![whole.clone()];
                loop {
                    let last = out.last().expect("nonempty");
                    let next = self.commutator_subgroup(last, &whole);
                    if next.order() == last.order() {
                        return out;
                    }
                    out.push(next);
                }
            }
            SeriesKind::UpperCentral => {
                let mut out = vec![self.trivial_subgroup()];
                let gens = self.generator_indices();
                loop {
                    let last = out.last().expect("nonempty");
                    let elems: Vec<usize> = (0..self.order())
                        .filter(|&x| gens.iter().all(|&g| last.contains(self.commutator(x, g))))
                        .collect();
                    let next = self
                        .subgroup_from_elements(elems)
                        .expect("upper central term");
                    if next.order() == last.order() {
                        return out;
                    }
                    out.push(next);
                }
            }
            SeriesKind::Fitting => {
                let mut out = vec![self.trivial_subgroup()];
                loop {
                    let last = out.last().expect("nonempty");
                    let next = self.fitting_over(last);
                    if next.order() == last.order() {
                        return out;
                    }
                    out.push(next);
                }
            }
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.series(SeriesKind::Derived)
            .last()
            .is_some_and(Subgroup::is_trivial)
    }

    pub fn is_nilpotent(&self) -> bool {
        self.series(SeriesKind::LowerCentral)
            .last()
            .is_some_and(Subgroup::is_trivial)
    }

    pub fn fitting_length(&self) -> Option<usize> {
        let series = self.series(SeriesKind::Fitting);
        let top = series.last().expect("nonempty");
        (top.order() == self.order()).then(|| series.len() - 1)
    }

    pub fn solvability_class(&self) -> Solvability {
        let is_solvable = self.is_solvable();
        Solvability {
            is_nilpotent: self.is_nilpotent(),
            is_solvable,
            fitting_length: if is_solvable {
                self.fitting_length()
            } else {
                None
            },
        }
    }

    /// All normal subgroups of the group contained in `within` (itself normal),
    /// found by joining normal closures of classes.
    pub fn normal_subgroups_within(&self, within: &Subgroup) -> Vec<Subgroup> {
        let closures: Vec<Subgroup> = self
            .classes()
            .classes()
            .iter()
            .filter(|c| c[0] != 0 && within.contains(c[0]))
            .map(|c| self.normal_closure(&[c[0]]))
            .collect();
        let mut found: Vec<Subgroup> = vec![self.trivial_subgroup()];
        let mut keys: BTreeSet<Vec<usize>> = BTreeSet::new();
        keys.insert(vec![0]);
        let mut head = 0;
        while head < found.len() {
            let base = found[head].clone();
            for c in &closures {
                if c.is_subset_of(&base) {
                    continue;
                }
                let j = self.join(&base, c);
                if keys.insert(j.elements().to_vec()) {
                    found.push(j);
                }
            }
            head += 1;
        }
        found.sort_by_key(|s| (s.order(), s.elements().to_vec()));
        found
    }

    /// Minimal normal subgroups: the inclusion-minimal normal closures of single elements.
    pub fn minimal_normal_subgroups(&self) -> Vec<Subgroup> {
        let mut closures: Vec<Subgroup> = Vec::new();
        for rep in self.classes().representatives().filter(|&r| r != 0) {
            let c = self.normal_closure(&[rep]);
            if !closures.contains(&c) {
                closures.push(c);
            }
        }
        let minimal: Vec<Subgroup> = closures
            .iter()
            .filter(|c| {
                !closures
                    .iter()
                    .any(|d| d.order() < c.order() && d.is_subset_of(c))
            })
            .cloned()
            .collect();
        minimal
    }

    /// Least `k ≥ 1` with `x^k ∈ N`: the order of `xN` in `G/N`.
    pub fn order_modulo(&self, x: usize, n: &Subgroup) -> u64 {
        let mut y = x;
        let mut k = 1;
        while !n.contains(y) {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Element orders of `G/N` for a normal subgroup `N`.
    pub fn quotient_order_spectrum(&self, n: &Subgroup) -> BTreeSet<u64> {
        let mut seen = vec![false; self.order()];
        let mut out = BTreeSet::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            out.insert(self.order_modulo(x, n));
            // every element of the coset Nx has the same order modulo N
            for &m in n.elements() {
                seen[self.mul(m, x)] = true;
            }
        }
        out
    }

    /// `G/N` as a permutation group on the right cosets of a normal subgroup `N`.
    pub fn quotient(&self, n: &Subgroup, bounds: &Bounds) -> Result<FiniteGroup> {
        if !self.is_normal(n) {
            return Err(Error::NotASubgroup);
        }
        let index = self.order() / n.order();
        if index > bounds.element_bound || index > crate::perm::MAX_DEGREE {
            return Err(Error::bound(
                "quotient degree",
                bounds.element_bound.min(crate::perm::MAX_DEGREE),
            ));
        }
        const UNSET: usize = usize::MAX;
        let mut coset = vec![UNSET; self.order()];
        let mut reps = Vec::with_capacity(index);
        for x in 0..self.order() {
            if coset[x] != UNSET {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in n.elements() {
                coset[self.mul(m, x)] = id;
            }
        }
        let gens = (0..self.generators().len())
            .map(|k| {
                let images: Vec<usize> = reps.iter().map(|&r| coset[self.mul_gen(r, k)]).collect();
                Permutation::new(images)
            })
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::from_generators(gens, index, bounds)
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
    fn s4_series() {
        let g = sym(4);
        let orders: Vec<usize> = g
            .series(SeriesKind::Fitting)
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(orders, vec![1, 4, 12, 24]);
        assert_eq!(g.fitting_length(), Some(3));
        let s = g.solvability_class();
        assert!(s.is_solvable && !s.is_nilpotent);
        let derived: Vec<usize> = g
            .series(SeriesKind::Derived)
            .iter()
            .map(Subgroup::order)
            .collect();
        assert_eq!(derived, vec![24, 12, 4, 1]);
    }

    #[test]
    fn quotient_by_klein_four() {
        let g = sym(4);
        let v4 = g.fitting();
        assert_eq!(v4.order(), 4);
        let q = g.quotient(&v4, &Bounds::default()).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(
            g.quotient_order_spectrum(&v4)
                .into_iter()
                .collect::<Vec<_>>(),
            vec![1, 2, 3]
        );
        assert_eq!(g.minimal_normal_subgroups(), vec![v4]);
    }

    #[test]
    fn kind_preconditions() {
        let g = sym(3);
        assert!(g
            .characteristic_subgroup(CharacteristicKind::FrattiniP(2))
            .is_err());
        assert!(g
            .characteristic_subgroup(CharacteristicKind::SocleAbelian)
            .is_err());
        assert!(g
            .characteristic_subgroup(CharacteristicKind::OmegaP(3))
            .is_err());
    }
}
