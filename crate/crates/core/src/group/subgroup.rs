use crate::error::{Error, Result};
use crate::perm::Permutation;

use super::FiniteGroup;

/// A subgroup of an enumerated group, stored as sorted element indices of
/// the parent plus a membership bitset and a small generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    parent_order: usize,
    elements: Vec<usize>,
    member: Vec<u64>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent_order == other.parent_order && self.elements == other.elements
    }
}

impl Eq for Subgroup {}

impl std::hash::Hash for Subgroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.elements.hash(state);
    }
}

fn bitset(n: usize, elems: &[usize]) -> Vec<u64> {
    let mut bits = vec![0u64; n.div_ceil(64)];
    for &e in elems {
        bits[e / 64] |= 1 << (e % 64);
    }
    bits
}

impl Subgroup {
    pub(crate) fn from_sorted(
        g: &FiniteGroup,
        elements: Vec<usize>,
        generators: Vec<usize>,
    ) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        Self {
            parent_order: g.order(),
            member: bitset(g.order(), &elements),
            elements,
            generators,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    /// Element indices of the parent, ascending.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.parent_order && self.member[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elements.iter().all(|&e| other.contains(e))
    }

    pub fn index_in(&self, other: &Subgroup) -> usize {
        other.order() / self.order()
    }
}

impl FiniteGroup {
    /// Closure of the element set `start` (already a subgroup, sorted) together
    /// with `gens`; `None` once the size would exceed `cap`.
    fn close_from(&self, start: &[usize], gens: &[usize], cap: usize) -> Option<Vec<usize>> {
        let n = self.order();
        let mut seen = bitset(n, start);
        let mut elems = start.to_vec();
        if !elems.contains(&0) {
            seen[0] |= 1;
            elems.insert(0, 0);
        }
        let mut head = 0;
        while head < elems.len() {
            let x = elems[head];
            for &s in gens {
                let y = self.mul(x, s);
                if seen[y / 64] >> (y % 64) & 1 == 0 {
                    seen[y / 64] |= 1 << (y % 64);
                    elems.push(y);
                    if elems.len() > cap {
                        return None;
                    }
                }
            }
            head += 1;
        }
        elems.sort_unstable();
        Some(elems)
    }

    /// Subgroup generated by the given element indices.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
        let elems = self
            .close_from(&[0], &gens, usize::MAX)
            .expect("uncapped closure");
        Subgroup::from_sorted(self, elems, gens)
    }

    /// Like [`FiniteGroup::subgroup`] but gives up once more than `cap` elements appear.
    pub fn subgroup_capped(&self, gens: &[usize], cap: usize) -> Option<Subgroup> {
        let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
        self.close_from(&[0], &gens, cap)
            .map(|e| Subgroup::from_sorted(self, e, gens))
    }

    /// `⟨h, x⟩` computed incrementally from `h`.
    pub fn extend_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        self.extend_subgroup_capped(h, x, usize::MAX)
            .expect("uncapped closure")
    }

    pub fn extend_subgroup_capped(&self, h: &Subgroup, x: usize, cap: usize) -> Option<Subgroup> {
        if h.contains(x) {
            return Some(h.clone());
        }
        let mut gens = h.generators.clone();
        gens.push(x);
        self.close_from(&h.elements, &gens, cap)
            .map(|e| Subgroup::from_sorted(self, e, gens))
    }

    pub fn subgroup_from_perms(&self, perms: &[Permutation]) -> Result<Subgroup> {
        let idx = perms
            .iter()
            .map(|p| self.require(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.subgroup(&idx))
    }

    /// Wraps a set of elements known to form a subgroup, picking generators
    /// greedily in enumeration order. Fails if the set is not closed.
    pub fn subgroup_from_elements(&self, mut elems: Vec<usize>) -> Result<Subgroup> {
        elems.sort_unstable();
        elems.dedup();
        if elems.first() != Some(&0) {
            return Err(Error::NotASubgroup);
        }
        let target = Subgroup::from_sorted(self, elems, Vec::new());
        let mut h = self.trivial_subgroup();
        for &x in target.elements() {
            if !h.contains(x) {
                h = match self.extend_subgroup_capped(&h, x, target.order()) {
                    Some(h) => h,
                    None => return Err(Error::NotASubgroup),
                };
                if !h.is_subset_of(&target) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        if h.order() != target.order() {
            return Err(Error::NotASubgroup);
        }
        Ok(h)
    }

    pub fn cyclic_subgroup(&self, a: usize) -> Subgroup {
        let mut p = self.powers(a);
        p.sort_unstable();
        Subgroup::from_sorted(self, p, if a == 0 { vec![] } else { vec![a] })
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut h = a.clone();
        for &x in b.generators() {
            h = self.extend_subgroup(&h, x);
        }
        h
    }

    pub fn intersection(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = a
            .elements()
            .iter()
            .copied()
            .filter(|&x| b.contains(x))
            .collect();
        self.subgroup_from_elements(elems)
            .expect("intersection of subgroups is a subgroup")
    }

    /// Centralizer of a set of elements, by brute scan.
    pub fn centralizer(&self, a: &[usize]) -> Subgroup {
        let elems: Vec<usize> = (0..self.order())
            .filter(|&x| a.iter().all(|&y| self.commute(x, y)))
            .collect();
        self.subgroup_from_elements(elems)
            .expect("centralizer is a subgroup")
    }

    pub fn centralizer_of_perms(&self, a: &[Permutation]) -> Result<Subgroup> {
        let idx = a
            .iter()
            .map(|p| self.require(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.centralizer(&idx))
    }

    /// Centralizer of a subgroup: commuting with its generators suffices.
    pub fn centralizer_of(&self, h: &Subgroup) -> Subgroup {
        self.centralizer(h.generators())
    }

    pub fn centralizer_in(&self, a: &[usize], within: &Subgroup) -> Subgroup {
        let elems: Vec<usize> = within
            .elements()
            .iter()
            .copied()
            .filter(|&x| a.iter().all(|&y| self.commute(x, y)))
            .collect();
        self.subgroup_from_elements(elems)
            .expect("centralizer is a subgroup")
    }

    /// `h^x = x⁻¹ h x`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, x: usize) -> Subgroup {
        let mut elems: Vec<usize> = h.elements().iter().map(|&e| self.conj(e, x)).collect();
        elems.sort_unstable();
        let gens = h.generators().iter().map(|&e| self.conj(e, x)).collect();
        Subgroup::from_sorted(self, elems, gens)
    }

    pub fn normalizes(&self, x: usize, h: &Subgroup) -> bool {
        h.generators().iter().all(|&s| h.contains(self.conj(s, x)))
    }

    /// Normalizer of `h`, by brute scan.
    pub fn normalizer(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_subgroup(h)?;
        let elems: Vec<usize> = (0..self.order())
            .filter(|&x| self.normalizes(x, h))
            .collect();
        Ok(self
            .subgroup_from_elements(elems)
            .expect("normalizer is a subgroup"))
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        (0..self.generators().len()).all(|k| self.normalizes(self.generator_index(k), h))
    }

    pub fn is_normal_in(&self, h: &Subgroup, k: &Subgroup) -> bool {
        k.generators().iter().all(|&x| self.normalizes(x, h))
    }

    pub(crate) fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.parent_order() != self.order() {
            return Err(Error::NotASubgroup);
        }
        Ok(())
    }

    /// Smallest normal subgroup containing `gens`.
    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        self.normal_closure_in(gens, &self.whole())
    }

    /// Smallest subgroup containing `gens` and normalized by `by`.
    pub fn normal_closure_in(&self, gens: &[usize], by: &Subgroup) -> Subgroup {
        let mut h = self.subgroup(gens);
        loop {
            let mut grew = false;
            let mut k = 0;
            while k < h.generators().len() {
                let s = h.generators()[k];
                for &x in by.generators() {
                    let c = self.conj(s, x);
                    if !h.contains(c) {
                        h = self.extend_subgroup(&h, c);
                        grew = true;
                    }
                }
                k += 1;
            }
            if !grew {
                return h;
            }
        }
    }

    /// `[A, B]` for subgroups normalized by the whole group.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let mut comms = Vec::new();
        for &x in a.generators() {
            for &y in b.generators() {
                let c = self.commutator(x, y);
                if c != 0 && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
    }

    /// Re-enumerates a subgroup as a group in its own right, on the same points.
    pub fn subgroup_as_group(&self, h: &Subgroup) -> FiniteGroup {
        let gens: Vec<Permutation> = h
            .generators()
            .iter()
            .map(|&i| self.element(i).clone())
            .collect();
        let bounds = crate::bounds::Bounds {
            element_bound: self.order().max(1),
            ..Default::default()
        };
        FiniteGroup::from_generators(gens, self.degree(), &bounds)
            .expect("subgroup of an enumerated group fits the parent bound")
    }

    /// Maps a subgroup of `sub` (a group built by `subgroup_as_group`) back into `self`.
    pub fn lift_subgroup(&self, sub: &FiniteGroup, h: &Subgroup) -> Subgroup {
        let mut elems: Vec<usize> = h
            .elements()
            .iter()
            .map(|&i| {
                self.index_of(sub.element(i))
                    .expect("element of a subgroup")
            })
            .collect();
        elems.sort_unstable();
        let gens = h
            .generators()
            .iter()
            .map(|&i| {
                self.index_of(sub.element(i))
                    .expect("element of a subgroup")
            })
            .collect();
        Subgroup::from_sorted(self, elems, gens)
    }

    /// Permutations of a subgroup's elements.
    pub fn subgroup_perms(&self, h: &Subgroup) -> Vec<Permutation> {
        h.elements()
            .iter()
            .map(|&i| self.element(i).clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use crate::bounds::Bounds;
    use crate::group::FiniteGroup;
    use crate::perm::Permutation;

    fn sym(n: usize) -> FiniteGroup {
        let t = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
        let c: Vec<usize> = (0..n).collect();
        let c = Permutation::from_cycles(n, &[&c]).unwrap();
        FiniteGroup::from_generators(vec![t, c], n, &Bounds::default()).unwrap()
    }

    #[test]
    fn normalizer_of_four_cycle_in_s4() {
        let g = sym(4);
        let c = g
            .require(&Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap())
            .unwrap();
        let h = g.cyclic_subgroup(c);
        assert_eq!(h.order(), 4);
        assert_eq!(g.normalizer(&h).unwrap().order(), 8);
        assert_eq!(g.normalizer(&g.whole()).unwrap().order(), 24);
    }

    #[test]
    fn centralizer_in_s3() {
        let g = sym(3);
        let c = g
            .require(&Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap())
            .unwrap();
        assert_eq!(g.centralizer(&[c]).order(), 3);
        assert_eq!(g.centralizer(&[0]).order(), 6);
    }

    #[test]
    fn non_subgroup_rejected() {
        let g = sym(3);
        assert!(g.subgroup_from_elements(vec![0, 1, 2]).is_err());
        assert!(g.subgroup_from_elements(vec![1]).is_err());
    }

    #[test]
    fn derived_subgroup_of_s4_is_a4() {
        let g = sym(4);
        let d = g.commutator_subgroup(&g.whole(), &g.whole());
        assert_eq!(d.order(), 12);
        assert!(g.is_normal(&d));
    }
}
