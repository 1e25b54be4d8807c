use std::collections::HashSet;

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::numth::{self, ext_gcd, pi_part};
use crate::perm::Permutation;

use super::{FiniteGroup, Subgroup};

fn is_pi_number(n: u64, pi: &[u64]) -> bool {
    pi_part(n, pi) == n
}

impl FiniteGroup {
    /// Exponent `e` such that `g^e` is the π-part of an element of order `order`.
    pub fn pi_part_exponent(order: u64, pi: &[u64]) -> u64 {
        let a = pi_part(order, pi);
        let b = order / a;
        if a == 1 {
            return 0;
        }
        if b == 1 {
            return 1;
        }
        // x*a + y*b = 1, so g = g^{x a} g^{y b} with g^{y b} of order a.
        let (_, _, y) = ext_gcd(a as i128, b as i128);
        let e = (y * b as i128).rem_euclid(order as i128);
        e as u64
    }

    /// π-part of the element with index `i`.
    pub fn element_part(&self, i: usize, pi: &[u64]) -> usize {
        let o = self.element_order(i);
        self.pow(i, Self::pi_part_exponent(o, pi) as i64)
    }

    pub fn element_part_of(&self, g: &Permutation, pi: &[u64]) -> Result<Permutation> {
        let i = self.require(g)?;
        Ok(self.element(self.element_part(i, pi)).clone())
    }

    pub fn is_pi_element(&self, i: usize, pi: &[u64]) -> bool {
        is_pi_number(self.element_order(i), pi)
    }

    /// A Sylow p-subgroup, grown from a p-element of maximal order by
    /// repeatedly adjoining p-elements of the normalizer. Trivial when
    /// `p` does not divide the order.
    pub fn sylow(&self, p: u64) -> Subgroup {
        let target = numth::p_part(self.order() as u64, p) as usize;
        if target == 1 {
            return self.trivial_subgroup();
        }
        let orders = self.orders();
        let mut best = 0;
        for (i, &o) in orders.iter().enumerate() {
            if numth::is_power_of(o, p) && o > orders[best] {
                best = i;
            }
        }
        let mut sub = self.cyclic_subgroup(best);
        while sub.order() < target {
            let y = (0..self.order())
                .find(|&y| {
                    !sub.contains(y) && numth::is_power_of(orders[y], p) && self.normalizes(y, &sub)
                })
                .expect("a proper p-subgroup has a p-element in its normalizer outside it");
            sub = self.extend_subgroup(&sub, y);
        }
        sub
    }

    /// Hall π-subgroup by bounded search.
    pub fn hall(&self, pi: &[u64], bounds: &Bounds) -> Result<Subgroup> {
        if self.order() > bounds.hall_bound {
            return Err(Error::bound(
                "group order for Hall search",
                bounds.hall_bound,
            ));
        }
        self.hall_unbounded(pi)
    }

    pub(crate) fn hall_unbounded(&self, pi: &[u64]) -> Result<Subgroup> {
        let target = pi_part(self.order() as u64, pi) as usize;
        if target == 1 {
            return Ok(self.trivial_subgroup());
        }
        if target == self.order() {
            return Ok(self.whole());
        }
        let mut seed = self.trivial_subgroup();
        for p in self.prime_divisors().into_iter().filter(|p| pi.contains(p)) {
            seed = self.join(&seed, &self.sylow(p));
            if seed.order() > target {
                break;
            }
        }
        if seed.order() == target {
            return Ok(seed);
        }
        if let Some(h) = self.greedy_pi_subgroup(pi, target) {
            return Ok(h);
        }
        self.exhaustive_pi_subgroup(pi, target)
    }

    /// Greedily adjoins π-elements while the result stays a π-group.
    /// Succeeds whenever every π-subgroup lies in a Hall π-subgroup
    /// (for instance in solvable groups).
    pub(crate) fn greedy_pi_subgroup(&self, pi: &[u64], target: usize) -> Option<Subgroup> {
        let candidates: Vec<usize> = (1..self.order())
            .filter(|&y| self.is_pi_element(y, pi))
            .collect();
        let mut h = self.trivial_subgroup();
        loop {
            if h.order() == target {
                return Some(h);
            }
            let mut grew = false;
            for &y in &candidates {
                if h.contains(y) {
                    continue;
                }
                if let Some(k) = self.extend_subgroup_capped(&h, y, target) {
                    if is_pi_number(k.order() as u64, pi) {
                        h = k;
                        grew = true;
                        break;
                    }
                }
            }
            if !grew {
                return None;
            }
        }
    }

    fn exhaustive_pi_subgroup(&self, pi: &[u64], target: usize) -> Result<Subgroup> {
        let candidates: Vec<usize> = (1..self.order())
            .filter(|&y| self.is_pi_element(y, pi))
            .collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let mut stack = vec![self.trivial_subgroup()];
        seen.insert(vec![0]);
        while let Some(h) = stack.pop() {
            for &y in &candidates {
                if h.contains(y) {
                    continue;
                }
                let Some(k) = self.extend_subgroup_capped(&h, y, target) else {
                    continue;
                };
                if !is_pi_number(k.order() as u64, pi) {
                    continue;
                }
                if k.order() == target {
                    return Ok(k);
                }
                if seen.insert(k.elements().to_vec()) {
                    stack.push(k);
                }
            }
        }
        Err(Error::NotFound(format!("no Hall {pi:?}-subgroup")))
    }
}
