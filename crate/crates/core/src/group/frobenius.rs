use crate::numth::{gcd, pi_part, prime_divisors};

use super::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrobeniusDecomposition {
    pub kernel: Subgroup,
    pub complement: Subgroup,
}

/// Above this many `(g, h)` pairs the conjugate-intersection check is skipped;
/// the fixed-point-free check on the kernel already decides the question.
const CONJUGATE_SCAN_LIMIT: usize = 4_000_000;

impl FiniteGroup {
    /// Splits a Frobenius group into kernel and complement.
    ///
    /// A Frobenius kernel is a nilpotent normal Hall subgroup, so the only
    /// candidate is the Fitting subgroup; the complement is then found by
    /// greedy extension over elements of coprime order.
    pub fn frobenius_decomposition(&self) -> Option<FrobeniusDecomposition> {
        let n = self.order();
        let kernel = self.fitting();
        let k = kernel.order();
        if k == 1 || k == n || gcd(k as u64, (n / k) as u64) != 1 {
            return None;
        }
        let pi = prime_divisors((n / k) as u64);
        let target = pi_part(n as u64, &pi) as usize;
        let complement = self.greedy_pi_subgroup(&pi, target)?;

        // C_K(h) = 1 for every h in H \ 1
        for &h in &complement.elements()[1..] {
            if kernel.elements()[1..].iter().any(|&x| self.commute(h, x)) {
                return None;
            }
        }
        if n * complement.order() <= CONJUGATE_SCAN_LIMIT
            && !self.complement_is_malnormal(&complement)
        {
            return None;
        }
        // kernel = 1 together with the elements lying in no conjugate of H \ 1
        let cp = self.classes();
        let mut meets_h = vec![false; cp.len()];
        for &h in &complement.elements()[1..] {
            meets_h[cp.class_of(h)] = true;
        }
        let by_definition: Vec<usize> = (0..n)
            .filter(|&x| x == 0 || !meets_h[cp.class_of(x)])
            .collect();
        if by_definition != kernel.elements() {
            return None;
        }
        Some(FrobeniusDecomposition { kernel, complement })
    }

    /// `H ∩ H^g = 1` for every `g ∉ H`.
    pub fn complement_is_malnormal(&self, h: &Subgroup) -> bool {
        (0..self.order()).filter(|&g| !h.contains(g)).all(|g| {
            h.elements()[1..]
                .iter()
                .all(|&x| !h.contains(self.conj(x, g)))
        })
    }

    pub fn is_frobenius(&self) -> bool {
        self.frobenius_decomposition().is_some()
    }
}
