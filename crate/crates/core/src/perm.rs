//! Permutations of `{0, …, n-1}` acting on the right.
//!
//! `images[i]` is the image `i^g`. Products compose left to right, so
//! `i^(g*h) = (i^g)^h`, and conjugation is `g^x = x⁻¹ g x`.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::numth::lcm;

pub const MAX_DEGREE: usize = u16::MAX as usize + 1;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    /// Builds a permutation from its image array, checking bijectivity.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{n}"
                )));
            }
            seen[i] = true;
        }
        Ok(Self {
            images: images.into_iter().map(|i| i as u16).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        assert!((1..=MAX_DEGREE).contains(&degree), "unsupported degree");
        Self {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation of the given degree from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::UnsupportedDegree(degree));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a >= degree || touched[a] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycles {cycles:?} are not disjoint on 0..{degree}"
                    )));
                }
                touched[a] = true;
                images[a] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &j)| i == j as usize)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u16; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u16;
        }
        Self {
            images: inv.into_boxed_slice(),
        }
    }

    /// `self * other`: apply `self` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    /// `x⁻¹ · self · x`.
    pub fn conjugate_by(&self, x: &Self) -> Self {
        let mut out = vec![0u16; self.images.len()];
        for (i, &gi) in self.images.iter().enumerate() {
            out[x.images[i] as usize] = x.images[gi as usize];
        }
        Self {
            images: out.into_boxed_slice(),
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let n = self.degree();
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::identity(n);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&sq);
            }
            sq = sq.compose(&sq);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles of length at least two, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, in descending order.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.image(j);
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Order as the lcm of cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1, |acc, l| lcm(acc, l as u64))
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.images
            .iter()
            .zip(other.images.iter())
            .all(|(&a, &b)| other.images[a as usize] == self.images[b as usize])
    }

    /// Restricts to `len` points starting at `offset`, shifted back to zero.
    pub fn restrict_to_block(&self, offset: usize, len: usize) -> Result<Self> {
        let mut images = Vec::with_capacity(len);
        for i in offset..offset + len {
            let j = self.image(i);
            if j < offset || j >= offset + len {
                return Err(Error::InvalidPermutation(format!(
                    "block {offset}..{} is not invariant",
                    offset + len
                )));
            }
            images.push(j - offset);
        }
        Self::new(images)
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        let ab = &a * &b;
        // 0 -> 1 -> 2
        assert_eq!(ab.image(0), 2);
        assert_eq!(ab.order(), 3);
    }

    #[test]
    fn orders_and_conjugation() {
        let g = Permutation::from_cycles(8, &[&[0, 1, 2, 3, 4], &[5, 6, 7]]).unwrap();
        assert_eq!(g.order(), 15);
        assert!(g.pow(15).is_identity());
        assert_eq!(g.pow(-1), g.inverse());
        let x = Permutation::from_cycles(8, &[&[0, 5]]).unwrap();
        let c = g.conjugate_by(&x);
        assert_eq!(c, &(&x.inverse() * &g) * &x);
        assert_eq!(c.cycle_type(), g.cycle_type());
        assert_eq!(format!("{}", Permutation::identity(2)), "()");
        assert_eq!(format!("{g}"), "(0 1 2 3 4)(5 6 7)");
    }
}
