//! Dense matrices and row spaces over a prime field F_p.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numth::{inv_mod, is_prime};

#[inline]
fn inv(a: u32, p: u32) -> u32 {
    inv_mod(a as u64, p as u64).expect("nonzero element of a prime field") as u32
}

/// A `d × d` matrix over F_p in row-major order. Vectors are rows and act
/// on the left: `v ↦ v·M`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpMatrix {
    p: u32,
    d: usize,
    entries: Vec<u32>,
}

impl FpMatrix {
    pub fn new(p: u32, d: usize, entries: Vec<u32>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::InvalidAction(format!("{p} is not prime")));
        }
        if entries.len() != d * d {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {d}x{d} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            p,
            d,
            entries: entries.into_iter().map(|x| x % p).collect(),
        })
    }

    /// Builds from signed rows, reducing each entry modulo `p`.
    pub fn from_rows(p: u32, rows: &[Vec<i64>]) -> Result<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch(
                "matrix rows must form a square".into(),
            ));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|&x| x.rem_euclid(p as i64) as u32)
            .collect();
        Self::new(p, d, entries)
    }

    pub fn identity(p: u32, d: usize) -> Self {
        Self::scalar(p, d, 1)
    }

    pub fn scalar(p: u32, d: usize, a: u32) -> Self {
        let mut entries = vec![0; d * d];
        for i in 0..d {
            entries[i * d + i] = a % p;
        }
        Self { p, d, entries }
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.d + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.d..(i + 1) * self.d]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.d).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.p, self.d)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!((self.p, self.d), (other.p, other.d));
        let (d, p) = (self.d, self.p as u64);
        let mut out = vec![0u32; d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.entries[i * d + k] as u64;
                if a == 0 {
                    continue;
                }
                for j in 0..d {
                    let idx = i * d + j;
                    out[idx] = ((out[idx] as u64 + a * other.entries[k * d + j] as u64) % p) as u32;
                }
            }
        }
        Self {
            p: self.p,
            d,
            entries: out,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.p;
        Self {
            p,
            d: self.d,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(&a, &b)| (a + p - b) % p)
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let d = self.d;
        let mut entries = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                entries[j * d + i] = self.entries[i * d + j];
            }
        }
        Self {
            p: self.p,
            d,
            entries,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::identity(self.p, self.d);
        let mut sq = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `v·M` for a row vector `v`.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        let (d, p) = (self.d, self.p as u64);
        let mut out = vec![0u64; d];
        for (i, &vi) in v.iter().enumerate() {
            if vi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += vi as u64 * self.entries[i * d + j] as u64;
            }
        }
        out.into_iter().map(|x| (x % p) as u32).collect()
    }

    pub fn rank(&self) -> usize {
        RowSpace::spanned_by(self.p, self.d, self.rows()).dim()
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.d
    }

    pub fn inverse(&self) -> Result<Self> {
        let (d, p) = (self.d, self.p);
        // Gauss-Jordan on [M | I]
        let mut aug: Vec<Vec<u32>> = (0..d)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.extend((0..d).map(|j| u32::from(i == j)));
                r
            })
            .collect();
        for col in 0..d {
            let piv = (col..d)
                .find(|&r| aug[r][col] != 0)
                .ok_or(Error::SingularMatrix)?;
            aug.swap(col, piv);
            let s = inv(aug[col][col], p);
            scale_row(&mut aug[col], s, p);
            for r in 0..d {
                if r != col && aug[r][col] != 0 {
                    let f = aug[r][col];
                    let (src, dst) = pick_rows(&mut aug, col, r);
                    axpy(dst, src, p - f, p);
                }
            }
        }
        let entries = aug.into_iter().flat_map(|r| r[d..].to_vec()).collect();
        Ok(Self { p, d, entries })
    }

    /// Basis of `{v : v·M = 0}`.
    pub fn left_kernel(&self) -> Vec<Vec<u32>> {
        nullspace(&self.transpose().rows(), self.d, self.p)
    }

    /// Multiplicative order in GL(d, p).
    pub fn order(&self) -> Result<u64> {
        if !self.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        let id = Self::identity(self.p, self.d);
        let mut x = self.clone();
        let mut k = 1;
        while x != id {
            x = x.mul(self);
            k += 1;
        }
        Ok(k)
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let d = self.d + other.d;
        let mut entries = vec![0; d * d];
        for i in 0..self.d {
            for j in 0..self.d {
                entries[i * d + j] = self.get(i, j);
            }
        }
        for i in 0..other.d {
            for j in 0..other.d {
                entries[(self.d + i) * d + self.d + j] = other.get(i, j);
            }
        }
        Self {
            p: self.p,
            d,
            entries,
        }
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.p, self.rows())
    }
}

fn scale_row(r: &mut [u32], s: u32, p: u32) {
    for x in r.iter_mut() {
        *x = ((*x as u64 * s as u64) % p as u64) as u32;
    }
}

/// `dst += f * src`
fn axpy(dst: &mut [u32], src: &[u32], f: u32, p: u32) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = ((*d as u64 + f as u64 * s as u64) % p as u64) as u32;
    }
}

fn pick_rows(rows: &mut [Vec<u32>], src: usize, dst: usize) -> (&[u32], &mut [u32]) {
    if src < dst {
        let (a, b) = rows.split_at_mut(dst);
        (&a[src], &mut b[0])
    } else {
        let (a, b) = rows.split_at_mut(src);
        (&b[0], &mut a[dst])
    }
}

/// Reduced row echelon form in place; returns pivot columns.
pub(crate) fn rref(rows: &mut Vec<Vec<u32>>, ncols: usize, p: u32) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(r, piv);
        let s = inv(rows[r][col], p);
        scale_row(&mut rows[r], s, p);
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                let (src, dst) = pick_rows(rows, r, i);
                axpy(dst, src, p - f, p);
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : A x = 0}` for the matrix with the given rows.
pub(crate) fn nullspace(rows: &[Vec<u32>], ncols: usize, p: u32) -> Vec<Vec<u32>> {
    let mut a = rows.to_vec();
    let pivots = rref(&mut a, ncols, p);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![0u32; ncols];
            x[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                x[pc] = (p - a[r][f]) % p;
            }
            x
        })
        .collect()
}

/// A subspace of F_p^d held as a reduced echelon basis, which is canonical:
/// equal subspaces have equal bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RowSpace {
    p: u32,
    d: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn zero(p: u32, d: usize) -> Self {
        Self {
            p,
            d,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(p: u32, d: usize) -> Self {
        Self::spanned_by(p, d, (0..d).map(|i| unit(d, i)).collect())
    }

    pub fn spanned_by(p: u32, d: usize, mut vectors: Vec<Vec<u32>>) -> Self {
        let pivots = rref(&mut vectors, d, p);
        Self {
            p,
            d,
            basis: vectors,
            pivots,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.d
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    /// Reduces `v` against the basis; zero iff `v` lies in the space.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                let f = self.p - v[pc];
                axpy(&mut v, b, f, self.p);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent; returns whether the space grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        if self.contains(v) {
            return false;
        }
        let mut vs = self.basis.clone();
        vs.push(v.to_vec());
        *self = Self::spanned_by(self.p, self.d, vs);
        true
    }

    pub fn is_subspace_of(&self, other: &RowSpace) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &RowSpace) -> RowSpace {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Self::spanned_by(self.p, self.d, vs)
    }

    /// Coordinates of a vector of the space in the echelon basis.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc]).collect())
    }
}

pub(crate) fn unit(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// Vector with base-`p` digits of `index`, coordinate 0 least significant.
pub fn vector_from_index(index: usize, p: u32, d: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    let mut x = index;
    for c in v.iter_mut() {
        *c = (x % p as usize) as u32;
        x /= p as usize;
    }
    v
}

pub fn index_of_vector(v: &[u32], p: u32) -> usize {
    v.iter()
        .rev()
        .fold(0, |acc, &c| acc * p as usize + c as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_order() {
        let j = FpMatrix::from_rows(5, &[vec![2, 0], vec![0, 3]]).unwrap();
        assert_eq!(j.order().unwrap(), 4);
        let ji = j.inverse().unwrap();
        assert!(j.mul(&ji).is_identity());
        let sing = FpMatrix::from_rows(5, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(sing.inverse().unwrap_err(), Error::SingularMatrix);
        assert_eq!(sing.rank(), 1);
    }

    #[test]
    fn left_kernel_solves_row_equation() {
        let m = FpMatrix::from_rows(5, &[vec![2, 0], vec![0, 3]]).unwrap();
        let shifted = m.sub(&FpMatrix::scalar(5, 2, 2));
        assert_eq!(shifted.left_kernel(), vec![vec![1, 0]]);
    }

    #[test]
    fn rowspace_is_canonical() {
        let a = RowSpace::spanned_by(5, 3, vec![vec![1, 2, 0], vec![0, 1, 1]]);
        let b = RowSpace::spanned_by(5, 3, vec![vec![1, 3, 1], vec![2, 4, 0]]);
        assert_eq!(a, b);
        assert!(a.contains(&[1, 4, 2]));
        assert_eq!(
            vector_from_index(index_of_vector(&[3, 1, 4], 5), 5, 3),
            vec![3, 1, 4]
        );
    }
}
