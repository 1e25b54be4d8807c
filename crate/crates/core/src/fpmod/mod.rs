//! Modules over F_p for enumerated permutation groups.
//!
//! Row-vector convention: `v·(gh) = (v·g)·h`, so the matrix of a product is
//! the product of the matrices in the same order.

mod matrix;

use std::collections::HashSet;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::Bounds;
use crate::construct::affine_group;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::numth::{gcd, is_prime};
use crate::perm::Permutation;

pub(crate) use matrix::nullspace;
pub use matrix::{index_of_vector, vector_from_index, FpMatrix, RowSpace};

/// Most matrix entries a module may hold across all group elements.
const STORAGE_LIMIT: usize = 100_000_000;

/// A certified action of an enumerated group on `F_p^d` by invertible matrices.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    group: Arc<FiniteGroup>,
    p: u32,
    d: usize,
    gen_matrices: Vec<FpMatrix>,
    /// Matrix of every element, in enumeration order.
    matrices: Vec<FpMatrix>,
}

/// Outcome of the exhaustive eigenvector-property scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvectorScan {
    pub holds: bool,
    /// First `(v, alpha)` with no `g` such that `v·g = alpha·v`; vectors in
    /// base-`p` index order, `alpha` ascending.
    pub witness: Option<(Vec<u32>, u32)>,
    pub vectors_scanned: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmoduleAnalysis {
    pub is_irreducible: bool,
    pub minimal_submodules: Vec<RowSpace>,
    pub is_homogeneous: bool,
}

/// `V ⋊ G` as a permutation group on the vectors of `V`.
#[derive(Debug)]
pub struct SemidirectRealization {
    pub group: FiniteGroup,
    /// False when the action has a kernel and the group's own points were
    /// appended to keep the realization faithful.
    pub faithful: bool,
}

/// `d1 × d2` intertwiners as flat row-major vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub rows: usize,
    pub cols: usize,
    pub basis: Vec<Vec<u32>>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn check_prime(p: u32) -> Result<()> {
    if is_prime(p as u64) {
        Ok(())
    } else {
        Err(Error::InvalidAction(format!("{p} is not prime")))
    }
}

impl ModuleAction {
    /// Certifies that one matrix per generator extends to a homomorphism:
    /// every edge `x → x·gen_k` of the Cayley graph is checked against
    /// the matrix product, so any two words for the same element agree.
    pub fn certify(group: Arc<FiniteGroup>, p: u32, gen_matrices: Vec<FpMatrix>) -> Result<Self> {
        let d = gen_matrices.first().map(FpMatrix::dim).ok_or_else(|| {
            Error::DimensionMismatch("no generator matrices to infer the dimension from".into())
        })?;
        Self::certify_with_dim(group, p, d, gen_matrices)
    }

    /// As [`ModuleAction::certify`], with the dimension given explicitly so
    /// that groups without generators are accepted.
    pub fn certify_with_dim(
        group: Arc<FiniteGroup>,
        p: u32,
        d: usize,
        gen_matrices: Vec<FpMatrix>,
    ) -> Result<Self> {
        check_prime(p)?;
        let ngens = group.generators().len();
        if gen_matrices.len() != ngens {
            return Err(Error::DimensionMismatch(format!(
                "{} matrices for {ngens} generators",
                gen_matrices.len()
            )));
        }
        if gen_matrices.iter().any(|m| m.p() != p || m.dim() != d) {
            return Err(Error::DimensionMismatch(
                "generator matrices differ in p or d".into(),
            ));
        }
        if gen_matrices.iter().any(|m| !m.is_invertible()) {
            return Err(Error::SingularMatrix);
        }
        if group.order().saturating_mul(d * d) > STORAGE_LIMIT {
            return Err(Error::bound("module matrix storage", STORAGE_LIMIT));
        }
        let mut matrices = vec![FpMatrix::identity(p, d); group.order()];
        for (i, j, k) in group.spanning_tree() {
            matrices[i] = matrices[j].mul(&gen_matrices[k]);
        }
        for i in 0..group.order() {
            for (k, m) in gen_matrices.iter().enumerate() {
                let t = group.mul_gen(i, k);
                let left = matrices[i].mul(m);
                if left != matrices[t] {
                    return Err(Error::NotAHomomorphism {
                        element: t,
                        left: left.entries().to_vec(),
                        right: matrices[t].entries().to_vec(),
                    });
                }
            }
        }
        Ok(Self {
            group,
            p,
            d,
            gen_matrices,
            matrices,
        })
    }

    /// Builds generator matrices from signed rows.
    pub fn from_rows(group: Arc<FiniteGroup>, p: u32, mats: &[Vec<Vec<i64>>]) -> Result<Self> {
        let ms = mats
            .iter()
            .map(|m| FpMatrix::from_rows(p, m))
            .collect::<Result<Vec<_>>>()?;
        let d = mats.first().map_or(1, Vec::len);
        Self::certify_with_dim(group, p, d, ms)
    }

    /// Every element acting as the identity on `F_p^d`.
    pub fn trivial(group: Arc<FiniteGroup>, p: u32, d: usize) -> Result<Self> {
        check_prime(p)?;
        let n = group.generators().len();
        Self::certify_with_dim(group, p, d, vec![FpMatrix::identity(p, d); n])
    }

    /// Permutation module on the points of the group.
    pub fn permutation_module(group: Arc<FiniteGroup>, p: u32) -> Result<Self> {
        let d = group.degree();
        let mats = group
            .generators()
            .iter()
            .map(|g| {
                let mut e = vec![0; d * d];
                for i in 0..d {
                    e[i * d + g.image(i)] = 1;
                }
                FpMatrix::new(p, d, e)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::certify_with_dim(group, p, d, mats)
    }

    /// One-dimensional module on which generator `k` acts as `scalars[k]`.
    pub fn linear(group: Arc<FiniteGroup>, p: u32, scalars: &[u32]) -> Result<Self> {
        let mats = scalars.iter().map(|&a| FpMatrix::scalar(p, 1, a)).collect();
        Self::certify(group, p, mats)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn gen_matrices(&self) -> &[FpMatrix] {
        &self.gen_matrices
    }

    /// Matrix of the element with index `i`.
    pub fn matrix(&self, i: usize) -> &FpMatrix {
        &self.matrices[i]
    }

    pub fn matrix_of(&self, g: &Permutation) -> Result<&FpMatrix> {
        Ok(self.matrix(self.group.require(g)?))
    }

    pub fn is_faithful(&self) -> bool {
        self.matrices.iter().skip(1).all(|m| !m.is_identity())
    }

    /// Elements acting trivially.
    pub fn kernel(&self) -> Subgroup {
        let elems = (0..self.group.order())
            .filter(|&i| self.matrices[i].is_identity())
            .collect();
        self.group
            .subgroup_from_elements(elems)
            .expect("kernel of a homomorphism is a subgroup")
    }

    /// `{v : v·g = alpha·v}` for the element with index `g`.
    pub fn eigenspace(&self, g: usize, alpha: u32) -> RowSpace {
        let m = self.matrix(g).sub(&FpMatrix::scalar(self.p, self.d, alpha));
        RowSpace::spanned_by(self.p, self.d, m.left_kernel())
    }

    pub fn eigenspace_of(&self, g: &Permutation, alpha: u32) -> Result<RowSpace> {
        Ok(self.eigenspace(self.group.require(g)?, alpha))
    }

    /// Fixed vectors of the element with index `g`.
    pub fn fixed_space(&self, g: usize) -> RowSpace {
        self.eigenspace(g, 1)
    }

    fn vector_count(&self, bounds: &Bounds) -> Result<usize> {
        (self.p as usize)
            .checked_pow(self.d as u32)
            .filter(|&n| n <= bounds.vector_scan_bound)
            .ok_or_else(|| Error::bound("vectors to scan", bounds.vector_scan_bound))
    }

    /// For every nonzero `v` and `alpha ∈ [1, p)`, looks for `g` with
    /// `v·g = alpha·v`.
    pub fn has_eigenvector_property(&self, bounds: &Bounds) -> Result<EigenvectorScan> {
        let n = self.vector_count(bounds)?;
        let p = self.p;
        for idx in 1..n {
            let v = vector_from_index(idx, p, self.d);
            let images: HashSet<Vec<u32>> = self.matrices.iter().map(|m| m.apply(&v)).collect();
            for alpha in 1..p {
                let target: Vec<u32> = v
                    .iter()
                    .map(|&c| ((c as u64 * alpha as u64) % p as u64) as u32)
                    .collect();
                if !images.contains(&target) {
                    return Ok(EigenvectorScan {
                        holds: false,
                        witness: Some((v, alpha)),
                        vectors_scanned: idx,
                    });
                }
            }
        }
        Ok(EigenvectorScan {
            holds: true,
            witness: None,
            vectors_scanned: n.saturating_sub(1),
        })
    }

    /// Submodule generated by `vectors`.
    pub fn spin(&self, vectors: &[Vec<u32>]) -> RowSpace {
        let mut space = RowSpace::zero(self.p, self.d);
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for v in vectors {
            if space.insert(v) {
                queue.push(v.clone());
            }
        }
        while let Some(v) = queue.pop() {
            for m in &self.gen_matrices {
                let w = m.apply(&v);
                if space.insert(&w) {
                    queue.push(w);
                }
            }
        }
        space
    }

    pub fn is_submodule(&self, w: &RowSpace) -> bool {
        w.basis()
            .iter()
            .all(|b| self.gen_matrices.iter().all(|m| w.contains(&m.apply(b))))
    }

    /// Minimal nonzero submodules, found by spinning every line. Each
    /// minimal submodule is spun from any of its nonzero vectors, so the
    /// spun modules containing no other spun module are exactly these.
    pub fn minimal_submodules(&self, bounds: &Bounds) -> Result<Vec<RowSpace>> {
        let n = self.vector_count(bounds)?;
        let mut spun: Vec<RowSpace> = Vec::new();
        for idx in 1..n {
            let v = vector_from_index(idx, self.p, self.d);
            // one representative per line: leading coordinate 1
            if v.iter().find(|&&c| c != 0) != Some(&1) {
                continue;
            }
            let s = self.spin(&[v]);
            if !spun.contains(&s) {
                spun.push(s);
            }
        }
        let mut minimal: Vec<RowSpace> = spun
            .iter()
            .filter(|s| !spun.iter().any(|t| t != *s && t.is_subspace_of(s)))
            .cloned()
            .collect();
        minimal.sort();
        Ok(minimal)
    }

    /// Irreducibility and homogeneity. Homogeneity is decided by pairwise
    /// isomorphism of minimal submodules, which is only meaningful for
    /// semisimple modules, so `p | |G|` is refused.
    pub fn submodule_analysis(&self, bounds: &Bounds) -> Result<SubmoduleAnalysis> {
        let order = self.group.order();
        if order.is_multiple_of(self.p as usize) {
            return Err(Error::CharacteristicDividesOrder { p: self.p, order });
        }
        let minimal = self.minimal_submodules(bounds)?;
        let is_irreducible = minimal.len() == 1 && minimal[0].dim() == self.d;
        let first = self.submodule_action(&minimal[0])?;
        let mut is_homogeneous = true;
        for w in &minimal[1..] {
            if !are_isomorphic(&first, &self.submodule_action(w)?, bounds)? {
                is_homogeneous = false;
                break;
            }
        }
        Ok(SubmoduleAnalysis {
            is_irreducible,
            minimal_submodules: minimal,
            is_homogeneous,
        })
    }

    /// Action on an invariant subspace, in its echelon basis.
    pub fn submodule_action(&self, w: &RowSpace) -> Result<ModuleAction> {
        if !self.is_submodule(w) {
            return Err(Error::InvalidAction("subspace is not invariant".into()));
        }
        let k = w.dim();
        let mats = self
            .gen_matrices
            .iter()
            .map(|m| {
                let entries = w
                    .basis()
                    .iter()
                    .flat_map(|b| w.coordinates(&m.apply(b)).expect("invariant"))
                    .collect();
                FpMatrix::new(self.p, k, entries)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::certify_with_dim(self.group.clone(), self.p, k, mats)
    }

    /// Restriction to a subgroup, as a module for that subgroup's own group.
    pub fn restrict(&self, h: &Subgroup) -> Result<ModuleAction> {
        self.group.check_subgroup(h)?;
        let sub = Arc::new(self.group.subgroup_as_group(h));
        let mats: Vec<FpMatrix> = h
            .generators()
            .iter()
            .map(|&x| self.matrix(x).clone())
            .collect();
        Self::certify_with_dim(sub, self.p, self.d, mats)
    }

    /// `Ind_H^G(W)` for a module `W` of `H`'s own group (as returned by
    /// [`FiniteGroup::subgroup_as_group`]). The right transversal consists
    /// of the least element of each coset `Hx`; block `(i, j)` of the
    /// matrix of `g` is `W(t_i g t_j⁻¹)` where `t_j` represents `H t_i g`.
    pub fn induce(
        &self,
        g: Arc<FiniteGroup>,
        h: &Subgroup,
        bounds: &Bounds,
    ) -> Result<ModuleAction> {
        g.check_subgroup(h)?;
        if self.group.order() != h.order()
            || h.elements()
                .iter()
                .any(|&x| self.group.index_of(g.element(x)).is_none())
        {
            return Err(Error::NotASubgroup);
        }
        let index = g.order() / h.order();
        let dim = index * self.d;
        if dim > bounds.linear_solve_bound {
            return Err(Error::bound(
                "induced module dimension",
                bounds.linear_solve_bound,
            ));
        }
        let (reps, coset_of) = right_transversal(&g, h);
        let w_of =
            |x: usize| self.matrix(self.group.index_of(g.element(x)).expect("checked above"));
        let mats = g
            .generator_indices()
            .into_iter()
            .map(|gen| {
                let mut e = vec![0u32; dim * dim];
                for (i, &t) in reps.iter().enumerate() {
                    let tg = g.mul(t, gen);
                    let j = coset_of[tg];
                    let hpart = g.mul(tg, g.inv(reps[j]));
                    let block = w_of(hpart);
                    for r in 0..self.d {
                        for c in 0..self.d {
                            e[(i * self.d + r) * dim + j * self.d + c] = block.get(r, c);
                        }
                    }
                }
                FpMatrix::new(self.p, dim, e)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::certify_with_dim(g, self.p, dim, mats)
    }

    /// `V ⋊ G` on the `p^d` vectors.
    pub fn semidirect_perm_group(&self, bounds: &Bounds) -> Result<SemidirectRealization> {
        let mats: Vec<Vec<u64>> = self
            .gen_matrices
            .iter()
            .map(|m| m.entries().iter().map(|&x| x as u64).collect())
            .collect();
        let (group, faithful) = affine_group(self.p as u64, self.d, &mats, &self.group, bounds)?;
        Ok(SemidirectRealization { group, faithful })
    }

    /// Block-diagonal sum of two modules of the same group.
    pub fn direct_sum(&self, other: &ModuleAction) -> Result<ModuleAction> {
        same_group(self, other)?;
        let mats = self
            .gen_matrices
            .iter()
            .zip(&other.gen_matrices)
            .map(|(a, b)| a.direct_sum(b))
            .collect::<Vec<_>>();
        Self::certify_with_dim(self.group.clone(), self.p, self.d + other.d, mats)
    }
}

/// Least element of each right coset `Hx` in enumeration order, and the
/// coset number of every element.
pub fn right_transversal(g: &FiniteGroup, h: &Subgroup) -> (Vec<usize>, Vec<usize>) {
    const UNSET: usize = usize::MAX;
    let mut coset_of = vec![UNSET; g.order()];
    let mut reps = Vec::new();
    for x in 0..g.order() {
        if coset_of[x] != UNSET {
            continue;
        }
        let c = reps.len();
        reps.push(x);
        for &y in h.elements() {
            coset_of[g.mul(y, x)] = c;
        }
    }
    (reps, coset_of)
}

fn same_group(a: &ModuleAction, b: &ModuleAction) -> Result<()> {
    if a.p != b.p {
        return Err(Error::DimensionMismatch(format!(
            "fields F_{} and F_{}",
            a.p, b.p
        )));
    }
    if !Arc::ptr_eq(&a.group, &b.group) && a.group.generators() != b.group.generators() {
        return Err(Error::DimensionMismatch(
            "modules of different groups".into(),
        ));
    }
    Ok(())
}

/// Intertwiners `X` (`d1 × d2`) with `M1(g)·X = X·M2(g)` for every generator.
pub fn hom_space(m1: &ModuleAction, m2: &ModuleAction, bounds: &Bounds) -> Result<HomSpace> {
    same_group(m1, m2)?;
    let (d1, d2, p) = (m1.d, m2.d, m1.p);
    let unknowns = d1 * d2;
    if unknowns > bounds.linear_solve_bound {
        return Err(Error::bound(
            "hom-space unknowns",
            bounds.linear_solve_bound,
        ));
    }
    // unknown X[r][c] sits at column r*d2 + c
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (a, b) in m1.gen_matrices.iter().zip(&m2.gen_matrices) {
        for i in 0..d1 {
            for j in 0..d2 {
                let mut eq = vec![0u32; unknowns];
                // (A X)_{ij} = Σ_k A_ik X_kj
                for k in 0..d1 {
                    let col = k * d2 + j;
                    eq[col] = (eq[col] + a.get(i, k)) % p;
                }
                // (X B)_{ij} = Σ_k X_ik B_kj
                for k in 0..d2 {
                    let col = i * d2 + k;
                    eq[col] = (eq[col] + p - b.get(k, j)) % p;
                }
                if eq.iter().any(|&x| x != 0) {
                    rows.push(eq);
                }
            }
        }
    }
    Ok(HomSpace {
        rows: d1,
        cols: d2,
        basis: nullspace(&rows, unknowns, p),
    })
}

/// Searches the hom space for an invertible intertwiner: exhaustively when
/// it has at most 10⁶ elements, otherwise by `trial_budget` random
/// combinations drawn with the configured seed.
pub fn are_isomorphic(m1: &ModuleAction, m2: &ModuleAction, bounds: &Bounds) -> Result<bool> {
    if m1.d != m2.d {
        same_group(m1, m2)?;
        return Ok(false);
    }
    let hom = hom_space(m1, m2, bounds)?;
    let (h, p, d) = (hom.dim(), m1.p, m1.d);
    if h == 0 {
        return Ok(false);
    }
    let combine = |coeffs: &[u32]| -> FpMatrix {
        let mut e = vec![0u64; d * d];
        for (c, b) in coeffs.iter().zip(&hom.basis) {
            if *c == 0 {
                continue;
            }
            for (x, &y) in e.iter_mut().zip(b) {
                *x += *c as u64 * y as u64;
            }
        }
        FpMatrix::new(p, d, e.into_iter().map(|x| (x % p as u64) as u32).collect()).expect("square")
    };
    let total = (p as usize)
        .checked_pow(h as u32)
        .filter(|&n| n <= 1_000_000);
    if let Some(total) = total {
        return Ok((1..total).any(|idx| combine(&vector_from_index(idx, p, h)).is_invertible()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    for _ in 0..bounds.trial_budget {
        let coeffs: Vec<u32> = (0..h).map(|_| rng.gen_range(0..p)).collect();
        if combine(&coeffs).is_invertible() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Order of the matrix group generated by `mats`, by closure.
pub fn matrix_group_order(mats: &[FpMatrix], bounds: &Bounds) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Ok(1);
    };
    if mats
        .iter()
        .any(|m| m.p() != first.p() || m.dim() != first.dim())
    {
        return Err(Error::DimensionMismatch("matrices differ in p or d".into()));
    }
    if mats.iter().any(|m| !m.is_invertible()) {
        return Err(Error::SingularMatrix);
    }
    let id = FpMatrix::identity(first.p(), first.dim());
    let mut seen: HashSet<FpMatrix> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    while let Some(x) = queue.pop() {
        for m in mats {
            let y = x.mul(m);
            if !seen.contains(&y) {
                if seen.len() >= bounds.element_bound {
                    return Err(Error::ClosureExceedsBound {
                        bound: bounds.element_bound,
                    });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    Ok(seen.len())
}

/// True iff `p` does not divide the order of `g`.
pub fn is_coprime_characteristic(g: &FiniteGroup, p: u32) -> bool {
    gcd(g.order() as u64, p as u64) == 1
}
