//! Named groups and product constructions as permutation groups.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::Bounds;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numth::{gcd, is_power_of, is_prime};
use crate::perm::Permutation;

/// How the top group of `SD(V, H, ·)` acts on the base `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SdAction {
    /// Every generator of `H` maps `v` to `v^r`.
    Pow(u64),
    /// One square matrix per generator of `H`, entries reduced mod `p`.
    Mats(Vec<Vec<Vec<i64>>>),
}

/// Expression tree for a permutation group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Cyc(u64),
    /// Dihedral group of the given order.
    Dih(u64),
    /// Generalized quaternion group of the given order.
    Quat(u64),
    Sym(u64),
    Alt(u64),
    /// Elementary abelian group `C_p^k`.
    EA(u64, u64),
    /// `C_5^2 ⋊ Q_8` acting as a Frobenius group.
    MM,
    /// `MM × (C_7 ⋊ C_3)`.
    W4200,
    DP(Box<GroupSpec>, Box<GroupSpec>),
    SD(Box<GroupSpec>, Box<GroupSpec>, SdAction),
    Wr(Box<GroupSpec>, Box<GroupSpec>),
}

/// Generators of `Q_8` on `F_5^2` pinned for `MM`.
pub const MM_MATRICES: [[[i64; 2]; 2]; 2] = [[[0, 4], [1, 0]], [[2, 0], [0, 3]]];

impl GroupSpec {
    pub fn dp(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::DP(Box::new(a), Box::new(b))
    }

    pub fn sd_pow(v: GroupSpec, h: GroupSpec, r: u64) -> Self {
        GroupSpec::SD(Box::new(v), Box::new(h), SdAction::Pow(r))
    }

    pub fn sd_mats(v: GroupSpec, h: GroupSpec, mats: Vec<Vec<Vec<i64>>>) -> Self {
        GroupSpec::SD(Box::new(v), Box::new(h), SdAction::Mats(mats))
    }

    pub fn wr(a: GroupSpec, b: GroupSpec) -> Self {
        GroupSpec::Wr(Box::new(a), Box::new(b))
    }

    /// `MM` written out with combinators.
    pub fn mm_expanded() -> Self {
        let mats = MM_MATRICES
            .iter()
            .map(|m| m.iter().map(|r| r.to_vec()).collect())
            .collect();
        Self::sd_mats(GroupSpec::EA(5, 2), GroupSpec::Quat(8), mats)
    }

    /// `C_7 ⋊ C_3`.
    pub fn c7c3() -> Self {
        Self::sd_pow(GroupSpec::Cyc(7), GroupSpec::Cyc(3), 2)
    }

    pub fn w4200_expanded() -> Self {
        Self::dp(GroupSpec::MM, Self::c7c3())
    }

    /// Checks parameter ranges and the shape of `SD` bases.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyc(n) | GroupSpec::Sym(n) | GroupSpec::Alt(n) if *n == 0 => {
                bad(format!("{self}: parameter must be positive"))
            }
            GroupSpec::Dih(m) if *m < 2 || m % 2 == 1 => {
                bad(format!("{self}: order must be even and at least 2"))
            }
            GroupSpec::Quat(m) if *m < 8 || !is_power_of(*m, 2) => {
                bad(format!("{self}: order must be a power of 2 and at least 8"))
            }
            GroupSpec::EA(p, k) if !is_prime(*p) || *k == 0 => {
                bad(format!("{self}: needs a prime and a positive rank"))
            }
            GroupSpec::DP(a, b) | GroupSpec::Wr(a, b) => {
                a.validate()?;
                b.validate()
            }
            GroupSpec::SD(v, h, action) => {
                if !matches!(**v, GroupSpec::Cyc(_) | GroupSpec::EA(..)) {
                    return bad(format!("SD base must be Cyc or EA, found {v}"));
                }
                if let SdAction::Mats(mats) = action {
                    let (p, k) = module_shape(v);
                    if !is_prime(p) {
                        return bad(format!("matrix action needs a prime-order base, found {v}"));
                    }
                    for m in mats {
                        if m.len() != k as usize || m.iter().any(|r| r.len() != k as usize) {
                            return bad(format!("matrices for {v} must be {k}x{k}"));
                        }
                    }
                }
                v.validate()?;
                h.validate()
            }
            _ => Ok(()),
        }
    }

    /// Builds the group. See [`construct`].
    pub fn build(&self, bounds: &Bounds) -> Result<FiniteGroup> {
        construct(self, bounds)
    }
}

/// `(modulus, rank)` of an `SD` base.
fn module_shape(v: &GroupSpec) -> (u64, u64) {
    match *v {
        GroupSpec::Cyc(n) => (n, 1),
        GroupSpec::EA(p, k) => (p, k),
        _ => unreachable!("validated SD base"),
    }
}

impl fmt::Display for SdAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SdAction::Pow(r) => write!(f, "pow={r}"),
            SdAction::Mats(mats) => {
                f.write_str("mats=[")?;
                for (i, m) in mats.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str("[")?;
                    for (j, row) in m.iter().enumerate() {
                        if j > 0 {
                            f.write_str(",")?;
                        }
                        let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                        write!(f, "[{}]", cells.join(","))?;
                    }
                    f.write_str("]")?;
                }
                f.write_str("]")
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyc(n) => write!(f, "Cyc({n})"),
            GroupSpec::Dih(n) => write!(f, "Dih({n})"),
            GroupSpec::Quat(n) => write!(f, "Quat({n})"),
            GroupSpec::Sym(n) => write!(f, "Sym({n})"),
            GroupSpec::Alt(n) => write!(f, "Alt({n})"),
            GroupSpec::EA(p, k) => write!(f, "EA({p},{k})"),
            GroupSpec::MM => f.write_str("MM"),
            GroupSpec::W4200 => f.write_str("W4200"),
            GroupSpec::DP(a, b) => write!(f, "DP({a},{b})"),
            GroupSpec::SD(v, h, action) => write!(f, "SD({v},{h},{action})"),
            GroupSpec::Wr(a, b) => write!(f, "Wr({a},{b})"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::dsl::parse_group_spec(s)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

fn perm(images: Vec<usize>) -> Permutation {
    Permutation::new(images).expect("constructed images form a bijection")
}

fn cycle_on(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let pts: Vec<usize> = points.into_iter().collect();
    let mut images: Vec<usize> = (0..degree).collect();
    for (i, &a) in pts.iter().enumerate() {
        images[a] = pts[(i + 1) % pts.len()];
    }
    perm(images)
}

fn to_degree(n: u64) -> Result<usize> {
    usize::try_from(n)
        .ok()
        .filter(|&d| d <= crate::perm::MAX_DEGREE)
        .ok_or(Error::UnsupportedDegree(n.min(usize::MAX as u64) as usize))
}

fn checked_order(order: Option<u128>, bounds: &Bounds) -> Result<()> {
    match order {
        Some(o) if o <= bounds.element_bound as u128 => Ok(()),
        _ => Err(Error::bound("projected group order", bounds.element_bound)),
    }
}

fn assert_order(g: &FiniteGroup, expected: u128, what: &str) -> Result<()> {
    if g.order() as u128 == expected {
        Ok(())
    } else {
        Err(Error::InvalidAction(format!(
            "{what}: expected order {expected}, closure has {}",
            g.order()
        )))
    }
}

/// Builds the permutation group described by `spec`.
///
/// Direct products act on disjoint point sets; `SD(V, H, ·)` acts on the
/// points of `V` by affine maps (with `H`'s own points appended when `H`
/// does not act faithfully); `Wr(A, B)` acts on `deg(B)` blocks of `A`'s
/// points, blocks ordered by the top point.
pub fn construct(spec: &GroupSpec, bounds: &Bounds) -> Result<FiniteGroup> {
    spec.validate()?;
    build(spec, bounds)
}

fn build(spec: &GroupSpec, bounds: &Bounds) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyc(n) => {
            checked_order(Some(*n as u128), bounds)?;
            let d = to_degree(*n)?;
            let gens = if d == 1 {
                vec![]
            } else {
                vec![cycle_on(d, 0..d)]
            };
            FiniteGroup::from_generators(gens, d, bounds)
        }
        GroupSpec::Dih(m) => {
            checked_order(Some(*m as u128), bounds)?;
            dihedral(to_degree(*m)?, bounds)
        }
        GroupSpec::Quat(m) => {
            checked_order(Some(*m as u128), bounds)?;
            quaternion(to_degree(*m)?, bounds)
        }
        GroupSpec::Sym(n) => {
            checked_order(
                (1..=*n as u128).try_fold(1u128, |a, b| a.checked_mul(b)),
                bounds,
            )?;
            let d = to_degree(*n)?;
            let gens = match d {
                1 => vec![],
                2 => vec![cycle_on(2, [0, 1])],
                _ => vec![cycle_on(d, [0, 1]), cycle_on(d, 0..d)],
            };
            FiniteGroup::from_generators(gens, d, bounds)
        }
        GroupSpec::Alt(n) => {
            let full = (1..=*n as u128).try_fold(1u128, |a, b| a.checked_mul(b));
            checked_order(full.map(|f| (f / 2).max(1)), bounds)?;
            let d = to_degree(*n)?;
            let gens = match d {
                1 | 2 => vec![],
                3 => vec![cycle_on(3, [0, 1, 2])],
                _ if d % 2 == 1 => vec![cycle_on(d, [0, 1, 2]), cycle_on(d, 0..d)],
                _ => vec![cycle_on(d, [0, 1, 2]), cycle_on(d, 1..d)],
            };
            FiniteGroup::from_generators(gens, d, bounds)
        }
        GroupSpec::EA(p, k) => {
            checked_order((*p as u128).checked_pow(*k as u32), bounds)?;
            let (p, k) = (to_degree(*p)?, to_degree(*k)?);
            let d = to_degree((p * k) as u64)?;
            let gens = (0..k).map(|i| cycle_on(d, i * p..(i + 1) * p)).collect();
            FiniteGroup::from_generators(gens, d, bounds)
        }
        GroupSpec::MM => build(&GroupSpec::mm_expanded(), bounds),
        GroupSpec::W4200 => build(&GroupSpec::w4200_expanded(), bounds),
        GroupSpec::DP(a, b) => {
            let (ga, gb) = (build(a, bounds)?, build(b, bounds)?);
            direct_product(&ga, &gb, bounds)
        }
        GroupSpec::SD(v, h, action) => {
            let gh = build(h, bounds)?;
            let (m, k) = module_shape(v);
            let size = (m as u128).checked_pow(k as u32);
            checked_order(size.and_then(|s| s.checked_mul(gh.order() as u128)), bounds)?;
            let mats = sd_matrices(m, k as usize, action, gh.generators().len())?;
            let (g, _) = affine_group(m, k as usize, &mats, &gh, bounds)?;
            Ok(g)
        }
        GroupSpec::Wr(a, b) => {
            let (ga, gb) = (build(a, bounds)?, build(b, bounds)?);
            wreath_product(&ga, &gb, bounds)
        }
    }
}

fn dihedral(m: usize, bounds: &Bounds) -> Result<FiniteGroup> {
    match m {
        2 => FiniteGroup::from_generators(vec![cycle_on(2, [0, 1])], 2, bounds),
        4 => FiniteGroup::from_generators(
            vec![perm(vec![1, 0, 3, 2]), perm(vec![2, 3, 0, 1])],
            4,
            bounds,
        ),
        _ => {
            let n = m / 2;
            let rotation = cycle_on(n, 0..n);
            let reflection = perm((0..n).map(|i| (n - i) % n).collect());
            FiniteGroup::from_generators(vec![rotation, reflection], n, bounds)
        }
    }
}

/// Regular action of `Q_m` on pairs `(i, j)`, `i mod m/2`, `j ∈ {0, 1}`,
/// stored at point `i + j·m/2`; generators `x = (1, 0)` and `y = (0, 1)`.
fn quaternion(m: usize, bounds: &Bounds) -> Result<FiniteGroup> {
    let n = m / 2;
    let mul = |(i, j): (usize, usize), (a, b): (usize, usize)| -> (usize, usize) {
        match (j, b) {
            (0, _) => ((i + a) % n, b),
            (_, 0) => ((i + n - a) % n, 1),
            _ => ((i + n - a + n / 2) % n, 0),
        }
    };
    let right = |g: (usize, usize)| {
        perm(
            (0..m)
                .map(|pt| {
                    let (i, j) = mul((pt % n, pt / n), g);
                    i + j * n
                })
                .collect(),
        )
    };
    let g = FiniteGroup::from_generators(vec![right((1, 0)), right((0, 1))], m, bounds)?;
    assert_order(&g, m as u128, "quaternion group")?;
    Ok(g)
}

/// `A × B` on `deg A + deg B` points; generators of `A` first.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup, bounds: &Bounds) -> Result<FiniteGroup> {
    checked_order((a.order() as u128).checked_mul(b.order() as u128), bounds)?;
    let (da, db) = (a.degree(), b.degree());
    let d = da + db;
    let mut gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| perm(g.images().chain(da..d).collect()))
        .collect();
    gens.extend(
        b.generators()
            .iter()
            .map(|g| perm((0..da).chain(g.images().map(|x| x + da)).collect())),
    );
    let g = FiniteGroup::from_generators(gens, d, bounds)?;
    assert_order(&g, a.order() as u128 * b.order() as u128, "direct product")?;
    Ok(g)
}

/// `A ≀ B`: block `j` holds points `j·deg A .. (j+1)·deg A`. Generators are
/// those of `A` on the least block of each orbit of `B`, then those of `B`
/// permuting blocks.
pub fn wreath_product(a: &FiniteGroup, b: &FiniteGroup, bounds: &Bounds) -> Result<FiniteGroup> {
    let (da, db) = (a.degree(), b.degree());
    let projected = (a.order() as u128)
        .checked_pow(db as u32)
        .and_then(|x| x.checked_mul(b.order() as u128));
    checked_order(projected, bounds)?;
    let d = da * db;
    let mut seen = vec![false; db];
    let mut gens = Vec::new();
    for start in 0..db {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(x) = stack.pop() {
            for g in b.generators() {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        let off = start * da;
        for g in a.generators() {
            let mut images: Vec<usize> = (0..d).collect();
            for i in 0..da {
                images[off + i] = off + g.image(i);
            }
            gens.push(perm(images));
        }
    }
    for g in b.generators() {
        gens.push(perm(
            (0..d).map(|pt| g.image(pt / da) * da + pt % da).collect(),
        ));
    }
    let g = FiniteGroup::from_generators(gens, d, bounds)?;
    assert_order(&g, projected.expect("checked above"), "wreath product")?;
    Ok(g)
}

fn sd_matrices(m: u64, k: usize, action: &SdAction, ngens: usize) -> Result<Vec<Vec<u64>>> {
    match action {
        SdAction::Pow(r) => {
            if gcd(*r % m.max(1), m) != 1 && m > 1 {
                return Err(Error::InvalidAction(format!(
                    "pow={r} is not a unit mod {m}"
                )));
            }
            let mut s = vec![0; k * k];
            for i in 0..k {
                s[i * k + i] = r % m;
            }
            Ok(vec![s; ngens])
        }
        SdAction::Mats(mats) => {
            if mats.len() != ngens {
                return Err(Error::InvalidAction(format!(
                    "{} matrices for {ngens} generators",
                    mats.len()
                )));
            }
            Ok(mats
                .iter()
                .map(|mat| {
                    mat.iter()
                        .flatten()
                        .map(|&x| x.rem_euclid(m as i64) as u64)
                        .collect()
                })
                .collect())
        }
    }
}

fn mat_mul(a: &[u64], b: &[u64], k: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; k * k];
    for i in 0..k {
        for l in 0..k {
            let x = a[i * k + l];
            if x == 0 {
                continue;
            }
            for j in 0..k {
                out[i * k + j] = (out[i * k + j] + x * b[l * k + j]) % m;
            }
        }
    }
    out
}

/// Matrices over `Z/m` of every element of `h`, given one per generator.
/// Fails unless the assignment extends to a homomorphism.
pub(crate) fn element_matrices(
    m: u64,
    k: usize,
    gen_mats: &[Vec<u64>],
    h: &FiniteGroup,
) -> Result<Vec<Vec<u64>>> {
    let mut id = vec![0; k * k];
    for i in 0..k {
        id[i * k + i] = 1 % m;
    }
    let mut mats = vec![id; h.order()];
    for (i, j, g) in h.spanning_tree() {
        mats[i] = mat_mul(&mats[j], &gen_mats[g], k, m);
    }
    for i in 0..h.order() {
        for (g, gm) in gen_mats.iter().enumerate() {
            let target = h.mul_gen(i, g);
            if mat_mul(&mats[i], gm, k, m) != mats[target] {
                return Err(Error::InvalidAction(format!(
                    "matrices violate a relation at element {target} (word {:?})",
                    h.word(target)
                )));
            }
        }
    }
    Ok(mats)
}

/// `Z/m^k ⋊ H` acting on the `m^k` vectors (base-`m` digits, coordinate 0
/// least significant) by `v ↦ v·M_h + w`. If some nontrivial `h` acts as the
/// identity, `H`'s own points are appended so the result stays faithful.
/// Returns the group and whether the module action was faithful.
pub(crate) fn affine_group(
    m: u64,
    k: usize,
    gen_mats: &[Vec<u64>],
    h: &FiniteGroup,
    bounds: &Bounds,
) -> Result<(FiniteGroup, bool)> {
    let size = (m as u128)
        .checked_pow(k as u32)
        .filter(|&s| s <= crate::perm::MAX_DEGREE as u128)
        .ok_or_else(|| Error::bound("module size", crate::perm::MAX_DEGREE))?;
    checked_order(size.checked_mul(h.order() as u128), bounds)?;
    let n = size as usize;
    let mats = element_matrices(m, k, gen_mats, h)?;
    let faithful = mats.iter().skip(1).all(|x| *x != mats[0]);
    let extra = if faithful { 0 } else { h.degree() };
    let d = to_degree((n + extra) as u64)?;

    let digits = |mut x: usize| -> Vec<u64> {
        (0..k)
            .map(|_| {
                let c = (x % m as usize) as u64;
                x /= m as usize;
                c
            })
            .collect()
    };
    let index = |v: &[u64]| {
        v.iter()
            .rev()
            .fold(0usize, |acc, &c| acc * m as usize + c as usize)
    };

    let mut gens = Vec::new();
    for t in 0..k {
        let mut images: Vec<usize> = (0..d).collect();
        for (x, img) in images.iter_mut().enumerate().take(n) {
            let mut v = digits(x);
            v[t] = (v[t] + 1) % m;
            *img = index(&v);
        }
        gens.push(perm(images));
    }
    for (g, mat) in gen_mats.iter().enumerate() {
        let mut images: Vec<usize> = (0..d).collect();
        for (x, img) in images.iter_mut().enumerate().take(n) {
            let v = digits(x);
            let w: Vec<u64> = (0..k)
                .map(|j| (0..k).map(|i| v[i] * mat[i * k + j]).sum::<u64>() % m)
                .collect();
            *img = index(&w);
        }
        if !faithful {
            for i in 0..extra {
                images[n + i] = n + h.generators()[g].image(i);
            }
        }
        gens.push(perm(images));
    }
    let group = FiniteGroup::from_generators(gens, d, bounds)?;
    assert_order(&group, size * h.order() as u128, "semidirect product")?;
    Ok((group, faithful))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(spec: GroupSpec) -> usize {
        construct(&spec, &Bounds::default()).unwrap().order()
    }

    #[test]
    fn atom_orders() {
        assert_eq!(order(GroupSpec::Cyc(1)), 1);
        assert_eq!(order(GroupSpec::Cyc(12)), 12);
        assert_eq!(order(GroupSpec::Dih(2)), 2);
        assert_eq!(order(GroupSpec::Dih(4)), 4);
        assert_eq!(order(GroupSpec::Dih(10)), 10);
        assert_eq!(order(GroupSpec::Quat(8)), 8);
        assert_eq!(order(GroupSpec::Quat(32)), 32);
        assert_eq!(order(GroupSpec::Sym(5)), 120);
        assert_eq!(order(GroupSpec::Alt(4)), 12);
        assert_eq!(order(GroupSpec::Alt(6)), 360);
        assert_eq!(order(GroupSpec::EA(3, 3)), 27);
    }

    #[test]
    fn combinator_orders() {
        assert_eq!(order(GroupSpec::MM), 200);
        assert_eq!(order(GroupSpec::c7c3()), 21);
        assert_eq!(
            order(GroupSpec::wr(GroupSpec::Cyc(2), GroupSpec::Cyc(3))),
            24
        );
        // C3 acting trivially through pow=1 is not faithful
        let g = construct(
            &GroupSpec::sd_pow(GroupSpec::Cyc(5), GroupSpec::Cyc(3), 1),
            &Bounds::default(),
        )
        .unwrap();
        assert_eq!(g.order(), 15);
        assert!(g.is_cyclic());
    }

    #[test]
    fn quaternion_has_one_involution() {
        let q = construct(&GroupSpec::Quat(16), &Bounds::default()).unwrap();
        assert_eq!(q.orders().iter().filter(|&&o| o == 2).count(), 1);
    }

    #[test]
    fn bad_actions_rejected() {
        let b = Bounds::default();
        let e = construct(
            &GroupSpec::sd_pow(GroupSpec::Cyc(7), GroupSpec::Cyc(3), 3),
            &b,
        )
        .unwrap_err();
        assert_eq!(e.kind(), "InvalidAction");
        let e = construct(
            &GroupSpec::sd_pow(GroupSpec::Sym(3), GroupSpec::Cyc(2), 2),
            &b,
        )
        .unwrap_err();
        assert_eq!(e.kind(), "InvalidSpec");
        let e = construct(&GroupSpec::Sym(12), &b).unwrap_err();
        assert_eq!(e.kind(), "BoundExceeded");
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(
            GroupSpec::w4200_expanded().to_string(),
            "DP(MM,SD(Cyc(7),Cyc(3),pow=2))"
        );
        assert_eq!(
            GroupSpec::mm_expanded().to_string(),
            "SD(EA(5,2),Quat(8),mats=[[[0,4],[1,0]],[[2,0],[0,3]]])"
        );
    }
}
